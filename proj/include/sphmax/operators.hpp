#pragma once

// The averaging and maximal operators: mu_t averages, S_mu, Hardy-Littlewood
// M, the comparison operator T = M + I|grad u|, and the two truncation
// constructions. The rescaled measure is never materialized; scales enter at
// probe time, and per-scale probe tables share interpolation weights across
// all node-centered probes.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sphmax/common.hpp"
#include "sphmax/grid.hpp"
#include "sphmax/ladder.hpp"
#include "sphmax/measure.hpp"
#include "sphmax/riesz.hpp"

namespace sphmax {

inline double average(const GridFunction& u, const DiscreteMeasure& mu, double t, const Point& x) {
    require(t > 0.0, "average: scale must be positive");
    KahanSum s;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        Point p = x;
        for (int a = 0; a < u.n; ++a) p[a] += t * mu.nodes[i][a];
        s.add(mu.weights[i] * std::abs(u.interpolate(p)));
    }
    return s.value();
}

// Mean absolute deviation from a fixed center value: the signed-difference
// average of the Lebesgue-point experiments (no absolute value inside u).
inline double average_abs_deviation(const GridFunction& u, const DiscreteMeasure& mu, double t,
                                    const Point& x, double center) {
    require(t > 0.0, "average: scale must be positive");
    KahanSum s;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        Point p = x;
        for (int a = 0; a < u.n; ++a) p[a] += t * mu.nodes[i][a];
        s.add(mu.weights[i] * std::abs(u.interpolate(p) - center));
    }
    return s.value();
}

namespace detail {

// One measure node's probe recipe at a fixed scale: integer base offset from
// the probe center plus multilinear corner weights, valid for any center that
// is itself a grid node.
struct ProbeNode {
    double weight = 0.0;
    int corners = 0;
    std::ptrdiff_t corner_delta[8];  // flat value-array offset from the center
    int corner_off[8][3];            // the same offsets per axis, for guarded probes
    double corner_weight[8];
    int base_off[3] = {0, 0, 0};  // cell base offset per axis
    bool has_frac[3] = {false, false, false};
};

struct ProbeTable {
    std::vector<ProbeNode> nodes;
    int safe_lo[3] = {0, 0, 0};  // inclusive center range where no probe can
    int safe_hi[3] = {0, 0, 0};  // leave the grid
};

inline ProbeTable build_probe_table(const GridFunction& u, const DiscreteMeasure& mu, double t) {
    const double hh = u.h();
    const int m = u.m;
    std::ptrdiff_t stride[3] = {0, 0, 0};
    {
        std::ptrdiff_t s = 1;
        for (int a = u.n - 1; a >= 0; --a) {
            stride[a] = s;
            s *= m;
        }
    }
    ProbeTable table;
    for (int a = 0; a < u.n; ++a) {
        table.safe_lo[a] = 0;
        table.safe_hi[a] = m - 1;
    }
    table.nodes.reserve(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        ProbeNode pn;
        pn.weight = mu.weights[i];
        int base[3] = {0, 0, 0};
        double frac[3] = {0.0, 0.0, 0.0};
        for (int a = 0; a < u.n; ++a) {
            const double s = t * mu.nodes[i][a] / hh;
            double b = std::floor(s);
            double f = s - b;
            if (f < interp_snap_tol) {
                f = 0.0;
            } else if (f > 1.0 - interp_snap_tol) {
                b += 1.0;
                f = 0.0;
            }
            base[a] = static_cast<int>(b);
            frac[a] = f;
        }
        const int cmax = 1 << u.n;
        for (int c = 0; c < cmax; ++c) {
            double w = 1.0;
            int off[3] = {base[0], base[1], base[2]};
            bool skip = false;
            for (int a = 0; a < u.n; ++a) {
                if (c & (1 << a)) {
                    if (frac[a] == 0.0) {
                        skip = true;
                        break;
                    }
                    w *= frac[a];
                    ++off[a];
                } else {
                    w *= 1.0 - frac[a];
                }
            }
            if (skip || w == 0.0) continue;
            std::ptrdiff_t delta = 0;
            for (int a = 0; a < u.n; ++a) delta += off[a] * stride[a];
            const int c_id = pn.corners++;
            pn.corner_delta[c_id] = delta;
            pn.corner_weight[c_id] = w;
            for (int a = 0; a < 3; ++a) pn.corner_off[c_id][a] = off[a];
        }
        for (int a = 0; a < u.n; ++a) {
            const int hi_corner = base[a] + ((frac[a] > 0.0) ? 1 : 0);
            table.safe_lo[a] = std::max(table.safe_lo[a], -base[a]);
            table.safe_hi[a] = std::min(table.safe_hi[a], m - 1 - hi_corner);
            pn.base_off[a] = base[a];
            pn.has_frac[a] = frac[a] > 0.0;
        }
        table.nodes.push_back(pn);
    }
    return table;
}

inline double probe_average_fast(const double* v, const ProbeTable& table, std::ptrdiff_t center) {
    double acc = 0.0;
    for (const ProbeNode& pn : table.nodes) {
        double val = 0.0;
        for (int c = 0; c < pn.corners; ++c) val += pn.corner_weight[c] * v[center + pn.corner_delta[c]];
        acc += pn.weight * std::abs(val);
    }
    return acc;
}

// Probes whose point leaves the box read zero, matching interpolate(); a
// probe that stays inside has every corner inside too.
inline double probe_average_guarded(const GridFunction& u, const ProbeTable& table, const int* ijk) {
    const int m = u.m;
    double acc = 0.0;
    for (const ProbeNode& pn : table.nodes) {
        bool outside = false;
        for (int a = 0; a < u.n; ++a) {
            const int pos = ijk[a] + pn.base_off[a];
            if (pos < 0 || pos > m - 1 || (pos == m - 1 && pn.has_frac[a])) {
                outside = true;
                break;
            }
        }
        if (outside) continue;
        double val = 0.0;
        for (int c = 0; c < pn.corners; ++c) {
            std::ptrdiff_t flat = 0;
            for (int a = 0; a < u.n; ++a) flat = flat * m + (ijk[a] + pn.corner_off[c][a]);
            val += pn.corner_weight[c] * u.values[static_cast<std::size_t>(flat)];
        }
        acc += pn.weight * std::abs(val);
    }
    return acc;
}

}  // namespace detail

// S_mu u on the grid: per node, max over ladder scales of the mu_t average.
inline GridFunction maximal(const GridFunction& u, const DiscreteMeasure& mu, const ScaleLadder& ladder) {
    require(u.n == mu.n, "maximal: dimension mismatch");
    require(!ladder.scales.empty(), "maximal: empty ladder");
    GridFunction out(u.n, u.m, u.L);
    const int m = u.m;
    const double* v = u.values.data();
    for (double t : ladder.scales) {
        const detail::ProbeTable table = detail::build_probe_table(u, mu, t);
        int ijk[3] = {0, 0, 0};
        const std::size_t total = out.node_count();
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (int a = u.n - 1; a >= 0; --a) {
                ijk[a] = static_cast<int>(rest % m);
                rest /= m;
            }
            bool safe = true;
            for (int a = 0; a < u.n; ++a) {
                if (ijk[a] < table.safe_lo[a] || ijk[a] > table.safe_hi[a]) {
                    safe = false;
                    break;
                }
            }
            const double val = safe ? detail::probe_average_fast(v, table, static_cast<std::ptrdiff_t>(idx))
                                    : detail::probe_average_guarded(u, table, ijk);
            if (val > out.values[idx]) out.values[idx] = val;
        }
    }
    return out;
}

// S_mu u at one (possibly off-grid) point.
inline double maximal_at(const GridFunction& u, const DiscreteMeasure& mu, const ScaleLadder& ladder,
                         const Point& x) {
    require(!ladder.scales.empty(), "maximal_at: empty ladder");
    double best = 0.0;
    for (double t : ladder.scales) best = std::max(best, average(u, mu, t, x));
    return best;
}

inline GridFunction hardy_littlewood(const GridFunction& u, const ScaleLadder& ladder,
                                     int ball_nodes = 256) {
    return maximal(u, unit_ball(u.n, ball_nodes), ladder);
}

// T u = M u + I_1 |grad u|.
inline GridFunction t_operator(const GridFunction& u, const ScaleLadder& ladder, int ball_nodes = 256) {
    GridFunction out = hardy_littlewood(u, ladder, ball_nodes);
    const GridFunction riesz = riesz_potential_auto(gradient(u).magnitude);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += riesz.values[i];
    return out;
}

// Truncation between levels t < s: s-t above s, v-t in between, 0 below t.
inline GridFunction truncate_between(const GridFunction& v, double t, double s) {
    require(0.0 <= t && t < s, "truncate_between: need 0 <= t < s");
    GridFunction out = v;
    for (double& x : out.values) x = std::clamp(x - t, 0.0, s - t);
    return out;
}

// Dyadic band truncation of |u| between 2^{k-2} and 2^{k-1}.
inline GridFunction truncate_dyadic(const GridFunction& u, int k) {
    const double lo = std::ldexp(1.0, k - 2);
    const double hi = std::ldexp(1.0, k - 1);
    GridFunction out = u;
    for (double& x : out.values) x = std::clamp(std::abs(x) - lo, 0.0, hi - lo);
    return out;
}

}  // namespace sphmax
