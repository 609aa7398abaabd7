#pragma once

// Uniform-grid representation of functions on [-L, L]^n, n = 1..3, with
// multilinear interpolation, central-difference gradients, Lp norms, and
// translation. Functions are zero-extended outside the cube.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "sphmax/analytic.hpp"
#include "sphmax/common.hpp"

namespace sphmax {

inline constexpr double interp_snap_tol = 1e-12;

struct GridFunction {
    int n = 0;
    int m = 0;
    double L = 0.0;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(int n_, int m_, double L_) : n(n_), m(m_), L(L_) {
        require(n >= 1 && n <= 3, "grid dimension must be 1-3");
        require(m >= 3, "grid needs at least 3 points per axis");
        require(L > 0.0, "grid half-width must be positive");
        values.assign(node_count(), 0.0);
    }

    double h() const { return 2.0 * L / (m - 1); }
    std::size_t node_count() const {
        std::size_t c = 1;
        for (int i = 0; i < n; ++i) c *= static_cast<std::size_t>(m);
        return c;
    }
    double cell_volume() const { return std::pow(h(), n); }
    double coord(int i) const { return -L + i * h(); }

    std::size_t flat(int i, int j = 0, int k = 0) const {
        std::size_t idx = static_cast<std::size_t>(i);
        if (n >= 2) idx = idx * m + j;
        if (n >= 3) idx = idx * m + k;
        return idx;
    }
    Point node_point(std::size_t idx) const {
        int ijk[3] = {0, 0, 0};
        for (int a = n - 1; a >= 0; --a) {
            ijk[a] = static_cast<int>(idx % m);
            idx /= m;
        }
        Point p{0.0, 0.0, 0.0};
        for (int a = 0; a < n; ++a) p[a] = coord(ijk[a]);
        return p;
    }

    bool same_shape(const GridFunction& o) const {
        return n == o.n && m == o.m && L == o.L;
    }

    double max_abs() const {
        double v = 0.0;
        for (double x : values) v = std::max(v, std::abs(x));
        return v;
    }

    // Multilinear interpolation; 0 outside [-L, L]^n. Per-axis fractions
    // within interp_snap_tol of a node collapse onto it so that grid-aligned
    // probes are exact.
    double interpolate(const Point& x) const {
        int base[3] = {0, 0, 0};
        double frac[3] = {0.0, 0.0, 0.0};
        const double hh = h();
        for (int a = 0; a < n; ++a) {
            const double t = (x[a] + L) / hh;
            if (t < -interp_snap_tol || t > (m - 1) + interp_snap_tol) return 0.0;
            int c = static_cast<int>(std::floor(t));
            double f = t - c;
            if (f < interp_snap_tol) {
                f = 0.0;
            } else if (f > 1.0 - interp_snap_tol) {
                ++c;
                f = 0.0;
            }
            if (c < 0) c = 0;
            if (c > m - 1) return 0.0;
            if (c == m - 1 && f != 0.0) return 0.0;
            base[a] = c;
            frac[a] = f;
        }
        double acc = 0.0;
        const int corners = 1 << n;
        for (int c = 0; c < corners; ++c) {
            double w = 1.0;
            int ijk[3] = {base[0], base[1], base[2]};
            bool skip = false;
            for (int a = 0; a < n; ++a) {
                if (c & (1 << a)) {
                    if (frac[a] == 0.0) {
                        skip = true;
                        break;
                    }
                    w *= frac[a];
                    ++ijk[a];
                } else {
                    w *= 1.0 - frac[a];
                }
            }
            if (skip || w == 0.0) continue;
            acc += w * values[flat(ijk[0], ijk[1], ijk[2])];
        }
        return acc;
    }
};

inline GridFunction sample(const AnalyticFunction& f, int n, double L, int m) {
    GridFunction u(n, m, L);
    const std::size_t total = u.node_count();
    for (std::size_t idx = 0; idx < total; ++idx) {
        u.values[idx] = f.eval(u.node_point(idx), n);
    }
    return u;
}

template <class F>
GridFunction sample_pointwise(F&& f, int n, double L, int m) {
    GridFunction u(n, m, L);
    const std::size_t total = u.node_count();
    for (std::size_t idx = 0; idx < total; ++idx) {
        u.values[idx] = f(u.node_point(idx));
    }
    return u;
}

template <class F>
GridFunction combine(const GridFunction& a, const GridFunction& b, F&& f) {
    require(a.same_shape(b), "grid shape mismatch");
    GridFunction out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = f(a.values[i], b.values[i]);
    return out;
}

inline GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    return combine(a, b, [](double x, double y) { return x - y; });
}
inline GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    return combine(a, b, [](double x, double y) { return x + y; });
}

// Copy with the outermost grid layer forced to zero; compactly supported
// inputs are expected to pass through unchanged.
inline GridFunction enforce_zero_boundary(const GridFunction& u) {
    GridFunction out = u;
    const int m = u.m;
    const std::size_t total = u.node_count();
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        bool boundary = false;
        for (int a = u.n - 1; a >= 0; --a) {
            const int c = static_cast<int>(rest % m);
            rest /= m;
            if (c == 0 || c == m - 1) boundary = true;
        }
        if (boundary) out.values[idx] = 0.0;
    }
    return out;
}

inline double boundary_max_abs(const GridFunction& u) {
    double v = 0.0;
    const int m = u.m;
    const std::size_t total = u.node_count();
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        bool boundary = false;
        for (int a = u.n - 1; a >= 0; --a) {
            const int c = static_cast<int>(rest % m);
            rest /= m;
            if (c == 0 || c == m - 1) boundary = true;
        }
        if (boundary) v = std::max(v, std::abs(u.values[idx]));
    }
    return v;
}

inline double lp_norm(const GridFunction& u, double p) {
    if (std::isinf(p)) return u.max_abs();
    require(p >= 1.0, "lp_norm: p must be >= 1 or infinity");
    KahanSum s;
    for (double v : u.values) s.add(std::pow(std::abs(v), p));
    return std::pow(s.value() * u.cell_volume(), 1.0 / p);
}

inline double integral(const GridFunction& u) {
    KahanSum s;
    for (double v : u.values) s.add(v);
    return s.value() * u.cell_volume();
}

// result(x) = u(x - y), zero outside the original support. Grid-aligned
// shifts reduce to an exact index shift.
inline GridFunction translate(const GridFunction& u, const Point& y) {
    GridFunction out(u.n, u.m, u.L);
    const double hh = u.h();
    int shift[3] = {0, 0, 0};
    bool aligned = true;
    for (int a = 0; a < u.n; ++a) {
        const double steps = y[a] / hh;
        const double r = std::round(steps);
        if (std::abs(steps - r) < 1e-9 && std::abs(r) < static_cast<double>(u.m)) {
            shift[a] = static_cast<int>(r);
        } else {
            aligned = false;
            break;
        }
    }
    const std::size_t total = out.node_count();
    if (aligned) {
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            int ijk[3] = {0, 0, 0};
            for (int a = u.n - 1; a >= 0; --a) {
                ijk[a] = static_cast<int>(rest % u.m);
                rest /= u.m;
            }
            bool inside = true;
            for (int a = 0; a < u.n; ++a) {
                ijk[a] -= shift[a];
                if (ijk[a] < 0 || ijk[a] >= u.m) inside = false;
            }
            out.values[idx] = inside ? u.values[u.flat(ijk[0], ijk[1], ijk[2])] : 0.0;
        }
    } else {
        for (std::size_t idx = 0; idx < total; ++idx) {
            Point p = out.node_point(idx);
            for (int a = 0; a < u.n; ++a) p[a] -= y[a];
            out.values[idx] = u.interpolate(p);
        }
    }
    return out;
}

struct GradientField {
    std::vector<GridFunction> components;
    GridFunction magnitude;
};

// Central differences in the interior, one-sided on the boundary layer.
inline GradientField gradient(const GridFunction& u) {
    GradientField g;
    g.components.assign(u.n, GridFunction(u.n, u.m, u.L));
    g.magnitude = GridFunction(u.n, u.m, u.L);
    const double hh = u.h();
    const int m = u.m;
    const std::size_t total = u.node_count();
    std::size_t stride[3] = {0, 0, 0};
    {
        std::size_t s = 1;
        for (int a = u.n - 1; a >= 0; --a) {
            stride[a] = s;
            s *= static_cast<std::size_t>(m);
        }
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        int ijk[3] = {0, 0, 0};
        for (int a = u.n - 1; a >= 0; --a) {
            ijk[a] = static_cast<int>(rest % m);
            rest /= m;
        }
        double mag2 = 0.0;
        for (int a = 0; a < u.n; ++a) {
            double d;
            if (ijk[a] == 0) {
                d = (u.values[idx + stride[a]] - u.values[idx]) / hh;
            } else if (ijk[a] == m - 1) {
                d = (u.values[idx] - u.values[idx - stride[a]]) / hh;
            } else {
                d = (u.values[idx + stride[a]] - u.values[idx - stride[a]]) / (2.0 * hh);
            }
            g.components[a].values[idx] = d;
            mag2 += d * d;
        }
        g.magnitude.values[idx] = std::sqrt(mag2);
    }
    return g;
}

// ||u(. - y) - u||_p / |y|, integrated over the overlap of the box with its
// y-translate; outside it u(x - y) is undefined rather than zero, so those
// nodes are skipped.
inline double difference_quotient_ratio(const GridFunction& u, const Point& y, double p) {
    const double len = norm2(y, u.n);
    require(len > 0.0, "difference_quotient_ratio: |y| must be positive");
    if (!std::isinf(p)) require(p >= 1.0, "lp_norm: p must be >= 1 or infinity");
    const GridFunction uy = translate(u, y);
    KahanSum s;
    double worst = 0.0;
    for (std::size_t idx = 0; idx < u.values.size(); ++idx) {
        const Point x = u.node_point(idx);
        bool inside = true;
        for (int a = 0; a < u.n; ++a) {
            const double c = x[a] - y[a];
            if (c < -u.L - 1e-12 || c > u.L + 1e-12) inside = false;
        }
        if (!inside) continue;
        const double d = std::abs(uy.values[idx] - u.values[idx]);
        worst = std::max(worst, d);
        if (!std::isinf(p)) s.add(std::pow(d, p));
    }
    const double norm = std::isinf(p) ? worst : std::pow(s.value() * u.cell_volume(), 1.0 / p);
    return norm / len;
}

inline double sobolev_conjugate(double p, int n) {
    require(n >= 1, "sobolev_conjugate: bad dimension");
    require(p >= 1.0 && p < n, "sobolev_conjugate: need 1 <= p < n");
    return n * p / (n - p);
}

}  // namespace sphmax
