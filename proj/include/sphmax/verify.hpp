#pragma once

// Experiment drivers. Each one runs a numerical check of an inequality,
// profile, or convergence claim on concrete grid data and returns a Report;
// nothing here asserts, the pass/fail decisions live with the callers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphmax/common.hpp"
#include "sphmax/grid.hpp"
#include "sphmax/ladder.hpp"
#include "sphmax/measure.hpp"
#include "sphmax/operators.hpp"
#include "sphmax/radial.hpp"
#include "sphmax/report.hpp"

namespace sphmax {

namespace detail {

inline void echo_grid(Report& rep, const GridFunction& u) {
    rep.params["n"] = std::to_string(u.n);
    rep.params["m"] = std::to_string(u.m);
    rep.params["L"] = format_double(u.L);
}

inline void echo_ladder(Report& rep, const ScaleLadder& ladder) {
    rep.params["ladder_t_min"] = format_double(ladder.t_min);
    rep.params["ladder_t_max"] = format_double(ladder.t_max);
    rep.params["ladder_q"] = format_double(ladder.q);
    rep.params["ladder_count"] = std::to_string(ladder.scales.size());
}

inline void echo_measure(Report& rep, const DiscreteMeasure& mu) {
    rep.params["measure"] = mu.label;
    rep.params["measure_nodes"] = std::to_string(mu.size());
    rep.params["measure_R"] = format_double(mu.R);
}

// Spherical-like scan over the measure's support plus a coarse ambient grid,
// used wherever a full estimate of the constant is wanted.
inline SphericalLikeScan full_spherical_scan(const DiscreteMeasure& mu) {
    std::vector<Point> xs = mu.nodes;
    xs.push_back({0.0, 0.0, 0.0});
    const double R = (mu.R > 0.0) ? mu.R : 1.0;
    const int per_axis = 5;
    int total = 1;
    for (int a = 0; a < mu.n; ++a) total *= per_axis;
    for (int flat = 0; flat < total; ++flat) {
        int rest = flat;
        Point x{0.0, 0.0, 0.0};
        for (int a = 0; a < mu.n; ++a) {
            x[a] = -R + 2.0 * R * (rest % per_axis) / (per_axis - 1);
            rest /= per_axis;
        }
        xs.push_back(x);
    }
    const std::vector<double> r_ladder = geometric_sequence(std::max(R / 64.0, 1e-3), 2.0 * R, 48);
    return spherical_like_scan(mu, xs, r_ladder);
}

}  // namespace detail

inline Report domination_ratio(const GridFunction& u, const DiscreteMeasure& mu,
                               const ScaleLadder& ladder, int ball_nodes = 256) {
    Report rep;
    rep.experiment = "verify-domination";
    detail::echo_grid(rep, u);
    detail::echo_ladder(rep, ladder);
    detail::echo_measure(rep, mu);

    if (u.max_abs() == 0.0) {
        rep.warnings.push_back("trivial input: u vanishes identically, no ratios to take");
        rep.scalars["trivial"] = 1.0;
        rep.scalars["max_ratio"] = 0.0;
        rep.scalars["excluded_nodes"] = 0.0;
        return rep;
    }

    const GridFunction S = maximal(u, mu, ladder);
    const GridFunction T = t_operator(u, ladder, ball_nodes);

    const double floor = 1e-12;
    double max_ratio = 0.0;
    std::size_t argmax = 0;
    KahanSum ratio_sum;
    long counted = 0, excluded = 0;
    for (std::size_t i = 0; i < T.values.size(); ++i) {
        if (T.values[i] > floor) {
            const double r = S.values[i] / T.values[i];
            if (r > max_ratio) {
                max_ratio = r;
                argmax = i;
            }
            ratio_sum.add(r);
            ++counted;
        } else {
            ++excluded;
        }
    }
    require(counted > 0, "domination_ratio: comparison operator vanished everywhere");

    const SphericalLikeScan scan = detail::full_spherical_scan(mu);
    const Point ax = u.node_point(argmax);

    rep.scalars["trivial"] = 0.0;
    rep.scalars["max_ratio"] = max_ratio;
    rep.scalars["mean_ratio"] = ratio_sum.value() / counted;
    rep.scalars["excluded_nodes"] = static_cast<double>(excluded);
    rep.scalars["compared_nodes"] = static_cast<double>(counted);
    rep.scalars["M_hat"] = scan.estimate;
    rep.scalars["R"] = mu.R;
    const double norm_base = scan.estimate * std::pow(std::max(mu.R, 1e-300), u.n - 1.0);
    rep.scalars["normalized_ratio"] = (norm_base > 0.0) ? max_ratio / norm_base
                                                        : std::numeric_limits<double>::infinity();
    rep.scalars["argmax_x"] = ax[0];
    rep.scalars["argmax_y"] = (u.n > 1) ? ax[1] : 0.0;
    rep.scalars["argmax_z"] = (u.n > 2) ? ax[2] : 0.0;
    // exploratory only: gradient mass of S itself (no pass/fail attached)
    rep.scalars["s_gradient_l1"] = lp_norm(gradient(S).magnitude, 1.0);
    return rep;
}

inline Report meyers_ziemer_ratio(const GridFunction& u, const DiscreteMeasure& mu) {
    Report rep;
    rep.experiment = "verify-meyers-ziemer";
    detail::echo_grid(rep, u);
    detail::echo_measure(rep, mu);

    const double denom = lp_norm(gradient(u).magnitude, 1.0);
    require(denom > 0.0, "meyers_ziemer_ratio: gradient vanishes identically");
    if (boundary_max_abs(u) > 1e-12) {
        rep.warnings.push_back("u is not zero on the boundary layer: not compactly supported");
    }

    const double numer = average(u, mu, 1.0, Point{0.0, 0.0, 0.0});
    const SphericalLikeScan scan = detail::full_spherical_scan(mu);
    const double rho = numer / denom;

    rep.scalars["mu_integral"] = numer;
    rep.scalars["gradient_l1"] = denom;
    rep.scalars["rho"] = rho;
    rep.scalars["M_hat"] = scan.estimate;
    rep.scalars["rho_over_M"] = scan.divergent ? std::numeric_limits<double>::infinity()
                                               : rho / scan.estimate;
    if (scan.divergent) rep.warnings.push_back("measure flagged divergent in the spherical-like scan");
    return rep;
}

inline Report gradient_level_profile(const GridFunction& v, const std::vector<double>& level_grid) {
    Report rep;
    rep.experiment = "verify-level-profile";
    detail::echo_grid(rep, v);
    require(!level_grid.empty(), "gradient_level_profile: empty level grid");

    double vmin = 0.0;
    for (double x : v.values) vmin = std::min(vmin, x);
    require(vmin >= -1e-12, "gradient_level_profile: v must be nonnegative");

    const GridFunction gmag = gradient(v).magnitude;
    const double vol = v.cell_volume();
    std::vector<std::pair<double, double>> items;  // (level, gradient mass)
    items.reserve(v.values.size());
    for (std::size_t i = 0; i < v.values.size(); ++i) {
        items.emplace_back(std::max(v.values[i], 0.0), vol * gmag.values[i]);
    }
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<double> levels(items.size()), prefix(items.size() + 1, 0.0);
    {
        KahanSum acc;
        for (std::size_t i = 0; i < items.size(); ++i) {
            levels[i] = items[i].first;
            acc.add(items[i].second);
            prefix[i + 1] = acc.value();
        }
    }
    const double total = prefix.back();

    rep.columns = {"t", "phi"};
    std::vector<double> ts, phis;
    for (double t : level_grid) {
        const auto it = std::upper_bound(levels.begin(), levels.end(), t);
        const double phi = prefix[static_cast<std::size_t>(it - levels.begin())];
        rep.add_row({t, phi});
        ts.push_back(t);
        phis.push_back(phi);
    }
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
        if (ts[i] < ts[i + 1] && phis[i] > phis[i + 1]) monotone = false;
        if (ts[i] > ts[i + 1] && phis[i] < phis[i + 1]) monotone = false;
    }

    rep.scalars["total_gradient_mass"] = total;
    rep.scalars["phi_at_top_level"] = phis.empty() ? 0.0 : *std::max_element(phis.begin(), phis.end());
    rep.scalars["monotone"] = monotone ? 1.0 : 0.0;
    if (ts.size() >= 2) rep.fits["phi_vs_t"] = fit_line(ts, phis);
    return rep;
}

namespace detail {

// |x| lies in (2^{k-2}, 2^{k-1}] for exactly one k; frexp makes the band
// assignment exact at the dyadic endpoints.
inline int dyadic_band(double x) {
    int e = 0;
    const double f = std::frexp(x, &e);
    return (f == 0.5) ? e : e + 1;
}

}  // namespace detail

inline Report truncation_partition_check(const GridFunction& u,
                                         std::optional<std::pair<int, int>> k_range = {}) {
    Report rep;
    rep.experiment = "verify-truncation";
    detail::echo_grid(rep, u);

    const GridFunction gmag = gradient(u).magnitude;
    const double vol = u.cell_volume();

    KahanSum total;
    int k_lo_seen = 0, k_hi_seen = 0;
    bool any = false;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double a = std::abs(u.values[i]);
        if (a == 0.0) continue;
        total.add(vol * gmag.values[i]);
        const int k = detail::dyadic_band(a);
        if (!any) {
            k_lo_seen = k_hi_seen = k;
            any = true;
        } else {
            k_lo_seen = std::min(k_lo_seen, k);
            k_hi_seen = std::max(k_hi_seen, k);
        }
    }
    if (!any) {
        rep.warnings.push_back("trivial input: u vanishes identically, both sides are zero");
        rep.scalars["total_mass"] = 0.0;
        rep.scalars["band_sum"] = 0.0;
        rep.scalars["gap"] = 0.0;
        rep.scalars["uncovered_mass"] = 0.0;
        rep.scalars["uncovered_nodes"] = 0.0;
        return rep;
    }

    const int k_lo = k_range ? k_range->first : k_lo_seen;
    const int k_hi = k_range ? k_range->second : k_hi_seen;
    require(k_lo <= k_hi, "truncation_partition_check: empty k range");

    const int bands = k_hi - k_lo + 1;
    std::vector<KahanSum> band_mass(bands);
    std::vector<long> band_count(bands, 0);
    KahanSum uncovered;
    long uncovered_nodes = 0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double a = std::abs(u.values[i]);
        if (a == 0.0) continue;
        const int k = detail::dyadic_band(a);
        const double g = vol * gmag.values[i];
        if (k < k_lo || k > k_hi) {
            uncovered.add(g);
            ++uncovered_nodes;
        } else {
            band_mass[k - k_lo].add(g);
            ++band_count[k - k_lo];
        }
    }

    rep.columns = {"k", "nodes", "gradient_mass"};
    KahanSum band_sum;
    for (int b = 0; b < bands; ++b) {
        rep.add_row({static_cast<double>(k_lo + b), static_cast<double>(band_count[b]),
                     band_mass[b].value()});
        band_sum.add(band_mass[b].value());
    }
    if (uncovered_nodes > 0) {
        rep.warnings.push_back("k range misses occupied dyadic bands; their mass is reported as uncovered");
    }

    rep.scalars["total_mass"] = total.value();
    rep.scalars["band_sum"] = band_sum.value();
    rep.scalars["uncovered_mass"] = uncovered.value();
    rep.scalars["uncovered_nodes"] = static_cast<double>(uncovered_nodes);
    rep.scalars["gap"] = std::abs(total.value() - band_sum.value() - uncovered.value());
    rep.scalars["k_lo"] = k_lo;
    rep.scalars["k_hi"] = k_hi;
    return rep;
}

inline Report example1_profile(int n, const std::vector<double>& radii, const GridFunction& u,
                               const ScaleLadder& ladder, int sphere_nodes = 512,
                               int w11_rungs = 2048) {
    Report rep;
    rep.experiment = "example1-profile";
    detail::echo_grid(rep, u);
    detail::echo_ladder(rep, ladder);
    require(n == u.n, "example1_profile: dimension mismatch");
    require(!radii.empty(), "example1_profile: no probe radii");

    const double h = u.h();
    for (double r : radii) {
        if (r < 10.0 * h - 1e-12) {
            throw config_error("example1_profile: probe radius below grid resolution");
        }
        require(r <= 0.5 + 1e-12, "example1_profile: probe radii must stay within [10h, 0.5]");
    }

    const DiscreteMeasure mu = unit_sphere(n, sphere_nodes);
    rep.params["sphere_nodes"] = std::to_string(mu.size());

    rep.columns = {"r", "S", "v_grid", "v_exact", "bound_profile", "overlap", "s_ge_v"};
    std::vector<double> log_r, log_S, log_v_corr;
    double min_overlap = std::numeric_limits<double>::infinity(), max_overlap = 0.0;
    bool s_ge_v_all = true;
    const double log_power = (n - 1.0) / n;
    for (double r : radii) {
        Point x{r, 0.0, 0.0};
        const ScaleLadder lad_r = ladder.with_scale(r);
        const double S_val = maximal_at(u, mu, lad_r, x);
        const double v_grid = average(u, mu, r, x);
        const double v_exact = e1_sphere_average(r, n);
        const double corr = std::pow(1.0 - std::log(r), log_power);
        const double bound = std::pow(r, 1.0 - n) / corr;
        const double overlap = v_grid / v_exact;
        const bool ge = S_val >= v_grid;
        s_ge_v_all = s_ge_v_all && ge;
        min_overlap = std::min(min_overlap, overlap);
        max_overlap = std::max(max_overlap, overlap);
        rep.add_row({r, S_val, v_grid, v_exact, bound, overlap, ge ? 1.0 : 0.0});
        log_r.push_back(std::log(r));
        log_S.push_back(std::log(S_val));
        log_v_corr.push_back(std::log(v_exact * corr));
    }
    if (log_r.size() >= 2) {
        rep.fits["s_loglog"] = fit_line(log_r, log_S);
        rep.fits["v_corrected_loglog"] = fit_line(log_r, log_v_corr);
    }
    rep.scalars["s_ge_v_all"] = s_ge_v_all ? 1.0 : 0.0;
    rep.scalars["min_overlap"] = min_overlap;
    rep.scalars["max_overlap"] = max_overlap;

    // Sobolev mass near the singularity: increments of int |grad u| down a
    // dense radius ladder, direct per-segment quadrature.
    const std::vector<double> eps_ladder = geometric_sequence(0.2, 1e-8, w11_rungs);
    const std::vector<double> inc = e1_w11_increments(eps_ladder, n);
    bool inc_monotone = true;
    double shrink_max = 0.0;
    for (std::size_t i = 0; i + 1 < inc.size(); ++i) {
        if (inc[i + 1] > inc[i]) inc_monotone = false;
        if (inc[i] > 0.0) shrink_max = std::max(shrink_max, inc[i + 1] / inc[i]);
    }
    KahanSum w11_tail;
    for (double d : inc) w11_tail.add(d);
    rep.scalars["w11_rungs"] = static_cast<double>(w11_rungs);
    rep.scalars["w11_increment_monotone"] = inc_monotone ? 1.0 : 0.0;
    rep.scalars["w11_last_increment"] = inc.back();
    rep.scalars["w11_shrink_max"] = shrink_max;
    rep.scalars["w11_mass_02_to_1e8"] = w11_tail.value();
    return rep;
}

inline Report example1_divergence(int n, const std::vector<double>& eps_ladder) {
    Report rep;
    rep.experiment = "example1-divergence";
    rep.params["n"] = std::to_string(n);
    rep.params["eps_hi"] = format_double(eps_ladder.front());
    rep.params["eps_lo"] = format_double(eps_ladder.back());
    rep.params["eps_count"] = std::to_string(eps_ladder.size());
    require(eps_ladder.size() >= 3, "example1_divergence: ladder too short");

    const double cousin_alpha = 3.0;  // profile log exponent -2 instead of -(n-1)/n
    const std::vector<double> D_main = e1_divergence_values(eps_ladder, n);
    const std::vector<double> D_cousin = e1_divergence_values(eps_ladder, n, cousin_alpha);

    rep.columns = {"eps", "loglog", "D_main", "D_cousin", "inc_main", "inc_cousin"};
    std::vector<double> xs, ys;
    double max_inc_main = 0.0, max_inc_cousin = 0.0;
    bool increasing_main = true, increasing_cousin = true;
    for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
        const double ll = std::log(1.0 - std::log(eps_ladder[i]));
        const double im = (i == 0) ? D_main[0] : D_main[i] - D_main[i - 1];
        const double ic = (i == 0) ? D_cousin[0] : D_cousin[i] - D_cousin[i - 1];
        if (i > 0 && im <= 0.0) increasing_main = false;
        if (i > 0 && ic <= 0.0) increasing_cousin = false;
        if (i > 0) {
            max_inc_main = std::max(max_inc_main, im);
            max_inc_cousin = std::max(max_inc_cousin, ic);
        }
        rep.add_row({eps_ladder[i], ll, D_main[i], D_cousin[i], im, ic});
        xs.push_back(ll);
        ys.push_back(D_main[i]);
    }
    rep.fits["main_vs_loglog"] = fit_line(xs, ys);

    const double last_inc_main = D_main.back() - D_main[D_main.size() - 2];
    const double last_inc_cousin = D_cousin.back() - D_cousin[D_cousin.size() - 2];
    const double sat = 0.05;  // last increment relative to the largest one
    rep.scalars["strictly_increasing_main"] = increasing_main ? 1.0 : 0.0;
    rep.scalars["strictly_increasing_cousin"] = increasing_cousin ? 1.0 : 0.0;
    rep.scalars["tail_fraction_main"] = last_inc_main / max_inc_main;
    rep.scalars["tail_fraction_cousin"] = last_inc_cousin / max_inc_cousin;
    rep.scalars["divergent_main"] = (last_inc_main / max_inc_main > sat) ? 1.0 : 0.0;
    rep.scalars["cousin_saturated"] = (last_inc_cousin / max_inc_cousin < sat) ? 1.0 : 0.0;
    rep.scalars["D_final_main"] = D_main.back();
    rep.scalars["D_final_cousin"] = D_cousin.back();
    return rep;
}

inline Report lebesgue_convergence(const GridFunction& u, const DiscreteMeasure& mu, const Point& x,
                                   const std::vector<double>& t_ladder) {
    Report rep;
    rep.experiment = "lebesgue-converge";
    detail::echo_grid(rep, u);
    detail::echo_measure(rep, mu);
    require(!t_ladder.empty(), "lebesgue_convergence: empty scale ladder");

    const double h = u.h();
    for (int a = 0; a < u.n; ++a) {
        const double s = (x[a] + u.L) / h;
        require(std::abs(s - std::round(s)) < 1e-9, "lebesgue_convergence: x must be a grid node");
    }
    double t_min = t_ladder.front();
    for (double t : t_ladder) t_min = std::min(t_min, t);
    require(t_min >= 2.0 * h - 1e-12, "lebesgue_convergence: scales must stay above 2h");

    const double u0 = u.interpolate(x);
    const GridFunction gmag = gradient(u).magnitude;
    const double vol = u.cell_volume();

    std::vector<double> ts = t_ladder;
    std::sort(ts.begin(), ts.end(), std::greater<>());

    rep.params["x"] = format_double(x[0]) + " " + format_double(x[1]) + " " + format_double(x[2]);
    rep.columns = {"t", "d", "rhs", "ratio"};
    std::vector<double> log_t, log_d;
    double max_ratio = 0.0;
    std::vector<double> d_seq;
    for (double t : ts) {
        const double d = average_abs_deviation(u, mu, t, x, u0);
        const double rad = 2.0 * t * mu.R;

        // node statistics over the comparison ball B(x, 2tR)
        KahanSum dev, grad_mass;
        long count = 0;
        int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
        for (int a = 0; a < u.n; ++a) {
            lo[a] = std::max(0, static_cast<int>(std::ceil((x[a] - rad + u.L) / h - 1e-12)));
            hi[a] = std::min(u.m - 1, static_cast<int>(std::floor((x[a] + rad + u.L) / h + 1e-12)));
        }
        int ijk[3] = {lo[0], lo[1], lo[2]};
        while (true) {
            Point p{u.coord(ijk[0]), u.n > 1 ? u.coord(ijk[1]) : 0.0,
                    u.n > 2 ? u.coord(ijk[2]) : 0.0};
            Point diff{p[0] - x[0], p[1] - x[1], p[2] - x[2]};
            if (norm2(diff, u.n) <= rad) {
                const std::size_t idx = u.flat(ijk[0], u.n > 1 ? ijk[1] : 0, u.n > 2 ? ijk[2] : 0);
                dev.add(std::abs(u.values[idx] - u0));
                grad_mass.add(vol * gmag.values[idx]);
                ++count;
            }
            int a = u.n - 1;
            for (; a >= 0; --a) {
                if (++ijk[a] <= hi[a]) break;
                ijk[a] = lo[a];
            }
            if (a < 0) break;
        }
        const double mean_dev = (count > 0) ? dev.value() / count : 0.0;
        const double rhs = mean_dev + std::pow(rad, 1.0 - u.n) * grad_mass.value();
        const double ratio = (rhs > 0.0) ? d / rhs : 0.0;
        max_ratio = std::max(max_ratio, ratio);
        rep.add_row({t, d, rhs, ratio});
        d_seq.push_back(d);
        if (d > 0.0) {
            log_t.push_back(std::log(t));
            log_d.push_back(std::log(d));
        }
    }

    if (log_t.size() >= 2) rep.fits["d_loglog"] = fit_line(log_t, log_d);
    bool nondecreasing_toward_tmin = true;  // rows are sorted by decreasing t
    for (std::size_t i = 0; i + 1 < d_seq.size(); ++i) {
        if (d_seq[i + 1] < d_seq[i] - 1e-15) nondecreasing_toward_tmin = false;
    }
    rep.scalars["max_ratio"] = max_ratio;
    rep.scalars["d_nondecreasing_toward_tmin"] = nondecreasing_toward_tmin ? 1.0 : 0.0;
    rep.scalars["d_at_tmin"] = d_seq.empty() ? 0.0 : d_seq.back();
    return rep;
}

inline Report proposition1_check(const GridFunction& u, const std::vector<Point>& y_list, double p,
                                 const ScaleLadder& ladder, int ball_nodes = 256) {
    Report rep;
    rep.experiment = "verify-prop1";
    detail::echo_grid(rep, u);
    detail::echo_ladder(rep, ladder);
    rep.params["p"] = format_double(p);
    require(p > 1.0 && std::isfinite(p), "proposition1_check: need 1 < p < infinity");

    const double h = u.h();
    for (const Point& y : y_list) {
        for (int a = 0; a < u.n; ++a) {
            const double s = y[a] / h;
            require(std::abs(s - std::round(s)) < 1e-9, "proposition1_check: shifts must be grid-aligned");
        }
    }

    const GridFunction A = hardy_littlewood(u, ladder, ball_nodes);
    const double grad_p = lp_norm(gradient(u).magnitude, p);
    require(grad_p > 0.0, "proposition1_check: gradient vanishes identically");

    rep.columns = {"y_norm", "y0", "y1", "y2", "r", "lhs_norm", "mid_norm", "sublinearity_slack"};
    double max_r = 0.0, max_slack = 0.0;
    for (const Point& y : y_list) {
        const double y_norm = norm2(y, u.n);
        if (y_norm == 0.0) {
            rep.add_row({0.0, y[0], y[1], y[2], 0.0, 0.0, 0.0, 0.0});
            continue;
        }
        const GridFunction Ay = translate(A, y);
        const double lhs = lp_norm(Ay - A, p);
        const double r = lhs / (grad_p * y_norm);

        const GridFunction uy = translate(u, y);
        const GridFunction Auy = hardy_littlewood(uy, ladder, ball_nodes);
        const GridFunction Adiff = hardy_littlewood(uy - u, ladder, ball_nodes);
        const double mid = lp_norm(Adiff, p);
        double slack = 0.0;
        for (std::size_t i = 0; i < Auy.values.size(); ++i) {
            slack = std::max(slack, std::abs(Auy.values[i] - A.values[i]) - Adiff.values[i]);
        }
        max_r = std::max(max_r, r);
        max_slack = std::max(max_slack, slack);
        rep.add_row({y_norm, y[0], y[1], y[2], r, lhs, mid, slack});
    }
    rep.scalars["max_r"] = max_r;
    rep.scalars["max_sublinearity_slack"] = max_slack;
    rep.scalars["gradient_lp"] = grad_p;
    return rep;
}

}  // namespace sphmax
