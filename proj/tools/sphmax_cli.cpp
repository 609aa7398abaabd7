// sphmax command line driver: builds grids, measures, and scale ladders from
// flags, runs one experiment per invocation, and writes the Report as a
// CSV/JSON pair into --out.

#include <CLI11.hpp>

#include <sphmax/sphmax.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace sphmax;

struct CommonOpts {
    int n = 2;
    int m = 129;
    double L = 2.0;
    std::string fn = "gaussian-bump";
    std::string measure = "sphere";
    int measure_count = 0;  // 0 picks a per-label default
    double t_min = 0.0;     // 0 picks the grid default
    double t_max = 0.0;
    double q = 0.0;
    double p = 2.0;
    int ball_nodes = 256;
    std::string out = ".";
    unsigned long seed = 0;  // echoed into reports; all sampling is deterministic
};

std::vector<double> parse_doubles(const std::string& s, const std::string& ctx) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw config_error("");
        } catch (...) {
            throw config_error(ctx + ": bad number '" + item + "' in '" + s + "'");
        }
    }
    if (out.empty()) throw config_error(ctx + ": empty list");
    return out;
}

Point parse_point(const std::string& s, int n, const std::string& ctx) {
    const std::vector<double> c = parse_doubles(s, ctx);
    if (static_cast<int>(c.size()) != n) {
        throw config_error(ctx + ": expected " + std::to_string(n) + " comma-separated coordinates, got '" +
                           s + "'");
    }
    Point x{0.0, 0.0, 0.0};
    for (int a = 0; a < n; ++a) x[a] = c[static_cast<std::size_t>(a)];
    return x;
}

DiscreteMeasure make_measure(const std::string& label, int n, int count) {
    if (label == "sphere") return unit_sphere(n, count > 0 ? count : 2048);
    if (label == "ball") return unit_ball(n, count > 0 ? count : 4096);
    if (label == "cube-boundary") return cube_boundary(n, count > 0 ? count : (n == 3 ? 6144 : 512));
    if (label == "dirac") return from_points(n, {Point{0.0, 0.0, 0.0}}, {1.0}, "dirac");
    throw config_error("unknown measure label '" + label + "'");
}

ScaleLadder make_ladder(const CommonOpts& o, double h, double R) {
    const double q = o.q > 0.0 ? o.q : std::pow(2.0, 1.0 / 8.0);
    if (o.t_min > 0.0 || o.t_max > 0.0) {
        const double lo = o.t_min > 0.0 ? o.t_min : 2.0 * h;
        const double hi = o.t_max > 0.0 ? o.t_max : std::max(lo, o.L / (2.0 * std::max(R, 1e-12)));
        return ScaleLadder::geometric(lo, hi, q);
    }
    return ScaleLadder::for_grid(h, o.L, R, q);
}

GridFunction sample_fn(const CommonOpts& o) { return sample(parse_function(o.fn, o.n), o.n, o.L, o.m); }

void finish(Report rep, const CommonOpts& o) {
    rep.params["seed"] = std::to_string(o.seed);
    rep.write(o.out);
    std::cout << rep.experiment << ": wrote " << o.out << "/" << rep.experiment << ".json and .csv\n";
    for (const std::string& w : rep.warnings) std::cout << "  warning: " << w << "\n";
}

// Shared flag wiring. Every experiment subcommand gets --out/--seed and an
// optional key=value config file; flags given on the command line win.
void add_output_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "Output directory for the report files");
    cmd->add_option("--seed", o.seed, "Echoed into the report; sampling is deterministic");
    cmd->set_config("--config", "", "Optional key=value file; command line flags override it");
}

void add_grid_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "Dimension (1-3)")->check(CLI::Range(1, 3));
    cmd->add_option("--m", o.m, "Grid points per axis");
    cmd->add_option("--L", o.L, "Grid half-width; domain is [-L, L]^n");
}

void add_fn_opt(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--fn", o.fn, "Function spec, e.g. gaussian-bump(0.8); see `catalog`");
}

void add_measure_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--measure", o.measure, "Measure label: sphere | ball | cube-boundary | dirac");
    cmd->add_option("--measure-count", o.measure_count, "Measure node count (0 = label default)");
}

void add_ladder_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--t-min", o.t_min, "Smallest scale (0 = 2h)");
    cmd->add_option("--t-max", o.t_max, "Largest scale (0 = grid default)");
    cmd->add_option("--q", o.q, "Ladder ratio between consecutive scales (0 = 2^(1/8))");
}

void run_measure_check(const CommonOpts& o, double r_min, double r_max, int r_count) {
    const DiscreteMeasure mu = make_measure(o.measure, o.n, o.measure_count);
    Report rep;
    rep.experiment = "measure-check";
    detail::echo_measure(rep, mu);
    rep.params["n"] = std::to_string(mu.n);

    // Support-restricted scan: probe centers are the measure's own nodes.
    // The ladder floor stays above the inter-node spacing so the sampled
    // estimate reflects the measure, not its discretization.
    const double Rf = mu.R > 0.0 ? mu.R : 1.0;
    const double lo = r_min > 0.0 ? r_min : Rf / 16.0;
    const double hi = r_max > 0.0 ? r_max : 2.0 * Rf;
    const SphericalLikeScan scan = spherical_like_scan(mu, mu.nodes, geometric_sequence(lo, hi, r_count));

    KahanSum mass;
    for (double w : mu.weights) mass.add(w);
    rep.scalars["mass"] = mass.value();
    rep.scalars["support_radius"] = mu.R;
    rep.scalars["node_count"] = static_cast<double>(mu.size());
    rep.scalars["spherical_like_estimate"] = scan.estimate;
    rep.scalars["argmax_r"] = scan.argmax_r;
    for (int a = 0; a < mu.n; ++a) {
        rep.scalars["argmax_x" + std::to_string(a)] = scan.argmax_x[static_cast<std::size_t>(a)];
    }
    rep.scalars["divergent"] = scan.divergent ? 1.0 : 0.0;
    rep.scalars["growth_ratio"] = scan.growth_ratio;
    if (scan.divergent) {
        rep.warnings.push_back("estimate kept growing as r decreased; measure is not spherical-like");
    }
    finish(std::move(rep), o);
}

void run_op_maximal(const CommonOpts& o, const std::vector<std::string>& probes) {
    const GridFunction u = sample_fn(o);
    const DiscreteMeasure mu = make_measure(o.measure, o.n, o.measure_count);
    const ScaleLadder ladder = make_ladder(o, u.h(), mu.R);

    Report rep;
    rep.experiment = "op-maximal";
    detail::echo_grid(rep, u);
    detail::echo_ladder(rep, ladder);
    detail::echo_measure(rep, mu);
    rep.params["fn"] = parse_function(o.fn, o.n).label;

    const GridFunction S = maximal(u, mu, ladder);
    rep.scalars["sup_norm"] = lp_norm(S, std::numeric_limits<double>::infinity());
    rep.scalars["l1_norm"] = lp_norm(S, 1.0);
    rep.scalars["l2_norm"] = lp_norm(S, 2.0);
    // Exploratory only: Sobolev seminorm of the maximal function. No
    // pass/fail semantics attached.
    rep.scalars["s_gradient_l1"] = lp_norm(gradient(S).magnitude, 1.0);

    rep.columns = {"x0", "x1", "x2", "value"};
    for (const std::string& ps : probes) {
        const Point x = parse_point(ps, o.n, "op maximal --probe");
        rep.add_row({x[0], x[1], x[2], maximal_at(u, mu, ladder, x)});
    }
    finish(std::move(rep), o);
}

void run_op_riesz(const CommonOpts& o, const std::string& method) {
    const GridFunction g = sample_fn(o);
    Report rep;
    rep.experiment = "op-riesz";
    detail::echo_grid(rep, g);
    rep.params["fn"] = parse_function(o.fn, o.n).label;
    rep.params["method"] = method;

    GridFunction pot;
    if (method == "direct") pot = riesz_potential_direct(g);
    else if (method == "fft") pot = riesz_potential_fft(g);
    else if (method == "auto") pot = riesz_potential_auto(g);
    else throw config_error("op riesz: method must be auto|direct|fft");

    rep.scalars["value_at_origin"] = pot.interpolate(Point{0.0, 0.0, 0.0});
    rep.scalars["sup_norm"] = lp_norm(pot, std::numeric_limits<double>::infinity());
    rep.scalars["l2_norm"] = lp_norm(pot, 2.0);
    finish(std::move(rep), o);
}

void run_op_average(const CommonOpts& o, const std::string& x_spec, double t) {
    const GridFunction u = sample_fn(o);
    const DiscreteMeasure mu = make_measure(o.measure, o.n, o.measure_count);
    const Point x = parse_point(x_spec, o.n, "op average --x");

    Report rep;
    rep.experiment = "op-average";
    detail::echo_grid(rep, u);
    detail::echo_measure(rep, mu);
    rep.params["fn"] = parse_function(o.fn, o.n).label;
    rep.params["t"] = format_double(t);
    rep.params["x"] = x_spec;
    rep.scalars["value"] = average(u, mu, t, x);
    rep.scalars["abs_deviation"] = average_abs_deviation(u, mu, t, x, u.interpolate(x));
    finish(std::move(rep), o);
}

void run_verify_domination(const CommonOpts& o) {
    const GridFunction u = sample_fn(o);
    const DiscreteMeasure mu = make_measure(o.measure, o.n, o.measure_count);
    const ScaleLadder ladder = make_ladder(o, u.h(), mu.R);
    Report rep = domination_ratio(u, mu, ladder, o.ball_nodes);
    rep.params["fn"] = parse_function(o.fn, o.n).label;
    finish(std::move(rep), o);
}

void run_verify_meyers_ziemer(const CommonOpts& o) {
    const GridFunction u = sample_fn(o);
    const DiscreteMeasure mu = make_measure(o.measure, o.n, o.measure_count);
    Report rep = meyers_ziemer_ratio(u, mu);
    rep.params["fn"] = parse_function(o.fn, o.n).label;
    finish(std::move(rep), o);
}

void run_verify_truncation(const CommonOpts& o, int k_lo, int k_hi, int level_count) {
    const GridFunction u = sample_fn(o);
    std::optional<std::pair<int, int>> range;
    if (k_lo <= k_hi) range = std::make_pair(k_lo, k_hi);
    Report rep = truncation_partition_check(u, range);
    rep.params["fn"] = parse_function(o.fn, o.n).label;

    // Companion report: cumulative gradient mass below each level of |u|,
    // on a uniform level grid up to max |u|.
    require(level_count >= 2, "verify truncation: need at least 2 levels");
    GridFunction au = u;
    double vmax = 0.0;
    for (double& v : au.values) {
        v = std::abs(v);
        vmax = std::max(vmax, v);
    }
    std::vector<double> levels(static_cast<std::size_t>(level_count));
    for (int i = 0; i < level_count; ++i) {
        levels[static_cast<std::size_t>(i)] = (vmax > 0.0 ? vmax : 1.0) * i / (level_count - 1);
    }
    Report prof = gradient_level_profile(au, levels);
    prof.params["fn"] = rep.params["fn"];
    finish(std::move(prof), o);
    finish(std::move(rep), o);
}

void run_verify_prop1(const CommonOpts& o, const std::vector<std::string>& y_specs) {
    const GridFunction u = sample_fn(o);
    const ScaleLadder ladder = make_ladder(o, u.h(), 1.0);
    std::vector<Point> ys;
    if (y_specs.empty()) {
        // Default shifts: 8 grid cells along each axis and the diagonal, so
        // the same physical y stays grid-aligned after m -> 2m-1 refinement.
        const double d = 8.0 * u.h();
        Point e0{d, 0.0, 0.0};
        ys.push_back(e0);
        if (o.n >= 2) {
            ys.push_back(Point{0.0, d, 0.0});
            ys.push_back(Point{d, d, 0.0});
        }
    } else {
        for (const std::string& s : y_specs) ys.push_back(parse_point(s, o.n, "verify prop1 --y"));
    }
    Report rep = proposition1_check(u, ys, o.p, ladder, o.ball_nodes);
    rep.params["fn"] = parse_function(o.fn, o.n).label;
    finish(std::move(rep), o);
}

void run_example1_profile(const CommonOpts& o, const std::string& radii_spec, int sphere_nodes,
                          int w11_rungs) {
    const GridFunction u = sample(make_radial_power_log(o.n), o.n, o.L, o.m);
    const ScaleLadder ladder = make_ladder(o, u.h(), 1.0);
    const std::vector<double> radii = parse_doubles(radii_spec, "example1 profile --radii");
    Report rep = example1_profile(o.n, radii, u, ladder, sphere_nodes, w11_rungs);
    finish(std::move(rep), o);
}

void run_example1_divergence(const CommonOpts& o, double eps_min, double eps_max, int rungs) {
    require(eps_min > 0.0 && eps_min < eps_max, "example1 divergence: need 0 < eps-min < eps-max");
    Report rep = example1_divergence(o.n, geometric_sequence(eps_max, eps_min, rungs));
    finish(std::move(rep), o);
}

void run_lebesgue_converge(const CommonOpts& o, const std::string& x_spec) {
    const GridFunction u = sample_fn(o);
    const DiscreteMeasure mu = make_measure(o.measure, o.n, o.measure_count);
    const Point x = parse_point(x_spec, o.n, "lebesgue converge --x");

    const double h = u.h();
    const double q = o.q > 0.0 ? o.q : 4.0 / 3.0;
    const double hi = o.t_max > 0.0 ? o.t_max : 0.4;
    const double lo = o.t_min > 0.0 ? o.t_min : 2.5 * h;
    require(q > 1.0, "lebesgue converge: ladder ratio q must exceed 1");
    require(lo > 0.0 && lo <= hi, "lebesgue converge: need 0 < t-min <= t-max");
    std::vector<double> ts;
    for (double t = hi; t >= lo * (1.0 - 1e-12); t /= q) ts.push_back(t);
    require(ts.size() >= 2, "lebesgue converge: ladder has fewer than 2 scales");

    Report rep = lebesgue_convergence(u, mu, x, ts);
    rep.params["fn"] = parse_function(o.fn, o.n).label;
    rep.params["x"] = x_spec;
    finish(std::move(rep), o);
}

void run_capacity_solve(const CommonOpts& o, double radius, int m_coarse, int max_iters) {
    const CapacityResult res = solve_ball_capacity(o.n, o.p, radius, o.L, o.m, m_coarse, max_iters);
    const double oracle = radial_capacity_oracle(o.n, o.p, radius, o.L);
    const double beta = (o.p - o.n) / (o.p - 1.0);
    const double whole_space =
        std::pow(std::abs(beta), o.p - 1.0) * unit_sphere_area(o.n) * std::pow(radius, o.n - o.p);

    Report rep;
    rep.experiment = "capacity-solve";
    rep.params["n"] = std::to_string(o.n);
    rep.params["p"] = format_double(o.p);
    rep.params["r"] = format_double(radius);
    rep.params["L"] = format_double(o.L);
    rep.params["m"] = std::to_string(o.m);
    rep.params["m_coarse"] = std::to_string(m_coarse);
    rep.params["max_iters"] = std::to_string(max_iters);

    bool monotone = true;
    for (std::size_t i = 0; i + 1 < res.energy_history.size(); ++i) {
        if (res.energy_history[i + 1] > res.energy_history[i]) monotone = false;
    }
    rep.scalars["energy"] = res.energy;
    rep.scalars["oracle_boxed"] = oracle;
    rep.scalars["oracle_whole_space"] = whole_space;
    rep.scalars["box_correction"] = oracle / whole_space;
    rep.scalars["energy_over_oracle"] = res.energy / oracle;
    rep.scalars["energy_over_whole_space"] = res.energy / whole_space;
    rep.scalars["converged"] = res.converged ? 1.0 : 0.0;
    rep.scalars["iterations"] = static_cast<double>(res.iterations);
    rep.scalars["history_monotone"] = monotone ? 1.0 : 0.0;

    rep.columns = {"iteration", "energy"};
    for (std::size_t i = 0; i < res.energy_history.size(); ++i) {
        rep.add_row({static_cast<double>(i), res.energy_history[i]});
    }
    finish(std::move(rep), o);
}

void run_catalog() {
    // Sorted within each section; output must not change between runs.
    std::cout << "experiments:\n"
              << "  capacity solve      p-capacity of a ball by constrained energy descent\n"
              << "  example1 divergence cumulative Sobolev mass of the singular profile and its tamer cousin\n"
              << "  example1 profile    spherical means and maximal values of the singular profile\n"
              << "  lebesgue converge   averaged deviation d(t) against the scale ladder\n"
              << "  measure check       mass/support validation and spherical-like constant scan\n"
              << "  op average          single spherical-like average at one (x, t)\n"
              << "  op maximal          maximal function over a scale ladder, plus probe values\n"
              << "  op riesz            Riesz potential I_1 (direct or FFT convolution)\n"
              << "  verify domination   node ratios maximal(u) / (HL u + I_1 |grad u|)\n"
              << "  verify meyers-ziemer  integral of u against mu vs gradient mass\n"
              << "  verify prop1        maximal-function difference quotients vs gradient norm\n"
              << "  verify truncation   dyadic band decomposition of the gradient mass\n";
    std::cout << "functions (--fn):\n"
              << "  ball-indicator(radius=1)        1 on |x| <= radius, else 0\n"
              << "  ball-indicator-smoothed(a=1,b=1.5)  1 on |x| <= a, cubic taper to 0 at b\n"
              << "  constant(c=1)                   constant value c\n"
              << "  cutoff-ramp(a=1,b=2,linear|smooth)  1 on |x| <= a, ramp to 0 at b\n"
              << "  gaussian-bump(width=1)          exp(-|x|^2 / width^2); alias: gaussian\n"
              << "  polynomial-radial(c=1,k=2)      c * |x|^k\n"
              << "  radial-power-log                |x|^(1-n) * log(e/|x|)^(-(1+(n-1)/n)) inside the\n"
              << "                                  unit ball, C^1 ramp to 0 on 1 <= |x| <= 2\n";
    std::cout << "measures (--measure):\n"
              << "  ball           uniform probability measure on the unit ball\n"
              << "  cube-boundary  uniform probability measure on the boundary of [-1,1]^n\n"
              << "  dirac          unit point mass at the origin\n"
              << "  sphere         uniform probability measure on the unit sphere\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete spherical-like maximal operators, Riesz potentials, and p-capacity"};
    app.require_subcommand(1);
    CommonOpts o;

    // measure check
    double mc_r_min = 0.0, mc_r_max = 0.0;
    int mc_r_count = 48;
    CLI::App* measure = app.add_subcommand("measure", "Measure utilities")->require_subcommand(1);
    CLI::App* mc = measure->add_subcommand("check", "Validate a measure and scan its spherical-like constant");
    mc->add_option("--n", o.n, "Dimension (1-3)")->check(CLI::Range(1, 3));
    add_measure_opts(mc, o);
    mc->add_option("--r-min", mc_r_min, "Scan floor (0 = R/16)");
    mc->add_option("--r-max", mc_r_max, "Scan ceiling (0 = 2R)");
    mc->add_option("--r-count", mc_r_count, "Scan ladder size");
    add_output_opts(mc, o);
    mc->callback([&] { run_measure_check(o, mc_r_min, mc_r_max, mc_r_count); });

    // op maximal / riesz / average
    CLI::App* op = app.add_subcommand("op", "Single-operator evaluations")->require_subcommand(1);

    std::vector<std::string> probes;
    CLI::App* opmax = op->add_subcommand("maximal", "Maximal function over a scale ladder");
    add_grid_opts(opmax, o);
    add_fn_opt(opmax, o);
    add_measure_opts(opmax, o);
    add_ladder_opts(opmax, o);
    opmax->add_option("--probe", probes, "Probe point x0,x1,... (repeatable); adds a row per probe");
    add_output_opts(opmax, o);
    opmax->callback([&] { run_op_maximal(o, probes); });

    std::string riesz_method = "auto";
    CLI::App* opriesz = op->add_subcommand("riesz", "Riesz potential I_1 of the sampled function");
    add_grid_opts(opriesz, o);
    add_fn_opt(opriesz, o);
    opriesz->add_option("--method", riesz_method, "auto | direct | fft");
    add_output_opts(opriesz, o);
    opriesz->callback([&] { run_op_riesz(o, riesz_method); });

    std::string avg_x = "0,0";
    double avg_t = 0.5;
    CLI::App* opavg = op->add_subcommand("average", "Single spherical-like average");
    add_grid_opts(opavg, o);
    add_fn_opt(opavg, o);
    add_measure_opts(opavg, o);
    opavg->add_option("--x", avg_x, "Center point, comma-separated coordinates");
    opavg->add_option("--t", avg_t, "Scale")->check(CLI::PositiveNumber);
    add_output_opts(opavg, o);
    opavg->callback([&] { run_op_average(o, avg_x, avg_t); });

    // verify ...
    CLI::App* verify = app.add_subcommand("verify", "Inequality and identity checks")->require_subcommand(1);

    CLI::App* vdom = verify->add_subcommand("domination", "maximal(u) vs HL u + I_1 |grad u| node ratios");
    add_grid_opts(vdom, o);
    add_fn_opt(vdom, o);
    add_measure_opts(vdom, o);
    add_ladder_opts(vdom, o);
    vdom->add_option("--ball-nodes", o.ball_nodes, "Ball discretization for the HL operator");
    add_output_opts(vdom, o);
    vdom->callback([&] { run_verify_domination(o); });

    CLI::App* vmz = verify->add_subcommand("meyers-ziemer", "Integral of u d(mu) against gradient mass");
    add_grid_opts(vmz, o);
    add_fn_opt(vmz, o);
    add_measure_opts(vmz, o);
    add_output_opts(vmz, o);
    vmz->callback([&] { run_verify_meyers_ziemer(o); });

    int trunc_k_lo = 1, trunc_k_hi = 0;  // lo > hi means auto range
    int trunc_levels = 33;
    CLI::App* vtr = verify->add_subcommand("truncation", "Dyadic band decomposition of gradient mass");
    add_grid_opts(vtr, o);
    add_fn_opt(vtr, o);
    vtr->add_option("--k-lo", trunc_k_lo, "Lowest dyadic band (default: auto)");
    vtr->add_option("--k-hi", trunc_k_hi, "Highest dyadic band (default: auto)");
    vtr->add_option("--levels", trunc_levels, "Level grid size for the companion level profile");
    add_output_opts(vtr, o);
    vtr->callback([&] { run_verify_truncation(o, trunc_k_lo, trunc_k_hi, trunc_levels); });

    std::vector<std::string> prop1_ys;
    CLI::App* vp1 = verify->add_subcommand("prop1", "Maximal-function shifts vs gradient L^p norm");
    add_grid_opts(vp1, o);
    add_fn_opt(vp1, o);
    add_ladder_opts(vp1, o);
    vp1->add_option("--p", o.p, "Lebesgue exponent")->check(CLI::PositiveNumber);
    vp1->add_option("--y", prop1_ys, "Shift vector y0,y1,... (repeatable, grid-aligned)");
    vp1->add_option("--ball-nodes", o.ball_nodes, "Ball discretization for the HL operator");
    add_output_opts(vp1, o);
    vp1->callback([&] { run_verify_prop1(o, prop1_ys); });

    // example1 ...
    CLI::App* ex1 = app.add_subcommand("example1", "Singular profile experiments")->require_subcommand(1);

    std::string radii_spec = "0.05,0.1,0.2,0.4";
    int sphere_nodes = 512, w11_rungs = 2048;
    CLI::App* e1p = ex1->add_subcommand("profile", "Spherical means and maximal values at probe radii");
    add_grid_opts(e1p, o);
    add_ladder_opts(e1p, o);
    e1p->add_option("--radii", radii_spec, "Probe radii, comma-separated");
    e1p->add_option("--sphere-nodes", sphere_nodes, "Sphere discretization for the averages");
    e1p->add_option("--w11-rungs", w11_rungs, "Radius ladder size for the Sobolev mass increments");
    add_output_opts(e1p, o);
    e1p->callback([&] { run_example1_profile(o, radii_spec, sphere_nodes, w11_rungs); });

    double eps_min = 1e-8, eps_max = 1e-2;
    int div_rungs = 25;
    CLI::App* e1d = ex1->add_subcommand("divergence", "Cumulative Sobolev mass vs the log-log scale");
    e1d->add_option("--n", o.n, "Dimension (1-3)")->check(CLI::Range(1, 3));
    e1d->add_option("--eps-min", eps_min, "Innermost radius")->check(CLI::PositiveNumber);
    e1d->add_option("--eps-max", eps_max, "Outermost radius")->check(CLI::PositiveNumber);
    e1d->add_option("--rungs", div_rungs, "Ladder size");
    add_output_opts(e1d, o);
    e1d->callback([&] { run_example1_divergence(o, eps_min, eps_max, div_rungs); });

    // lebesgue converge
    std::string leb_x = "0,0";
    CLI::App* leb = app.add_subcommand("lebesgue", "Averaged convergence experiments")->require_subcommand(1);
    CLI::App* lebc = leb->add_subcommand("converge", "Deviation d(t) of averages from u(x)");
    add_grid_opts(lebc, o);
    add_fn_opt(lebc, o);
    add_measure_opts(lebc, o);
    add_ladder_opts(lebc, o);
    lebc->add_option("--x", leb_x, "Probe point (must be a grid node)");
    add_output_opts(lebc, o);
    lebc->callback([&] { run_lebesgue_converge(o, leb_x); });

    // capacity solve
    double cap_r = 1.0;
    int cap_m_coarse = 17, cap_max_iters = 4000;
    CLI::App* cap = app.add_subcommand("capacity", "Variational capacity experiments")->require_subcommand(1);
    CLI::App* caps = cap->add_subcommand("solve", "p-capacity of a centered ball by energy descent");
    caps->add_option("--n", o.n, "Dimension (1-3)")->check(CLI::Range(1, 3));
    caps->add_option("--p", o.p, "Capacity exponent, 1 < p < n")->check(CLI::PositiveNumber);
    caps->add_option("--r", cap_r, "Ball radius")->check(CLI::PositiveNumber);
    caps->add_option("--L", o.L, "Domain half-width");
    caps->add_option("--m", o.m, "Grid points per axis at the finest level");
    caps->add_option("--m-coarse", cap_m_coarse, "Coarsest cascade level");
    caps->add_option("--max-iters", cap_max_iters, "Iteration cap per level");
    add_output_opts(caps, o);
    caps->callback([&] { run_capacity_solve(o, cap_r, cap_m_coarse, cap_max_iters); });

    // catalog
    CLI::App* cat = app.add_subcommand("catalog", "List measures, functions, and experiments");
    cat->callback([&] { run_catalog(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
