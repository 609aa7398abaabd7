#pragma once

// Catalog of closed-form test functions. All entries are radial; a function
// carries its scalar profile, optionally the radial derivative, and a label
// that round-trips through the CLI parser.

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sphmax/common.hpp"

namespace sphmax {

// Inner profile of the singular example: rho^{1-n} (1 - ln rho)^{-alpha} on
// (0, 1], extended C1 to zero over [1, 2] by a cubic Hermite ramp, zero
// beyond. The value at rho = 0 is taken as 0 (a W^{1,1} representative is
// free on a null set; a finite node value keeps grid sums finite).
inline double radial_power_log_value(double rho, int n, double alpha) {
    if (rho <= 0.0 || rho >= 2.0) return 0.0;
    if (rho <= 1.0) {
        const double s = 1.0 - std::log(rho);
        return std::pow(rho, 1.0 - n) * std::pow(s, -alpha);
    }
    const double d1 = (1.0 - n) + alpha;  // profile slope at rho = 1
    const double t = rho - 1.0;
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    return h00 + h10 * d1;
}

inline double radial_power_log_derivative(double rho, int n, double alpha) {
    if (rho <= 0.0 || rho >= 2.0) return 0.0;
    if (rho <= 1.0) {
        const double s = 1.0 - std::log(rho);
        const double rn = std::pow(rho, -static_cast<double>(n));
        return (1.0 - n) * rn * std::pow(s, -alpha) + alpha * rn * std::pow(s, -alpha - 1.0);
    }
    const double d1 = (1.0 - n) + alpha;
    const double t = rho - 1.0;
    return (6.0 * t * t - 6.0 * t) + (3.0 * t * t - 4.0 * t + 1.0) * d1;
}

inline double singular_log_exponent(int n) { return 1.0 + (n - 1.0) / n; }

struct AnalyticFunction {
    std::string label;
    std::function<double(double)> radial;
    std::function<double(double)> radial_derivative;  // may be empty

    double eval(const Point& x, int n) const { return radial(norm2(x, n)); }
    bool has_derivative() const { return static_cast<bool>(radial_derivative); }
};

inline AnalyticFunction make_constant(double c) {
    return {"constant(" + std::to_string(c) + ")",
            [c](double) { return c; },
            [](double) { return 0.0; }};
}

inline AnalyticFunction make_ball_indicator(double radius) {
    require(radius > 0.0, "ball-indicator: radius must be positive");
    return {"ball-indicator(" + std::to_string(radius) + ")",
            [radius](double r) { return r <= radius ? 1.0 : 0.0; },
            nullptr};
}

inline AnalyticFunction make_gaussian_bump(double width) {
    require(width > 0.0, "gaussian-bump: width must be positive");
    const double w2 = width * width;
    return {"gaussian-bump(" + std::to_string(width) + ")",
            [w2](double r) { return std::exp(-r * r / w2); },
            [w2](double r) { return -2.0 * r / w2 * std::exp(-r * r / w2); }};
}

inline AnalyticFunction make_polynomial_radial(double c, double k) {
    require(k >= 0.0, "polynomial-radial: exponent must be nonnegative");
    return {"polynomial-radial(" + std::to_string(c) + "," + std::to_string(k) + ")",
            [c, k](double r) { return c * std::pow(r, k); },
            [c, k](double r) { return (k == 0.0) ? 0.0 : c * k * std::pow(r, k - 1.0); }};
}

// 1 on [0, a], 0 beyond b, linear or smoothstep transition in between.
inline AnalyticFunction make_cutoff_ramp(double a, double b, bool smooth) {
    require(0.0 <= a && a < b, "cutoff-ramp: need 0 <= a < b");
    std::ostringstream lbl;
    lbl << "cutoff-ramp(" << a << "," << b << "," << (smooth ? "smooth" : "linear") << ")";
    auto val = [a, b, smooth](double r) {
        if (r <= a) return 1.0;
        if (r >= b) return 0.0;
        const double s = (r - a) / (b - a);
        return smooth ? 1.0 - smoothstep01(s) : 1.0 - s;
    };
    auto der = [a, b, smooth](double r) {
        if (r <= a || r >= b) return 0.0;
        const double s = (r - a) / (b - a);
        const double ds = 1.0 / (b - a);
        return smooth ? -6.0 * s * (1.0 - s) * ds : -ds;
    };
    return {lbl.str(), val, der};
}

inline AnalyticFunction make_radial_power_log(int n) {
    require(n >= 1 && n <= 3, "radial-power-log: dimension must be 1-3");
    const double alpha = singular_log_exponent(n);
    return {"radial-power-log(" + std::to_string(n) + ")",
            [n, alpha](double r) { return radial_power_log_value(r, n, alpha); },
            [n, alpha](double r) { return radial_power_log_derivative(r, n, alpha); }};
}

namespace detail {

inline std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

inline double parse_num(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw config_error("");
        return v;
    } catch (...) {
        throw config_error("bad numeric argument '" + s + "' in " + ctx);
    }
}

}  // namespace detail

// Specs look like "gaussian-bump", "gaussian-bump(0.8)",
// "cutoff-ramp(1,2,linear)", "radial-power-log". The dimension n supplies
// defaults where a parameter is omitted.
inline AnalyticFunction parse_function(const std::string& spec, int n) {
    std::string name = spec;
    std::vector<std::string> args;
    const auto open = spec.find('(');
    if (open != std::string::npos) {
        require(spec.back() == ')', "function spec missing closing ')': " + spec);
        name = spec.substr(0, open);
        args = detail::split_args(spec.substr(open + 1, spec.size() - open - 2));
    }
    auto num = [&](std::size_t i, double dflt) {
        return i < args.size() ? detail::parse_num(args[i], spec) : dflt;
    };
    if (name == "constant") return make_constant(num(0, 1.0));
    if (name == "ball-indicator") return make_ball_indicator(num(0, 1.0));
    if (name == "gaussian-bump" || name == "gaussian") return make_gaussian_bump(num(0, 1.0));
    if (name == "polynomial-radial") return make_polynomial_radial(num(0, 1.0), num(1, 2.0));
    if (name == "radial-power-log") return make_radial_power_log(n);
    if (name == "ball-indicator-smoothed") return make_cutoff_ramp(num(0, 1.0), num(1, 1.5), true);
    if (name == "cutoff-ramp") {
        const double a = num(0, 1.0), b = num(1, 2.0);
        bool smooth = false;
        if (args.size() >= 3) {
            if (args[2] == "smooth") smooth = true;
            else if (args[2] == "linear") smooth = false;
            else throw config_error("cutoff-ramp: third argument must be linear|smooth");
        }
        return make_cutoff_ramp(a, b, smooth);
    }
    throw config_error("unknown function catalog tag '" + name + "'");
}

}  // namespace sphmax
