#pragma once

// 1-D radial machinery for the singular example: exact sphere averages
// through the origin, W^{1,1} annulus integrals, and the divergence integral
// D(eps). All integrands here are exactly radial, so these paths are not
// grid-limited.
//
// The angular integrand of the sphere average has a borderline
// delta^{-1} log^{-alpha} endpoint singularity whose mass extends far below
// any floating-point floor; the closed-form tail of x^{-1}(A - ln x)^{-alpha}
// is therefore split off exactly and only regular remainders are quadratured.

#include <cmath>
#include <vector>

#include "sphmax/analytic.hpp"
#include "sphmax/common.hpp"
#include "sphmax/quadrature.hpp"

namespace sphmax {

// Average of the generalized profile over the sphere S^{n-1}(x, |x|) with
// |x| = r, which passes through the singularity at the origin. Valid for
// 0 < r <= 1.5 (the analytic tail uses the inner profile, which requires
// 2 r sin(delta_split) <= 1).
inline double e1_sphere_average(double r, int n, double alpha) {
    require(n == 2 || n == 3, "e1_sphere_average: dimension must be 2 or 3");
    require(r > 0.0 && r <= 1.5, "e1_sphere_average: need 0 < r <= 1.5");
    const double delta_split = 0.3;
    const double xs = std::sin(delta_split);
    const double A = 1.0 - std::log(2.0 * r);

    auto u = [&](double rho) { return radial_power_log_value(rho, n, alpha); };

    if (n == 2) {
        // (2/pi) int_0^{pi/2} u(2 r sin d) dd
        const double tail_exact = log_singular_tail(A, xs, alpha) / (2.0 * r);
        auto reg = [&](double x) {
            if (x <= 0.0) return 0.0;
            const double corr = 1.0 / std::sqrt(1.0 - x * x) - 1.0;
            return std::pow(x, -1.0) * std::pow(A - std::log(x), -alpha) * corr / (2.0 * r);
        };
        const double tail_reg = simpson(reg, 0.0, xs, 512);
        const double smooth =
            simpson([&](double d) { return u(2.0 * r * std::sin(d)); }, delta_split, 0.5 * pi, 512);
        return (2.0 / pi) * (tail_exact + tail_reg + smooth);
    }

    // n = 3: int_0^{pi/2} u(2 r sin d) 2 sin d cos d dd; in x = sin d the
    // cosine cancels the Jacobian, so the tail is exactly the closed form.
    const double tail_exact = log_singular_tail(A, xs, alpha) / (2.0 * r * r);
    const double smooth = simpson(
        [&](double d) { return u(2.0 * r * std::sin(d)) * 2.0 * std::sin(d) * std::cos(d); }, delta_split,
        0.5 * pi, 512);
    return tail_exact + smooth;
}

inline double e1_sphere_average(double r, int n) {
    return e1_sphere_average(r, n, singular_log_exponent(n));
}

// int_{eps < |x| < r_out} |grad u| dx by 1-D quadrature; the inner region is
// integrated in s = 1 - ln(rho) where the integrand is smooth and, beyond
// s = 2.5, decreasing.
inline double e1_w11_annulus(double eps, double r_out, int n, double alpha) {
    require(eps > 0.0 && eps < r_out, "e1_w11_annulus: need 0 < eps < r_out");
    require(r_out <= 2.0, "e1_w11_annulus: profile vanishes beyond 2");
    const double area = unit_sphere_area(n);
    auto f_r = [&](double rho) {
        return area * std::pow(rho, n - 1.0) * std::abs(radial_power_log_derivative(rho, n, alpha));
    };
    double total = 0.0;
    const double inner_top = std::min(r_out, 1.0);
    if (eps < inner_top) {
        const double s_lo = 1.0 - std::log(inner_top);
        const double s_hi = 1.0 - std::log(eps);
        auto f_s = [&](double s) {
            const double rho = std::exp(1.0 - s);
            return f_r(rho) * rho;
        };
        const int panels = std::max(64, static_cast<int>(64.0 * (s_hi - s_lo)));
        total += simpson(f_s, s_lo, s_hi, panels);
    }
    if (r_out > 1.0) total += simpson(f_r, 1.0, r_out, 256);
    return total;
}

inline double e1_w11_annulus(double eps, double r_out, int n) {
    return e1_w11_annulus(eps, r_out, n, singular_log_exponent(n));
}

// Per-rung increments of int_{eps<|x|<1} |grad u| dx along a decreasing
// radius ladder. Each segment is integrated on its own with a fixed panel
// count, so the increment sequence inherits the monotonicity of the s-space
// integrand instead of picking up cross-call quadrature jitter.
inline std::vector<double> e1_w11_increments(const std::vector<double>& eps_ladder, int n,
                                             double alpha) {
    require(eps_ladder.size() >= 2, "e1_w11_increments: need at least two radii");
    for (std::size_t i = 0; i + 1 < eps_ladder.size(); ++i) {
        require(eps_ladder[i] > eps_ladder[i + 1], "e1_w11_increments: ladder must decrease");
    }
    require(eps_ladder.front() < 1.0 && eps_ladder.back() > 0.0,
            "e1_w11_increments: radii must lie in (0, 1)");
    const double area = unit_sphere_area(n);
    auto f_s = [&](double s) {
        const double rho = std::exp(1.0 - s);
        return area * std::pow(rho, static_cast<double>(n)) *
               std::abs(radial_power_log_derivative(rho, n, alpha));
    };
    std::vector<double> out;
    out.reserve(eps_ladder.size() - 1);
    for (std::size_t i = 0; i + 1 < eps_ladder.size(); ++i) {
        const double s_lo = 1.0 - std::log(eps_ladder[i]);
        const double s_hi = 1.0 - std::log(eps_ladder[i + 1]);
        out.push_back(simpson(f_s, s_lo, s_hi, 16));
    }
    return out;
}

inline std::vector<double> e1_w11_increments(const std::vector<double>& eps_ladder, int n) {
    return e1_w11_increments(eps_ladder, n, singular_log_exponent(n));
}

// D(eps) = int_{eps<|x|<1} v(x)^{n/(n-1)} dx at each ladder radius, by
// cumulative segment quadrature in s = 1 - ln r. The ladder must decrease.
inline std::vector<double> e1_divergence_values(const std::vector<double>& eps_ladder, int n,
                                                double alpha) {
    require(!eps_ladder.empty(), "e1_divergence_values: empty ladder");
    for (std::size_t i = 0; i + 1 < eps_ladder.size(); ++i) {
        require(eps_ladder[i] > eps_ladder[i + 1], "e1_divergence_values: ladder must decrease");
    }
    require(eps_ladder.front() < 1.0 && eps_ladder.back() > 0.0,
            "e1_divergence_values: radii must lie in (0, 1)");
    const double expo = n / (n - 1.0);
    const double area = unit_sphere_area(n);
    auto f_s = [&](double s) {
        const double rho = std::exp(1.0 - s);
        const double v = e1_sphere_average(rho, n, alpha);
        return area * std::pow(rho, static_cast<double>(n)) * std::pow(v, expo);
    };
    std::vector<double> out;
    out.reserve(eps_ladder.size());
    double acc = 0.0;
    double s_prev = 1.0;  // r = 1
    for (double eps : eps_ladder) {
        const double s_here = 1.0 - std::log(eps);
        const int panels = std::max(32, static_cast<int>(64.0 * (s_here - s_prev)));
        acc += simpson(f_s, s_prev, s_here, panels);
        out.push_back(acc);
        s_prev = s_here;
    }
    return out;
}

inline std::vector<double> e1_divergence_values(const std::vector<double>& eps_ladder, int n) {
    return e1_divergence_values(eps_ladder, n, singular_log_exponent(n));
}

}  // namespace sphmax
