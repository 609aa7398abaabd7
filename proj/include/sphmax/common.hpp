#pragma once

// Shared small pieces: points, error types, compensated summation,
// least-squares line fits, geometry constants.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphmax {

// Points live in at most three dimensions; the active dimension n is carried
// by the owning object. Unused trailing coordinates stay zero.
using Point = std::array<double, 3>;

inline constexpr double pi = 3.14159265358979323846;

// Bad user-supplied configuration (dimensions, ranges, file contents).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A computed quantity violated a structural guarantee.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw config_error(msg);
}

// Volume of the unit ball in R^n.
inline double unit_ball_volume(int n) {
    switch (n) {
        case 1: return 2.0;
        case 2: return pi;
        case 3: return 4.0 / 3.0 * pi;
        default: throw config_error("dimension must be 1, 2, or 3");
    }
}

// Surface measure of the unit sphere S^{n-1} in R^n.
inline double unit_sphere_area(int n) {
    switch (n) {
        case 1: return 2.0;  // two points
        case 2: return 2.0 * pi;
        case 3: return 4.0 * pi;
        default: throw config_error("dimension must be 1, 2, or 3");
    }
}

// Kahan-compensated accumulator. Grid sums run over up to ~17M terms of
// mixed magnitude; the partition checks below 1e-12 need the compensation.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

inline double norm2(const Point& p, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += p[i] * p[i];
    return std::sqrt(s);
}

inline Point add(const Point& a, const Point& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Point scale(const Point& a, double t) {
    return {t * a[0], t * a[1], t * a[2]};
}

// Cubic smoothstep on [0,1]: 0 at 0, 1 at 1, flat derivative at both ends.
inline double smoothstep01(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    return s * s * (3.0 - 2.0 * s);
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares y ~ slope*x + intercept.
inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, "fit_line needs >= 2 paired samples");
    const double m = static_cast<double>(x.size());
    KahanSum sx, sy;
    for (double v : x) sx.add(v);
    for (double v : y) sy.add(v);
    const double mx = sx.value() / m;
    const double my = sy.value() / m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    require(sxx > 0.0, "fit_line: degenerate abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

// Geometric sequence from a to b inclusive with `count` entries.
inline std::vector<double> geometric_sequence(double a, double b, int count) {
    require(a > 0.0 && b > 0.0 && count >= 2, "geometric_sequence: positive endpoints, count >= 2");
    std::vector<double> out(static_cast<std::size_t>(count));
    const double q = std::pow(b / a, 1.0 / (count - 1));
    double v = a;
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = v;
        v *= q;
    }
    out.back() = b;
    return out;
}

}  // namespace sphmax
