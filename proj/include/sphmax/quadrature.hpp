#pragma once

// 1-D quadrature used by the radial reductions and oracles.

#include <functional>

#include "sphmax/common.hpp"

namespace sphmax {

// Composite Simpson rule with `panels` subintervals (rounded up to even).
template <class F>
double simpson(F&& f, double a, double b, int panels = 256) {
    require(b >= a, "simpson: b < a");
    if (b == a) return 0.0;
    if (panels < 2) panels = 2;
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    KahanSum s;
    s.add(f(a));
    s.add(f(b));
    for (int i = 1; i < panels; ++i) s.add(f(a + i * h) * ((i % 2) ? 4.0 : 2.0));
    return s.value() * h / 3.0;
}

// Exact value of the borderline tail  int_0^xs  x^{-1} (A - ln x)^{-p} dx
// for p > 1: substituting y = A - ln x turns it into int y^{-p} dy up to
// infinity, so the whole logarithmic tail below any floating-point floor is
// captured in closed form.
inline double log_singular_tail(double A, double xs, double p) {
    require(p > 1.0 && xs > 0.0, "log_singular_tail: need p > 1, xs > 0");
    const double y0 = A - std::log(xs);
    require(y0 > 0.0, "log_singular_tail: A - ln(xs) must be positive");
    return std::pow(y0, 1.0 - p) / (p - 1.0);
}

}  // namespace sphmax
