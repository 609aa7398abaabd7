#pragma once

// Geometric scale ladders standing in for sup over t > 0.

#include <algorithm>
#include <cmath>
#include <vector>

#include "sphmax/common.hpp"

namespace sphmax {

struct ScaleLadder {
    double t_min = 0.0;
    double t_max = 0.0;
    double q = 0.0;
    std::vector<double> scales;

    static ScaleLadder geometric(double t_min, double t_max, double q) {
        require(t_min > 0.0 && t_max >= t_min, "ladder: need 0 < t_min <= t_max");
        require(q > 1.0, "ladder: ratio q must exceed 1");
        ScaleLadder l;
        l.t_min = t_min;
        l.t_max = t_max;
        l.q = q;
        for (double t = t_min; t <= t_max * (1.0 + 1e-12); t *= q) l.scales.push_back(std::min(t, t_max));
        if (l.scales.empty()) l.scales.push_back(t_min);
        return l;
    }

    // Default coverage for a grid of spacing h and a measure of support
    // radius R: below 2h averages are interpolation noise, above L/(2R) the
    // probes leave the trusted region.
    static ScaleLadder for_grid(double h, double L, double R, double q = std::pow(2.0, 1.0 / 8.0)) {
        const double lo = 2.0 * h;
        const double hi = std::max(lo, L / (2.0 * std::max(R, 1e-12)));
        return geometric(lo, hi, q);
    }

    ScaleLadder refined() const { return geometric(t_min, t_max, std::sqrt(q)); }

    ScaleLadder with_scale(double t) const {
        ScaleLadder l = *this;
        require(t > 0.0, "ladder: inserted scale must be positive");
        l.scales.push_back(t);
        std::sort(l.scales.begin(), l.scales.end());
        l.scales.erase(std::unique(l.scales.begin(), l.scales.end()), l.scales.end());
        l.t_min = l.scales.front();
        l.t_max = l.scales.back();
        return l;
    }

    // True when every probe x + t z with |x| <= L stays answerable: the
    // ladder top must keep t R within the zero-extended margin.
    bool margin_ok(double L, double R) const { return t_max * R <= L + 1e-12; }
};

}  // namespace sphmax
