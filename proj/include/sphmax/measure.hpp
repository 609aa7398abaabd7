#pragma once

// Discrete probability measures with bounded support: quadrature nodes,
// weights, support radius, plus the scan that estimates the spherical-like
// constant sup mu(B(x,r))/r^{n-1}.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sphmax/common.hpp"

namespace sphmax {

struct DiscreteMeasure {
    int n = 0;
    std::vector<Point> nodes;
    std::vector<double> weights;
    double R = 0.0;
    std::string label;

    std::size_t size() const { return nodes.size(); }

    void validate() const {
        require(n >= 1 && n <= 3, "measure dimension must be 1-3");
        require(!nodes.empty() && nodes.size() == weights.size(), "measure nodes/weights mismatch");
        KahanSum s;
        double maxr = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            require(weights[i] >= 0.0, "measure weights must be nonnegative");
            s.add(weights[i]);
            maxr = std::max(maxr, norm2(nodes[i], n));
        }
        if (std::abs(s.value() - 1.0) > 1e-12) throw invariant_error("measure mass differs from 1");
        if (maxr > R + 1e-12) throw invariant_error("measure node outside declared support radius");
    }
};

namespace detail {

// Antipodally symmetrized Fibonacci lattice: near-uniform on S^2 with node
// mean exactly zero by pairing.
inline std::vector<Point> fibonacci_sphere(int count) {
    if (count % 2) ++count;
    const int half = count / 2;
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < half; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / (2.0 * half);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = 2.0 * pi * std::fmod(i / golden, 1.0);
        pts.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    for (int i = 0; i < half; ++i) {
        const Point& p = pts[static_cast<std::size_t>(i)];
        pts.push_back({-p[0], -p[1], -p[2]});
    }
    return pts;
}

}  // namespace detail

inline DiscreteMeasure unit_sphere(int n, int node_count) {
    require(n == 2 || n == 3, "unit_sphere: dimension must be 2 or 3");
    require(node_count >= 8, "unit_sphere: need at least 8 nodes");
    DiscreteMeasure mu;
    mu.n = n;
    mu.R = 1.0;
    mu.label = "sphere";
    if (n == 2) {
        mu.nodes.reserve(static_cast<std::size_t>(node_count));
        for (int i = 0; i < node_count; ++i) {
            const double th = 2.0 * pi * i / node_count;
            mu.nodes.push_back({std::cos(th), std::sin(th), 0.0});
        }
    } else {
        mu.nodes = detail::fibonacci_sphere(node_count);
    }
    mu.weights.assign(mu.nodes.size(), 1.0 / static_cast<double>(mu.nodes.size()));
    mu.validate();
    return mu;
}

// Equal-volume radial shells crossed with a direction set. The shell
// representative radius is chosen so the shell average of |z|^2 is exact.
inline DiscreteMeasure unit_ball(int n, int node_count) {
    require(n >= 1 && n <= 3, "unit_ball: dimension must be 1-3");
    require(node_count >= 4, "unit_ball: need at least 4 nodes");
    DiscreteMeasure mu;
    mu.n = n;
    mu.R = 1.0;
    mu.label = "ball";
    if (n == 1) {
        for (int i = 0; i < node_count; ++i) {
            const double x = -1.0 + (2.0 * i + 1.0) / node_count;
            mu.nodes.push_back({x, 0.0, 0.0});
        }
    } else {
        const int shells = std::max(2, static_cast<int>(std::llround(std::pow(node_count, 1.0 / n))));
        const int dirs = std::max(8, node_count / shells);
        std::vector<Point> dir_set;
        if (n == 2) {
            for (int i = 0; i < dirs; ++i) {
                const double th = 2.0 * pi * i / dirs;
                dir_set.push_back({std::cos(th), std::sin(th), 0.0});
            }
        } else {
            dir_set = detail::fibonacci_sphere(dirs);
        }
        for (int j = 0; j < shells; ++j) {
            const double v0 = static_cast<double>(j) / shells;
            const double v1 = static_cast<double>(j + 1) / shells;
            const double r0 = std::pow(v0, 1.0 / n);
            const double r1 = std::pow(v1, 1.0 / n);
            // shell mean of r^2: (n/(n+2)) (r1^{n+2}-r0^{n+2}) / (r1^n - r0^n)
            const double num = std::pow(r1, n + 2.0) - std::pow(r0, n + 2.0);
            const double den = std::pow(r1, static_cast<double>(n)) - std::pow(r0, static_cast<double>(n));
            const double rhat = std::sqrt((n / (n + 2.0)) * num / den);
            for (const Point& d : dir_set) mu.nodes.push_back(scale(d, rhat));
        }
    }
    mu.weights.assign(mu.nodes.size(), 1.0 / static_cast<double>(mu.nodes.size()));
    mu.validate();
    return mu;
}

inline DiscreteMeasure cube_boundary(int n, int node_count) {
    require(n == 2 || n == 3, "cube_boundary: dimension must be 2 or 3");
    DiscreteMeasure mu;
    mu.n = n;
    mu.R = std::sqrt(static_cast<double>(n));
    mu.label = "cube-boundary";
    if (n == 2) {
        const int per_side = std::max(2, node_count / 4);
        for (int side = 0; side < 4; ++side) {
            for (int i = 0; i < per_side; ++i) {
                const double t = -1.0 + (2.0 * i + 1.0) / per_side;
                switch (side) {
                    case 0: mu.nodes.push_back({t, -1.0, 0.0}); break;
                    case 1: mu.nodes.push_back({1.0, t, 0.0}); break;
                    case 2: mu.nodes.push_back({-t, 1.0, 0.0}); break;
                    default: mu.nodes.push_back({-1.0, -t, 0.0}); break;
                }
            }
        }
    } else {
        const int k = std::max(2, static_cast<int>(std::llround(std::sqrt(node_count / 6.0))));
        for (int face = 0; face < 6; ++face) {
            const int axis = face / 2;
            const double sgn = (face % 2) ? 1.0 : -1.0;
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) {
                    const double a = -1.0 + (2.0 * i + 1.0) / k;
                    const double b = -1.0 + (2.0 * j + 1.0) / k;
                    Point p{0.0, 0.0, 0.0};
                    p[axis] = sgn;
                    p[(axis + 1) % 3] = a;
                    p[(axis + 2) % 3] = b;
                    mu.nodes.push_back(p);
                }
            }
        }
    }
    mu.weights.assign(mu.nodes.size(), 1.0 / static_cast<double>(mu.nodes.size()));
    mu.validate();
    return mu;
}

inline DiscreteMeasure from_points(int n, std::vector<Point> points, std::vector<double> weights,
                                   const std::string& label = "points") {
    require(!points.empty() && points.size() == weights.size(),
            "from_points: nodes/weights length mismatch");
    KahanSum s;
    for (double w : weights) {
        require(w >= 0.0, "from_points: negative weight");
        s.add(w);
    }
    require(s.value() > 0.0, "from_points: all weights zero");
    DiscreteMeasure mu;
    mu.n = n;
    mu.nodes = std::move(points);
    mu.label = label;
    mu.weights.resize(weights.size());
    double maxr = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        mu.weights[i] = weights[i] / s.value();
        maxr = std::max(maxr, norm2(mu.nodes[i], n));
    }
    mu.R = maxr;
    mu.validate();
    return mu;
}

struct SphericalLikeScan {
    double estimate = 0.0;     // sampled lower bound for M
    Point argmax_x{0, 0, 0};
    double argmax_r = 0.0;
    bool divergent = false;    // estimate kept growing as r_min was pushed down
    double growth_ratio = 1.0; // estimate(extended ladder)/estimate(given ladder)
};

// Max over sampled (x, r) of mu(closed ball B(x,r))/r^{n-1}; a lower
// estimate of the true supremum. Sorted distances + prefix sums per sample.
inline SphericalLikeScan spherical_like_scan(const DiscreteMeasure& mu,
                                             const std::vector<Point>& x_samples,
                                             const std::vector<double>& r_ladder) {
    require(!r_ladder.empty(), "spherical_like_scan: empty ladder");
    for (double r : r_ladder) require(r > 0.0, "spherical_like_scan: radii must be positive");

    auto run = [&](const std::vector<double>& ladder) {
        SphericalLikeScan out;
        std::vector<std::pair<double, double>> dist;  // (distance, weight)
        dist.reserve(mu.size());
        for (const Point& x : x_samples) {
            dist.clear();
            for (std::size_t i = 0; i < mu.size(); ++i) {
                double d2 = 0.0;
                for (int a = 0; a < mu.n; ++a) {
                    const double d = mu.nodes[i][a] - x[a];
                    d2 += d * d;
                }
                dist.emplace_back(std::sqrt(d2), mu.weights[i]);
            }
            std::sort(dist.begin(), dist.end());
            std::vector<double> prefix(dist.size());
            KahanSum acc;
            for (std::size_t i = 0; i < dist.size(); ++i) {
                acc.add(dist[i].second);
                prefix[i] = acc.value();
            }
            for (double r : ladder) {
                const double rr = r + 1e-15;
                auto it = std::upper_bound(dist.begin(), dist.end(),
                                           std::make_pair(rr, std::numeric_limits<double>::max()));
                if (it == dist.begin()) continue;
                const double mass = prefix[static_cast<std::size_t>(it - dist.begin()) - 1];
                const double ratio = mass / std::pow(r, mu.n - 1.0);
                if (ratio > out.estimate) {
                    out.estimate = ratio;
                    out.argmax_x = x;
                    out.argmax_r = r;
                }
            }
        }
        return out;
    };

    SphericalLikeScan base = run(r_ladder);

    // Divergence probe: extend the ladder two octaves below r_min; a
    // spherical-like measure's estimate stabilizes, a lower-dimensional
    // concentration keeps growing like r^{1-n}.
    std::vector<double> extended = r_ladder;
    const double r_min = *std::min_element(r_ladder.begin(), r_ladder.end());
    for (double r = r_min / 2.0; r > r_min / 4.0 - 1e-300; r /= 2.0) extended.push_back(r);
    SphericalLikeScan ext = run(extended);
    base.growth_ratio = (base.estimate > 0.0) ? ext.estimate / base.estimate
                                              : (ext.estimate > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
    base.divergent = base.growth_ratio >= 1.8;
    if (base.divergent) {
        base.estimate = ext.estimate;
        base.argmax_x = ext.argmax_x;
        base.argmax_r = ext.argmax_r;
    }
    return base;
}

inline double spherical_like_constant(const DiscreteMeasure& mu, const std::vector<Point>& x_samples,
                                      const std::vector<double>& r_ladder) {
    return spherical_like_scan(mu, x_samples, r_ladder).estimate;
}

}  // namespace sphmax
