#pragma once

// Condenser p-capacity on a grid: minimize the forward-difference energy
// sum_cells h^n |grad u|^p subject to u = 1 on a one-cell dilation of the
// target set, u = 0 on the outer boundary layer, 0 <= u <= 1. Projected
// gradient descent with backtracking; an accelerated candidate step is taken
// only when it does not increase the energy, so the recorded energy history
// is non-increasing by construction.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sphmax/common.hpp"
#include "sphmax/grid.hpp"
#include "sphmax/quadrature.hpp"

namespace sphmax {

struct CapacityProblem {
    int n = 3;
    double p = 2.0;
    GridFunction target;        // indicator of A on the solve grid
    double L = 8.0;
    int max_iters = 4000;
    double energy_tol = 1e-8;   // relative decrease over a trailing window
    double grad_epsilon = 0.0;  // smoothing for p < 2; 0 picks a default

    void validate() const {
        require(n >= 1 && n <= 3, "capacity: dimension must be 1-3");
        require(p > 1.0 && p < n, "capacity: need 1 < p < n");
        require(target.n == n && target.L == L, "capacity: target grid mismatch");
        bool any = false;
        for (double v : target.values) {
            if (v != 0.0) any = true;
        }
        require(any, "capacity: empty target set");
        require(boundary_max_abs(target) == 0.0, "capacity: target touches the domain boundary");
    }
};

struct CapacityResult {
    double energy = 0.0;
    bool converged = false;
    int iterations = 0;
    std::vector<double> energy_history;  // one entry per accepted iterate
    GridFunction solution;
};

namespace detail {

enum class NodeKind : std::uint8_t { free_node = 0, one_node = 1, zero_node = 2 };

// u = 1 on the face-neighbor dilation of A (the minimal grid-expressible
// open neighborhood), u = 0 on the outermost layer.
inline std::vector<NodeKind> classify_nodes(const GridFunction& target) {
    const int n = target.n;
    const int m = target.m;
    const std::size_t total = target.node_count();
    std::vector<NodeKind> kind(total, NodeKind::free_node);
    std::ptrdiff_t stride[3] = {0, 0, 0};
    {
        std::ptrdiff_t s = 1;
        for (int a = n - 1; a >= 0; --a) {
            stride[a] = s;
            s *= m;
        }
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        int ijk[3] = {0, 0, 0};
        bool boundary = false;
        for (int a = n - 1; a >= 0; --a) {
            ijk[a] = static_cast<int>(rest % m);
            rest /= m;
            if (ijk[a] == 0 || ijk[a] == m - 1) boundary = true;
        }
        if (boundary) {
            kind[idx] = NodeKind::zero_node;
            continue;
        }
        bool inside = target.values[idx] != 0.0;
        for (int a = 0; a < n && !inside; ++a) {
            if (ijk[a] > 0 && target.values[idx - stride[a]] != 0.0) inside = true;
            if (ijk[a] < m - 1 && target.values[idx + stride[a]] != 0.0) inside = true;
        }
        if (inside) kind[idx] = NodeKind::one_node;
    }
    return kind;
}

inline void project(std::vector<double>& u, const std::vector<NodeKind>& kind) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        switch (kind[i]) {
            case NodeKind::one_node: u[i] = 1.0; break;
            case NodeKind::zero_node: u[i] = 0.0; break;
            default: u[i] = std::clamp(u[i], 0.0, 1.0); break;
        }
    }
}

// Energy and (optionally) its gradient for the forward-difference functional.
// The cell sweep is the solver's hot loop, so it runs as explicit nested
// loops and takes a pow-free path for p = 2.
inline double energy_and_gradient(const std::vector<double>& u, int n, int m, double h, double p,
                                  double eps, std::vector<double>* grad) {
    if (grad) std::fill(grad->begin(), grad->end(), 0.0);
    std::ptrdiff_t stride[3] = {0, 0, 0};
    {
        std::ptrdiff_t s = 1;
        for (int a = n - 1; a >= 0; --a) {
            stride[a] = s;
            s *= m;
        }
    }
    const double vol = std::pow(h, n);
    const double eps2 = eps * eps;
    const bool plain = (p == 2.0);
    const double* uu = u.data();
    double* g = grad ? grad->data() : nullptr;
    KahanSum E;
    const int ni = m - 1;
    const int nj = (n >= 2) ? m - 1 : 1;
    const int nk = (n >= 3) ? m - 1 : 1;
    for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < nj; ++j) {
            const std::ptrdiff_t row = i * stride[0] + ((n >= 2) ? j * stride[1] : 0);
            for (int k = 0; k < nk; ++k) {
                const std::ptrdiff_t idx = row + k;
                double d[3] = {0.0, 0.0, 0.0};
                double g2 = eps2;
                for (int a = 0; a < n; ++a) {
                    d[a] = (uu[idx + stride[a]] - uu[idx]) / h;
                    g2 += d[a] * d[a];
                }
                if (g2 == 0.0) continue;
                const double gp = plain ? g2 : std::pow(g2, 0.5 * p);
                E.add(vol * gp);
                if (g) {
                    const double coef = vol * p * (plain ? 1.0 : gp / g2) / h;
                    for (int a = 0; a < n; ++a) {
                        const double ga = coef * d[a];
                        g[idx] -= ga;
                        g[idx + stride[a]] += ga;
                    }
                }
            }
        }
    }
    return E.value();
}

}  // namespace detail

// Accelerated projected descent with a monotonicity safeguard: the Nesterov
// extrapolation is kept only when the projected step from it lowers the
// energy, otherwise the iteration falls back to a plain projected step with
// backtracking.
inline CapacityResult estimate_p_capacity(const CapacityProblem& prob,
                                          const GridFunction* warm_start = nullptr) {
    prob.validate();
    const int n = prob.n;
    const int m = prob.target.m;
    const double h = prob.target.h();
    const double eps = (prob.grad_epsilon > 0.0) ? prob.grad_epsilon
                                                 : ((prob.p < 2.0) ? 1e-8 / h : 0.0);

    const std::vector<detail::NodeKind> kind = detail::classify_nodes(prob.target);

    CapacityResult res;
    res.solution = warm_start ? *warm_start : GridFunction(n, m, prob.L);
    require(!warm_start || (warm_start->m == m && warm_start->n == n),
            "capacity: warm start grid mismatch");
    std::vector<double>& u = res.solution.values;
    detail::project(u, kind);

    std::vector<double> grad(u.size());
    std::vector<double> y = u;       // extrapolation point
    std::vector<double> u_prev = u;  // previous accepted iterate
    std::vector<double> cand(u.size());

    double E = detail::energy_and_gradient(u, n, m, h, prob.p, eps, nullptr);
    res.energy_history.push_back(E);

    // Gradient Lipschitz scale of the p = 2 energy; backtracking adapts from
    // here for other p.
    double step = h * h / (4.0 * n * prob.p * std::pow(h, n));
    double theta = 1.0;
    const int window = 25;

    for (int it = 0; it < prob.max_iters; ++it) {
        detail::energy_and_gradient(y, n, m, h, prob.p, eps, &grad);
        bool accepted = false;
        double E_new = E;
        for (int bt = 0; bt < 40 && !accepted; ++bt) {
            for (std::size_t i = 0; i < u.size(); ++i) cand[i] = y[i] - step * grad[i];
            detail::project(cand, kind);
            E_new = detail::energy_and_gradient(cand, n, m, h, prob.p, eps, nullptr);
            if (E_new <= E) {
                accepted = true;
            } else {
                // extrapolated base failed: restart momentum on the iterate
                if (y != u) {
                    y = u;
                    theta = 1.0;
                    detail::energy_and_gradient(y, n, m, h, prob.p, eps, &grad);
                } else {
                    step *= 0.5;
                }
            }
        }
        if (!accepted) break;  // step underflow: E is the best available

        u_prev.swap(u);
        u = cand;
        const double theta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
        const double beta = (theta - 1.0) / theta_next;
        for (std::size_t i = 0; i < u.size(); ++i) y[i] = u[i] + beta * (u[i] - u_prev[i]);
        theta = theta_next;
        step *= 1.05;

        E = E_new;
        res.energy_history.push_back(E);
        ++res.iterations;

        if (res.energy_history.size() > static_cast<std::size_t>(window)) {
            const double E_then = res.energy_history[res.energy_history.size() - 1 - window];
            if (E_then - E <= prob.energy_tol * std::max(E, 1e-300)) {
                res.converged = true;
                break;
            }
        }
    }
    res.energy = E;
    return res;
}

// Nested-node prolongation m -> 2m-1: even fine indices copy coarse nodes,
// odd ones average their neighbors.
inline GridFunction prolong_nested(const GridFunction& coarse) {
    const int mc = coarse.m;
    const int mf = 2 * mc - 1;
    GridFunction fine(coarse.n, mf, coarse.L);
    const std::size_t total = fine.node_count();
    for (std::size_t idx = 0; idx < total; ++idx) {
        Point x = fine.node_point(idx);
        fine.values[idx] = coarse.interpolate(x);
    }
    return fine;
}

inline GridFunction ball_indicator_grid(int n, double radius, double L, int m) {
    return sample(make_ball_indicator(radius), n, L, m);
}

// Cascadic solve for the ball condenser: coarse solutions seed finer grids.
inline CapacityResult solve_ball_capacity(int n, double p, double radius, double L, int m_final,
                                          int m_coarse = 17, int max_iters = 4000) {
    require(m_final >= m_coarse, "capacity: m_final below the coarse seed");
    std::vector<int> levels{m_final};
    for (int m = m_final; m > m_coarse; m = (m + 1) / 2) levels.push_back((m + 1) / 2);
    std::reverse(levels.begin(), levels.end());

    GridFunction seed;
    CapacityResult res;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        CapacityProblem prob;
        prob.n = n;
        prob.p = p;
        prob.L = L;
        prob.max_iters = max_iters;
        prob.target = ball_indicator_grid(n, radius, L, levels[li]);
        if (li == 0) {
            res = estimate_p_capacity(prob);
        } else {
            res = estimate_p_capacity(prob, &seed);
        }
        if (li + 1 < levels.size()) {
            seed = prolong_nested(res.solution);
            require(seed.m == levels[li + 1], "capacity: cascadic levels must nest as 2m-1");
        }
    }
    return res;
}

// Energy of the truncated radial extremal profile on the r..L condenser,
// by 1-D quadrature.
inline double radial_capacity_oracle(int n, double p, double r, double L) {
    require(n >= 1 && n <= 3, "radial_capacity_oracle: dimension must be 1-3");
    require(p > 1.0 && p < n, "radial_capacity_oracle: need 1 < p < n");
    require(r > 0.0 && r < L, "radial_capacity_oracle: need 0 < r < L");
    const double beta = (p - n) / (p - 1.0);
    const double denom = std::pow(r, beta) - std::pow(L, beta);
    const double area = unit_sphere_area(n);
    auto integrand = [&](double rho) {
        const double du = beta * std::pow(rho, beta - 1.0) / denom;
        return std::pow(std::abs(du), p) * area * std::pow(rho, n - 1.0);
    };
    return simpson(integrand, r, L, 2048);
}

}  // namespace sphmax
