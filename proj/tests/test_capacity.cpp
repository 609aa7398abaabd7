#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <sphmax/sphmax.hpp>

using namespace sphmax;

TEST_CASE("radial oracle agrees with the closed form") {
    // energy of the extremal profile: |beta|^{p-1} n omega_n |r^b - L^b|^{1-p},
    // beta = (p-n)/(p-1)
    auto closed = [](int n, double p, double r, double L) {
        const double beta = (p - n) / (p - 1.0);
        return std::pow(std::abs(beta), p - 1.0) * unit_sphere_area(n) *
               std::pow(std::abs(std::pow(r, beta) - std::pow(L, beta)), 1.0 - p);
    };
    CHECK(radial_capacity_oracle(3, 2.0, 1.0, 8.0) ==
          Catch::Approx(closed(3, 2.0, 1.0, 8.0)).epsilon(1e-9));
    CHECK(radial_capacity_oracle(3, 2.0, 1.0, 8.0) ==
          Catch::Approx(4.0 * pi * 8.0 / 7.0).epsilon(1e-9));
    CHECK(radial_capacity_oracle(3, 1.5, 0.7, 6.0) ==
          Catch::Approx(closed(3, 1.5, 0.7, 6.0)).epsilon(1e-8));
    CHECK(radial_capacity_oracle(2, 1.3, 1.0, 10.0) ==
          Catch::Approx(closed(2, 1.3, 1.0, 10.0)).epsilon(1e-8));
}

TEST_CASE("radial oracle scaling and limits") {
    const double base = radial_capacity_oracle(3, 2.0, 1.0, 8.0);
    CHECK(radial_capacity_oracle(3, 2.0, 2.0, 16.0) ==
          Catch::Approx(std::pow(2.0, 3.0 - 2.0) * base).epsilon(1e-9));
    // plates almost touching: the energy blows up
    CHECK(radial_capacity_oracle(3, 2.0, 7.9, 8.0) > 100.0 * base);
    // L -> infinity approaches 4 pi r for n = 3, p = 2
    CHECK(radial_capacity_oracle(3, 2.0, 1.0, 200.0) == Catch::Approx(4.0 * pi).epsilon(0.01));
    CHECK_THROWS_AS(radial_capacity_oracle(3, 3.0, 1.0, 8.0), config_error);
    CHECK_THROWS_AS(radial_capacity_oracle(3, 2.0, 9.0, 8.0), config_error);
}

TEST_CASE("problem validation") {
    CapacityProblem prob;
    prob.n = 3;
    prob.p = 2.0;
    prob.L = 8.0;
    prob.target = ball_indicator_grid(3, 1.0, 8.0, 17);
    prob.validate();

    CapacityProblem empty = prob;
    empty.target = sample(make_constant(0.0), 3, 8.0, 17);
    CHECK_THROWS_AS(empty.validate(), config_error);

    CapacityProblem badp = prob;
    badp.p = 3.5;
    CHECK_THROWS_AS(badp.validate(), config_error);

    CapacityProblem wall = prob;
    wall.target = sample(make_constant(1.0), 3, 8.0, 17);
    CHECK_THROWS_AS(wall.validate(), config_error);
}

TEST_CASE("ball condenser at moderate resolution") {
    CapacityResult res = solve_ball_capacity(3, 2.0, 1.0, 8.0, 33);
    const double oracle = radial_capacity_oracle(3, 2.0, 1.0, 8.0);
    CHECK(res.energy / oracle > 0.9);
    CHECK(res.energy / oracle < 1.8);
    for (std::size_t i = 0; i + 1 < res.energy_history.size(); ++i) {
        CHECK(res.energy_history[i + 1] <= res.energy_history[i]);
    }
    CHECK(res.converged);
}

TEST_CASE("solver scales exactly like the dilated discrete problem") {
    CapacityResult a = solve_ball_capacity(3, 2.0, 1.0, 8.0, 33);
    CapacityResult b = solve_ball_capacity(3, 2.0, 2.0, 16.0, 33);
    CHECK(b.energy == Catch::Approx(2.0 * a.energy).epsilon(1e-6));
}

TEST_CASE("monotone under target inclusion") {
    CapacityProblem small;
    small.n = 3;
    small.p = 2.0;
    small.L = 8.0;
    small.target = ball_indicator_grid(3, 1.0, 8.0, 33);
    CapacityProblem big = small;
    big.target = ball_indicator_grid(3, 1.5, 8.0, 33);
    const double es = estimate_p_capacity(small).energy;
    const double eb = estimate_p_capacity(big).energy;
    CHECK(es <= eb + 1e-6);
}

TEST_CASE("a single cell loses capacity under refinement") {
    double prev = std::numeric_limits<double>::infinity();
    for (int m : {17, 33, 65}) {
        GridFunction target(3, m, 8.0);
        target.values[target.flat(m / 2, m / 2, m / 2)] = 1.0;
        CapacityProblem prob;
        prob.n = 3;
        prob.p = 2.0;
        prob.L = 8.0;
        prob.target = target;
        const double e = estimate_p_capacity(prob).energy;
        CHECK(e < prev);
        prev = e;
    }
}

TEST_CASE("fractional exponent with smoothing still descends") {
    CapacityProblem prob;
    prob.n = 3;
    prob.p = 1.5;
    prob.L = 8.0;
    prob.target = ball_indicator_grid(3, 1.0, 8.0, 17);
    CapacityResult res = estimate_p_capacity(prob);
    const double oracle = radial_capacity_oracle(3, 1.5, 1.0, 8.0);
    CHECK(res.energy > 0.5 * oracle);
    CHECK(res.energy < 3.0 * oracle);
    for (std::size_t i = 0; i + 1 < res.energy_history.size(); ++i) {
        CHECK(res.energy_history[i + 1] <= res.energy_history[i]);
    }
}

TEST_CASE("nested prolongation reproduces coarse nodes exactly") {
    GridFunction c = sample(make_gaussian_bump(2.0), 3, 8.0, 9);
    GridFunction f = prolong_nested(c);
    REQUIRE(f.m == 17);
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            for (int k = 0; k < 9; ++k) {
                CHECK(f.values[f.flat(2 * i, 2 * j, 2 * k)] ==
                      Catch::Approx(c.values[c.flat(i, j, k)]).margin(1e-14));
            }
        }
    }
}
