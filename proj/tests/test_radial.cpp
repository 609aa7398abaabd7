#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <sphmax/sphmax.hpp>

using namespace sphmax;

TEST_CASE("singular sphere averages, n = 2, against high-precision references") {
    // reference values computed at 40-digit precision from the substituted
    // integral (2/pi)(2r)^{-1} int_A^inf y^{-3/2} (1 - e^{2(A-y)})^{-1/2} dy,
    // A = 1 - ln(2r)
    const double ref[6][2] = {
        {1e-5, 19044.4763248036}, {1e-4, 2136.09965442972}, {1e-3, 247.884699211543},
        {0.01, 30.6230023719336}, {0.1, 4.40919135992328},  {0.3, 2.06024805256135}};
    for (const auto& rv : ref) {
        CHECK(e1_sphere_average(rv[0], 2) == Catch::Approx(rv[1]).epsilon(1e-9));
    }
}

TEST_CASE("singular sphere averages, n = 3, against the closed form") {
    // for r <= 1/2 every probe stays in the inner power-log region and the
    // average collapses to (3/4) (1 - ln 2r)^{-2/3} / r^2
    for (double r : {1e-5, 1e-3, 0.01, 0.1, 0.3, 0.5}) {
        const double closed = 0.75 * std::pow(1.0 - std::log(2.0 * r), -2.0 / 3.0) / (r * r);
        CHECK(e1_sphere_average(r, 3) == Catch::Approx(closed).epsilon(1e-9));
    }
}

TEST_CASE("sphere average domain checks") {
    CHECK_THROWS_AS(e1_sphere_average(0.0, 2), config_error);
    CHECK_THROWS_AS(e1_sphere_average(1.6, 2), config_error);
    CHECK_THROWS_AS(e1_sphere_average(0.1, 1), config_error);
    CHECK(e1_sphere_average(1.5, 2) >= 0.0);
}

TEST_CASE("sphere average decreases in r") {
    double prev = e1_sphere_average(1e-6, 2);
    for (double r : {1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 0.5, 1.0}) {
        const double v = e1_sphere_average(r, 2);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("annulus gradient mass: direct evaluation vs ladder increments") {
    const std::vector<double> ladder = geometric_sequence(0.2, 1e-4, 129);
    const std::vector<double> inc = e1_w11_increments(ladder, 2);
    REQUIRE(inc.size() == 128);
    KahanSum acc;
    for (double d : inc) {
        CHECK(d > 0.0);
        acc.add(d);
    }
    const double direct = e1_w11_annulus(1e-4, 0.2, 2);
    CHECK(acc.value() == Catch::Approx(direct).epsilon(1e-8));
}

TEST_CASE("annulus increments decrease monotonically") {
    for (int n : {2, 3}) {
        const std::vector<double> ladder = geometric_sequence(0.2, 1e-8, 512);
        const std::vector<double> inc = e1_w11_increments(ladder, n);
        for (std::size_t i = 0; i + 1 < inc.size(); ++i) {
            CHECK(inc[i + 1] <= inc[i]);
        }
    }
}

TEST_CASE("divergent integral grows along log log, cousin saturates") {
    const std::vector<double> ladder = geometric_sequence(1e-2, 1e-8, 25);
    const std::vector<double> D = e1_divergence_values(ladder, 2);
    const std::vector<double> Dc = e1_divergence_values(ladder, 2, 3.0);
    std::vector<double> xs, ys;
    double max_inc = 0.0, max_inc_c = 0.0;
    for (std::size_t i = 0; i < D.size(); ++i) {
        if (i > 0) {
            CHECK(D[i] > D[i - 1]);
            CHECK(Dc[i] > Dc[i - 1]);
            max_inc = std::max(max_inc, D[i] - D[i - 1]);
            max_inc_c = std::max(max_inc_c, Dc[i] - Dc[i - 1]);
        }
        xs.push_back(std::log(1.0 - std::log(ladder[i])));
        ys.push_back(D[i]);
    }
    const LineFit fit = fit_line(xs, ys);
    CHECK(fit.r_squared > 0.99);
    CHECK(fit.slope > 0.0);
    // last increment relative to the largest: still a quarter of the peak for
    // the divergent case, essentially gone for the convergent cousin
    CHECK((D.back() - D[D.size() - 2]) / max_inc > 0.05);
    CHECK((Dc.back() - Dc[Dc.size() - 2]) / max_inc_c < 0.05);
}

TEST_CASE("divergence increments cross-check against plain radial quadrature") {
    // D(0.1) over the annulus 0.1 < r < 1 recomputed in the r variable
    const std::vector<double> one{0.1};
    const double via_s = e1_divergence_values(one, 2)[0];
    auto f = [](double r) {
        const double v = e1_sphere_average(r, 2);
        return 2.0 * pi * r * v * v;
    };
    const double via_r = simpson(f, 0.1, 1.0, 512);
    CHECK(via_s == Catch::Approx(via_r).epsilon(1e-6));
}

TEST_CASE("ladder validation") {
    CHECK_THROWS_AS(e1_divergence_values({0.5, 0.5}, 2), config_error);
    CHECK_THROWS_AS(e1_divergence_values({}, 2), config_error);
    CHECK_THROWS_AS(e1_w11_increments({0.5}, 2), config_error);
}
