#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <sphmax/sphmax.hpp>

using namespace sphmax;

namespace {

double total_mass(const DiscreteMeasure& mu) {
    KahanSum s;
    for (double w : mu.weights) s.add(w);
    return s.value();
}

Point mean_node(const DiscreteMeasure& mu) {
    Point m{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < mu.size(); ++i) {
        for (int a = 0; a < mu.n; ++a) m[a] += mu.weights[i] * mu.nodes[i][a];
    }
    return m;
}

double mean_sq_radius(const DiscreteMeasure& mu) {
    KahanSum s;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double r = norm2(mu.nodes[i], mu.n);
        s.add(mu.weights[i] * r * r);
    }
    return s.value();
}

}  // namespace

TEST_CASE("unit sphere measures") {
    CHECK_THROWS_AS(unit_sphere(1, 512), config_error);
    for (int n : {2, 3}) {
        DiscreteMeasure mu = unit_sphere(n, 512);
        mu.validate();
        CHECK(total_mass(mu) == Catch::Approx(1.0).margin(1e-12));
        CHECK(mu.R == Catch::Approx(1.0).margin(1e-12));
        for (const Point& z : mu.nodes) CHECK(norm2(z, n) == Catch::Approx(1.0).margin(1e-12));
        const Point m = mean_node(mu);
        for (int a = 0; a < n; ++a) CHECK(std::abs(m[a]) < 1e-10);
    }
}

TEST_CASE("unit ball second moments match n/(n+2)") {
    for (int n : {1, 2, 3}) {
        DiscreteMeasure mu = unit_ball(n, 4096);
        mu.validate();
        CHECK(total_mass(mu) == Catch::Approx(1.0).margin(1e-12));
        CHECK(mean_sq_radius(mu) == Catch::Approx(n / (n + 2.0)).margin(1e-3));
        const Point m = mean_node(mu);
        for (int a = 0; a < n; ++a) CHECK(std::abs(m[a]) < 1e-10);
    }
}

TEST_CASE("cube boundary measures") {
    DiscreteMeasure sq = cube_boundary(2, 256);
    sq.validate();
    CHECK(sq.R == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
    CHECK(mean_sq_radius(sq) == Catch::Approx(4.0 / 3.0).margin(1e-3));

    DiscreteMeasure cb = cube_boundary(3, 6144);
    cb.validate();
    CHECK(cb.R == Catch::Approx(std::sqrt(3.0)).margin(1e-12));
    // E|z|^2 on the cube surface: one coordinate pinned at 1, two uniform
    // on [-1,1]: 1 + 2/3
    CHECK(mean_sq_radius(cb) == Catch::Approx(5.0 / 3.0).margin(2e-3));
}

TEST_CASE("measure validation rejects bad data") {
    DiscreteMeasure bad;
    bad.n = 2;
    bad.nodes = {Point{0.0, 0.0, 0.0}};
    bad.weights = {0.5};
    bad.R = 1.0;
    CHECK_THROWS_AS(bad.validate(), invariant_error);

    DiscreteMeasure out = from_points(2, {Point{3.0, 0.0, 0.0}}, {1.0}, "far");
    out.R = 1.0;
    CHECK_THROWS_AS(out.validate(), invariant_error);

    CHECK_THROWS_AS(unit_sphere(4, 16), config_error);
    CHECK_THROWS_AS(unit_sphere(2, 0), config_error);
}

TEST_CASE("spherical-like scan of the unit circle") {
    DiscreteMeasure mu = unit_sphere(2, 4096);

    // restricted to the support, the ratio sup is attained at r = 2 where the
    // closed ball swallows the whole circle: value exactly 1/2
    SphericalLikeScan support = spherical_like_scan(mu, mu.nodes, geometric_sequence(0.02, 2.0, 96));
    CHECK_FALSE(support.divergent);
    CHECK(support.estimate == Catch::Approx(0.5).margin(5e-3));
    CHECK(support.argmax_r == Catch::Approx(2.0).margin(1e-12));

    // adding the center raises the sup to 1 (whole mass at distance 1)
    std::vector<Point> xs = mu.nodes;
    xs.push_back({0.0, 0.0, 0.0});
    std::vector<double> ladder = geometric_sequence(0.02, 2.0, 96);
    ladder.push_back(1.0);
    SphericalLikeScan full = spherical_like_scan(mu, xs, ladder);
    CHECK(full.estimate == Catch::Approx(1.0).margin(5e-3));
}

TEST_CASE("dirac-like measure is flagged divergent") {
    DiscreteMeasure dirac = from_points(2, {Point{0.0, 0.0, 0.0}}, {1.0}, "dirac");
    SphericalLikeScan scan =
        spherical_like_scan(dirac, {Point{0.0, 0.0, 0.0}}, geometric_sequence(1e-3, 1.0, 32));
    CHECK(scan.divergent);
    CHECK(scan.growth_ratio >= 1.8);
}

TEST_CASE("ball vs sphere scan magnitudes") {
    // uniform ball in n = 2: mu(B(0,r))/r = r^2/r -> sup at r = 1
    DiscreteMeasure ball = unit_ball(2, 4096);
    SphericalLikeScan scan =
        spherical_like_scan(ball, {Point{0.0, 0.0, 0.0}}, geometric_sequence(0.05, 1.0, 64));
    CHECK_FALSE(scan.divergent);
    CHECK(scan.estimate == Catch::Approx(1.0).margin(2e-2));
    CHECK(scan.argmax_r == Catch::Approx(1.0).margin(1e-12));
}
