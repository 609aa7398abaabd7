#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <sphmax/sphmax.hpp>

using namespace sphmax;

TEST_CASE("cube kernel constant against an independent pyramid reduction") {
    // int_{[-1,1]^3} |x|^{-2} dx = 6 K with
    // K = int_{[-1,1]^2} du dv/(1 + u^2 + v^2): slice the cube into the six
    // pyramids where one coordinate dominates and rescale each cross-section
    auto inner = [](double v) {
        return simpson([v](double w) { return 1.0 / (1.0 + v * v + w * w); }, -1.0, 1.0, 512);
    };
    const double K = simpson(inner, -1.0, 1.0, 512);
    CHECK(6.0 * K == Catch::Approx(cube_kernel_integral_3d).epsilon(1e-10));
}

TEST_CASE("singular cell averages") {
    CHECK(riesz_singular_cell_average(1, 0.25) == Catch::Approx(1.0));
    // n = 2: (1/h^2) int_{cell} dx/|x| = 4 ln(1+sqrt 2)/h
    const double h = 0.125;
    CHECK(riesz_singular_cell_average(2, h) ==
          Catch::Approx(4.0 * std::log(1.0 + std::sqrt(2.0)) / h).epsilon(1e-13));
    CHECK(riesz_singular_cell_average(3, h) ==
          Catch::Approx(cube_kernel_integral_3d / (2.0 * h * h)).epsilon(1e-13));
}

TEST_CASE("in one dimension the potential is the plain integral") {
    GridFunction g = sample(make_gaussian_bump(0.7), 1, 3.0, 129);
    GridFunction I = riesz_potential_direct(g);
    const double mass = integral(g);
    for (std::size_t i = 0; i < I.values.size(); ++i) {
        CHECK(I.values[i] == Catch::Approx(mass).epsilon(1e-12));
    }
}

TEST_CASE("disk indicator potential at the center, n = 2") {
    GridFunction g = sample(make_ball_indicator(1.0), 2, 2.0, 257);
    GridFunction I = riesz_potential_fft(g);
    // int_B dy/|y| = 2 pi
    CHECK(I.values[g.flat(128, 128, 0)] == Catch::Approx(2.0 * pi).epsilon(0.01));
}

TEST_CASE("ball indicator potential at the center, n = 3") {
    GridFunction g = sample(make_ball_indicator(1.0), 3, 2.0, 129);
    GridFunction I = riesz_potential_fft(g);
    // int_B dy/|y|^2 = 4 pi
    CHECK(I.values[g.flat(64, 64, 64)] == Catch::Approx(4.0 * pi).epsilon(0.01));
}

TEST_CASE("fft path reproduces the direct sum") {
    {
        GridFunction g = sample(make_gaussian_bump(0.6), 2, 2.0, 65);
        GridFunction d = riesz_potential_direct(g);
        GridFunction f = riesz_potential_fft(g);
        for (std::size_t i = 0; i < d.values.size(); ++i) {
            CHECK(f.values[i] == Catch::Approx(d.values[i]).epsilon(1e-8));
        }
    }
    {
        GridFunction g = sample(make_ball_indicator(0.8), 3, 1.5, 21);
        GridFunction d = riesz_potential_direct(g);
        GridFunction f = riesz_potential_fft(g);
        for (std::size_t i = 0; i < d.values.size(); ++i) {
            CHECK(f.values[i] == Catch::Approx(d.values[i]).margin(1e-8 * d.max_abs()));
        }
    }
    {
        GridFunction g = sample_pointwise([](const Point& p) { return p[0] > 0.0 ? 1.0 : -0.5; }, 1, 1.0, 63);
        GridFunction d = riesz_potential_direct(g);
        GridFunction f = riesz_potential_fft(g);
        for (std::size_t i = 0; i < d.values.size(); ++i) {
            CHECK(f.values[i] == Catch::Approx(d.values[i]).margin(1e-10));
        }
    }
}

TEST_CASE("default entry point is the direct sum, auto switches on size") {
    GridFunction g = sample(make_gaussian_bump(1.0), 2, 1.0, 17);
    GridFunction a = riesz_potential(g);
    GridFunction b = riesz_potential_direct(g);
    CHECK(a.values == b.values);
    GridFunction c = riesz_potential_auto(g);
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        CHECK(c.values[i] == Catch::Approx(b.values[i]).epsilon(1e-8));
    }
}

TEST_CASE("potential of a symmetric source is symmetric") {
    GridFunction g = sample(make_gaussian_bump(0.5), 2, 1.0, 33);
    GridFunction I = riesz_potential_fft(g);
    for (int i = 0; i < 33; ++i) {
        for (int j = 0; j < 33; ++j) {
            CHECK(I.values[g.flat(i, j, 0)] ==
                  Catch::Approx(I.values[g.flat(32 - i, 32 - j, 0)]).epsilon(1e-11));
        }
    }
}
