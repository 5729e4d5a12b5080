#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "silw/poly.hpp"

using silw::lagrange_interpolant;
using silw::NewtonPoly;
using silw::weno_extrapolate;

TEST_CASE("interpolation reproduces a cubic and its derivatives") {
    // Oracle: analytic differentiation of p(x) = 2x^3 - x + 1.
    auto p = [](double x) { return 2.0 * x * x * x - x + 1.0; };
    auto p1 = [](double x) { return 6.0 * x * x - 1.0; };
    auto p2 = [](double x) { return 12.0 * x; };

    std::vector<double> nodes{0.0, 1.0, 2.5, 4.0};
    std::vector<double> vals;
    for (double x : nodes)
        vals.push_back(p(x));
    NewtonPoly q(nodes, vals);

    CHECK(q.degree() == 3);
    CHECK(q.eval(1.7) == doctest::Approx(p(1.7)).epsilon(1e-13));
    CHECK(q.eval(-0.9) == doctest::Approx(p(-0.9)).epsilon(1e-13));

    std::vector<double> der;
    q.derivs(-0.9, 3, der);
    CHECK(der[0] == doctest::Approx(p(-0.9)).epsilon(1e-12));
    CHECK(der[1] == doctest::Approx(p1(-0.9)).epsilon(1e-12));
    CHECK(der[2] == doctest::Approx(p2(-0.9)).epsilon(1e-12));
    CHECK(der[3] == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("interpolant passes through random data") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> nodes{-1.3, -0.2, 0.4, 1.1, 2.8, 3.5};
    std::vector<double> vals(nodes.size());
    for (double& v : vals)
        v = u(rng);
    NewtonPoly q = lagrange_interpolant(nodes, vals);
    for (size_t i = 0; i < nodes.size(); ++i)
        CHECK(q.eval(nodes[i]) == doctest::Approx(vals[i]).epsilon(1e-11).scale(1.0));
}

TEST_CASE("asking for more derivatives than the degree pads with zeros") {
    NewtonPoly q({0.0, 1.0}, {3.0, 5.0}); // 3 + 2x
    std::vector<double> der;
    q.derivs(0.7, 4, der);
    CHECK(der[0] == doctest::Approx(4.4));
    CHECK(der[1] == doctest::Approx(2.0));
    CHECK(der[2] == 0.0);
    CHECK(der[3] == 0.0);
    CHECK(der[4] == 0.0);
}

TEST_CASE("duplicate nodes are rejected") {
    CHECK_THROWS_AS(NewtonPoly({1.0, 2.0, 1.0}, {0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("shock-safe extrapolation agrees with plain extrapolation on smooth data") {
    // Scaled samples of a smooth physical profile: s-derivatives are O(dx),
    // so all smoothness indicators are tiny and the full-degree candidate
    // dominates through its linear weight.
    const double dx = 0.01, C_a = 0.4, a = 2.0;
    auto g = [&](double s) { return std::sin(0.3 * (a + s * dx) + 1.0); };

    const int d = 5;
    std::vector<double> nodes, vals;
    for (int j = 0; j < d; ++j) {
        nodes.push_back(C_a + j);
        vals.push_back(g(C_a + j));
    }
    NewtonPoly p(nodes, vals);

    const double target = -0.6; // ghost location, outside the domain
    const double w = weno_extrapolate(vals, C_a, target, 0, dx);
    CHECK(w == doctest::Approx(p.eval(target)).epsilon(1e-8));
    CHECK(w == doctest::Approx(g(target)).epsilon(1e-7));

    // First s-derivative as well.
    std::vector<double> der;
    p.derivs(target, 1, der);
    const double w1 = weno_extrapolate(vals, C_a, target, 1, dx);
    CHECK(w1 == doctest::Approx(der[1]).epsilon(1e-4).scale(dx));
}

TEST_CASE("extrapolation near a jump sticks to the boundary-adjacent data") {
    // Smooth near the boundary (values about 1), jump to 50 further in: the
    // low-degree candidates must win and keep the ghost value near 1.
    const double dx = 0.01, C_a = 0.3;
    std::vector<double> vals{1.0, 1.01, 50.0, 50.2, 49.8};
    const double w = weno_extrapolate(vals, C_a, -0.5, 0, dx);
    CHECK(std::abs(w - 1.0) < 0.1);
}

TEST_CASE("extrapolation of constant data is exact for any degree") {
    for (int d = 1; d <= 6; ++d) {
        std::vector<double> vals(d, 3.25);
        CHECK(weno_extrapolate(vals, 0.2, -1.0, 0, 0.05) ==
              doctest::Approx(3.25).epsilon(1e-13));
        if (d >= 2)
            CHECK(std::abs(weno_extrapolate(vals, 0.2, -1.0, 1, 0.05)) < 1e-13);
    }
}
