#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ldgsc/legendre.hpp"
#include "support.hpp"

using namespace ldgsc;

TEST_CASE("legendre values") {
    CHECK(legendre(2, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(legendre(3, 0.3) == doctest::Approx(-0.3825).epsilon(1e-14));
    for (int m = 0; m <= 12; ++m) {
        CHECK(legendre(m, 1.0) == doctest::Approx(1.0));
        CHECK(legendre(m, -1.0) == doctest::Approx(m % 2 == 0 ? 1.0 : -1.0));
    }
}

TEST_CASE("legendre agrees with independent recurrence and stays bounded") {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = gen.integer(0, 16);
        const double s = gen.uniform(-1.0, 1.0);
        const double v = legendre(m, s);
        CHECK(std::abs(v - oracle::legendre_ref(m, s)) < 1e-14);
        CHECK(std::abs(v) <= 1.0 + 1e-14);
    }
    std::vector<double> all(9);
    legendre_values(0.37, all);
    for (int m = 0; m < 9; ++m) CHECK(all[m] == doctest::Approx(legendre(m, 0.37)).epsilon(1e-15));
}

TEST_CASE("legendre derivative matches finite differences") {
    const double eps = 1e-6;
    for (int m = 0; m <= 10; ++m) {
        for (double s : {-0.9, -0.2, 0.0, 0.45, 0.8}) {
            const double fd = (legendre(m, s + eps) - legendre(m, s - eps)) / (2 * eps);
            CHECK(legendre_derivative(m, s) == doctest::Approx(fd).epsilon(1e-7));
        }
        CHECK(legendre_derivative(m, 1.0) == doctest::Approx(m * (m + 1) / 2.0));
    }
}

TEST_CASE("antiderivative mode rule") {
    const RefPoly l0 = ds_inverse(RefPoly::mode(0));
    CHECK(l0.coeff(0) == doctest::Approx(1.0));
    CHECK(l0.coeff(1) == doctest::Approx(1.0));

    const RefPoly l2 = ds_inverse(RefPoly::mode(2));
    CHECK(l2.coeff(3) == doctest::Approx(0.2));
    CHECK(l2.coeff(1) == doctest::Approx(-0.2));
    CHECK(std::abs(l2.coeff(0)) < 1e-16);
    CHECK(std::abs(l2.coeff(2)) < 1e-16);

    for (int m = 1; m <= 10; ++m) {
        const RefPoly p = ds_inverse(RefPoly::mode(m));
        CHECK(p.coeff(m + 1) == doctest::Approx(1.0 / (2 * m + 1)));
        CHECK(p.coeff(m - 1) == doctest::Approx(-1.0 / (2 * m + 1)));
    }
}

TEST_CASE("antiderivative vanishes at -1 and inverts the derivative") {
    oracle::Gen gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        const RefPoly p = gen.ref_poly(gen.integer(0, 12));
        const RefPoly q = ds_inverse(p);
        CHECK(q.degree() == p.degree() + 1);
        CHECK(std::abs(q.at_left()) < 1e-13);
        const RefPoly back = q.derivative();
        for (int m = 0; m <= p.degree(); ++m) CHECK(std::abs(back.coeff(m) - p.coeff(m)) < 1e-12);
        // value check against quadrature of p from -1 to s
        const double s = gen.uniform(-1.0, 1.0);
        const double integral = oracle::integrate([&](double x) { return p(x); }, -1.0, s);
        CHECK(std::abs(q(s) - integral) < 1e-12);
    }
}

TEST_CASE("modal derivative formula") {
    oracle::Gen gen(13);
    for (int trial = 0; trial < 50; ++trial) {
        const RefPoly p = gen.ref_poly(gen.integer(1, 10));
        std::vector<double> d(p.coeffs().size());
        modal_derivative(p.coeffs(), d);
        CHECK(d.back() == 0.0);
        const double s = gen.uniform(-1.0, 1.0);
        double fd = 0.0, modal = 0.0;
        for (int m = 0; m <= p.degree(); ++m) {
            fd += p.coeff(m) * legendre_derivative(m, s);
            modal += d[m] * legendre(m, s);
        }
        CHECK(modal == doctest::Approx(fd).epsilon(1e-12));
    }
}

TEST_CASE("radau points") {
    auto r1 = radau_points(1, RadauSide::Right);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));

    auto l1 = radau_points(1, RadauSide::Left);
    REQUIRE(l1.size() == 1);
    CHECK(l1[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    auto r2 = radau_points(2, RadauSide::Right);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == doctest::Approx((-1.0 - std::sqrt(6.0)) / 5.0).epsilon(1e-14));
    CHECK(r2[1] == doctest::Approx((-1.0 + std::sqrt(6.0)) / 5.0).epsilon(1e-14));

    for (int k = 1; k <= 8; ++k) {
        for (RadauSide side : {RadauSide::Left, RadauSide::Right}) {
            const auto pts = radau_points(k, side);
            REQUIRE(static_cast<int>(pts.size()) == k);
            const double sign = side == RadauSide::Right ? -1.0 : 1.0;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const double s = pts[i];
                CHECK(s > -1.0);
                CHECK(s < 1.0);
                if (i > 0) CHECK(s > pts[i - 1]);
                CHECK(std::abs(oracle::legendre_ref(k + 1, s) + sign * oracle::legendre_ref(k, s)) < 1e-13);
            }
        }
        // left points mirror right points
        const auto r = radau_points(k, RadauSide::Right);
        const auto l = radau_points(k, RadauSide::Left);
        for (int i = 0; i < k; ++i) CHECK(l[i] == doctest::Approx(-r[k - 1 - i]).epsilon(1e-13));
    }
}

TEST_CASE("gauss rule examples") {
    const auto g1 = gauss_rule(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1.nodes[0] == doctest::Approx(0.0));
    CHECK(g1.weights[0] == doctest::Approx(2.0));

    const auto g2 = gauss_rule(2);
    REQUIRE(g2.size() == 2);
    CHECK(std::abs(std::abs(g2.nodes[0]) - 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(g2.weights[0] == doctest::Approx(1.0));
    CHECK(g2.weights[1] == doctest::Approx(1.0));

    const auto g3 = gauss_rule(3);
    double s4 = 0.0;
    for (std::size_t i = 0; i < g3.size(); ++i) s4 += g3.weights[i] * std::pow(g3.nodes[i], 4);
    CHECK(s4 == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("gauss rule exactness") {
    for (int n = 1; n <= 24; ++n) {
        const auto g = gauss_rule(n);
        double wsum = 0.0;
        for (double w : g.weights) {
            CHECK(w > 0.0);
            wsum += w;
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        for (int p = 0; p <= 2 * n - 1; ++p) {
            double sum = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) sum += g.weights[i] * std::pow(g.nodes[i], p);
            const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
            CHECK(std::abs(sum - exact) < 1e-13);
        }
    }
}

TEST_CASE("legendre orthogonality under the gauss rule") {
    const auto g = gauss_rule(12);
    for (int m = 0; m <= 10; ++m) {
        for (int n = 0; n <= 10; ++n) {
            double sum = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i)
                sum += g.weights[i] * legendre(m, g.nodes[i]) * legendre(n, g.nodes[i]);
            const double exact = m == n ? 2.0 / (2 * m + 1) : 0.0;
            CHECK(std::abs(sum - exact) < 1e-14);
        }
    }
}

TEST_CASE("node counts") {
    CHECK(quadrature_nodes_for_degree(0) >= 1);
    for (int d = 0; d <= 20; ++d) CHECK(2 * quadrature_nodes_for_degree(d) - 1 >= d);
    for (int k = 1; k <= 8; ++k) CHECK(smooth_quadrature_nodes(k) >= k + 1);
}
