#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ldgsc/correction.hpp"
#include "ldgsc/ldg_operator.hpp"
#include "ldgsc/problems.hpp"
#include "support.hpp"

using namespace ldgsc;
using oracle::kPi;

namespace {

LdgOperator periodic_op(std::shared_ptr<const Mesh1D> m, int k, FluxChoice flux) {
    return LdgOperator(std::move(m), k, flux, BoundaryCondition::periodic());
}

double mass(const PiecewisePoly& p) {
    double sum = 0.0;
    for (int j = 0; j < p.cells(); ++j) sum += p.cell(j)[0] * p.mesh().width(j);
    return sum;
}

}  // namespace

TEST_CASE("constants are steady") {
    for (FluxChoice flux : {FluxChoice::Alt1, FluxChoice::Alt2}) {
        const auto m = build_mesh(MeshKind::Split, 8);
        const auto op = periodic_op(m, 3, flux);
        PiecewisePoly u(m, 3);
        for (int j = 0; j < 8; ++j) u.cell(j)[0] = 2.5;
        CHECK(broken_l2_norm(op.solve_q(u, 0.0)) < 1e-14);
        CHECK(broken_l2_norm(op.apply(u, 0.0)) < 1e-13);
    }
}

TEST_CASE("continuous input gives the exact derivative on interior cells") {
    oracle::Gen gen(51);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = gen.mesh(gen.integer(3, 10));
        const int k = gen.integer(1, 6);
        std::vector<double> c(k + 1);
        for (auto& v : c) v = gen.uniform(-0.3, 0.3);
        const auto u = project_l2(oracle::polynomial_fn(c), m, k);
        const auto exact = u.dx();
        for (FluxChoice flux : {FluxChoice::Alt1, FluxChoice::Alt2}) {
            const auto q = periodic_op(m, k, flux).solve_q(u, 0.0);
            // the periodic wrap joins p(2pi) to p(0), so the end cell on the
            // upwind side sees a jump
            const int first = flux == FluxChoice::Alt1 ? 1 : 0;
            const int last = flux == FluxChoice::Alt1 ? m->cells() : m->cells() - 1;
            for (int j = first; j < last; ++j)
                for (int mode = 0; mode <= k; ++mode)
                    CHECK(std::abs(q.cell(j)[mode] - exact.cell(j)[mode]) < 1e-13 * (1 + std::abs(exact.cell(j)[mode])));
        }
    }
}

TEST_CASE("auxiliary solve accuracy") {
    for (int k = 1; k <= 3; ++k) {
        double prev = 0.0;
        for (int n : {8, 16, 32}) {
            const auto m = build_mesh(MeshKind::Uniform, n);
            const auto q = periodic_op(m, k, FluxChoice::Alt1).solve_q(project_minus(oracle::sine_fn(), m, k), 0.0);
            const double err = oracle::l2_defect([](double x) { return std::cos(x); }, q);
            if (prev > 0.0) CHECK(std::log2(prev / err) >= k + 0.8);
            prev = err;
        }
    }
}

TEST_CASE("periodic mass conservation") {
    oracle::Gen gen(52);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = gen.mesh(gen.integer(2, 12));
        const int k = gen.integer(0, 5);
        const auto u = gen.piecewise(m, k);
        for (FluxChoice flux : {FluxChoice::Alt1, FluxChoice::Alt2}) {
            const auto du = periodic_op(m, k, flux).apply(u, 0.0);
            const double scale = broken_l2_norm(u) * std::pow(1.0 / m->h_min(), 2);
            CHECK(std::abs(mass(du)) < 1e-13 * scale);
        }
    }
}

TEST_CASE("semidiscrete residual of the corrected interpolant") {
    const int k = 3, n = 16;
    const auto m = build_mesh(MeshKind::Uniform, n);
    for (FluxChoice flux : {FluxChoice::Alt1, FluxChoice::Alt2}) {
        const auto ui = build_initial_interpolant(oracle::sine_fn(), m, k, k, flux).u;
        const auto du = periodic_op(m, k, flux).apply(ui, 0.0);
        const auto target = project_l2(oracle::sine_fn(), m, k);
        const double gap = broken_l2_norm(du + target);
        CHECK(gap <= 10.0 * std::pow(m->h_max(), k + 1));
    }
}

TEST_CASE("energy identity") {
    oracle::Gen gen(53);
    const auto zero = [](std::shared_ptr<const Mesh1D> m, int k) { return PiecewisePoly(std::move(m), k); };
    {
        const auto m = gen.mesh(4);
        CHECK(energy_identity_gap(zero(m, 2), zero(m, 2), zero(m, 2), FluxChoice::Alt1, {}) == 0.0);
    }
    for (FluxChoice flux : {FluxChoice::Alt1, FluxChoice::Alt2}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = gen.mesh(gen.integer(1, 8));
            const int k = gen.integer(0, 4);
            const auto v = gen.piecewise(m, k), w = gen.piecewise(m, k), vt = gen.piecewise(m, k);
            const ExteriorTraces ext{gen.uniform(-1, 1), gen.uniform(-1, 1)};
            const double scale = std::pow(broken_l2_norm(v) + broken_l2_norm(w), 2) / m->h_min();
            CHECK(energy_identity_gap(v, w, vt, flux, ext) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("linearity") {
    oracle::Gen gen(54);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = gen.mesh(gen.integer(2, 10));
        const int k = gen.integer(1, 5);
        const auto u = gen.piecewise(m, k), v = gen.piecewise(m, k);
        const double a = gen.uniform(-2, 2), b = gen.uniform(-2, 2);
        for (FluxChoice flux : {FluxChoice::Alt1, FluxChoice::Alt2}) {
            const auto op = periodic_op(m, k, flux);
            const auto lhs = op.apply(a * u + b * v, 0.0);
            const auto rhs = a * op.apply(u, 0.0) + b * op.apply(v, 0.0);
            CHECK(broken_l2_norm(lhs - rhs) <= 1e-12 * (1 + broken_l2_norm(lhs)));
        }
    }
}

TEST_CASE("discrete dissipation") {
    oracle::Gen gen(55);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = gen.mesh(gen.integer(2, 10));
        const int k = gen.integer(0, 5);
        const auto u = gen.piecewise(m, k);
        for (FluxChoice flux : {FluxChoice::Alt1, FluxChoice::Alt2}) {
            const auto op = periodic_op(m, k, flux);
            const auto q = op.solve_q(u, 0.0);
            const double qq = l2_inner(q, q);
            const double rate = l2_inner(op.apply(u, 0.0), u) + qq;
            CHECK(std::abs(rate) <= 1e-11 * (1 + qq));
            CHECK(l2_inner(op.apply(u, 0.0), u) <= 1e-11 * (1 + qq));
        }
    }
}

TEST_CASE("mixed boundaries use the prescribed data") {
    const auto m = build_mesh(MeshKind::Uniform, 8);
    const auto u = project_minus(oracle::sine_fn(), m, 2);
    const auto bc1 = BoundaryCondition::dirichlet_left_neumann_right([](double t) { return 0.25 + t; },
                                                                     [](double t) { return -0.5 * t; });
    const LdgOperator op1(m, 2, FluxChoice::Alt1, bc1);
    const auto q1 = op1.solve_q(u, 2.0);
    CHECK(op1.u_hat(u.coeffs(), 0, 2.0) == doctest::Approx(2.25));
    CHECK(op1.q_hat(q1.coeffs(), 8, 2.0) == doctest::Approx(-1.0));
    CHECK(op1.u_hat(u.coeffs(), 3, 2.0) == doctest::Approx(u.right_trace(2)));
    CHECK(op1.q_hat(q1.coeffs(), 3, 2.0) == doctest::Approx(q1.left_trace(3)));

    const auto bc2 = BoundaryCondition::neumann_left_dirichlet_right([](double t) { return 3.0 * t; },
                                                                     [](double t) { return 1.0 - t; });
    const LdgOperator op2(m, 2, FluxChoice::Alt2, bc2);
    const auto q2 = op2.solve_q(u, 0.5);
    CHECK(op2.u_hat(u.coeffs(), 8, 0.5) == doctest::Approx(0.5));
    CHECK(op2.q_hat(q2.coeffs(), 0, 0.5) == doctest::Approx(1.5));
    CHECK(op2.u_hat(u.coeffs(), 3, 0.5) == doctest::Approx(u.left_trace(3)));
    CHECK(op2.q_hat(q2.coeffs(), 3, 0.5) == doctest::Approx(q2.right_trace(2)));
}

TEST_CASE("mixed boundary consistency") {
    const auto problem = example_mixed();
    const int k = 2;
    double prev = 0.0;
    for (int n : {8, 16, 32}) {
        const auto m = build_mesh(MeshKind::Uniform, n);
        const LdgOperator op(m, k, FluxChoice::Alt2, problem.boundary_condition());
        const auto u0 = problem.initial_value(2 * k + 4);
        const auto ui = build_initial_interpolant(u0, m, k, k, FluxChoice::Alt2).u;
        const auto du = op.apply(ui, 0.0);
        const auto target = project_l2(u0.derivative_fn(2), m, k);
        const double err = broken_l2_norm(du - target);
        if (prev > 0.0) CHECK(std::log2(prev / err) >= k + 0.5);
        prev = err;
    }
}

TEST_CASE("invalid pairing is rejected") {
    const auto m = build_mesh(MeshKind::Uniform, 4);
    const auto bc = BoundaryCondition::neumann_left_dirichlet_right([](double) { return 0.0; }, [](double) { return 0.0; });
    CHECK_THROWS_AS(LdgOperator(m, 2, FluxChoice::Alt1, bc), std::invalid_argument);
    const auto bc2 = BoundaryCondition::dirichlet_left_neumann_right([](double) { return 0.0; }, [](double) { return 0.0; });
    CHECK_THROWS_AS(LdgOperator(m, 2, FluxChoice::Alt2, bc2), std::invalid_argument);
}

TEST_CASE("raw kernels match the value interface") {
    oracle::Gen gen(56);
    const auto m = gen.mesh(6);
    const auto u = gen.piecewise(m, 3);
    const auto op = periodic_op(m, 3, FluxChoice::Alt2);
    std::vector<double> out(op.size()), scratch(op.size());
    op.apply(u.coeffs(), 0.0, out, scratch);
    const auto du = op.apply(u, 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == du.coeffs()[i]);
}
