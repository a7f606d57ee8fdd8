#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "ldgsc/acceptance.hpp"
#include "ldgsc/correction.hpp"
#include "ldgsc/ldg_operator.hpp"
#include "ldgsc/time_stepper.hpp"
#include "support.hpp"

using namespace ldgsc;

namespace {

constexpr double kProjectionTol = 1e-12;
constexpr double kModeRuleTol = 1e-14;
constexpr double kChainTol = 1e-13;
constexpr double kEnergyTol = 1e-12;
constexpr double kTaylorTol = 1e-12;
constexpr double kDeficiencyTol = 1e-12;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

CriterionResult algebra_suite() {
    CriterionResult r{1, "algebra suite: projections, antiderivative rule, chains, energy identities", true, {}};
    oracle::Gen gen(2024);

    double worst_exact = 0.0, worst_end = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = gen.mesh(gen.integer(2, 10));
        const int k = gen.integer(1, 8);
        const auto p = gen.piecewise(m, k);
        const auto pm = project_minus(p, k), pp = project_plus(p, k);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            worst_exact = std::max({worst_exact, std::abs(pm.coeffs()[i] - p.coeffs()[i]), std::abs(pp.coeffs()[i] - p.coeffs()[i])});
        const auto v = gen.smooth(2);
        const auto sm = project_minus(v, m, k), sp = project_plus(v, m, k);
        for (int j = 0; j < m->cells(); ++j)
            worst_end = std::max({worst_end, std::abs(sm.right_trace(j) - v(m->right(j))), std::abs(sp.left_trace(j) - v(m->left(j)))});
    }
    r.require(worst_exact <= kProjectionTol, "projection of V_h off by " + fmt(worst_exact));
    r.require(worst_end <= kProjectionTol, "projection endpoint mismatch " + fmt(worst_end));

    double worst_rule = 0.0;
    for (int m = 0; m <= 12; ++m) {
        const RefPoly q = ds_inverse(RefPoly::mode(m));
        for (int n = 0; n <= q.degree(); ++n) {
            double expected = 0.0;
            if (m == 0) expected = (n == 0 || n == 1) ? 1.0 : 0.0;
            else if (n == m + 1) expected = 1.0 / (2 * m + 1);
            else if (n == m - 1) expected = -1.0 / (2 * m + 1);
            worst_rule = std::max(worst_rule, std::abs(q.coeff(n) - expected));
        }
    }
    r.require(worst_rule <= kModeRuleTol, "antiderivative mode rule off by " + fmt(worst_rule));

    double worst_f11 = 0.0, worst_band = 0.0;
    for (int k = 1; k <= 8; ++k) {
        const auto chain = build_f_chain(k);
        for (int m = 0; m <= k; ++m) {
            const double e = (m == k || m == k - 1) ? -1.0 / (2 * k + 1) : 0.0;
            worst_f11 = std::max(worst_f11, std::abs(chain.f1[0].coeff(m) - e));
        }
        for (std::size_t idx = 0; idx < chain.f1.size(); ++idx) {
            const int i = static_cast<int>(idx) + 1;
            for (int m = 0; m < k - 2 * i + 1; ++m)
                worst_band = std::max({worst_band, std::abs(chain.f1[idx].coeff(m)), std::abs(chain.f2[idx].coeff(m))});
            worst_band = std::max({worst_band, std::abs(chain.f1[idx].at_left()), std::abs(chain.f2[idx].at_right())});
        }
        for (std::size_t idx = 0; idx < chain.f1_bar.size(); ++idx)
            worst_band = std::max({worst_band, std::abs(chain.f1_bar[idx].at_right()), std::abs(chain.f2_bar[idx].at_left())});
    }
    r.require(worst_f11 <= kChainTol, "first chain member off by " + fmt(worst_f11));
    r.require(worst_band <= kChainTol, "band or zero-trace invariant off by " + fmt(worst_band));

    for (FluxChoice flux : {FluxChoice::Alt1, FluxChoice::Alt2}) {
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = gen.mesh(gen.integer(1, 8));
            const int k = gen.integer(0, 4);
            const auto v = gen.piecewise(m, k), w = gen.piecewise(m, k), vt = gen.piecewise(m, k);
            const ExteriorTraces ext{gen.uniform(-1, 1), gen.uniform(-1, 1)};
            const double scale = std::pow(broken_l2_norm(v) + broken_l2_norm(w), 2) / m->h_min();
            worst = std::max(worst, energy_identity_gap(v, w, vt, flux, ext) / scale);
        }
        r.require(worst <= kEnergyTol, "energy identity gap (" + to_string(flux) + ") " + fmt(worst));
    }
    return r;
}

CriterionResult oracle_equivalence() {
    CriterionResult r{7, "oracle equivalence: RK4 step vs dense Taylor, deficiencies vs 64-node quadrature", true, {}};

    const auto m = build_mesh(MeshKind::Uniform, 4);
    const LdgOperator op(m, 1, FluxChoice::Alt1, BoundaryCondition::periodic());
    const auto a = oracle::dense_matrix(op);
    oracle::Gen gen(7);
    const auto u = gen.piecewise(m, 1);
    const std::vector<double> x(u.coeffs().begin(), u.coeffs().end());
    const double dt = 0.01 * m->h_min() * m->h_min();
    const auto expected = oracle::taylor_step(a, x, dt, 4);
    const auto got = rk_step(op, u, 0.0, dt, RkScheme::Rk4);
    double worst_rk = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst_rk = std::max(worst_rk, std::abs(got.coeffs()[i] - expected[i]));
    r.require(worst_rk <= kTaylorTol, "RK4 step differs from the Taylor oracle by " + fmt(worst_rk));

    // deficiencies relative to the size of the function on the cell
    double worst = 0.0;
    for (const auto& problem : {example_periodic(), example_mixed()}) {
        for (MeshKind kind : {MeshKind::Split, MeshKind::Uniform}) {
            for (int n : {4, 8, 16, 32}) {
                const auto mesh = build_mesh(kind, n);
                for (int k : {3, 4}) {
                    const auto u0 = problem.initial_value(2 * k + 4);
                    const auto alt1 = time_mode_coefficients(u0, *mesh, k, FluxChoice::Alt1);
                    const auto alt2 = time_mode_coefficients(u0, *mesh, k, FluxChoice::Alt2);
                    for (int j = 0; j < n; ++j) {
                        const double lo = mesh->left(j), hi = mesh->right(j);
                        for (int i = 0; i <= alt1.max_index(); ++i) {
                            const auto d_even = [&](double y) { return u0.derivative(2 * i, y); };
                            const auto d_odd = [&](double y) { return u0.derivative(2 * i + 1, y); };
                            const double size = 1.0 + std::max(std::abs(d_even(hi)), std::abs(d_odd(hi)));
                            const double diffs[] = {
                                alt1.g[i][j] - oracle::bar_deficiency(d_even, lo, hi, k),
                                alt1.q[i][j] - oracle::tilde_deficiency(d_odd, lo, hi, k),
                                alt2.g[i][j] - oracle::tilde_deficiency(d_even, lo, hi, k),
                                alt2.q[i][j] - oracle::bar_deficiency(d_odd, lo, hi, k),
                            };
                            for (double d : diffs) worst = std::max(worst, std::abs(d) / size);
                        }
                    }
                }
            }
        }
    }
    r.require(worst <= kDeficiencyTol, "deficiency coefficients differ from the oracle by " + fmt(worst));
    return r;
}

}  // namespace

int main() {
    std::vector<CriterionResult> results;
    results.push_back(algebra_suite());
    std::cout << format_result(results.back()) << std::flush;

    const AcceptanceRuns runs = run_acceptance_studies(true);
    for (auto& r : evaluate_study_criteria(runs)) {
        std::cout << format_result(r) << std::flush;
        results.push_back(std::move(r));
    }

    results.push_back(oracle_equivalence());
    std::cout << format_result(results.back()) << std::flush;

    const auto passed = std::count_if(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<long>(results.size()) ? 0 : 1;
}
