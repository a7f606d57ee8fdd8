#include "ldgsc/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "ldgsc/legendre.hpp"
#include "ldgsc/projection.hpp"

namespace ldgsc {

const std::vector<MetricColumn>& metric_columns() {
    static const std::vector<MetricColumn> columns{
        {"xi_u_L2", "xi_u", &ErrorReport::xi_u_l2},
        {"e_u_radau", "e_u,R", &ErrorReport::e_u_radau},
        {"e_ux_radau", "e_ux,R", &ErrorReport::e_ux_radau},
        {"e_u_n", "e_u,n", &ErrorReport::e_u_n},
        {"e_u_star", "|e_u|*", &ErrorReport::e_u_star},
        {"e_u_cell", "|e_u|c", &ErrorReport::e_u_cell},
        {"e_u_dom", "|e_u|d", &ErrorReport::e_u_dom},
        {"xi_q_L2", "xi_q", &ErrorReport::xi_q_l2},
        {"e_q_radau", "e_q,R", &ErrorReport::e_q_radau},
        {"e_qx_radau", "e_qx,R", &ErrorReport::e_qx_radau},
        {"e_q_n", "e_q,n", &ErrorReport::e_q_n},
        {"e_q_star", "|e_q|*", &ErrorReport::e_q_star},
        {"e_q_cell", "|e_q|c", &ErrorReport::e_q_cell},
        {"e_q_dom", "|e_q|d", &ErrorReport::e_q_dom},
    };
    return columns;
}

const MetricColumn& metric_column(const std::string& key) {
    for (const auto& c : metric_columns())
        if (key == c.key) return c;
    throw std::invalid_argument("unknown metric '" + key + "'");
}

RadauSides radau_sides(FluxChoice flux) {
    if (flux == FluxChoice::Alt1) return {RadauSide::Right, RadauSide::Left, RadauSide::Left, RadauSide::Right};
    return {RadauSide::Left, RadauSide::Right, RadauSide::Right, RadauSide::Left};
}

std::pair<double, double> projection_gap_norms(const PiecewisePoly& u_h, const PiecewisePoly& q_h,
                                               const ExactSolution& exact, double t, FluxChoice flux) {
    const SmoothFn u = exact.at_time(t, 1);
    const SmoothFn q = u.derivative_fn(1);
    const int k = u_h.degree();
    const auto& mesh = u_h.mesh_ptr();
    const bool alt1 = flux == FluxChoice::Alt1;
    const PiecewisePoly pu = alt1 ? project_minus(u, mesh, k) : project_plus(u, mesh, k);
    const PiecewisePoly pq = alt1 ? project_plus(q, mesh, k) : project_minus(q, mesh, k);
    return {broken_l2_norm(pu - u_h), broken_l2_norm(pq - q_h)};
}

NodalErrors nodal_flux_errors(const LdgOperator& op, const PiecewisePoly& u_h, const PiecewisePoly& q_h,
                              const ExactSolution& exact, double t) {
    const Mesh1D& mesh = op.mesh();
    NodalErrors e;
    double u_sq = 0.0, q_sq = 0.0;
    for (int i = 0; i <= mesh.cells(); ++i) {
        const double x = mesh.node(i);
        const double eu = std::abs(exact.dx(0, x, t) - op.u_hat(u_h.coeffs(), i, t));
        const double eq = std::abs(exact.dx(1, x, t) - op.q_hat(q_h.coeffs(), i, t));
        e.u_max = std::max(e.u_max, eu);
        e.q_max = std::max(e.q_max, eq);
        u_sq += eu * eu;
        q_sq += eq * eq;
    }
    const double n = mesh.cells() + 1.0;
    e.u_rms = std::sqrt(u_sq / n);
    e.q_rms = std::sqrt(q_sq / n);
    return e;
}

RadauErrors radau_errors(const PiecewisePoly& u_h, const PiecewisePoly& q_h, const ExactSolution& exact,
                         double t, FluxChoice flux) {
    const Mesh1D& mesh = u_h.mesh();
    const int k = u_h.degree();
    const RadauSides sides = radau_sides(flux);
    const auto left = radau_points(k, RadauSide::Left);
    const auto right = radau_points(k, RadauSide::Right);
    auto points = [&](RadauSide side) -> const std::vector<double>& {
        return side == RadauSide::Left ? left : right;
    };

    RadauErrors e;
    for (int j = 0; j < mesh.cells(); ++j) {
        for (double s : points(sides.u))
            e.u = std::max(e.u, std::abs(exact.dx(0, mesh.to_physical(j, s), t) - u_h.eval(j, s)));
        for (double s : points(sides.ux))
            e.ux = std::max(e.ux, std::abs(exact.dx(1, mesh.to_physical(j, s), t) - u_h.eval_dx(j, s)));
        for (double s : points(sides.q))
            e.q = std::max(e.q, std::abs(exact.dx(1, mesh.to_physical(j, s), t) - q_h.eval(j, s)));
        for (double s : points(sides.qx))
            e.qx = std::max(e.qx, std::abs(exact.dx(2, mesh.to_physical(j, s), t) - q_h.eval_dx(j, s)));
    }
    return e;
}

AverageErrors average_errors(const PiecewisePoly& u_h, const PiecewisePoly& q_h, const ExactSolution& exact,
                             double t) {
    const Mesh1D& mesh = u_h.mesh();
    const QuadratureRule rule = gauss_rule(smooth_quadrature_nodes(u_h.degree()));
    double u_sq = 0.0, q_sq = 0.0, u_int = 0.0, q_int = 0.0;
    for (int j = 0; j < mesh.cells(); ++j) {
        double u_avg = 0.0, q_avg = 0.0;
        for (std::size_t r = 0; r < rule.size(); ++r) {
            const double x = mesh.to_physical(j, rule.nodes[r]);
            u_avg += 0.5 * rule.weights[r] * exact.dx(0, x, t);
            q_avg += 0.5 * rule.weights[r] * exact.dx(1, x, t);
        }
        const double eu = u_avg - u_h.cell(j)[0];
        const double eq = q_avg - q_h.cell(j)[0];
        u_sq += eu * eu;
        q_sq += eq * eq;
        u_int += mesh.width(j) * eu;
        q_int += mesh.width(j) * eq;
    }
    const double n = mesh.cells();
    return {std::sqrt(u_sq / n), std::abs(u_int) / mesh.length(), std::sqrt(q_sq / n),
            std::abs(q_int) / mesh.length()};
}

ErrorReport evaluate_errors(const LdgOperator& op, const PiecewisePoly& u_h, const ExactSolution& exact,
                            double t, MeshKind mesh_kind) {
    const PiecewisePoly q_h = op.solve_q(u_h, t);
    ErrorReport r;
    r.cells = op.mesh().cells();
    r.mesh_kind = mesh_kind;
    r.degree = op.degree();
    r.flux = op.flux();
    r.time = t;

    std::tie(r.xi_u_l2, r.xi_q_l2) = projection_gap_norms(u_h, q_h, exact, t, op.flux());
    const RadauErrors radau = radau_errors(u_h, q_h, exact, t, op.flux());
    r.e_u_radau = radau.u;
    r.e_ux_radau = radau.ux;
    r.e_q_radau = radau.q;
    r.e_qx_radau = radau.qx;
    const NodalErrors nodal = nodal_flux_errors(op, u_h, q_h, exact, t);
    r.e_u_n = nodal.u_max;
    r.e_u_star = nodal.u_rms;
    r.e_q_n = nodal.q_max;
    r.e_q_star = nodal.q_rms;
    const AverageErrors avg = average_errors(u_h, q_h, exact, t);
    r.e_u_cell = avg.u_cell;
    r.e_u_dom = avg.u_dom;
    r.e_q_cell = avg.q_cell;
    r.e_q_dom = avg.q_dom;
    return r;
}

std::optional<double> convergence_rate(double coarse, double fine, double refinement) {
    if (!(coarse > 0.0) || !(fine > 0.0) || !std::isfinite(coarse) || !std::isfinite(fine)) return std::nullopt;
    if (!(refinement > 1.0)) return std::nullopt;
    return std::log(coarse / fine) / std::log(refinement);
}

std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors,
                                                     const std::vector<int>& cells) {
    if (errors.size() != cells.size()) throw std::invalid_argument("convergence_rates: size mismatch");
    std::vector<std::optional<double>> rates;
    for (std::size_t i = 1; i < errors.size(); ++i)
        rates.push_back(convergence_rate(errors[i - 1], errors[i],
                                         static_cast<double>(cells[i]) / static_cast<double>(cells[i - 1])));
    return rates;
}

}  // namespace ldgsc
