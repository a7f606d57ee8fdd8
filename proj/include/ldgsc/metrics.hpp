#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldgsc/ldg_operator.hpp"
#include "ldgsc/mesh.hpp"
#include "ldgsc/piecewise_poly.hpp"
#include "ldgsc/problems.hpp"

namespace ldgsc {

/// Error measures at one time for one mesh. The Radau columns sample the
/// points chosen by radau_sides().
struct ErrorReport {
    int cells = 0;
    MeshKind mesh_kind = MeshKind::Uniform;
    int degree = 0;
    FluxChoice flux = FluxChoice::Alt1;
    double time = 0.0;

    double xi_u_l2 = 0.0;     // ||P u - u_h||
    double e_u_radau = 0.0;   // max |u - u_h| at Radau points
    double e_ux_radau = 0.0;  // max |u_x - (u_h)_x| at Radau points
    double e_u_n = 0.0;       // max nodal |u - u_hat|
    double e_u_star = 0.0;    // RMS nodal |u - u_hat|
    double e_u_cell = 0.0;    // RMS of cell-average errors
    double e_u_dom = 0.0;     // |domain-average error|

    double xi_q_l2 = 0.0;
    double e_q_radau = 0.0;
    double e_qx_radau = 0.0;
    double e_q_n = 0.0;
    double e_q_star = 0.0;
    double e_q_cell = 0.0;
    double e_q_dom = 0.0;
};

/// One report column: serialization key, short display label and member.
struct MetricColumn {
    const char* key;
    const char* label;
    double ErrorReport::*field;
};

/// The 14 error columns in output order (u block, then q block).
const std::vector<MetricColumn>& metric_columns();
const MetricColumn& metric_column(const std::string& key);

struct RadauSides {
    RadauSide u;    // e_u
    RadauSide ux;   // e_ux
    RadauSide q;    // e_q
    RadauSide qx;   // e_qx
};

/// Alt1: u and q_x at right points, u_x and q at left points. Alt2 swaps.
RadauSides radau_sides(FluxChoice flux);

/// Alt1: (||P^- u - u_h||, ||P^+ q - q_h||); Alt2 swaps the projections.
std::pair<double, double> projection_gap_norms(const PiecewisePoly& u_h, const PiecewisePoly& q_h,
                                               const ExactSolution& exact, double t, FluxChoice flux);

struct NodalErrors {
    double u_max = 0.0, u_rms = 0.0;
    double q_max = 0.0, q_rms = 0.0;
};

/// Errors of the numerical fluxes at all N+1 nodes. Periodic meshes count
/// the shared end node twice; a node carrying prescribed data uses it.
NodalErrors nodal_flux_errors(const LdgOperator& op, const PiecewisePoly& u_h, const PiecewisePoly& q_h,
                              const ExactSolution& exact, double t);

struct RadauErrors {
    double u = 0.0, ux = 0.0, q = 0.0, qx = 0.0;
};

RadauErrors radau_errors(const PiecewisePoly& u_h, const PiecewisePoly& q_h, const ExactSolution& exact,
                         double t, FluxChoice flux);

struct AverageErrors {
    double u_cell = 0.0, u_dom = 0.0;
    double q_cell = 0.0, q_dom = 0.0;
};

/// cell:   sqrt( (1/N) sum_j ((1/h_j) int_{tau_j} (v - v_h))^2 )
/// domain: | (1/|I|) int_I (v - v_h) |
AverageErrors average_errors(const PiecewisePoly& u_h, const PiecewisePoly& q_h, const ExactSolution& exact,
                             double t);

/// Full report for u_h at time t; q_h is recovered from u_h by the operator.
ErrorReport evaluate_errors(const LdgOperator& op, const PiecewisePoly& u_h, const ExactSolution& exact,
                            double t, MeshKind mesh_kind);

/// log(e_coarse / e_fine) / log(refinement). Undefined (nullopt) unless both
/// errors are positive and finite.
std::optional<double> convergence_rate(double coarse, double fine, double refinement = 2.0);

/// Rates between consecutive entries, where each step refines by cells[i+1]/cells[i].
std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors,
                                                     const std::vector<int>& cells);

}  // namespace ldgsc
