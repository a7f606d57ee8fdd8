#pragma once

#include <memory>
#include <span>
#include <vector>

#include "ldgsc/mesh.hpp"
#include "ldgsc/piecewise_poly.hpp"

namespace ldgsc {

/// Semidiscrete LDG operator for u_t = u_xx with alternating fluxes.
///
/// q_h is recovered from u_h cell by cell through the auxiliary equation
///   (q_h, w)_j = -(u_h, w_x)_j + uhat w^-|_{j+1/2} - uhat w^+|_{j-1/2}
/// and the time derivative follows from
///   (u_ht, v)_j = -(q_h, v_x)_j + qhat v^-|_{j+1/2} - qhat v^+|_{j-1/2}.
/// Both use the exact Legendre derivative coupling, so no quadrature is
/// involved. At a Dirichlet end uhat is the boundary value; at a Neumann end
/// qhat is the boundary flux; periodic ends wrap.
class LdgOperator {
public:
    LdgOperator(std::shared_ptr<const Mesh1D> mesh, int degree, FluxChoice flux, BoundaryCondition bc);

    const Mesh1D& mesh() const { return *mesh_; }
    const std::shared_ptr<const Mesh1D>& mesh_ptr() const { return mesh_; }
    int degree() const { return degree_; }
    FluxChoice flux() const { return flux_; }
    const BoundaryCondition& boundary() const { return bc_; }
    std::size_t size() const { return static_cast<std::size_t>(mesh_->cells()) * (degree_ + 1); }

    PiecewisePoly solve_q(const PiecewisePoly& u, double t) const;
    PiecewisePoly apply(const PiecewisePoly& u, double t) const;

    /// Allocation-free kernels on raw cell-major coefficient arrays.
    void solve_q(std::span<const double> u, double t, std::span<double> q) const;
    void apply(std::span<const double> u, double t, std::span<double> dudt, std::span<double> q_scratch) const;

    /// Numerical flux uhat at node i (0..N) for the given u_h coefficients.
    double u_hat(std::span<const double> u, int node, double t) const;
    /// Numerical flux qhat at node i (0..N) for the given q_h coefficients.
    double q_hat(std::span<const double> q, int node, double t) const;

private:
    std::shared_ptr<const Mesh1D> mesh_;
    int degree_;
    FluxChoice flux_;
    BoundaryCondition bc_;
};

/// Exterior values closing the fluxes at the domain ends.
/// Alt1: v_exterior = v^- at x_{1/2}, w_exterior = w^+ at x_{N+1/2}.
/// Alt2: v_exterior = v^+ at x_{N+1/2}, w_exterior = w^- at x_{1/2}.
struct ExteriorTraces {
    double v_exterior = 0.0;
    double w_exterior = 0.0;
};

/// |LHS - RHS| of the energy identity
///   a^1(v,w;v) + a^2(v,w;w) = (v_t,v) + (w,w) - [boundary product]_{N+1/2} + [boundary product]_{1/2}
/// for arbitrary v, w, v_t in V_h, with alternating fluxes and the given
/// exterior traces at the domain ends. Alt1 uses w^+ v^-, Alt2 uses w^- v^+.
double energy_identity_gap(const PiecewisePoly& v, const PiecewisePoly& w, const PiecewisePoly& v_t,
                           FluxChoice flux, const ExteriorTraces& exterior);

}  // namespace ldgsc
