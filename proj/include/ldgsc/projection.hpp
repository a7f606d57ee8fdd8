#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldgsc/legendre.hpp"
#include "ldgsc/mesh.hpp"
#include "ldgsc/piecewise_poly.hpp"

namespace ldgsc {

/// Raised when a SmoothFn is asked for a derivative it does not carry.
class MissingDerivative : public std::invalid_argument {
public:
    MissingDerivative(int required, int available);
    int required_order() const { return required_; }

private:
    int required_;
};

/// A smooth function of x with optional analytic derivatives.
class SmoothFn {
public:
    /// order -> d^order/dx^order f evaluated at x
    using Family = std::function<double(int, double)>;

    SmoothFn() = default;
    /// Value only; any derivative request throws MissingDerivative.
    explicit SmoothFn(std::function<double(double)> value);
    /// Derivatives 0..max_order available through `family`.
    SmoothFn(Family family, int max_order);

    double operator()(double x) const { return family_(0, x); }
    double derivative(int order, double x) const;
    int max_order() const { return max_order_; }

    /// f^{(order)} as a SmoothFn carrying the remaining derivatives.
    SmoothFn derivative_fn(int order) const;

private:
    Family family_;
    int max_order_ = 0;
};

/// Legendre modes v_{j,m} = (2m+1)/h_j (v, L_{j,m})_j, m < n_modes, by the given rule.
std::vector<double> cell_modes(const SmoothFn& v, const Mesh1D& mesh, int j, int n_modes,
                               const QuadratureRule& rule);

/// Gauss-Radau projection matching the right trace of each cell (P_h^-).
PiecewisePoly project_minus(const SmoothFn& v, std::shared_ptr<const Mesh1D> mesh, int k);
/// Gauss-Radau projection matching the left trace of each cell (P_h^+).
PiecewisePoly project_plus(const SmoothFn& v, std::shared_ptr<const Mesh1D> mesh, int k);
PiecewisePoly project_l2(const SmoothFn& v, std::shared_ptr<const Mesh1D> mesh, int k);

/// Same projections applied to a broken polynomial: exact modal truncation
/// followed by the endpoint fix. The input degree may exceed k.
PiecewisePoly project_minus(const PiecewisePoly& v, int k);
PiecewisePoly project_plus(const PiecewisePoly& v, int k);

/// Reference-interval versions, used for the correction chains.
RefPoly project_minus(const RefPoly& p, int k);
RefPoly project_plus(const RefPoly& p, int k);

enum class DeficiencyKind {
    Bar,    ///< v - P_h^- v = vbar L_k + higher modes
    Tilde,  ///< v - P_h^+ v = vtilde L_k + higher modes
};

/// Mode-k coefficient of the projection defect on cell j.
///   bar:   -v(x_{j+1/2}^-) + (1/h_j) int v sum_{m<=k} (2m+1) L_m
///   tilde: (-1)^{k+1} v(x_{j-1/2}^+) + (1/h_j) int v sum_{m<=k} (-1)^{k+m} (2m+1) L_m
double mode_k_deficiency(const SmoothFn& v, const Mesh1D& mesh, int j, int k, DeficiencyKind kind);

/// Same, with a caller-supplied rule (for oracle comparisons).
double mode_k_deficiency(const SmoothFn& v, const Mesh1D& mesh, int j, int k, DeficiencyKind kind,
                         const QuadratureRule& rule);

}  // namespace ldgsc
