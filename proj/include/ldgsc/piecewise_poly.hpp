#pragma once

#include <memory>
#include <span>
#include <vector>

#include "ldgsc/legendre.hpp"
#include "ldgsc/mesh.hpp"

namespace ldgsc {

/// An element of V_h: on cell j, p(x) = sum_m c_{j,m} L_m(s) with
/// s = (x - x_j) / hbar_j. Coefficients are stored cell-major.
class PiecewisePoly {
public:
    PiecewisePoly(std::shared_ptr<const Mesh1D> mesh, int degree);
    PiecewisePoly(std::shared_ptr<const Mesh1D> mesh, int degree, std::vector<double> coeffs);

    const Mesh1D& mesh() const { return *mesh_; }
    const std::shared_ptr<const Mesh1D>& mesh_ptr() const { return mesh_; }
    int degree() const { return degree_; }
    int modes() const { return degree_ + 1; }
    int cells() const { return mesh_->cells(); }

    std::span<double> cell(int j) { return {coeffs_.data() + static_cast<std::size_t>(j) * modes(), static_cast<std::size_t>(modes())}; }
    std::span<const double> cell(int j) const { return {coeffs_.data() + static_cast<std::size_t>(j) * modes(), static_cast<std::size_t>(modes())}; }
    std::span<double> coeffs() { return coeffs_; }
    std::span<const double> coeffs() const { return coeffs_; }

    RefPoly cell_poly(int j) const;
    void set_cell(int j, const RefPoly& p);

    /// Value inside cell j at reference point s.
    double eval(int j, double s) const;
    /// d/dx of the cell-j polynomial at reference point s.
    double eval_dx(int j, double s) const;

    double right_trace(int j) const;  // p|_{tau_j}(s = +1)
    double left_trace(int j) const;   // p|_{tau_j}(s = -1)

    /// Exact modal x-derivative (degree unchanged, top mode zero).
    PiecewisePoly dx() const;

    bool same_space(const PiecewisePoly& other) const;

    PiecewisePoly& operator+=(const PiecewisePoly& other);
    PiecewisePoly& operator-=(const PiecewisePoly& other);
    PiecewisePoly& operator*=(double a);
    /// this += a * other
    PiecewisePoly& axpy(double a, const PiecewisePoly& other);

    friend PiecewisePoly operator+(PiecewisePoly a, const PiecewisePoly& b) { return a += b; }
    friend PiecewisePoly operator-(PiecewisePoly a, const PiecewisePoly& b) { return a -= b; }
    friend PiecewisePoly operator*(double a, PiecewisePoly p) { return p *= a; }

private:
    void require_same_space(const PiecewisePoly& other) const;

    std::shared_ptr<const Mesh1D> mesh_;
    int degree_;
    std::vector<double> coeffs_;
};

enum class Side { Minus, Plus };

/// One-sided limit at node i (x_{i+1/2}, i = 0..N). Minus takes cell i-1 at
/// s = +1, plus takes cell i at s = -1. Throws std::out_of_range when the
/// requested limit lies outside the domain.
double trace(const PiecewisePoly& p, int node, Side side);

/// Exact modal inner product sum_j sum_m c_{j,m} d_{j,m} h_j / (2m+1).
/// Degrees may differ; throws std::invalid_argument on mesh mismatch.
double l2_inner(const PiecewisePoly& p, const PiecewisePoly& q);
double broken_l2_norm(const PiecewisePoly& p);

/// Same norm evaluated with Gauss quadrature instead of the modal formula.
double broken_l2_norm_quadrature(const PiecewisePoly& p);

}  // namespace ldgsc
