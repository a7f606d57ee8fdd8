#pragma once

#include <span>
#include <vector>

namespace ldgsc {

/// Legendre polynomial L_m(s) on [-1,1], normalized so that L_m(1) = 1.
double legendre(int m, double s);

/// L_m'(s).
double legendre_derivative(int m, double s);

/// Fills out[m] = L_m(s) for m = 0..out.size()-1.
void legendre_values(double s, std::span<double> out);

/// A polynomial on the reference interval stored by its Legendre modes,
/// p(s) = sum_m c_m L_m(s).
class RefPoly {
public:
    RefPoly() = default;
    explicit RefPoly(std::vector<double> coeffs);

    /// c * L_m.
    static RefPoly mode(int m, double c = 1.0);

    /// Number of stored modes minus one (trailing zeros are kept).
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of L_m, zero beyond the stored range.
    double coeff(int m) const;
    std::span<const double> coeffs() const { return coeffs_; }

    double operator()(double s) const;
    double at_right() const;  // p(+1)
    double at_left() const;   // p(-1)

    RefPoly derivative() const;

    /// Pads or truncates to degree d.
    RefPoly resized(int d) const;

    RefPoly& operator+=(const RefPoly& other);
    RefPoly& operator-=(const RefPoly& other);
    RefPoly& operator*=(double a);

    friend RefPoly operator+(RefPoly a, const RefPoly& b) { return a += b; }
    friend RefPoly operator-(RefPoly a, const RefPoly& b) { return a -= b; }
    friend RefPoly operator*(double a, RefPoly p) { return p *= a; }

private:
    std::vector<double> coeffs_;
};

/// Antiderivative q(s) = int_{-1}^{s} p. Raises the degree by one and
/// always satisfies q(-1) = 0.
RefPoly ds_inverse(const RefPoly& p);

/// Modal derivative: returns d with d_n = (2n+1) * sum_{m>n, m-n odd} c_m.
/// The result has the same length as the input (top entry zero).
void modal_derivative(std::span<const double> c, std::span<double> d);

enum class RadauSide { Left, Right };

/// The k interior Radau points on [-1,1], sorted ascending.
/// Left: roots of L_{k+1}+L_k other than -1. Right: roots of L_{k+1}-L_k
/// other than +1. Throws std::runtime_error if the root search fails.
std::vector<double> radau_points(int k, RadauSide side);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1,1], exact through degree 2n-1.
QuadratureRule gauss_rule(int n);

/// Node count used for integrands that are polynomials of degree d:
/// ceil((d+1)/2) + 2.
int quadrature_nodes_for_degree(int d);

/// Node count used per cell when the integrand is a smooth non-polynomial
/// function paired with modes up to degree k.
int smooth_quadrature_nodes(int k);

}  // namespace ldgsc
