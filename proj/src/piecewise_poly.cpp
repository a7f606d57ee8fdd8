#include "ldgsc/piecewise_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace ldgsc {

PiecewisePoly::PiecewisePoly(std::shared_ptr<const Mesh1D> mesh, int degree)
    : mesh_(std::move(mesh)), degree_(degree) {
    if (!mesh_) throw std::invalid_argument("PiecewisePoly: null mesh");
    if (degree_ < 0) throw std::invalid_argument("PiecewisePoly: negative degree");
    coeffs_.assign(static_cast<std::size_t>(mesh_->cells()) * modes(), 0.0);
}

PiecewisePoly::PiecewisePoly(std::shared_ptr<const Mesh1D> mesh, int degree, std::vector<double> coeffs)
    : PiecewisePoly(std::move(mesh), degree) {
    if (coeffs.size() != coeffs_.size())
        throw std::invalid_argument("PiecewisePoly: coefficient count does not match N*(k+1)");
    coeffs_ = std::move(coeffs);
}

RefPoly PiecewisePoly::cell_poly(int j) const {
    const auto c = cell(j);
    return RefPoly(std::vector<double>(c.begin(), c.end()));
}

void PiecewisePoly::set_cell(int j, const RefPoly& p) {
    if (p.degree() > degree_) {
        for (int m = degree_ + 1; m <= p.degree(); ++m) {
            if (p.coeff(m) != 0.0) throw std::invalid_argument("set_cell: polynomial degree exceeds k");
        }
    }
    auto c = cell(j);
    for (int m = 0; m <= degree_; ++m) c[m] = p.coeff(m);
}

double PiecewisePoly::eval(int j, double s) const {
    const auto c = cell(j);
    double sum = c[0];
    if (degree_ == 0) return sum;
    double p_prev = 1.0, p = s;
    sum += c[1] * s;
    for (int n = 1; n < degree_; ++n) {
        const double p_next = ((2 * n + 1) * s * p - n * p_prev) / (n + 1);
        p_prev = p;
        p = p_next;
        sum += c[n + 1] * p;
    }
    return sum;
}

double PiecewisePoly::eval_dx(int j, double s) const {
    const auto c = cell(j);
    double sum = 0.0;
    for (int m = 1; m <= degree_; ++m) sum += c[m] * legendre_derivative(m, s);
    return sum / mesh_->half_width(j);
}

double PiecewisePoly::right_trace(int j) const {
    double sum = 0.0;
    for (double c : cell(j)) sum += c;
    return sum;
}

double PiecewisePoly::left_trace(int j) const {
    const auto c = cell(j);
    double sum = 0.0;
    for (int m = 0; m <= degree_; ++m) sum += (m % 2 == 0) ? c[m] : -c[m];
    return sum;
}

PiecewisePoly PiecewisePoly::dx() const {
    PiecewisePoly out(mesh_, degree_);
    for (int j = 0; j < cells(); ++j) {
        auto d = out.cell(j);
        modal_derivative(cell(j), d);
        const double scale = 1.0 / mesh_->half_width(j);
        for (double& v : d) v *= scale;
    }
    return out;
}

bool PiecewisePoly::same_space(const PiecewisePoly& other) const {
    return degree_ == other.degree_ && (mesh_ == other.mesh_ || *mesh_ == *other.mesh_);
}

void PiecewisePoly::require_same_space(const PiecewisePoly& other) const {
    if (!same_space(other)) throw std::invalid_argument("PiecewisePoly: mesh or degree mismatch");
}

PiecewisePoly& PiecewisePoly::operator+=(const PiecewisePoly& other) {
    require_same_space(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

PiecewisePoly& PiecewisePoly::operator-=(const PiecewisePoly& other) {
    require_same_space(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

PiecewisePoly& PiecewisePoly::operator*=(double a) {
    for (double& c : coeffs_) c *= a;
    return *this;
}

PiecewisePoly& PiecewisePoly::axpy(double a, const PiecewisePoly& other) {
    require_same_space(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * other.coeffs_[i];
    return *this;
}

double trace(const PiecewisePoly& p, int node, Side side) {
    const int n_cells = p.cells();
    if (node < 0 || node > n_cells) throw std::out_of_range("trace: node index out of range");
    if (side == Side::Minus) {
        if (node == 0) throw std::out_of_range("trace: no left limit at the left domain boundary");
        return p.right_trace(node - 1);
    }
    if (node == n_cells) throw std::out_of_range("trace: no right limit at the right domain boundary");
    return p.left_trace(node);
}

double l2_inner(const PiecewisePoly& p, const PiecewisePoly& q) {
    if (!(p.mesh_ptr() == q.mesh_ptr() || p.mesh() == q.mesh()))
        throw std::invalid_argument("l2_inner: mesh mismatch");
    const int common = std::min(p.degree(), q.degree());
    double sum = 0.0;
    for (int j = 0; j < p.cells(); ++j) {
        const auto a = p.cell(j);
        const auto b = q.cell(j);
        double cell_sum = 0.0;
        for (int m = 0; m <= common; ++m) cell_sum += a[m] * b[m] / (2.0 * m + 1.0);
        sum += cell_sum * p.mesh().width(j);
    }
    return sum;
}

double broken_l2_norm(const PiecewisePoly& p) { return std::sqrt(l2_inner(p, p)); }

double broken_l2_norm_quadrature(const PiecewisePoly& p) {
    const auto rule = gauss_rule(quadrature_nodes_for_degree(2 * p.degree()));
    double sum = 0.0;
    for (int j = 0; j < p.cells(); ++j) {
        double cell_sum = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double v = p.eval(j, rule.nodes[q]);
            cell_sum += rule.weights[q] * v * v;
        }
        sum += cell_sum * p.mesh().half_width(j);
    }
    return std::sqrt(sum);
}

}  // namespace ldgsc
