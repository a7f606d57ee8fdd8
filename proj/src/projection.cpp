#include "ldgsc/projection.hpp"

namespace ldgsc {

MissingDerivative::MissingDerivative(int required, int available)
    : std::invalid_argument("derivative of order " + std::to_string(required) +
                            " is required but only orders up to " + std::to_string(available) +
                            " are available"),
      required_(required) {}

SmoothFn::SmoothFn(std::function<double(double)> value)
    : family_([f = std::move(value)](int order, double x) {
          if (order != 0) throw MissingDerivative(order, 0);
          return f(x);
      }),
      max_order_(0) {}

SmoothFn::SmoothFn(Family family, int max_order) : family_(std::move(family)), max_order_(max_order) {}

double SmoothFn::derivative(int order, double x) const {
    if (order > max_order_) throw MissingDerivative(order, max_order_);
    return family_(order, x);
}

SmoothFn SmoothFn::derivative_fn(int order) const {
    if (order > max_order_) throw MissingDerivative(order, max_order_);
    return SmoothFn([family = family_, order](int n, double x) { return family(n + order, x); },
                    max_order_ - order);
}

std::vector<double> cell_modes(const SmoothFn& v, const Mesh1D& mesh, int j, int n_modes,
                               const QuadratureRule& rule) {
    std::vector<double> modes(n_modes, 0.0);
    std::vector<double> L(n_modes);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const double s = rule.nodes[q];
        const double fv = v(mesh.to_physical(j, s)) * rule.weights[q];
        legendre_values(s, L);
        for (int m = 0; m < n_modes; ++m) modes[m] += fv * L[m];
    }
    for (int m = 0; m < n_modes; ++m) modes[m] *= 0.5 * (2.0 * m + 1.0);
    return modes;
}

namespace {

enum class Endpoint { Right, Left, None };

PiecewisePoly project_smooth(const SmoothFn& v, std::shared_ptr<const Mesh1D> mesh, int k,
                             Endpoint endpoint) {
    PiecewisePoly out(mesh, k);
    const auto rule = gauss_rule(smooth_quadrature_nodes(k));
    for (int j = 0; j < mesh->cells(); ++j) {
        const int free_modes = (endpoint == Endpoint::None) ? k + 1 : k;
        const auto modes = cell_modes(v, *mesh, j, free_modes, rule);
        auto c = out.cell(j);
        for (int m = 0; m < free_modes; ++m) c[m] = modes[m];
        if (endpoint == Endpoint::Right) {
            double partial = 0.0;
            for (int m = 0; m < k; ++m) partial += c[m];
            c[k] = v(mesh->right(j)) - partial;
        } else if (endpoint == Endpoint::Left) {
            double partial = 0.0;
            for (int m = 0; m < k; ++m) partial += (m % 2 == 0) ? c[m] : -c[m];
            const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
            c[k] = sign_k * (v(mesh->left(j)) - partial);
        }
    }
    return out;
}

// Keeps modes 0..k-1 of `in` and fixes mode k so that the right (minus) or
// left (plus) trace is preserved.
void project_modal(std::span<const double> in, std::span<double> out, int k, bool match_right) {
    const int n_in = static_cast<int>(in.size());
    double full_trace = 0.0;
    for (int m = 0; m < n_in; ++m) {
        full_trace += (match_right || m % 2 == 0) ? in[m] : -in[m];
    }
    double partial = 0.0;
    for (int m = 0; m < k; ++m) {
        out[m] = (m < n_in) ? in[m] : 0.0;
        partial += (match_right || m % 2 == 0) ? out[m] : -out[m];
    }
    const double sign_k = (match_right || k % 2 == 0) ? 1.0 : -1.0;
    out[k] = sign_k * (full_trace - partial);
}

PiecewisePoly project_piecewise(const PiecewisePoly& v, int k, bool match_right) {
    PiecewisePoly out(v.mesh_ptr(), k);
    for (int j = 0; j < v.cells(); ++j) project_modal(v.cell(j), out.cell(j), k, match_right);
    return out;
}

RefPoly project_ref(const RefPoly& p, int k, bool match_right) {
    std::vector<double> out(static_cast<std::size_t>(k) + 1, 0.0);
    project_modal(p.coeffs(), out, k, match_right);
    return RefPoly(std::move(out));
}

}  // namespace

PiecewisePoly project_minus(const SmoothFn& v, std::shared_ptr<const Mesh1D> mesh, int k) {
    return project_smooth(v, std::move(mesh), k, Endpoint::Right);
}

PiecewisePoly project_plus(const SmoothFn& v, std::shared_ptr<const Mesh1D> mesh, int k) {
    return project_smooth(v, std::move(mesh), k, Endpoint::Left);
}

PiecewisePoly project_l2(const SmoothFn& v, std::shared_ptr<const Mesh1D> mesh, int k) {
    return project_smooth(v, std::move(mesh), k, Endpoint::None);
}

PiecewisePoly project_minus(const PiecewisePoly& v, int k) { return project_piecewise(v, k, true); }
PiecewisePoly project_plus(const PiecewisePoly& v, int k) { return project_piecewise(v, k, false); }

RefPoly project_minus(const RefPoly& p, int k) { return project_ref(p, k, true); }
RefPoly project_plus(const RefPoly& p, int k) { return project_ref(p, k, false); }

double mode_k_deficiency(const SmoothFn& v, const Mesh1D& mesh, int j, int k, DeficiencyKind kind,
                         const QuadratureRule& rule) {
    const auto modes = cell_modes(v, mesh, j, k + 1, rule);
    double sum = 0.0;
    if (kind == DeficiencyKind::Bar) {
        for (int m = 0; m <= k; ++m) sum += modes[m];
        return sum - v(mesh.right(j));
    }
    for (int m = 0; m <= k; ++m) sum += ((k + m) % 2 == 0) ? modes[m] : -modes[m];
    const double sign = ((k + 1) % 2 == 0) ? 1.0 : -1.0;
    return sign * v(mesh.left(j)) + sum;
}

double mode_k_deficiency(const SmoothFn& v, const Mesh1D& mesh, int j, int k, DeficiencyKind kind) {
    return mode_k_deficiency(v, mesh, j, k, kind, gauss_rule(smooth_quadrature_nodes(k)));
}

}  // namespace ldgsc
