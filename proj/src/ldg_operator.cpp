#include "ldgsc/ldg_operator.hpp"

#include <cmath>
#include <stdexcept>

namespace ldgsc {

namespace {

double right_trace(std::span<const double> c, int j, int modes) {
    double sum = 0.0;
    for (int m = 0; m < modes; ++m) sum += c[static_cast<std::size_t>(j) * modes + m];
    return sum;
}

double left_trace(std::span<const double> c, int j, int modes) {
    double sum = 0.0;
    for (int m = 0; m < modes; ++m) {
        const double v = c[static_cast<std::size_t>(j) * modes + m];
        sum += (m % 2 == 0) ? v : -v;
    }
    return sum;
}

// int_{-1}^{1} a(s) b'(s) ds for modal a, b on one cell.
double derivative_coupling(std::span<const double> a, std::span<const double> b) {
    double total = 0.0;
    double even_sum = 0.0, odd_sum = 0.0;  // sums of a_m, m < n, by parity of m
    for (std::size_t n = 0; n < b.size(); ++n) {
        const double opposite = (n % 2 == 0) ? odd_sum : even_sum;
        total += 2.0 * b[n] * opposite;
        if (n < a.size()) {
            if (n % 2 == 0) even_sum += a[n];
            else odd_sum += a[n];
        }
    }
    return total;
}

double modal_inner(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t m = 0; m < n; ++m) sum += a[m] * b[m] * 2.0 / (2.0 * m + 1.0);
    return sum;
}

}  // namespace

LdgOperator::LdgOperator(std::shared_ptr<const Mesh1D> mesh, int degree, FluxChoice flux, BoundaryCondition bc)
    : mesh_(std::move(mesh)), degree_(degree), flux_(flux), bc_(std::move(bc)) {
    if (!mesh_) throw std::invalid_argument("LdgOperator: null mesh");
    if (degree_ < 0) throw std::invalid_argument("LdgOperator: negative degree");
    validate_pairing(flux_, bc_.kind);
    if (bc_.kind != BoundaryKind::Periodic && (!bc_.g0 || !bc_.g1))
        throw std::invalid_argument("LdgOperator: mixed boundary condition needs g0 and g1");
}

double LdgOperator::u_hat(std::span<const double> u, int node, double t) const {
    const int n_cells = mesh_->cells();
    const int modes = degree_ + 1;
    if (flux_ == FluxChoice::Alt1) {
        if (node == 0) {
            if (bc_.kind == BoundaryKind::Periodic) return right_trace(u, n_cells - 1, modes);
            return bc_.g0(t);  // Dirichlet at the left end
        }
        return right_trace(u, node - 1, modes);
    }
    if (node == n_cells) {
        if (bc_.kind == BoundaryKind::Periodic) return left_trace(u, 0, modes);
        return bc_.g1(t);  // Dirichlet at the right end
    }
    return left_trace(u, node, modes);
}

double LdgOperator::q_hat(std::span<const double> q, int node, double t) const {
    const int n_cells = mesh_->cells();
    const int modes = degree_ + 1;
    if (flux_ == FluxChoice::Alt1) {
        if (node == n_cells) {
            if (bc_.kind == BoundaryKind::Periodic) return left_trace(q, 0, modes);
            return bc_.g1(t);  // Neumann at the right end
        }
        return left_trace(q, node, modes);
    }
    if (node == 0) {
        if (bc_.kind == BoundaryKind::Periodic) return right_trace(q, n_cells - 1, modes);
        return bc_.g0(t);  // Neumann at the left end
    }
    return right_trace(q, node - 1, modes);
}

namespace {

// out_{j,n} = (2n+1)/h_j [ flux_{j+1/2} - (-1)^n flux_{j-1/2} - 2 sum_{m<n, n-m odd} in_{j,m} ]
template <typename NodeFlux>
void assemble(const Mesh1D& mesh, int modes, std::span<const double> in, NodeFlux&& node_flux,
              std::span<double> out) {
    const int n_cells = mesh.cells();
    double left_flux = node_flux(0);
    for (int j = 0; j < n_cells; ++j) {
        const double right_flux = node_flux(j + 1);
        const double* c = in.data() + static_cast<std::size_t>(j) * modes;
        double* r = out.data() + static_cast<std::size_t>(j) * modes;
        const double inv_h = 1.0 / mesh.width(j);
        double even_sum = 0.0, odd_sum = 0.0;
        for (int n = 0; n < modes; ++n) {
            const double volume = 2.0 * ((n % 2 == 0) ? odd_sum : even_sum);
            const double face = (n % 2 == 0) ? right_flux - left_flux : right_flux + left_flux;
            r[n] = (2.0 * n + 1.0) * inv_h * (face - volume);
            if (n % 2 == 0) even_sum += c[n];
            else odd_sum += c[n];
        }
        left_flux = right_flux;
    }
}

}  // namespace

void LdgOperator::solve_q(std::span<const double> u, double t, std::span<double> q) const {
    if (u.size() != size() || q.size() != size()) throw std::invalid_argument("solve_q: size mismatch");
    assemble(*mesh_, degree_ + 1, u, [&](int node) { return u_hat(u, node, t); }, q);
}

void LdgOperator::apply(std::span<const double> u, double t, std::span<double> dudt,
                        std::span<double> q_scratch) const {
    if (dudt.size() != size()) throw std::invalid_argument("apply: size mismatch");
    solve_q(u, t, q_scratch);
    const std::span<const double> q = q_scratch;
    assemble(*mesh_, degree_ + 1, q, [&](int node) { return q_hat(q, node, t); }, dudt);
}

PiecewisePoly LdgOperator::solve_q(const PiecewisePoly& u, double t) const {
    if (u.degree() != degree_ || !(u.mesh() == *mesh_))
        throw std::invalid_argument("solve_q: u_h is not in this operator's space");
    PiecewisePoly q(mesh_, degree_);
    solve_q(u.coeffs(), t, q.coeffs());
    return q;
}

PiecewisePoly LdgOperator::apply(const PiecewisePoly& u, double t) const {
    if (u.degree() != degree_ || !(u.mesh() == *mesh_))
        throw std::invalid_argument("apply: u_h is not in this operator's space");
    PiecewisePoly dudt(mesh_, degree_);
    std::vector<double> q(size());
    apply(u.coeffs(), t, dudt.coeffs(), q);
    return dudt;
}

double energy_identity_gap(const PiecewisePoly& v, const PiecewisePoly& w, const PiecewisePoly& v_t,
                           FluxChoice flux, const ExteriorTraces& exterior) {
    if (!v.same_space(w) || !v.same_space(v_t))
        throw std::invalid_argument("energy_identity_gap: arguments must share mesh and degree");
    const Mesh1D& mesh = v.mesh();
    const int n_cells = mesh.cells();

    // Alternating flux values at every node, closed by the exterior traces.
    std::vector<double> v_hat(n_cells + 1), w_hat(n_cells + 1);
    for (int i = 0; i <= n_cells; ++i) {
        if (flux == FluxChoice::Alt1) {
            v_hat[i] = (i == 0) ? exterior.v_exterior : v.right_trace(i - 1);
            w_hat[i] = (i == n_cells) ? exterior.w_exterior : w.left_trace(i);
        } else {
            v_hat[i] = (i == n_cells) ? exterior.v_exterior : v.left_trace(i);
            w_hat[i] = (i == 0) ? exterior.w_exterior : w.right_trace(i - 1);
        }
    }

    double lhs = 0.0;
    double rhs = 0.0;
    for (int j = 0; j < n_cells; ++j) {
        const double hb = mesh.half_width(j);
        const auto vc = v.cell(j);
        const auto wc = w.cell(j);
        const auto vtc = v_t.cell(j);
        // a^1_j(v, w; v): (v_t, v) + (w, v_x) - what v^-|_{j+1/2} + what v^+|_{j-1/2}
        lhs += hb * modal_inner(vtc, vc) + derivative_coupling(wc, vc) - w_hat[j + 1] * v.right_trace(j) +
               w_hat[j] * v.left_trace(j);
        // a^2_j(v, w; w): (w, w) + (v, w_x) - vhat w^-|_{j+1/2} + vhat w^+|_{j-1/2}
        lhs += hb * modal_inner(wc, wc) + derivative_coupling(vc, wc) - v_hat[j + 1] * w.right_trace(j) +
               v_hat[j] * w.left_trace(j);
        rhs += hb * (modal_inner(vtc, vc) + modal_inner(wc, wc));
    }
    if (flux == FluxChoice::Alt1) {
        // - w^+ v^-|_{N+1/2} + w^+ v^-|_{1/2}
        rhs += -exterior.w_exterior * v.right_trace(n_cells - 1) + w.left_trace(0) * exterior.v_exterior;
    } else {
        // - w^- v^+|_{N+1/2} + w^- v^+|_{1/2}
        rhs += -w.right_trace(n_cells - 1) * exterior.v_exterior + exterior.w_exterior * v.left_trace(0);
    }
    return std::abs(lhs - rhs);
}

}  // namespace ldgsc
