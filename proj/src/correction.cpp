#include "ldgsc/correction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ldgsc {

namespace {

int ceil_half(int n) { return (n + 1) / 2; }
int floor_half(int n) { return n / 2; }

}  // namespace

std::vector<double> pair_coefficients(const RefPoly& p, int k, int sign, double* remainder) {
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    if (k >= 1) {
        c[k] = p.coeff(k);
        for (int m = k - 1; m >= 1; --m) c[m] = p.coeff(m) - sign * c[m + 1];
    }
    if (remainder) *remainder = p.coeff(0) - (k >= 1 ? sign * c[1] : 0.0);
    return c;
}

FChain build_f_chain(int k) {
    if (k < 1) throw std::invalid_argument("build_f_chain: k must be >= 1");
    FChain chain;
    chain.k = k;
    const int n_f = ceil_half(k);
    const int n_bar = floor_half(k);

    const RefPoly lk = RefPoly::mode(k);
    chain.f1.push_back(project_plus(ds_inverse(lk), k));
    chain.f2.push_back(project_minus(ds_inverse(lk), k));
    for (int i = 1; i <= n_bar; ++i) {
        chain.f1_bar.push_back(project_minus(ds_inverse(chain.f1[i - 1]), k));
        chain.f2_bar.push_back(project_plus(ds_inverse(chain.f2[i - 1]), k));
        if (i + 1 <= n_f) {
            chain.f1.push_back(project_plus(ds_inverse(chain.f1_bar[i - 1]), k));
            chain.f2.push_back(project_minus(ds_inverse(chain.f2_bar[i - 1]), k));
        }
    }

    for (const auto& f : chain.f1) chain.a.push_back(pair_coefficients(f, k, +1));
    for (const auto& f : chain.f2) chain.b.push_back(pair_coefficients(f, k, -1));
    for (const auto& f : chain.f1_bar) chain.beta.push_back(pair_coefficients(f, k, -1));
    for (const auto& f : chain.f2_bar) chain.gamma.push_back(pair_coefficients(f, k, +1));
    return chain;
}

TimeModes time_mode_coefficients(const SmoothFn& u0, const Mesh1D& mesh, int k, FluxChoice flux,
                                 int max_index) {
    if (max_index < 0) max_index = ceil_half(k);
    const int required = 2 * max_index + 1;
    if (u0.max_order() < required) throw MissingDerivative(required, u0.max_order());

    const auto rule = gauss_rule(smooth_quadrature_nodes(k));
    const DeficiencyKind g_kind = (flux == FluxChoice::Alt1) ? DeficiencyKind::Bar : DeficiencyKind::Tilde;
    const DeficiencyKind q_kind = (flux == FluxChoice::Alt1) ? DeficiencyKind::Tilde : DeficiencyKind::Bar;

    TimeModes modes;
    modes.flux = flux;
    modes.k = k;
    modes.g.assign(max_index + 1, std::vector<double>(mesh.cells(), 0.0));
    modes.q.assign(max_index + 1, std::vector<double>(mesh.cells(), 0.0));
    for (int i = 0; i <= max_index; ++i) {
        // d^i/dt^i u = u0^{(2i)} at t = 0 since u_t = u_xx.
        const SmoothFn u_dt = u0.derivative_fn(2 * i);
        const SmoothFn q_dt = u0.derivative_fn(2 * i + 1);
        for (int j = 0; j < mesh.cells(); ++j) {
            modes.g[i][j] = mode_k_deficiency(u_dt, mesh, j, k, g_kind, rule);
            modes.q[i][j] = mode_k_deficiency(q_dt, mesh, j, k, q_kind, rule);
        }
    }
    return modes;
}

TimeModes shifted(const TimeModes& modes) {
    if (modes.g.size() < 2) throw std::invalid_argument("shifted: need at least two indices");
    TimeModes out = modes;
    out.g.erase(out.g.begin());
    out.q.erase(out.q.begin());
    return out;
}

namespace {

// target|_{tau_j} += scale * f
void add_scaled(PiecewisePoly& target, int j, double scale, const RefPoly& f) {
    auto c = target.cell(j);
    for (int m = 0; m <= target.degree(); ++m) c[m] += scale * f.coeff(m);
}

}  // namespace

CorrectionPair build_w(const FChain& chain, const TimeModes& modes, int l, FluxChoice flux,
                       std::shared_ptr<const Mesh1D> mesh) {
    const int k = chain.k;
    if (l < 1 || l > k) {
        throw std::invalid_argument("build_w: correction order l=" + std::to_string(l) +
                                    " outside 1.." + std::to_string(k));
    }
    const int n_plain = ceil_half(l);
    const int n_bar = floor_half(l);
    if (modes.max_index() < n_plain || static_cast<int>(modes.q.size()) <= n_bar) {
        throw std::invalid_argument("build_w: time mode coefficients do not reach index " +
                                    std::to_string(n_plain));
    }

    CorrectionPair w{PiecewisePoly(mesh, k), PiecewisePoly(mesh, k)};
    for (int j = 0; j < mesh->cells(); ++j) {
        const double hb = mesh->half_width(j);
        for (int i = 1; i <= n_plain; ++i) {
            const double odd_pow = std::pow(hb, 2 * i - 1);
            if (flux == FluxChoice::Alt1) {
                add_scaled(w.w1, j, odd_pow * modes.g[i][j], chain.f1[i - 1]);      // w_{1,i}
                add_scaled(w.w2, j, odd_pow * modes.q[i - 1][j], chain.f2[i - 1]);  // w_{2,i}
            } else {
                add_scaled(w.w2, j, odd_pow * modes.q[i - 1][j], chain.f1[i - 1]);  // w_{1,i}
                add_scaled(w.w1, j, odd_pow * modes.g[i][j], chain.f2[i - 1]);      // w_{2,i}
            }
        }
        for (int i = 1; i <= n_bar; ++i) {
            const double even_pow = std::pow(hb, 2 * i);
            if (flux == FluxChoice::Alt1) {
                add_scaled(w.w2, j, even_pow * modes.g[i][j], chain.f1_bar[i - 1]);  // wbar_{1,i}
                add_scaled(w.w1, j, even_pow * modes.q[i][j], chain.f2_bar[i - 1]);  // wbar_{2,i}
            } else {
                add_scaled(w.w1, j, even_pow * modes.q[i][j], chain.f1_bar[i - 1]);  // wbar_{1,i}
                add_scaled(w.w2, j, even_pow * modes.g[i][j], chain.f2_bar[i - 1]);  // wbar_{2,i}
            }
        }
    }
    return w;
}

CorrectionBundle build_correction(const SmoothFn& u0, std::shared_ptr<const Mesh1D> mesh, int k,
                                  int l, FluxChoice flux) {
    if (l < 1 || l > k) {
        throw std::invalid_argument("build_correction: correction order l=" + std::to_string(l) +
                                    " outside 1.." + std::to_string(k));
    }
    TimeModes modes = time_mode_coefficients(u0, *mesh, k, flux);
    CorrectionPair w = build_w(build_f_chain(k), modes, l, flux, std::move(mesh));
    return {flux, l, std::move(modes), std::move(w)};
}

Interpolant build_initial_interpolant(const SmoothFn& u0, std::shared_ptr<const Mesh1D> mesh, int k,
                                      int l, FluxChoice flux) {
    auto bundle = build_correction(u0, mesh, k, l, flux);
    const SmoothFn q0 = u0.derivative_fn(1);
    if (flux == FluxChoice::Alt1) {
        return {project_minus(u0, mesh, k) - bundle.w.w2, project_plus(q0, mesh, k) - bundle.w.w1};
    }
    return {project_plus(u0, mesh, k) - bundle.w.w2, project_minus(q0, mesh, k) - bundle.w.w1};
}

}  // namespace ldgsc
