#include "ldgsc/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ldgsc {

namespace {

struct LegendreEval {
    double value;
    double derivative;
};

// Three-term recurrence for L_m and L_m'.
LegendreEval legendre_eval(int m, double s) {
    if (m == 0) return {1.0, 0.0};
    double p_prev = 1.0, p = s;
    double d_prev = 0.0, d = 1.0;
    for (int n = 1; n < m; ++n) {
        const double p_next = ((2 * n + 1) * s * p - n * p_prev) / (n + 1);
        const double d_next = d_prev + (2 * n + 1) * p;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    return {p, d};
}

// Safeguarded Newton on a bracket [a, b] with f(a) f(b) < 0.
template <typename F>
double bracketed_newton(F&& f, double a, double b, double seed, int k) {
    double fa = f(a).value;
    if (seed <= a || seed >= b) seed = 0.5 * (a + b);
    double x = seed;
    for (int iter = 0; iter < 200; ++iter) {
        const auto [fx, dfx] = f(x);
        if (fx == 0.0) return x;
        if ((fx < 0) == (fa < 0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (a + b);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (std::abs(next - x) <= 1e-16 * std::max(1.0, std::abs(x)) || b - a < 1e-16) return next;
        x = next;
    }
    std::ostringstream msg;
    msg << "radau_points: root search did not converge for k=" << k << " in [" << a << ", " << b
        << "]";
    throw std::runtime_error(msg.str());
}

}  // namespace

double legendre(int m, double s) { return legendre_eval(m, s).value; }

double legendre_derivative(int m, double s) { return legendre_eval(m, s).derivative; }

void legendre_values(double s, std::span<double> out) {
    if (out.empty()) return;
    out[0] = 1.0;
    if (out.size() > 1) out[1] = s;
    for (std::size_t n = 1; n + 1 < out.size(); ++n) {
        out[n + 1] = ((2.0 * n + 1.0) * s * out[n] - n * out[n - 1]) / (n + 1.0);
    }
}

RefPoly::RefPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

RefPoly RefPoly::mode(int m, double c) {
    std::vector<double> coeffs(static_cast<std::size_t>(m) + 1, 0.0);
    coeffs[m] = c;
    return RefPoly(std::move(coeffs));
}

double RefPoly::coeff(int m) const {
    return (m >= 0 && m < static_cast<int>(coeffs_.size())) ? coeffs_[m] : 0.0;
}

double RefPoly::operator()(double s) const {
    // Clenshaw would do; the degrees here are small.
    double sum = 0.0;
    double p_prev = 1.0, p = s;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        if (m == 0) {
            sum += coeffs_[0];
        } else if (m == 1) {
            sum += coeffs_[1] * s;
        } else {
            const double n = static_cast<double>(m - 1);
            const double p_next = ((2 * n + 1) * s * p - n * p_prev) / (n + 1);
            p_prev = p;
            p = p_next;
            sum += coeffs_[m] * p;
        }
    }
    return sum;
}

double RefPoly::at_right() const {
    double sum = 0.0;
    for (double c : coeffs_) sum += c;
    return sum;
}

double RefPoly::at_left() const {
    double sum = 0.0;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) sum += (m % 2 == 0) ? coeffs_[m] : -coeffs_[m];
    return sum;
}

RefPoly RefPoly::derivative() const {
    std::vector<double> d(coeffs_.size(), 0.0);
    modal_derivative(coeffs_, d);
    return RefPoly(std::move(d));
}

RefPoly RefPoly::resized(int d) const {
    std::vector<double> c(coeffs_);
    c.resize(static_cast<std::size_t>(d) + 1, 0.0);
    return RefPoly(std::move(c));
}

RefPoly& RefPoly::operator+=(const RefPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
    for (std::size_t m = 0; m < other.coeffs_.size(); ++m) coeffs_[m] += other.coeffs_[m];
    return *this;
}

RefPoly& RefPoly::operator-=(const RefPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
    for (std::size_t m = 0; m < other.coeffs_.size(); ++m) coeffs_[m] -= other.coeffs_[m];
    return *this;
}

RefPoly& RefPoly::operator*=(double a) {
    for (double& c : coeffs_) c *= a;
    return *this;
}

RefPoly ds_inverse(const RefPoly& p) {
    const int M = p.degree();
    std::vector<double> q(static_cast<std::size_t>(M) + 2, 0.0);
    if (M < 0) return RefPoly(std::vector<double>{0.0});
    // L_0 -> L_1 + L_0
    q[0] += p.coeff(0);
    q[1] += p.coeff(0);
    // L_m -> (L_{m+1} - L_{m-1}) / (2m+1)
    for (int m = 1; m <= M; ++m) {
        const double c = p.coeff(m) / (2.0 * m + 1.0);
        q[m + 1] += c;
        q[m - 1] -= c;
    }
    return RefPoly(std::move(q));
}

void modal_derivative(std::span<const double> c, std::span<double> d) {
    const int n_modes = static_cast<int>(c.size());
    // Running sums of odd/even-indexed coefficients above n.
    double above_odd = 0.0, above_even = 0.0;
    for (int n = n_modes - 1; n >= 0; --n) {
        const double parity_sum = (n % 2 == 0) ? above_odd : above_even;
        d[n] = (2.0 * n + 1.0) * parity_sum;
        if (n % 2 == 0) {
            above_even += c[n];
        } else {
            above_odd += c[n];
        }
    }
}

std::vector<double> radau_points(int k, RadauSide side) {
    if (k < 1) throw std::invalid_argument("radau_points: k must be >= 1");
    const double sign = (side == RadauSide::Left) ? 1.0 : -1.0;
    auto poly = [k, sign](double s) {
        const auto hi = legendre_eval(k + 1, s);
        const auto lo = legendre_eval(k, s);
        return LegendreEval{hi.value + sign * lo.value, hi.derivative + sign * lo.derivative};
    };

    // Chebyshev-Gauss-Radau seeds, mirrored for the right family.
    std::vector<double> seeds(k);
    for (int i = 1; i <= k; ++i) {
        const double c = -std::cos(2.0 * std::numbers::pi * i / (2.0 * k + 1.0));
        seeds[i - 1] = (side == RadauSide::Left) ? c : -c;
    }
    std::sort(seeds.begin(), seeds.end());

    // Bracket sign changes on a grid that stops short of the excluded endpoint.
    const int samples = 400 * (k + 1);
    std::vector<std::pair<double, double>> brackets;
    const int first = (side == RadauSide::Left) ? 1 : 0;
    const int last = (side == RadauSide::Left) ? samples : samples - 1;
    double prev_s = -1.0 + 2.0 * first / samples;
    double prev_f = poly(prev_s).value;
    for (int i = first + 1; i <= last; ++i) {
        const double s = -1.0 + 2.0 * i / samples;
        const double f = poly(s).value;
        if (f == 0.0) {
            brackets.emplace_back(s - 1e-3 / samples, s + 1e-3 / samples);
        } else if ((f < 0) != (prev_f < 0) && prev_f != 0.0) {
            brackets.emplace_back(prev_s, s);
        }
        prev_s = s;
        prev_f = f;
    }
    if (static_cast<int>(brackets.size()) != k) {
        std::ostringstream msg;
        msg << "radau_points: expected " << k << " interior roots, bracketed " << brackets.size();
        throw std::runtime_error(msg.str());
    }

    std::vector<double> roots(k);
    for (int i = 0; i < k; ++i) {
        roots[i] = bracketed_newton(poly, brackets[i].first, brackets[i].second, seeds[i], k);
        const double residual = std::abs(poly(roots[i]).value);
        if (residual > 1e-13) {
            std::ostringstream msg;
            msg << "radau_points: residual " << residual << " at root " << roots[i] << " (k=" << k
                << ")";
            throw std::runtime_error(msg.str());
        }
    }
    return roots;
}

QuadratureRule gauss_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_rule: n must be >= 1");
    QuadratureRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre_eval(n, z);
            const double dz = p / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            // One more sweep confirms a fixed point at round-off level.
            const auto [p, dp] = legendre_eval(n, z);
            if (std::abs(p / dp) > 1e-14) {
                std::ostringstream msg;
                msg << "gauss_rule: Newton iteration failed for n=" << n << ", node " << i;
                throw std::runtime_error(msg.str());
            }
        }
        const double dp = legendre_eval(n, z).derivative;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

int quadrature_nodes_for_degree(int d) { return (std::max(d, 0) + 2) / 2 + 2; }

int smooth_quadrature_nodes(int k) { return 2 * k + 8; }

}  // namespace ldgsc
