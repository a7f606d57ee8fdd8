#pragma once

// Oracles and random generators shared by the unit tests and the acceptance
// binary. Nothing here calls the library's quadrature or projection code.

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include "ldgsc/ldg_operator.hpp"
#include "ldgsc/legendre.hpp"
#include "ldgsc/mesh.hpp"
#include "ldgsc/piecewise_poly.hpp"
#include "ldgsc/projection.hpp"

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

/// Legendre value by the Bonnet recurrence, written out separately from the library.
inline double legendre_ref(int n, double s) {
    if (n == 0) return 1.0;
    double p0 = 1.0, p1 = s;
    for (int m = 1; m < n; ++m) {
        const double p2 = ((2.0 * m + 1.0) * s * p1 - m * p0) / (m + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

struct Rule {
    std::vector<double> x, w;
};

/// n-point Gauss-Legendre rule by Newton iteration from the asymptotic guesses.
inline Rule gauss_legendre(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int m = 1; m < n; ++m) {
                const double p2 = ((2.0 * m + 1.0) * x * p1 - m * p0) / (m + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

inline const Rule& rule64() {
    static const Rule r = gauss_legendre(64);
    return r;
}

/// int_a^b f(x) dx with the 64-node rule.
inline double integrate(const std::function<double(double)>& f, double a, double b) {
    const Rule& r = rule64();
    const double c = 0.5 * (a + b), hb = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) sum += r.w[i] * f(c + hb * r.x[i]);
    return hb * sum;
}

/// bar deficiency: -v(right) + (1/h) int v sum_{m<=k} (2m+1) L_m
inline double bar_deficiency(const std::function<double(double)>& v, double a, double b, int k) {
    const double c = 0.5 * (a + b), hb = 0.5 * (b - a);
    const double integral = integrate(
        [&](double x) {
            const double s = (x - c) / hb;
            double kernel = 0.0;
            for (int m = 0; m <= k; ++m) kernel += (2.0 * m + 1.0) * legendre_ref(m, s);
            return v(x) * kernel;
        },
        a, b);
    return -v(b) + integral / (b - a);
}

/// tilde deficiency: (-1)^{k+1} v(left) + (1/h) int v sum_{m<=k} (-1)^{k+m} (2m+1) L_m
inline double tilde_deficiency(const std::function<double(double)>& v, double a, double b, int k) {
    const double c = 0.5 * (a + b), hb = 0.5 * (b - a);
    const double integral = integrate(
        [&](double x) {
            const double s = (x - c) / hb;
            double kernel = 0.0;
            for (int m = 0; m <= k; ++m) kernel += ((k + m) % 2 == 0 ? 1.0 : -1.0) * (2.0 * m + 1.0) * legendre_ref(m, s);
            return v(x) * kernel;
        },
        a, b);
    return ((k + 1) % 2 == 0 ? 1.0 : -1.0) * v(a) + integral / (b - a);
}

/// Broken L2 norm of (f - p) with the 64-node rule on every cell.
inline double l2_defect(const std::function<double(double)>& f, const ldgsc::PiecewisePoly& p) {
    const auto& mesh = p.mesh();
    double sum = 0.0;
    for (int j = 0; j < mesh.cells(); ++j) {
        sum += integrate(
            [&](double x) {
                const double s = (x - mesh.center(j)) / mesh.half_width(j);
                const double d = f(x) - p.eval(j, s);
                return d * d;
            },
            mesh.left(j), mesh.right(j));
    }
    return std::sqrt(sum);
}

using Matrix = std::vector<std::vector<double>>;

/// Dense matrix of a linear operator on coefficient vectors, column by column.
inline Matrix dense_matrix(const ldgsc::LdgOperator& op) {
    const std::size_t n = op.size();
    Matrix a(n, std::vector<double>(n, 0.0));
    std::vector<double> e(n, 0.0), col(n), scratch(n);
    for (std::size_t c = 0; c < n; ++c) {
        e.assign(n, 0.0);
        e[c] = 1.0;
        op.apply(e, 0.0, col, scratch);
        for (std::size_t r = 0; r < n; ++r) a[r][c] = col[r];
    }
    return a;
}

inline std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < x.size(); ++c) y[r] += a[r][c] * x[c];
    return y;
}

/// sum_{p=0}^{order} (dt A)^p / p! x
inline std::vector<double> taylor_step(const Matrix& a, const std::vector<double>& x, double dt, int order) {
    std::vector<double> term = x, sum = x;
    for (int p = 1; p <= order; ++p) {
        term = matvec(a, term);
        for (auto& t : term) t *= dt / p;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
    }
    return sum;
}

/// Seeded generators for property tests.
class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

    ldgsc::RefPoly ref_poly(int degree, double scale = 1.0) {
        std::vector<double> c(degree + 1);
        for (auto& v : c) v = uniform(-scale, scale);
        return ldgsc::RefPoly(c);
    }

    /// Random strictly increasing partition of [0, 2pi] with widths in a bounded ratio.
    std::shared_ptr<const ldgsc::Mesh1D> mesh(int cells) {
        std::vector<double> w(cells);
        double total = 0.0;
        for (auto& v : w) total += (v = uniform(0.5, 1.5));
        std::vector<double> b{0.0};
        for (double v : w) b.push_back(b.back() + v * 2.0 * kPi / total);
        b.back() = 2.0 * kPi;
        return std::make_shared<const ldgsc::Mesh1D>(b);
    }

    ldgsc::PiecewisePoly piecewise(std::shared_ptr<const ldgsc::Mesh1D> m, int degree, double scale = 1.0) {
        ldgsc::PiecewisePoly p(std::move(m), degree);
        for (auto& v : p.coeffs()) v = uniform(-scale, scale);
        return p;
    }

    /// a sin(w x + phi) + b with analytic derivatives.
    ldgsc::SmoothFn smooth(int max_order) {
        const double a = uniform(0.5, 2.0), w = uniform(0.5, 3.0), phi = uniform(0.0, 2.0 * kPi), b = uniform(-1, 1);
        return ldgsc::SmoothFn(
            [=](int n, double x) {
                const double v = a * std::pow(w, n) * std::sin(w * x + phi + n * kPi / 2.0);
                return n == 0 ? v + b : v;
            },
            max_order);
    }

private:
    std::mt19937 rng_;
};

inline ldgsc::SmoothFn sine_fn(int max_order = 12) {
    return ldgsc::SmoothFn([](int n, double x) { return std::sin(x + n * kPi / 2.0); }, max_order);
}

inline ldgsc::SmoothFn cosine_fn(int max_order = 12) {
    return ldgsc::SmoothFn([](int n, double x) { return std::cos(x + n * kPi / 2.0); }, max_order);
}

/// Global polynomial sum c_i y^i in y = x / 2pi, so values stay O(sum |c_i|) on the domain.
inline ldgsc::SmoothFn polynomial_fn(std::vector<double> c, int max_order = 12) {
    return ldgsc::SmoothFn(
        [c](int n, double x) {
            const double y = x / (2.0 * kPi);
            double sum = 0.0;
            for (std::size_t i = n; i < c.size(); ++i) {
                double coef = c[i];
                for (int d = 0; d < n; ++d) coef *= static_cast<double>(i - d);
                sum += coef * std::pow(y, static_cast<double>(i - n));
            }
            return sum / std::pow(2.0 * kPi, n);
        },
        max_order);
}

}  // namespace oracle
