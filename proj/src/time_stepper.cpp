#include "ldgsc/time_stepper.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ldgsc {

std::string to_string(RkScheme scheme) {
    switch (scheme) {
        case RkScheme::SspRk3: return "ssp-rk3";
        case RkScheme::Rk4: return "rk4";
        case RkScheme::Rk5: return "rk5";
    }
    return "?";
}

RkScheme rk_scheme_from_string(const std::string& name) {
    if (name == "ssp-rk3") return RkScheme::SspRk3;
    if (name == "rk4") return RkScheme::Rk4;
    if (name == "rk5") return RkScheme::Rk5;
    throw std::invalid_argument("unknown time scheme '" + name + "' (expected ssp-rk3|rk4|rk5)");
}

std::string to_string(DtRule rule) {
    switch (rule) {
        case DtRule::HMinSquared: return "h-min-squared";
        case DtRule::FixedCount: return "fixed-count";
        case DtRule::CellsSquared: return "cells-squared";
    }
    return "?";
}

DtRule dt_rule_from_string(const std::string& name) {
    if (name == "h-min-squared") return DtRule::HMinSquared;
    if (name == "fixed-count") return DtRule::FixedCount;
    if (name == "cells-squared") return DtRule::CellsSquared;
    throw std::invalid_argument("unknown step rule '" + name + "' (expected h-min-squared|fixed-count|cells-squared)");
}

const ButcherTableau& tableau(RkScheme scheme) {
    static const ButcherTableau ssp3{
        {{}, {1.0}, {0.25, 0.25}},
        {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0},
        {0.0, 1.0, 0.5},
        3,
    };
    static const ButcherTableau rk4{
        {{}, {0.5}, {0.0, 0.5}, {0.0, 0.0, 1.0}},
        {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0},
        {0.0, 0.5, 0.5, 1.0},
        4,
    };
    static const ButcherTableau dp5{
        {
            {},
            {1.0 / 5.0},
            {3.0 / 40.0, 9.0 / 40.0},
            {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0},
            {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0},
            {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0},
        },
        {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0},
        {0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0},
        5,
    };
    switch (scheme) {
        case RkScheme::SspRk3: return ssp3;
        case RkScheme::Rk4: return rk4;
        case RkScheme::Rk5: return dp5;
    }
    return rk4;
}

StepPolicy StepPolicy::default_for_degree(int k) {
    return h_min_squared(k <= 3 ? 0.005 : 0.002);
}

StepPolicy StepPolicy::h_min_squared(double coefficient, RkScheme scheme) {
    if (!(coefficient > 0.0)) throw std::invalid_argument("StepPolicy: coefficient must be positive");
    StepPolicy p;
    p.scheme = scheme;
    p.rule = DtRule::HMinSquared;
    p.coefficient = coefficient;
    return p;
}

StepPolicy StepPolicy::fixed_count(long long steps, RkScheme scheme) {
    if (steps < 1) throw std::invalid_argument("StepPolicy: step count must be positive");
    StepPolicy p;
    p.scheme = scheme;
    p.rule = DtRule::FixedCount;
    p.steps = steps;
    return p;
}

StepPolicy StepPolicy::cells_squared(double steps_per_cell_squared, RkScheme scheme) {
    if (!(steps_per_cell_squared > 0.0)) throw std::invalid_argument("StepPolicy: coefficient must be positive");
    StepPolicy p;
    p.scheme = scheme;
    p.rule = DtRule::CellsSquared;
    p.coefficient = steps_per_cell_squared;
    return p;
}

double StepPolicy::dt(const Mesh1D& mesh, double final_time) const {
    switch (rule) {
        case DtRule::HMinSquared: return coefficient * mesh.h_min() * mesh.h_min();
        case DtRule::FixedCount: return final_time / static_cast<double>(steps);
        case DtRule::CellsSquared: {
            const double n = static_cast<double>(mesh.cells());
            return final_time / std::round(coefficient * n * n);
        }
    }
    return 0.0;
}

long long StepPolicy::step_count(const Mesh1D& mesh, double final_time) const {
    if (final_time <= 0.0) return 0;
    const long long n = static_cast<long long>(std::ceil(final_time / dt(mesh, final_time) - 1e-9));
    return std::max(n, 1LL);
}

BlowUp::BlowUp(long long step, double norm, double initial_norm)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "integrator blow-up at step " << step << ": ||u_h|| = " << norm << " (initial " << initial_norm
              << ")";
          return msg.str();
      }()),
      step_(step) {}

namespace {

class RkWorkspace {
public:
    RkWorkspace(const LdgOperator& op, const ButcherTableau& tab)
        : op_(op), tab_(tab), stage_k_(tab.stages(), std::vector<double>(op.size())),
          stage_u_(op.size()), q_(op.size()), carry_(op.size(), 0.0) {}

    // u <- u + dt sum_i b_i k_i
    void step(std::vector<double>& u, double t, double dt) {
        const std::size_t n = u.size();
        for (int i = 0; i < tab_.stages(); ++i) {
            const auto& row = tab_.a[i];
            for (std::size_t p = 0; p < n; ++p) {
                double acc = u[p];
                for (std::size_t r = 0; r < row.size(); ++r) acc += dt * row[r] * stage_k_[r][p];
                stage_u_[p] = acc;
            }
            op_.apply(stage_u_, t + tab_.c[i] * dt, stage_k_[i], q_);
        }
        // compensated update: the increment is tiny relative to u over many steps
        for (std::size_t p = 0; p < n; ++p) {
            double acc = 0.0;
            for (int i = 0; i < tab_.stages(); ++i) acc += tab_.b[i] * stage_k_[i][p];
            const double y = dt * acc - carry_[p];
            const double sum = u[p] + y;
            carry_[p] = (sum - u[p]) - y;
            u[p] = sum;
        }
    }

private:
    const LdgOperator& op_;
    const ButcherTableau& tab_;
    std::vector<std::vector<double>> stage_k_;
    std::vector<double> stage_u_;
    std::vector<double> q_;
    std::vector<double> carry_;
};

double coefficient_norm(const PiecewisePoly& shape, const std::vector<double>& c) {
    const Mesh1D& mesh = shape.mesh();
    const int modes = shape.modes();
    double sum = 0.0;
    for (int j = 0; j < mesh.cells(); ++j) {
        double cell_sum = 0.0;
        for (int m = 0; m < modes; ++m) {
            const double v = c[static_cast<std::size_t>(j) * modes + m];
            cell_sum += v * v / (2.0 * m + 1.0);
        }
        sum += cell_sum * mesh.width(j);
    }
    return std::sqrt(sum);
}

}  // namespace

PiecewisePoly rk_step(const LdgOperator& op, const PiecewisePoly& u, double t, double dt, RkScheme scheme) {
    RkWorkspace ws(op, tableau(scheme));
    std::vector<double> c(u.coeffs().begin(), u.coeffs().end());
    ws.step(c, t, dt);
    return PiecewisePoly(u.mesh_ptr(), u.degree(), std::move(c));
}

PiecewisePoly integrate(const LdgOperator& op, const PiecewisePoly& u0, double final_time,
                        const StepPolicy& policy) {
    if (final_time < 0.0) throw std::invalid_argument("integrate: final time must be non-negative");
    if (final_time == 0.0) return u0;
    const double dt = policy.dt(op.mesh(), final_time);
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: step size must be positive");

    const long long n_steps = policy.step_count(op.mesh(), final_time);

    RkWorkspace ws(op, tableau(policy.scheme));
    std::vector<double> u(u0.coeffs().begin(), u0.coeffs().end());
    const double initial_norm = coefficient_norm(u0, u);
    const double limit = 1e6 * std::max(initial_norm, 1.0);

    double t = 0.0;
    for (long long n = 0; n < n_steps; ++n) {
        const double h = (n + 1 == n_steps) ? final_time - t : dt;
        ws.step(u, t, h);
        t = (n + 1 == n_steps) ? final_time : (n + 1) * dt;
        if ((n & 15) == 15 || n + 1 == n_steps) {
            const double norm = coefficient_norm(u0, u);
            if (!std::isfinite(norm) || norm > limit) throw BlowUp(n + 1, norm, initial_norm);
        }
    }
    return PiecewisePoly(u0.mesh_ptr(), u0.degree(), std::move(u));
}

}  // namespace ldgsc
