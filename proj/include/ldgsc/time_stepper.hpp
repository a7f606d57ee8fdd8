#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ldgsc/ldg_operator.hpp"
#include "ldgsc/piecewise_poly.hpp"

namespace ldgsc {

enum class RkScheme {
    SspRk3,  ///< three-stage strong-stability-preserving, order 3
    Rk4,     ///< classical four-stage, order 4
    Rk5,     ///< Dormand-Prince fifth-order weights, seven stages
};

std::string to_string(RkScheme scheme);
RkScheme rk_scheme_from_string(const std::string& name);

/// Explicit Butcher tableau (strictly lower-triangular a).
struct ButcherTableau {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::vector<double> c;
    int order = 0;

    int stages() const { return static_cast<int>(b.size()); }
};

const ButcherTableau& tableau(RkScheme scheme);

enum class DtRule {
    HMinSquared,  ///< dt = coefficient * h_min^2
    FixedCount,   ///< dt = T / steps
    CellsSquared, ///< dt = T / (coefficient * N^2)
};

std::string to_string(DtRule rule);
DtRule dt_rule_from_string(const std::string& name);

struct StepPolicy {
    RkScheme scheme = RkScheme::Rk4;
    DtRule rule = DtRule::HMinSquared;
    double coefficient = 0.01;
    long long steps = 0;

    /// RK4 with 0.005 h_min^2 for k <= 3 and 0.002 h_min^2 for k >= 4.
    static StepPolicy default_for_degree(int k);
    static StepPolicy h_min_squared(double coefficient, RkScheme scheme = RkScheme::Rk4);
    static StepPolicy fixed_count(long long steps, RkScheme scheme = RkScheme::Rk4);
    static StepPolicy cells_squared(double steps_per_cell_squared, RkScheme scheme = RkScheme::Rk4);

    /// Nominal step size for a mesh and final time.
    double dt(const Mesh1D& mesh, double final_time) const;
    /// ceil(T / dt), at least 1 for T > 0.
    long long step_count(const Mesh1D& mesh, double final_time) const;
};

class BlowUp : public std::runtime_error {
public:
    BlowUp(long long step, double norm, double initial_norm);
    long long step() const { return step_; }

private:
    long long step_;
};

/// Advances u0 from t = 0 to final_time. Steps have the nominal size except
/// the last, which is shortened to land on final_time. Boundary data inside a
/// stage is evaluated at t_n + c_i dt. Throws BlowUp if ||u_h|| exceeds 1e6
/// times its initial value (or becomes non-finite).
PiecewisePoly integrate(const LdgOperator& op, const PiecewisePoly& u0, double final_time,
                        const StepPolicy& policy);

/// One explicit RK step of size dt starting at time t.
PiecewisePoly rk_step(const LdgOperator& op, const PiecewisePoly& u, double t, double dt, RkScheme scheme);

}  // namespace ldgsc
