#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ldgsc/mesh.hpp"
#include "ldgsc/projection.hpp"

namespace ldgsc {

/// One closed-form solution of u_t = u_xx.
///   Fourier:     e^{-w^2 t} (a sin(w x) + b cos(w x))
///   Exponential: a e^{x + t + shift}
struct ManufacturedTerm {
    enum class Kind { Fourier, Exponential };
    Kind kind = Kind::Fourier;
    double sin_amplitude = 0.0;  // a (also the amplitude of an exponential term)
    double cos_amplitude = 0.0;  // b
    double wavenumber = 1.0;     // w
    double shift = 0.0;

    static ManufacturedTerm fourier(double sin_amplitude, double cos_amplitude, double wavenumber);
    static ManufacturedTerm exponential(double amplitude, double shift);

    /// d^n/dx^n of the term at (x, t).
    double dx(int n, double x, double t) const;
};

/// Exact solution with x-derivatives of every order.
class ExactSolution {
public:
    ExactSolution() = default;
    explicit ExactSolution(std::vector<ManufacturedTerm> terms);

    double dx(int n, double x, double t) const;
    double value(double x, double t) const { return dx(0, x, t); }

    /// x -> u(x, t) with derivatives up to max_order.
    SmoothFn at_time(double t, int max_order) const;

    const std::vector<ManufacturedTerm>& terms() const { return terms_; }

private:
    std::vector<ManufacturedTerm> terms_;
};

/// PDE data on [0, 2pi]: exact solution, boundary kind and final time. The
/// initial value and boundary data are read off the exact solution.
struct ProblemSpec {
    std::string name;
    ExactSolution exact;
    BoundaryKind boundary = BoundaryKind::Periodic;
    double final_time = 1.0;

    /// u0 with analytic derivatives up to max_order.
    SmoothFn initial_value(int max_order) const { return exact.at_time(0.0, max_order); }

    /// g0, g1 taken from the exact solution according to `boundary`.
    BoundaryCondition boundary_condition() const;

    /// Throws std::invalid_argument if a periodic problem is not 2pi-periodic.
    void validate() const;
};

/// u = e^{-t} sin x, periodic.
ProblemSpec example_periodic();

/// u = e^{-t} cos x + e^{x+t+1} with u_x(0,t) = e^{t+1} and
/// u(2pi,t) = e^{-t} + e^{2pi+t+1}.
ProblemSpec example_mixed();

ProblemSpec manufactured_problem(std::string name, std::vector<ManufacturedTerm> terms, BoundaryKind boundary,
                                 double final_time);

}  // namespace ldgsc
