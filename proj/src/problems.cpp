#include "ldgsc/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ldgsc {

ManufacturedTerm ManufacturedTerm::fourier(double sin_amplitude, double cos_amplitude, double wavenumber) {
    ManufacturedTerm t;
    t.kind = Kind::Fourier;
    t.sin_amplitude = sin_amplitude;
    t.cos_amplitude = cos_amplitude;
    t.wavenumber = wavenumber;
    return t;
}

ManufacturedTerm ManufacturedTerm::exponential(double amplitude, double shift) {
    ManufacturedTerm t;
    t.kind = Kind::Exponential;
    t.sin_amplitude = amplitude;
    t.shift = shift;
    return t;
}

double ManufacturedTerm::dx(int n, double x, double t) const {
    if (kind == Kind::Exponential) return sin_amplitude * std::exp(x + t + shift);
    const double w = wavenumber;
    const double s = std::sin(w * x);
    const double c = std::cos(w * x);
    // d^n sin = sin, cos, -sin, -cos; d^n cos = cos, -sin, -cos, sin
    double value = 0.0;
    switch (n % 4) {
        case 0: value = sin_amplitude * s + cos_amplitude * c; break;
        case 1: value = sin_amplitude * c - cos_amplitude * s; break;
        case 2: value = -sin_amplitude * s - cos_amplitude * c; break;
        case 3: value = -sin_amplitude * c + cos_amplitude * s; break;
    }
    return std::pow(w, n) * std::exp(-w * w * t) * value;
}

ExactSolution::ExactSolution(std::vector<ManufacturedTerm> terms) : terms_(std::move(terms)) {}

double ExactSolution::dx(int n, double x, double t) const {
    double sum = 0.0;
    for (const auto& term : terms_) sum += term.dx(n, x, t);
    return sum;
}

SmoothFn ExactSolution::at_time(double t, int max_order) const {
    return SmoothFn([terms = terms_, t](int n, double x) {
        double sum = 0.0;
        for (const auto& term : terms) sum += term.dx(n, x, t);
        return sum;
    }, max_order);
}

BoundaryCondition ProblemSpec::boundary_condition() const {
    constexpr double right_end = 2.0 * std::numbers::pi;
    switch (boundary) {
        case BoundaryKind::Periodic: return BoundaryCondition::periodic();
        case BoundaryKind::DirichletLeftNeumannRight:
            return BoundaryCondition::dirichlet_left_neumann_right(
                [u = exact](double t) { return u.dx(0, 0.0, t); },
                [u = exact](double t) { return u.dx(1, right_end, t); });
        case BoundaryKind::NeumannLeftDirichletRight:
            return BoundaryCondition::neumann_left_dirichlet_right(
                [u = exact](double t) { return u.dx(1, 0.0, t); },
                [u = exact](double t) { return u.dx(0, right_end, t); });
    }
    throw std::logic_error("unreachable boundary kind");
}

void ProblemSpec::validate() const {
    if (exact.terms().empty()) throw std::invalid_argument("problem '" + name + "' has no solution terms");
    if (!(final_time >= 0.0)) throw std::invalid_argument("problem '" + name + "': final time must be >= 0");
    if (boundary != BoundaryKind::Periodic) return;
    for (const auto& term : exact.terms()) {
        if (term.kind == ManufacturedTerm::Kind::Exponential && term.sin_amplitude != 0.0)
            throw std::invalid_argument("problem '" + name + "': exponential terms are not periodic");
        if (term.kind == ManufacturedTerm::Kind::Fourier && term.wavenumber != std::round(term.wavenumber))
            throw std::invalid_argument("problem '" + name + "': periodic wavenumbers must be integers");
    }
}

ProblemSpec example_periodic() {
    return {"example1", ExactSolution({ManufacturedTerm::fourier(1.0, 0.0, 1.0)}), BoundaryKind::Periodic, 1.0};
}

ProblemSpec example_mixed() {
    return {"example2",
            ExactSolution({ManufacturedTerm::fourier(0.0, 1.0, 1.0), ManufacturedTerm::exponential(1.0, 1.0)}),
            BoundaryKind::NeumannLeftDirichletRight, 1.0};
}

ProblemSpec manufactured_problem(std::string name, std::vector<ManufacturedTerm> terms, BoundaryKind boundary,
                                 double final_time) {
    ProblemSpec p{std::move(name), ExactSolution(std::move(terms)), boundary, final_time};
    p.validate();
    return p;
}

}  // namespace ldgsc
