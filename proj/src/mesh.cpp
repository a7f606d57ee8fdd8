#include "ldgsc/mesh.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace ldgsc {

Mesh1D::Mesh1D(std::vector<double> boundaries) : boundaries_(std::move(boundaries)) {
    if (boundaries_.size() < 2) throw std::invalid_argument("Mesh1D: need at least one cell");
    widths_.reserve(boundaries_.size() - 1);
    for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i) {
        const double h = boundaries_[i + 1] - boundaries_[i];
        if (!(h > 0.0)) throw std::invalid_argument("Mesh1D: boundaries must be strictly increasing");
        widths_.push_back(h);
    }
    h_max_ = *std::max_element(widths_.begin(), widths_.end());
    h_min_ = *std::min_element(widths_.begin(), widths_.end());
}

std::shared_ptr<const Mesh1D> build_mesh(MeshKind kind, int cells) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (cells < 2) throw std::invalid_argument("build_mesh: N must be >= 2");
    std::vector<double> x(static_cast<std::size_t>(cells) + 1);
    if (kind == MeshKind::Uniform) {
        for (int i = 0; i <= cells; ++i) x[i] = two_pi * i / cells;
        x[cells] = two_pi;
    } else {
        if (cells % 2 != 0) throw std::invalid_argument("build_mesh: split mesh needs even N");
        const int half = cells / 2;
        const double mid = 0.75 * std::numbers::pi;
        for (int i = 0; i <= half; ++i) x[i] = mid * i / half;
        for (int i = 1; i <= half; ++i) x[half + i] = mid + (two_pi - mid) * i / half;
        x[half] = mid;
        x[cells] = two_pi;
    }
    return std::make_shared<const Mesh1D>(std::move(x));
}

std::string to_string(MeshKind kind) { return kind == MeshKind::Uniform ? "uniform" : "split"; }

MeshKind mesh_kind_from_string(const std::string& name) {
    if (name == "uniform") return MeshKind::Uniform;
    if (name == "split") return MeshKind::Split;
    throw std::invalid_argument("unknown mesh kind '" + name + "' (expected uniform|split)");
}

std::string to_string(FluxChoice flux) { return flux == FluxChoice::Alt1 ? "alt1" : "alt2"; }

FluxChoice flux_from_string(const std::string& name) {
    if (name == "alt1") return FluxChoice::Alt1;
    if (name == "alt2") return FluxChoice::Alt2;
    throw std::invalid_argument("unknown flux '" + name + "' (expected alt1|alt2)");
}

std::string to_string(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::Periodic: return "periodic";
        case BoundaryKind::DirichletLeftNeumannRight: return "dirichlet-neumann";
        case BoundaryKind::NeumannLeftDirichletRight: return "neumann-dirichlet";
    }
    return "?";
}

BoundaryKind boundary_kind_from_string(const std::string& name) {
    if (name == "periodic") return BoundaryKind::Periodic;
    if (name == "dirichlet-neumann") return BoundaryKind::DirichletLeftNeumannRight;
    if (name == "neumann-dirichlet") return BoundaryKind::NeumannLeftDirichletRight;
    throw std::invalid_argument("unknown boundary kind '" + name +
                                "' (expected periodic|dirichlet-neumann|neumann-dirichlet)");
}

BoundaryCondition BoundaryCondition::periodic() { return {}; }

BoundaryCondition BoundaryCondition::dirichlet_left_neumann_right(std::function<double(double)> g0,
                                                                  std::function<double(double)> g1) {
    return {BoundaryKind::DirichletLeftNeumannRight, std::move(g0), std::move(g1)};
}

BoundaryCondition BoundaryCondition::neumann_left_dirichlet_right(std::function<double(double)> g0,
                                                                  std::function<double(double)> g1) {
    return {BoundaryKind::NeumannLeftDirichletRight, std::move(g0), std::move(g1)};
}

void validate_pairing(FluxChoice flux, BoundaryKind kind) {
    if (kind == BoundaryKind::Periodic) return;
    if (flux == FluxChoice::Alt1 && kind == BoundaryKind::DirichletLeftNeumannRight) return;
    if (flux == FluxChoice::Alt2 && kind == BoundaryKind::NeumannLeftDirichletRight) return;
    throw std::invalid_argument("flux " + to_string(flux) + " cannot be paired with boundary " +
                                to_string(kind));
}

}  // namespace ldgsc
