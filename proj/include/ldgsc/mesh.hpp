#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ldgsc {

enum class MeshKind { Uniform, Split };

std::string to_string(MeshKind kind);
MeshKind mesh_kind_from_string(const std::string& name);

/// A partition 0 = x_{1/2} < ... < x_{N+1/2} of the computational interval.
/// Cells are indexed 0..N-1 and nodes 0..N (node i is x_{i+1/2}).
class Mesh1D {
public:
    /// Throws std::invalid_argument unless the boundaries are strictly
    /// increasing with at least two entries.
    explicit Mesh1D(std::vector<double> boundaries);

    int cells() const { return static_cast<int>(widths_.size()); }
    int nodes() const { return cells() + 1; }
    std::span<const double> boundaries() const { return boundaries_; }

    double node(int i) const { return boundaries_[i]; }
    double left(int j) const { return boundaries_[j]; }
    double right(int j) const { return boundaries_[j + 1]; }
    double center(int j) const { return 0.5 * (boundaries_[j] + boundaries_[j + 1]); }
    double width(int j) const { return widths_[j]; }
    double half_width(int j) const { return 0.5 * widths_[j]; }

    double length() const { return boundaries_.back() - boundaries_.front(); }
    double h_max() const { return h_max_; }
    double h_min() const { return h_min_; }
    /// Smallest c with h_max <= c h_j for every cell.
    double quasi_uniformity() const { return h_max_ / h_min_; }

    /// Physical coordinate of reference point s in cell j.
    double to_physical(int j, double s) const { return center(j) + half_width(j) * s; }

    bool operator==(const Mesh1D& other) const { return boundaries_ == other.boundaries_; }

private:
    std::vector<double> boundaries_;
    std::vector<double> widths_;
    double h_max_ = 0.0;
    double h_min_ = 0.0;
};

/// Uniform: N equal cells on [0, 2pi]. Split: N/2 equal cells on [0, 3pi/4]
/// followed by N/2 equal cells on [3pi/4, 2pi] (N must be even).
std::shared_ptr<const Mesh1D> build_mesh(MeshKind kind, int cells);

enum class FluxChoice {
    Alt1,  ///< u_hat = u^-, q_hat = q^+
    Alt2,  ///< u_hat = u^+, q_hat = q^-
};

std::string to_string(FluxChoice flux);
FluxChoice flux_from_string(const std::string& name);

enum class BoundaryKind { Periodic, DirichletLeftNeumannRight, NeumannLeftDirichletRight };

std::string to_string(BoundaryKind kind);
BoundaryKind boundary_kind_from_string(const std::string& name);

/// Boundary data. For DirichletLeftNeumannRight, g0(t) = u(0,t) and
/// g1(t) = u_x(L,t); for NeumannLeftDirichletRight, g0(t) = u_x(0,t) and
/// g1(t) = u(L,t).
struct BoundaryCondition {
    BoundaryKind kind = BoundaryKind::Periodic;
    std::function<double(double)> g0;
    std::function<double(double)> g1;

    static BoundaryCondition periodic();
    static BoundaryCondition dirichlet_left_neumann_right(std::function<double(double)> g0,
                                                          std::function<double(double)> g1);
    static BoundaryCondition neumann_left_dirichlet_right(std::function<double(double)> g0,
                                                          std::function<double(double)> g1);
};

/// Alt1 admits periodic or Dirichlet-left/Neumann-right; Alt2 admits periodic
/// or Neumann-left/Dirichlet-right. Throws std::invalid_argument otherwise.
void validate_pairing(FluxChoice flux, BoundaryKind kind);

}  // namespace ldgsc
