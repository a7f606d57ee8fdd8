#pragma once

#include <memory>
#include <vector>

#include "ldgsc/legendre.hpp"
#include "ldgsc/mesh.hpp"
#include "ldgsc/piecewise_poly.hpp"
#include "ldgsc/projection.hpp"

namespace ldgsc {

/// Reference-interval chains built from L_k by alternating D_s^{-1} with the
/// two Gauss-Radau projections:
///
///   F_{1,1} = P^+ D^{-1} L_k,   Fbar_{1,i} = P^- D^{-1} F_{1,i},   F_{1,i+1} = P^+ D^{-1} Fbar_{1,i}
///   F_{2,1} = P^- D^{-1} L_k,   Fbar_{2,i} = P^+ D^{-1} F_{2,i},   F_{2,i+1} = P^- D^{-1} Fbar_{2,i}
///
/// F_{1,i} and F_{2,i} exist for i = 1..ceil(k/2), the barred members for
/// i = 1..floor(k/2). Vectors are indexed by i-1. The chains depend on k only.
struct FChain {
    int k = 0;
    std::vector<RefPoly> f1, f2;
    std::vector<RefPoly> f1_bar, f2_bar;

    /// Pair coefficients, indexed [i-1][m] for m = 0..k (entry 0 unused):
    ///   F_{1,i}    = sum_m a[m]     (L_m + L_{m-1})
    ///   F_{2,i}    = sum_m b[m]     (L_m - L_{m-1})
    ///   Fbar_{1,i} = sum_m beta[m]  (L_m - L_{m-1})
    ///   Fbar_{2,i} = sum_m gamma[m] (L_m + L_{m-1})
    std::vector<std::vector<double>> a, b, beta, gamma;
};

FChain build_f_chain(int k);

/// Writes p = sum_{m=1}^{k} c_m (L_m + sign L_{m-1}) and returns c (c[0] = 0).
/// `remainder` receives the part of mode 0 the pairing cannot absorb; it is
/// zero exactly when p vanishes at s = -sign.
std::vector<double> pair_coefficients(const RefPoly& p, int k, int sign, double* remainder = nullptr);

/// Time-derivative mode coefficients G_i, Q_i on every cell, indexed [i][j].
/// Alt1: G_i = bar deficiency of u0^{(2i)},   Q_i = tilde deficiency of u0^{(2i+1)}.
/// Alt2: G_i = tilde deficiency of u0^{(2i)}, Q_i = bar deficiency of u0^{(2i+1)}.
struct TimeModes {
    FluxChoice flux = FluxChoice::Alt1;
    int k = 0;
    std::vector<std::vector<double>> g;
    std::vector<std::vector<double>> q;

    int max_index() const { return static_cast<int>(g.size()) - 1; }
};

/// Computes indices 0..max_index (default ceil(k/2)). Needs u0 derivatives up
/// to order 2*max_index+1; throws MissingDerivative otherwise.
TimeModes time_mode_coefficients(const SmoothFn& u0, const Mesh1D& mesh, int k, FluxChoice flux,
                                 int max_index = -1);

/// Shifts every index down by one: the result holds the time derivatives of
/// the input coefficients (G_i -> G_{i+1}). Used to form d/dt of a correction.
TimeModes shifted(const TimeModes& modes);

struct CorrectionPair {
    PiecewisePoly w1;
    PiecewisePoly w2;
};

/// Correction functions W_1^l, W_2^l for 1 <= l <= k. Throws
/// std::invalid_argument when l is out of range or `modes` is too short.
CorrectionPair build_w(const FChain& chain, const TimeModes& modes, int l, FluxChoice flux,
                       std::shared_ptr<const Mesh1D> mesh);

struct CorrectionBundle {
    FluxChoice flux = FluxChoice::Alt1;
    int order = 0;
    TimeModes modes;
    CorrectionPair w;
};

CorrectionBundle build_correction(const SmoothFn& u0, std::shared_ptr<const Mesh1D> mesh, int k,
                                  int l, FluxChoice flux);

struct Interpolant {
    PiecewisePoly u;
    PiecewisePoly q;
};

/// The corrected interpolant at t = 0 built from u0 and its derivatives:
///   Alt1: u = P^- u0 - W_2^l,  q = P^+ u0' - W_1^l
///   Alt2: u = P^+ u0 - W_2^l,  q = P^- u0' - W_1^l
Interpolant build_initial_interpolant(const SmoothFn& u0, std::shared_ptr<const Mesh1D> mesh, int k,
                                      int l, FluxChoice flux);

}  // namespace ldgsc
