#pragma once

#include <functional>
#include <optional>

#include "qcorr/cmatrix.hpp"
#include "qcorr/measure.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Measurement choice entering a correlation quantity: projective or
/// weak (with strength), in a fixed basis or extremized over the whole
/// Bloch sphere.
struct Scheme {
    enum class Kind { projective, weak };

    Kind kind = Kind::projective;
    WeakStrength strength;            // meaningful for weak only
    std::optional<BlochBasis> basis;  // nullopt = optimize

    bool optimize() const { return !basis.has_value(); }

    static Scheme projective_optimize() { return {Kind::projective, {}, std::nullopt}; }
    static Scheme projective_at(BlochBasis b) { return {Kind::projective, {}, b}; }
    static Scheme weak_optimize(WeakStrength x) { return {Kind::weak, x, std::nullopt}; }
    static Scheme weak_at(WeakStrength x, BlochBasis b) { return {Kind::weak, x, b}; }

    /// Same scheme pinned to one basis.
    Scheme at(BlochBasis b) const { return {kind, strength, b}; }

    /// The operator pair this scheme measures with (requires a fixed basis).
    std::pair<CMatrix, CMatrix> operator_pair() const;
};

/// Mutual information split into its classical and quantum parts for
/// one state under one measurement scheme. I = J + delta holds exactly
/// by construction.
struct CorrelationReport {
    double mutual_info = 0.0;
    double classical_corr = 0.0;
    double discord = 0.0;
    BlochBasis argmin_basis;
};

struct BasisOptimum {
    BlochBasis argmin;
    double min = 0.0;
};

/// Von Neumann entropy in bits: -sum e log2(e) over the spectrum
/// clamped to [0, 1], with 0 log 0 = 0.
double vn_entropy(const DensityMatrix& rho);

/// S(rho_a) + S(rho_b) - S(rho_ab).
double mutual_info(const DensityMatrix& rho);

/// Probability-weighted conditional entropy of the surviving qubit
/// over the scheme's two-outcome pair measured on `side`. Outcomes
/// below the probability floor contribute nothing.
double cond_entropy(const DensityMatrix& rho, const Scheme& scheme, Subsystem side);

/// Deterministic global minimizer over the (theta, phi) rectangle:
/// 61x61 coarse grid on [0, pi] x [0, 2pi), then coordinate-wise
/// golden-section refinement around the best cell until the bracket
/// widths drop below 1e-6 rad. Ties on the grid break lexicographically
/// by (value, theta, phi).
BasisOptimum minimize_over_basis(const std::function<double(const BlochBasis&)>& objective);

struct ClassicalCorr {
    double j = 0.0;
    BlochBasis argmin_basis;
};

/// J = S(marginal of the surviving side) - min_basis cond_entropy.
/// Fixed-basis schemes skip the optimization; weak schemes use the weak
/// conditional entropy in the same expression.
ClassicalCorr classical_corr(const DensityMatrix& rho, const Scheme& scheme, Subsystem side);

/// Full report: I, J and delta = I - J (the super discord when the
/// scheme is weak).
CorrelationReport discord(const DensityMatrix& rho, const Scheme& scheme, Subsystem side);

/// Shannon binary entropy in bits (0 log 0 = 0).
double binary_entropy(double p);

} // namespace qcorr
