#pragma once

#include <cmath>
#include <optional>
#include <utility>

#include "qcorr/cmatrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Strength x of a two-outcome weak measurement. The derived weights
/// X- = (1 - tanh x)/2 and X+ = (1 + tanh x)/2 always sum to 1; x = 0
/// is no measurement and |x| -> infinity the projective limit.
struct WeakStrength {
    double x = 0.0;

    explicit WeakStrength(double strength);
    WeakStrength() = default;

    double x_minus() const { return 0.5 * (1.0 - std::tanh(x)); }
    double x_plus() const { return 0.5 * (1.0 + std::tanh(x)); }
};

/// Result of applying one operator of a pair: the outcome probability
/// and the state of the surviving (unmeasured) qubit. `conditional` is
/// empty when the probability falls below kProbFloor; entropy sums must
/// then skip the term (0 log 0 = 0 convention).
struct MeasurementOutcome {
    double probability = 0.0;
    std::optional<DensityMatrix> conditional;

    bool possible() const { return conditional.has_value(); }
};

/// Weak operator pair in the given basis:
///   M+ = sqrt(X-) P1 + sqrt(X+) P2   (the +x branch)
///   M- = sqrt(X+) P1 + sqrt(X-) P2   (the -x branch)
/// Completeness M+^2 + M-^2 = I holds by construction; a negative x
/// swaps the pair.
std::pair<CMatrix, CMatrix> weak_pair(const WeakStrength& x, const BlochBasis& b);

/// Embed a one-qubit operator on subsystem b (resp. a) of the pair:
/// I x m (resp. m x I).
CMatrix lift_to_b(const CMatrix& m);
CMatrix lift_to_a(const CMatrix& m);

/// Apply a one-qubit measurement operator to subsystem b:
///   probability  = Tr[(I x m)^dag (I x m) rho]
///   conditional  = Tr_b[(I x m) rho (I x m)^dag] / probability
MeasurementOutcome measure_on_b(const DensityMatrix& rho, const CMatrix& m);

/// Mirror image acting on subsystem a, conditioning the state of b.
MeasurementOutcome measure_on_a(const DensityMatrix& rho, const CMatrix& m);

} // namespace qcorr
