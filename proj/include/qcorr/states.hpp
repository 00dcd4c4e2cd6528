#pragma once

#include <array>
#include <utility>

#include "qcorr/cmatrix.hpp"

namespace qcorr {

/// Schmidt weight of a two-qubit pure state
/// sqrt(lambda0)|00> + sqrt(lambda1)|11>, lambda1 = 1 - lambda0.
struct PureSchmidtParams {
    double lambda0 = 0.5;
};

/// Correlation triple of a Bell-diagonal state
/// (I + sum_j c_j sigma_j x sigma_j) / 4. Physical iff all four
/// eigenvalue combinations (1 -c1-c2-c3), (1 +c1+c2-c3), (1 +c1-c2+c3),
/// (1 -c1+c2+c3) are nonnegative.
struct BellDiagParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    /// The four combinations in the fixed order above (each /4 is an
    /// eigenvalue of the state).
    std::array<double, 4> eigenvalue_combinations() const {
        return {1.0 - c1 - c2 - c3, 1.0 + c1 + c2 - c3, 1.0 + c1 - c2 + c3,
                1.0 - c1 + c2 + c3};
    }
};

/// Measurement direction on the Bloch sphere. Canonical domain is
/// theta in [0, pi], phi in [0, 2pi); trigonometric formulas extend
/// periodically, so out-of-range angles are accepted wherever only the
/// direction matters.
struct BlochBasis {
    double theta = 0.0;
    double phi = 0.0;

    std::array<double, 3> direction() const;
};

/// Rank-1 projector onto sqrt(lambda0)|00> + sqrt(lambda1)|11>.
DensityMatrix pure_schmidt(const PureSchmidtParams& p);

/// Bell-diagonal state; throws naming the violated eigenvalue
/// combination if the triple is unphysical.
DensityMatrix bell_diagonal(const BellDiagParams& c);

/// Werner state c|psi-><psi-| + (1-c) I/4 with the singlet
/// |psi-> = (|01> - |10>)/sqrt(2); physical for c in [-1/3, 1].
/// Equals bell_diagonal(-c, -c, -c).
DensityMatrix werner(double c);

/// Orthocomplete projector pair on one qubit:
/// P1 = |psi><psi| with |psi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>,
/// P2 = I - P1.
std::pair<CMatrix, CMatrix> bloch_projectors(const BlochBasis& b);

// Pauli matrices (for tests and channel constructions).
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

} // namespace qcorr
