#include "qcorr/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcorr {

std::array<double, 3> BlochBasis::direction() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

DensityMatrix pure_schmidt(const PureSchmidtParams& p) {
    if (!(p.lambda0 >= 0.0 && p.lambda0 <= 1.0)) {
        throw std::invalid_argument("pure_schmidt: lambda0 must lie in [0, 1]");
    }
    const double a0 = std::sqrt(p.lambda0);
    const double a1 = std::sqrt(1.0 - p.lambda0);
    const std::array<cplx, 4> psi = {a0, 0.0, 0.0, a1}; // amplitudes on |00>,|01>,|10>,|11>
    CMatrix r(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(i, j) = psi[i] * std::conj(psi[j]);
    return DensityMatrix(r);
}

DensityMatrix bell_diagonal(const BellDiagParams& c) {
    const auto combos = c.eigenvalue_combinations();
    static const char* kComboNames[4] = {"1 - c1 - c2 - c3", "1 + c1 + c2 - c3",
                                         "1 + c1 - c2 + c3", "1 - c1 + c2 + c3"};
    for (std::size_t k = 0; k < 4; ++k) {
        if (combos[k] < -4.0 * kPsdTol) {
            std::ostringstream os;
            os << "bell_diagonal: unphysical correlation triple, combination (" << kComboNames[k]
               << ") = " << combos[k] << " is negative";
            throw std::invalid_argument(os.str());
        }
    }
    CMatrix r = CMatrix::identity(4) * cplx{0.25, 0.0};
    const CMatrix terms[3] = {kron(pauli_x(), pauli_x()), kron(pauli_y(), pauli_y()),
                              kron(pauli_z(), pauli_z())};
    const double cs[3] = {c.c1, c.c2, c.c3};
    for (int j = 0; j < 3; ++j) r = r + terms[j] * cplx{0.25 * cs[j], 0.0};
    return DensityMatrix(r);
}

DensityMatrix werner(double c) {
    if (!(c >= -1.0 / 3.0 && c <= 1.0)) {
        throw std::invalid_argument("werner: c must lie in [-1/3, 1]");
    }
    const double s = 1.0 / std::sqrt(2.0);
    const std::array<cplx, 4> psi = {0.0, s, -s, 0.0}; // singlet (|01> - |10>)/sqrt(2)
    CMatrix r(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(i, j) = c * psi[i] * std::conj(psi[j]);
    for (std::size_t i = 0; i < 4; ++i) r(i, i) += 0.25 * (1.0 - c);
    return DensityMatrix(r);
}

std::pair<CMatrix, CMatrix> bloch_projectors(const BlochBasis& b) {
    if (!std::isfinite(b.theta) || !std::isfinite(b.phi)) {
        throw std::invalid_argument("bloch_projectors: angles must be finite");
    }
    const cplx a0 = std::cos(0.5 * b.theta);
    const cplx a1 = std::polar(1.0, b.phi) * std::sin(0.5 * b.theta);
    CMatrix p1(2);
    p1(0, 0) = a0 * std::conj(a0);
    p1(0, 1) = a0 * std::conj(a1);
    p1(1, 0) = a1 * std::conj(a0);
    p1(1, 1) = a1 * std::conj(a1);
    const CMatrix p2 = CMatrix::identity(2) - p1;
    return {p1, p2};
}

CMatrix pauli_x() { return CMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
CMatrix pauli_y() { return CMatrix(2, {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}); }
CMatrix pauli_z() { return CMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

} // namespace qcorr
