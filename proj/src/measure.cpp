#include "qcorr/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace qcorr {

WeakStrength::WeakStrength(double strength) : x(strength) {
    if (!std::isfinite(strength)) {
        throw std::invalid_argument("WeakStrength: x must be finite");
    }
}

std::pair<CMatrix, CMatrix> weak_pair(const WeakStrength& x, const BlochBasis& b) {
    const auto [p1, p2] = bloch_projectors(b);
    const double sm = std::sqrt(x.x_minus());
    const double sp = std::sqrt(x.x_plus());
    return {p1 * cplx{sm, 0.0} + p2 * cplx{sp, 0.0},
            p1 * cplx{sp, 0.0} + p2 * cplx{sm, 0.0}};
}

CMatrix lift_to_b(const CMatrix& m) { return kron(CMatrix::identity(2), m); }
CMatrix lift_to_a(const CMatrix& m) { return kron(m, CMatrix::identity(2)); }

namespace {

MeasurementOutcome measure_impl(const DensityMatrix& rho, const CMatrix& m, Subsystem side) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("measure: expected a 4x4 density matrix");
    }
    if (m.dim() != 2) {
        throw std::invalid_argument("measure: expected a 2x2 measurement operator");
    }
    const CMatrix op = (side == Subsystem::b) ? lift_to_b(m) : lift_to_a(m);
    const CMatrix sandwiched = op * rho.mat() * op.adjoint();

    MeasurementOutcome out;
    out.probability = sandwiched.trace().real();
    if (out.probability < kProbFloor) {
        out.probability = std::max(out.probability, 0.0);
        return out; // outcome impossible: conditional state undefined
    }

    CMatrix cond(2);
    const Subsystem keep = (side == Subsystem::b) ? Subsystem::a : Subsystem::b;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            cplx sum{0.0, 0.0};
            for (std::size_t k = 0; k < 2; ++k) {
                sum += (keep == Subsystem::a) ? sandwiched(i * 2 + k, j * 2 + k)
                                              : sandwiched(k * 2 + i, k * 2 + j);
            }
            cond(i, j) = sum / out.probability;
        }
    }
    out.conditional = DensityMatrix(cond);
    return out;
}

} // namespace

MeasurementOutcome measure_on_b(const DensityMatrix& rho, const CMatrix& m) {
    return measure_impl(rho, m, Subsystem::b);
}

MeasurementOutcome measure_on_a(const DensityMatrix& rho, const CMatrix& m) {
    return measure_impl(rho, m, Subsystem::a);
}

} // namespace qcorr
