#include "qcorr/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcorr {

CMatrix::CMatrix(std::size_t dim, std::initializer_list<cplx> entries) : CMatrix(dim) {
    if (entries.size() != dim * dim) {
        throw std::invalid_argument("CMatrix: entry count does not match dim^2");
    }
    std::copy(entries.begin(), entries.end(), a_.begin());
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch in +");
    CMatrix r(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch in -");
    CMatrix r(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch in *");
    CMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                r(i, j) += aik * o(k, j);
            }
        }
    }
    return r;
}

CMatrix CMatrix::operator*(cplx s) const {
    CMatrix r(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx CMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CMatrix: dimension mismatch in diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) m = std::max(m, std::abs(a_[k] - o.a_[k]));
    return m;
}

double CMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

std::string CMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const cplx& z = (*this)(i, j);
            os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
            os << (j + 1 == dim_ ? "\n" : " ");
        }
    }
    return os.str();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    if (da * db > 4) {
        throw std::invalid_argument("kron: result dimension exceeds 4 (out of scope)");
    }
    CMatrix r(da * db);
    for (std::size_t i1 = 0; i1 < da; ++i1)
        for (std::size_t j1 = 0; j1 < da; ++j1)
            for (std::size_t i2 = 0; i2 < db; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2)
                    r(i1 * db + i2, j1 * db + j2) = a(i1, j1) * b(i2, j2);
    return r;
}

namespace {

// One complex Jacobi rotation zeroing h(p,q). U acts on columns (p,q):
//   U = [[c, s*e^{i alpha}], [-s*e^{-i alpha}, c]],  e^{i alpha} = h(p,q)/|h(p,q)|.
// Updates h <- U^dag h U and accumulates v <- v U.
void jacobi_rotate(CMatrix& h, CMatrix& v, std::size_t p, std::size_t q) {
    const cplx hpq = h(p, q);
    const double r = std::abs(hpq);
    if (r == 0.0) return;
    const cplx phase = hpq / r;

    const double app = h(p, p).real();
    const double aqq = h(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = h.dim();
    const cplx up = c;                      // U(p,p)
    const cplx uq = s * phase;              // U(p,q)
    const cplx lq = -s * std::conj(phase);  // U(q,p)

    // Column update h <- h U, then row update h <- U^dag h.
    for (std::size_t i = 0; i < n; ++i) {
        const cplx hip = h(i, p), hiq = h(i, q);
        h(i, p) = hip * up + hiq * lq;
        h(i, q) = hip * uq + hiq * c;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const cplx hpj = h(p, j), hqj = h(q, j);
        h(p, j) = std::conj(up) * hpj + std::conj(lq) * hqj;
        h(q, j) = std::conj(uq) * hpj + c * hqj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = vip * up + viq * lq;
        v(i, q) = vip * uq + viq * c;
    }

    // The rotation annihilates this pair analytically; pin it to avoid
    // rounding residue feeding later sweeps.
    h(p, q) = 0.0;
    h(q, p) = 0.0;
}

double max_offdiag(const CMatrix& h) {
    double m = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = i + 1; j < h.dim(); ++j) m = std::max(m, std::abs(h(i, j)));
    return m;
}

} // namespace

EigSystem herm_eig(const CMatrix& input) {
    if (input.hermiticity_defect() > kHermTol) {
        throw std::invalid_argument("herm_eig: input not Hermitian within 1e-10");
    }
    const std::size_t n = input.dim();

    // Work on the symmetrized matrix so diagonals are exactly real.
    CMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    CMatrix v = CMatrix::identity(n);
    constexpr double kOffTol = 1e-14;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && max_offdiag(h) >= kOffTol; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(h, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return h(i, i).real() < h(j, j).real(); });

    EigSystem es;
    es.values.resize(n);
    es.vectors = CMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = h(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
    }
    return es;
}

DensityDiagnostics validate_density(const CMatrix& m) {
    if (m.dim() != 2 && m.dim() != 4) {
        throw std::invalid_argument("validate_density: dim must be 2 or 4");
    }
    DensityDiagnostics d;
    d.hermiticity_defect = m.hermiticity_defect();
    d.trace_defect = std::abs(m.trace() - cplx{1.0, 0.0});

    // Spectrum of the Hermitian part; for near-Hermitian inputs this is
    // the defect that matters for positivity.
    CMatrix h(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    d.min_eigenvalue = herm_eig(h).values.front();
    return d;
}

DensityMatrix::DensityMatrix(CMatrix m) : mat_(std::move(m)) {
    if (mat_.dim() != 2 && mat_.dim() != 4) {
        throw std::invalid_argument("DensityMatrix: dim must be 2 or 4");
    }
    DensityDiagnostics d;
    d.hermiticity_defect = mat_.hermiticity_defect();
    d.trace_defect = std::abs(mat_.trace() - cplx{1.0, 0.0});
    if (d.hermiticity_defect <= kHermTol) {
        spectrum_ = herm_eig(mat_).values;
        d.min_eigenvalue = spectrum_.front();
    }
    if (!d.acceptable()) {
        std::ostringstream os;
        os << "DensityMatrix: validation failed (hermiticity defect " << d.hermiticity_defect
           << ", trace defect " << d.trace_defect << ", min eigenvalue " << d.min_eigenvalue
           << ")";
        throw std::invalid_argument(os.str());
    }
    for (double& e : spectrum_) e = std::clamp(e, 0.0, 1.0);
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("partial_trace: expected a 4x4 density matrix");
    }
    CMatrix r(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            cplx sum{0.0, 0.0};
            for (std::size_t k = 0; k < 2; ++k) {
                sum += (keep == Subsystem::a) ? rho(i * 2 + k, j * 2 + k)
                                              : rho(k * 2 + i, k * 2 + j);
            }
            r(i, j) = sum;
        }
    }
    return DensityMatrix(r);
}

} // namespace qcorr
