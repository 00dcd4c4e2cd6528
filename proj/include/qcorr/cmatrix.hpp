#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;

// Structural tolerances used across the toolkit.
inline constexpr double kHermTol = 1e-10;   // max |H - H^dag| entry
inline constexpr double kTraceTol = 1e-10;  // |tr - 1|
inline constexpr double kPsdTol = 1e-10;    // eigenvalues >= -kPsdTol
inline constexpr double kEigClamp = 1e-12;  // clamp spectrum to [0,1] before entropy
inline constexpr double kProbFloor = 1e-14; // below this an outcome is impossible

// Which tensor factor of a two-qubit state. Subsystem a is the left
// (most-significant) factor: basis order |00>, |01>, |10>, |11>.
enum class Subsystem { a, b };

/// Dense complex square matrix, row-major. The toolkit only ever needs
/// 2x2 and 4x4 operators (plus d x d generalized Pauli construction),
/// so no effort is spent on large-dimension performance.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, cplx{0.0, 0.0}) {}
    CMatrix(std::size_t dim, std::initializer_list<cplx> entries);

    static CMatrix identity(std::size_t dim);
    static CMatrix zero(std::size_t dim) { return CMatrix(dim); }

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator*(cplx s) const;
    friend CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

    CMatrix adjoint() const;
    cplx trace() const;

    /// Largest entrywise |this - o|.
    double max_abs_diff(const CMatrix& o) const;
    /// Largest entrywise |this - this^dag| (0 iff Hermitian).
    double hermiticity_defect() const;

    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

/// Eigendecomposition of a Hermitian matrix: values ascending, vectors
/// the matching orthonormal columns of `vectors`.
struct EigSystem {
    std::vector<double> values;
    CMatrix vectors;
};

/// Defect measures of a candidate density matrix. Pure diagnostic;
/// callers compare against the kHermTol/kTraceTol/kPsdTol budget.
struct DensityDiagnostics {
    double hermiticity_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;

    bool acceptable() const {
        return hermiticity_defect <= kHermTol && trace_defect <= kTraceTol &&
               min_eigenvalue >= -kPsdTol;
    }
};

/// Tensor product. Rejects results larger than 4x4: two qubits is the
/// whole domain of this artifact.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Sweeps until the largest off-diagonal magnitude drops below 1e-14
/// (or 100 sweeps). Sizes here are 2x2/4x4, where Jacobi is fast and
/// bit-stable; no library solver is involved.
EigSystem herm_eig(const CMatrix& h);

DensityDiagnostics validate_density(const CMatrix& m);

/// Validated quantum state. Construction checks hermiticity, unit
/// trace, and positivity against the structural tolerances and throws
/// std::invalid_argument with the failing defect otherwise. The
/// spectrum found during validation is kept, so entropy evaluations
/// never re-diagonalize.
class DensityMatrix {
public:
    explicit DensityMatrix(CMatrix m);

    const CMatrix& mat() const { return mat_; }
    std::size_t dim() const { return mat_.dim(); }
    const cplx& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

    /// Spectrum clamped to [0, 1], ascending. This is what every
    /// entropy evaluation consumes.
    const std::vector<double>& spectrum() const { return spectrum_; }

private:
    CMatrix mat_;
    std::vector<double> spectrum_;
};

/// Reduced state of one qubit: keep=a traces out b and vice versa.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

} // namespace qcorr
