#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcorr/encode.hpp"
#include "qcorr/states.hpp"

namespace qcorr {
namespace driver {

enum class Family { pure, belldiag, werner };

Family family_from_name(const std::string& name);

/// One point in parameter space: the family plus every knob a
/// subcommand can fix or sweep.
struct FamilyPoint {
    Family family = Family::pure;
    double lambda0 = 0.5;          // pure
    BellDiagParams c{};            // belldiag
    double werner_c = 0.5;         // werner
    double x = 0.7;                // weak strength
    double theta = 0.0;
    double phi = 0.0;

    DensityMatrix state() const;
};

struct ReportOptions {
    FamilyPoint point;
    bool weak = false;     // projective otherwise
    bool optimize = false; // extremize over the measurement basis
};

/// Single-point report: correlation quantities of the state plus the
/// full advantage breakdown under the maximal Pauli encoding.
void run_report(const ReportOptions& opt, std::ostream& os);

struct SweepSpec {
    FamilyPoint point;
    std::string axis; // lambda0 | c | x | theta, as the family admits
    double start = 0.0;
    double stop = 1.0;
    int steps = 2;
};

/// Closed-form sweep along one axis; CSV columns <axis>,adv_proj,adv_weak.
void run_sweep(const SweepSpec& spec, std::ostream& os);

enum class FigureId { fig1, fig2, fig3, fig4 };

FigureId figure_from_name(const std::string& name);

/// Emit the data behind one of the four figures as CSV. Output is
/// deterministic and byte-identical across runs: fixed 12-significant-
/// digit formatting, '.' decimal separator, '\n' line endings. Any
/// non-finite cell aborts with the offending parameters.
void run_figure(FigureId id, std::ostream& os);

struct VerifyOptions {
    int grid = 50; // number of Bell-diagonal triples in the oracle grids
};

/// Cross-check the closed forms against the numeric density-matrix
/// pipeline on deterministic grids, plus the structural invariant
/// suites. Prints one line per check with its worst deviation; returns
/// true iff everything passed.
bool run_verify(const VerifyOptions& opt, std::ostream& os);

/// Deterministic physical Bell-diagonal triples (fixed-seed generator,
/// rejection-sampled against the tetrahedron constraint).
std::vector<BellDiagParams> sample_belldiag_triples(int count);

} // namespace driver
} // namespace qcorr
