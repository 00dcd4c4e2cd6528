#include "qcorr/correlate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace qcorr {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGssTol = 1e-6; // bracket width target, radians

double entropy_term(double e) {
    return (e > 0.0) ? -e * std::log2(e) : 0.0;
}

// Golden-section minimization of f on [lo, hi]; returns the argmin.
// Deterministic and derivative-free; the objectives here are smooth.
double golden_section(const std::function<double(double)>& f, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > kGssTol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

double binary_entropy(double p) { return entropy_term(p) + entropy_term(1.0 - p); }

std::pair<CMatrix, CMatrix> Scheme::operator_pair() const {
    if (!basis.has_value()) {
        throw std::invalid_argument("Scheme::operator_pair: basis not fixed");
    }
    if (kind == Kind::projective) return bloch_projectors(*basis);
    return weak_pair(strength, *basis);
}

double vn_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double e : rho.spectrum()) s += entropy_term(e);
    return s;
}

double mutual_info(const DensityMatrix& rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("mutual_info: expected a 4x4 density matrix");
    }
    return vn_entropy(partial_trace(rho, Subsystem::a)) +
           vn_entropy(partial_trace(rho, Subsystem::b)) - vn_entropy(rho);
}

double cond_entropy(const DensityMatrix& rho, const Scheme& scheme, Subsystem side) {
    const auto [m1, m2] = scheme.operator_pair();
    double s = 0.0;
    for (const CMatrix* m : {&m1, &m2}) {
        const MeasurementOutcome out =
            (side == Subsystem::b) ? measure_on_b(rho, *m) : measure_on_a(rho, *m);
        if (out.possible()) s += out.probability * vn_entropy(*out.conditional);
    }
    return s;
}

BasisOptimum minimize_over_basis(const std::function<double(const BlochBasis&)>& objective) {
    constexpr int kGrid = 61;
    constexpr double kThetaStep = kPi / (kGrid - 1);
    constexpr double kPhiStep = 2.0 * kPi / kGrid; // [0, 2pi), endpoint excluded

    double best_val = objective(BlochBasis{0.0, 0.0});
    double best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        const double theta = i * kThetaStep;
        for (int j = 0; j < kGrid; ++j) {
            const double phi = j * kPhiStep;
            if (i == 0 && j == 0) continue;
            const double val = objective(BlochBasis{theta, phi});
            if (std::tie(val, theta, phi) < std::tie(best_val, best_theta, best_phi)) {
                best_val = val;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // Coordinate-wise refinement around the winning cell. phi may leave
    // [0, 2pi) during the search; the objective is 2pi-periodic there.
    double theta = best_theta, phi = best_phi;
    for (int pass = 0; pass < 3; ++pass) {
        theta = golden_section(
            [&](double t) { return objective(BlochBasis{t, phi}); },
            std::max(0.0, theta - kThetaStep), std::min(kPi, theta + kThetaStep));
        phi = golden_section(
            [&](double p) { return objective(BlochBasis{theta, p}); },
            phi - kPhiStep, phi + kPhiStep);
    }

    BasisOptimum opt;
    opt.argmin = BlochBasis{theta, phi};
    opt.min = objective(opt.argmin);
    if (best_val < opt.min) { // refinement never hurts, but keep strictly the best seen
        opt.argmin = BlochBasis{best_theta, best_phi};
        opt.min = best_val;
    }
    return opt;
}

ClassicalCorr classical_corr(const DensityMatrix& rho, const Scheme& scheme, Subsystem side) {
    const Subsystem surviving = (side == Subsystem::b) ? Subsystem::a : Subsystem::b;
    const double marginal_entropy = vn_entropy(partial_trace(rho, surviving));

    ClassicalCorr out;
    if (scheme.optimize()) {
        const BasisOptimum opt = minimize_over_basis(
            [&](const BlochBasis& b) { return cond_entropy(rho, scheme.at(b), side); });
        out.j = marginal_entropy - opt.min;
        out.argmin_basis = opt.argmin;
    } else {
        out.j = marginal_entropy - cond_entropy(rho, scheme, side);
        out.argmin_basis = *scheme.basis;
    }
    return out;
}

CorrelationReport discord(const DensityMatrix& rho, const Scheme& scheme, Subsystem side) {
    CorrelationReport rep;
    rep.mutual_info = mutual_info(rho);
    const ClassicalCorr cc = classical_corr(rho, scheme, side);
    rep.classical_corr = cc.j;
    rep.argmin_basis = cc.argmin_basis;
    rep.discord = rep.mutual_info - rep.classical_corr;
    return rep;
}

} // namespace qcorr
