#pragma once

#include "qcorr/measure.hpp"
#include "qcorr/states.hpp"

namespace qcorr {
namespace closedform {

/// Analytic quantities for the pure Schmidt family. The advantage under
/// the weak pair depends on the basis only through the two outcome
/// probabilities.
struct PureClosedForm {
    double discord = 0.0;        // = H2(lambda0), the projective discord
    double adv_projective = 0.0; // best projective advantage, = discord
    double p_plus = 0.0;         // outcome probabilities of the +-x pair
    double p_minus = 0.0;
    double k1_plus = 0.0;        // conditional eigenvalues per branch
    double k2_plus = 0.0;
    double k1_minus = 0.0;
    double k2_minus = 0.0;
    double adv_weak = 0.0;
};

struct BellDiagClosedForm {
    double cond_entropy_luo = 0.0; // min conditional entropy, = H2((1+c)/2)
    double adv_projective = 0.0;
    double lam1_plus = 0.0; // weak conditional eigenvalues per branch
    double lam2_plus = 0.0;
    double lam1_minus = 0.0;
    double lam2_minus = 0.0;
    double adv_weak = 0.0;
    double c_max = 0.0; // max(|c1|, |c2|, |c3|)
};

struct WernerClosedForm {
    double adv_projective = 0.0;
    double adv_weak = 0.0;
};

/// Pure family at one strength and basis:
///   p(+-x)    = (1 - (l0 - l1) tanh(+-x) cos theta) / 2
///   k_{1,2}   = (1 +- sqrt(1 - l0 l1 / (p^2 cosh^2 x))) / 2
///   adv_weak  = H2(l0) + sum_s p(sx) H2(k1(sx))
/// The square-root argument is clamped to [0, 1]; rounding can push it
/// just outside near l0 = 1/2, theta = pi/2, x = 0.
PureClosedForm pure_family(double lambda0, const WeakStrength& x, const BlochBasis& basis);

/// Best weak advantage of the maximally entangled state:
/// 2 - X- log2(2 X-) - X+ log2(2 X+), equivalently 1 + H2(X-).
double maxent_adv_weak(const WeakStrength& x);

/// Bell-diagonal family; the weak branch evaluates at the direction
/// n(theta, phi), the projective branch at the optimum (c = max |c_j|).
BellDiagClosedForm belldiag_family(const BellDiagParams& c, const WeakStrength& x,
                                   const BlochBasis& basis);

/// Werner family for c in [0, 1]; the weak formula absorbs the optimal
/// direction into c tanh(x). Matches belldiag_family((-c,-c,-c), x,
/// theta = 0).
WernerClosedForm werner_family(double c, const WeakStrength& x);

} // namespace closedform
} // namespace qcorr
