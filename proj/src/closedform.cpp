#include "qcorr/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcorr/correlate.hpp"

namespace qcorr {
namespace closedform {

namespace {

double xlog2(double v) { return (v > 0.0) ? v * std::log2(v) : 0.0; }

} // namespace

PureClosedForm pure_family(double lambda0, const WeakStrength& x, const BlochBasis& basis) {
    if (!(lambda0 >= 0.0 && lambda0 <= 1.0)) {
        throw std::invalid_argument("pure_family: lambda0 must lie in [0, 1]");
    }
    const double l0 = lambda0;
    const double l1 = 1.0 - lambda0;

    PureClosedForm f;
    f.discord = binary_entropy(l0);
    f.adv_projective = f.discord;

    const double cos_theta = std::cos(basis.theta);
    const double cosh_x = std::cosh(x.x);
    double weighted_cond = 0.0; // sum_s p(sx) H2(k1(sx))
    for (int s = 0; s < 2; ++s) {
        const double sign = (s == 0) ? 1.0 : -1.0;
        const double p = 0.5 * (1.0 - (l0 - l1) * std::tanh(sign * x.x) * cos_theta);
        double arg = 1.0 - l0 * l1 / (p * p * cosh_x * cosh_x);
        arg = std::clamp(arg, 0.0, 1.0);
        const double root = std::sqrt(arg);
        const double k1 = 0.5 * (1.0 + root);
        const double k2 = 0.5 * (1.0 - root);
        if (s == 0) {
            f.p_plus = p;
            f.k1_plus = k1;
            f.k2_plus = k2;
        } else {
            f.p_minus = p;
            f.k1_minus = k1;
            f.k2_minus = k2;
        }
        weighted_cond += p * binary_entropy(k1);
    }
    // adv_weak = H2(l0) - sum_s p(sx) [k1 log2 k1 + k2 log2 k2]
    f.adv_weak = f.discord + weighted_cond;
    return f;
}

double maxent_adv_weak(const WeakStrength& x) {
    // 2 - X- log2(2 X-) - X+ log2(2 X+), with 0 log 0 = 0.
    const auto term = [](double w) { return (w > 0.0) ? w * std::log2(2.0 * w) : 0.0; };
    return 2.0 - term(x.x_minus()) - term(x.x_plus());
}

BellDiagClosedForm belldiag_family(const BellDiagParams& c, const WeakStrength& x,
                                   const BlochBasis& basis) {
    for (double combo : c.eigenvalue_combinations()) {
        if (combo < -4.0 * kPsdTol) {
            throw std::invalid_argument("belldiag_family: unphysical correlation triple");
        }
    }
    BellDiagClosedForm f;
    f.c_max = std::max({std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)});
    f.cond_entropy_luo = binary_entropy(0.5 * (1.0 + f.c_max));

    // iq = (1/4) sum of u log2 u over the four eigenvalue combinations.
    double iq = 0.0;
    for (double combo : c.eigenvalue_combinations()) iq += xlog2(std::max(combo, 0.0));
    iq *= 0.25;

    // Projective: subtract the Luo classical correlation 1 - S_luo.
    f.adv_projective = iq - (1.0 - f.cond_entropy_luo);

    // Weak at direction n: the conditional state of a is
    // (I -+ tanh(x) sum_j c_j n_j sigma_j)/2, so its eigenvalues carry
    // the norm of the componentwise product (c_j n_j), reducing to
    // |c_j| on the coordinate axes. Both branches carry probability 1/2.
    const auto n = basis.direction();
    const double g = std::sqrt(c.c1 * c.c1 * n[0] * n[0] + c.c2 * c.c2 * n[1] * n[1] +
                               c.c3 * c.c3 * n[2] * n[2]);
    const double t = std::tanh(x.x);
    f.lam1_plus = 0.5 * (1.0 + g * t);
    f.lam2_plus = 0.5 * (1.0 - g * t);
    f.lam1_minus = 0.5 * (1.0 - g * t);
    f.lam2_minus = 0.5 * (1.0 + g * t);
    const double weak_cond = 0.5 * (binary_entropy(f.lam1_plus) + binary_entropy(f.lam1_minus));
    f.adv_weak = iq - (1.0 - weak_cond);
    return f;
}

WernerClosedForm werner_family(double c, const WeakStrength& x) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw std::invalid_argument("werner_family: c must lie in [0, 1]");
    }
    WernerClosedForm f;
    f.adv_projective =
        0.25 * xlog2(1.0 + 3.0 * c) + 0.25 * xlog2(1.0 - c) - 0.5 * xlog2(1.0 + c);

    const double ct = c * std::tanh(x.x);
    f.adv_weak = 0.75 * xlog2(1.0 - c) + 0.25 * xlog2(1.0 + 3.0 * c) -
                 xlog2(0.5 * (1.0 - ct)) - xlog2(0.5 * (1.0 + ct)) - 1.0;
    return f;
}

} // namespace closedform
} // namespace qcorr
