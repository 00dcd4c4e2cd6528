// Acceptance suite: runs every headline result at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "qcorr/closedform.hpp"
#include "qcorr/correlate.hpp"
#include "qcorr/driver.hpp"
#include "qcorr/encode.hpp"

using namespace qcorr;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            failed_messages_.push_back(what);
        }
    }

    void expect_near(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol)) {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want << " +- " << tol;
            failed_messages_.push_back(os.str());
        }
    }

    ~Criterion() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        if (failed_messages_.empty()) {
            std::cout << "[PASS] criterion " << number_ << ": " << title_ << " (" << elapsed
                      << " ms)\n";
        } else {
            ++g_failures;
            std::cout << "[FAIL] criterion " << number_ << ": " << title_ << " (" << elapsed
                      << " ms)\n";
            for (const auto& m : failed_messages_) std::cout << "       " << m << "\n";
        }
    }

private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> failed_messages_;
};

std::vector<double> lambda_grid() {
    std::vector<double> v;
    for (int i = 1; i <= 19; ++i) v.push_back(0.05 * i);
    return v;
}

const std::vector<double> kXGrid = {0.1, 0.5, 1.0, 2.0, 4.0, 8.0};

std::vector<double> theta_grid() {
    std::vector<double> v;
    for (int i = 0; i <= 6; ++i) v.push_back(kPi * i / 6.0);
    return v;
}

std::vector<double> werner_grid() {
    std::vector<double> v;
    for (int i = 1; i <= 9; ++i) v.push_back(0.1 * i);
    return v;
}

BlochBasis optimal_direction(const BellDiagParams& c) {
    const double a1 = std::abs(c.c1), a2 = std::abs(c.c2), a3 = std::abs(c.c3);
    if (a3 >= a1 && a3 >= a2) return {0.0, 0.0};
    if (a1 >= a2) return {kPi / 2.0, 0.0};
    return {kPi / 2.0, kPi / 2.0};
}

} // namespace

int main() {
    const EncodingEnsemble enc = pauli_ensemble();
    const auto triples = driver::sample_belldiag_triples(50);
    const auto lambdas = lambda_grid();
    const auto thetas = theta_grid();
    const auto werner_cs = werner_grid();

    // 1. Maximally entangled state, projective scheme, maximal encoding:
    //    Iq = 2, Ic = 1, delta I = 1 within 1e-9.
    {
        Criterion c(1, "maximally entangled state yields Iq = 2, Ic = 1, delta I = 1");
        const AdvantageReport rep =
            advantage(pure_schmidt({0.5}), enc, Scheme::projective_optimize());
        c.expect_near(rep.iq, 2.0, 1e-9, "Iq");
        c.expect_near(rep.ic, 1.0, 1e-9, "Ic");
        c.expect_near(rep.delta_i, 1.0, 1e-9, "delta I");
    }

    // 2. Bell-diagonal (0.15, 0.03, 0.7): best projective advantage
    //    0.045 +- 0.001 from both routes.
    {
        Criterion c(2, "Bell-diagonal (0.15,0.03,0.7) projective advantage = 0.045 +- 0.001");
        const BellDiagParams bd{0.15, 0.03, 0.7};
        const double closed =
            closedform::belldiag_family(bd, WeakStrength(1.0), {0.0, 0.0}).adv_projective;
        const double numeric =
            advantage_delta_i(bell_diagonal(bd), enc, Scheme::projective_optimize());
        c.expect_near(closed, 0.045, 1e-3, "closed form");
        c.expect_near(numeric, 0.045, 1e-3, "numeric optimizer");
    }

    // 3. Oracle equivalence on deterministic grids: closed form vs the
    //    numeric pipeline within 1e-6 for every advantage and
    //    conditional-entropy quantity.
    {
        Criterion c(3, "closed form vs numeric pipeline < 1e-6 on the full grids");
        double worst = 0.0;
        for (double lam : lambdas) {
            const DensityMatrix rho = pure_schmidt({lam});
            const double proj_closed =
                closedform::pure_family(lam, WeakStrength(1.0), {0.0, 0.0}).adv_projective;
            worst = std::max(worst,
                             std::abs(advantage_delta_i(rho, enc, Scheme::projective_optimize()) -
                                      proj_closed));
            for (double x : kXGrid) {
                for (double theta : thetas) {
                    const WeakStrength w(x);
                    const BlochBasis basis{theta, 0.0};
                    const auto f = closedform::pure_family(lam, w, basis);
                    const Scheme scheme = Scheme::weak_at(w, basis);
                    worst = std::max(
                        worst, std::abs(advantage_delta_i(rho, enc, scheme) - f.adv_weak));
                    const double cond_closed = f.p_plus * binary_entropy(f.k1_plus) +
                                               f.p_minus * binary_entropy(f.k1_minus);
                    worst = std::max(worst, std::abs(cond_entropy(rho, scheme, Subsystem::b) -
                                                     cond_closed));
                }
            }
        }
        for (const auto& bd : triples) {
            const DensityMatrix rho = bell_diagonal(bd);
            const double proj_closed =
                closedform::belldiag_family(bd, WeakStrength(1.0), {0.0, 0.0}).adv_projective;
            worst = std::max(worst,
                             std::abs(advantage_delta_i(rho, enc, Scheme::projective_optimize()) -
                                      proj_closed));
            for (double x : kXGrid) {
                for (double theta : thetas) {
                    const WeakStrength w(x);
                    const BlochBasis basis{theta, 0.0};
                    const auto f = closedform::belldiag_family(bd, w, basis);
                    const Scheme scheme = Scheme::weak_at(w, basis);
                    worst = std::max(
                        worst, std::abs(advantage_delta_i(rho, enc, scheme) - f.adv_weak));
                    const double cond_closed =
                        0.5 * (binary_entropy(f.lam1_plus) + binary_entropy(f.lam1_minus));
                    worst = std::max(worst, std::abs(cond_entropy(rho, scheme, Subsystem::b) -
                                                     cond_closed));
                }
            }
        }
        for (double wc : werner_cs) {
            const DensityMatrix rho = werner(wc);
            const double proj_closed =
                closedform::werner_family(wc, WeakStrength(1.0)).adv_projective;
            worst = std::max(worst,
                             std::abs(advantage_delta_i(rho, enc, Scheme::projective_optimize()) -
                                      proj_closed));
            for (double x : kXGrid) {
                const WeakStrength w(x);
                worst = std::max(
                    worst, std::abs(advantage_delta_i(rho, enc, Scheme::weak_at(w, {0.0, 0.0})) -
                                    closedform::werner_family(wc, w).adv_weak));
            }
        }
        c.expect(worst < 1e-6, "worst deviation " + std::to_string(worst) + " >= 1e-6");
    }

    // 4. Limits: weak advantage 2 at x = 0 for the maximally entangled
    //    state; projective limit within 1e-3 at x = 10 for all families.
    {
        Criterion c(4, "x -> 0 and x -> 10 limits");
        c.expect_near(closedform::maxent_adv_weak(WeakStrength(0.0)), 2.0, 1e-9,
                      "maxent weak advantage at x = 0");
        const WeakStrength x10(10.0);
        for (double lam : lambdas) {
            const auto f = closedform::pure_family(lam, x10, {0.0, 0.0});
            c.expect(std::abs(f.adv_weak - f.adv_projective) < 1e-3,
                     "pure family gap at lambda0 = " + std::to_string(lam));
        }
        for (const auto& bd : triples) {
            const auto f = closedform::belldiag_family(bd, x10, optimal_direction(bd));
            c.expect(std::abs(f.adv_weak - f.adv_projective) < 1e-3,
                     "belldiag gap at c = (" + std::to_string(bd.c1) + "," +
                         std::to_string(bd.c2) + "," + std::to_string(bd.c3) + ")");
        }
        for (double wc : werner_cs) {
            const auto f = closedform::werner_family(wc, x10);
            c.expect(std::abs(f.adv_weak - f.adv_projective) < 1e-3,
                     "werner gap at c = " + std::to_string(wc));
        }
    }

    // 5. Ordering and monotonicity of the weak advantage in x.
    {
        Criterion c(5, "weak >= projective everywhere; weak nonincreasing in x");
        const auto scan = [&](const std::string& label, auto adv_at) {
            double prev = std::numeric_limits<double>::infinity();
            for (double x : kXGrid) {
                const auto [proj, weak] = adv_at(x);
                c.expect(weak >= proj - 1e-9, label + ": weak < projective at x = " +
                                                  std::to_string(x));
                c.expect(weak <= prev + 1e-12,
                         label + ": weak increased at x = " + std::to_string(x));
                prev = weak;
            }
        };
        for (double lam : lambdas) {
            for (double theta : thetas) {
                scan("pure lambda0=" + std::to_string(lam), [&](double x) {
                    const auto f =
                        closedform::pure_family(lam, WeakStrength(x), {theta, 0.0});
                    return std::pair{f.adv_projective, f.adv_weak};
                });
            }
        }
        for (const auto& bd : triples) {
            for (double theta : thetas) {
                scan("belldiag", [&](double x) {
                    const auto f =
                        closedform::belldiag_family(bd, WeakStrength(x), {theta, 0.0});
                    return std::pair{f.adv_projective, f.adv_weak};
                });
            }
        }
        for (double wc : werner_cs) {
            scan("werner c=" + std::to_string(wc), [&](double x) {
                const auto f = closedform::werner_family(wc, WeakStrength(x));
                return std::pair{f.adv_projective, f.adv_weak};
            });
        }
    }

    // 6. Sandwich under maximal encoding: nothing survives the channel
    //    and the advantage equals the discord consumed.
    {
        Criterion c(6, "maximal encoding: J~ < 1e-9, delta~ < 1e-9, |delta I - delta d| < 1e-8");
        const auto probe = [&](const DensityMatrix& rho, const Scheme& scheme,
                               const std::string& label) {
            const AdvantageReport rep = advantage(rho, enc, scheme);
            c.expect(std::abs(rep.j_tilde) < 1e-9, label + ": J~ = " +
                                                       std::to_string(rep.j_tilde));
            c.expect(std::abs(rep.delta_tilde) < 1e-9,
                     label + ": delta~ = " + std::to_string(rep.delta_tilde));
            c.expect(std::abs(rep.delta_i - rep.delta_discord) < 1e-8,
                     label + ": |delta I - delta discord| = " +
                         std::to_string(std::abs(rep.delta_i - rep.delta_discord)));
        };
        const Scheme weak07 = Scheme::weak_at(WeakStrength(0.7), {0.0, 0.0});
        for (double lam : {0.25, 0.5, 0.8}) {
            probe(pure_schmidt({lam}), Scheme::projective_optimize(), "pure projective");
            probe(pure_schmidt({lam}), weak07, "pure weak");
        }
        probe(bell_diagonal({0.15, 0.03, 0.7}), Scheme::projective_optimize(),
              "belldiag projective");
        probe(bell_diagonal({0.15, 0.03, 0.7}), weak07, "belldiag weak");
        for (double wc : {0.4, 0.8}) {
            probe(werner(wc), Scheme::projective_optimize(), "werner projective");
            probe(werner(wc), weak07, "werner weak");
        }
    }

    // 7. Luo conditional entropy: numeric basis minimization matches the
    //    closed form with c = max |c_j| on the triples.
    {
        Criterion c(7, "Luo minimum conditional entropy < 1e-6 on 50 triples");
        double worst = 0.0;
        for (const auto& bd : triples) {
            const DensityMatrix rho = bell_diagonal(bd);
            const BasisOptimum opt = minimize_over_basis([&](const BlochBasis& b) {
                return cond_entropy(rho, Scheme::projective_at(b), Subsystem::b);
            });
            const double cmax = std::max({std::abs(bd.c1), std::abs(bd.c2), std::abs(bd.c3)});
            worst = std::max(worst, std::abs(opt.min - binary_entropy(0.5 * (1.0 + cmax))));
        }
        c.expect(worst < 1e-6, "worst deviation " + std::to_string(worst) + " >= 1e-6");
    }

    // 8. The crossover gap at x = 2.7 for the maximally entangled state
    //    sits between 0.02 and 0.05 (analytically H2(X-(2.7))).
    {
        Criterion c(8, "maxent weak-projective gap at x = 2.7 lies in (0.02, 0.05)");
        const double gap = closedform::maxent_adv_weak(WeakStrength(2.7)) - 1.0;
        c.expect(gap < 0.05, "gap " + std::to_string(gap) + " >= 0.05");
        c.expect(gap > 0.02, "gap " + std::to_string(gap) + " <= 0.02");
        c.expect_near(gap, binary_entropy(WeakStrength(2.7).x_minus()), 1e-12,
                      "gap vs H2(X-)");
    }

    // 9. Structural suites on every constructed object.
    {
        Criterion c(9, "structural invariants hold on every constructed object");
        std::vector<DensityMatrix> states;
        for (double lam : lambdas) states.push_back(pure_schmidt({lam}));
        for (const auto& bd : triples) states.push_back(bell_diagonal(bd));
        for (double wc : werner_cs) states.push_back(werner(wc));

        const std::vector<BlochBasis> bases = {
            {0.0, 0.0}, {kPi / 3.0, 0.9}, {kPi / 2.0, kPi / 2.0}, {2.6, 5.1}};
        for (const auto& basis : bases) {
            for (double x : {0.3, 1.7, 6.0}) {
                const auto [mp, mm] = weak_pair(WeakStrength(x), basis);
                c.expect((mp * mp + mm * mm).max_abs_diff(CMatrix::identity(2)) < 1e-12,
                         "weak completeness");
            }
        }
        for (const auto& rho : states) {
            const DensityDiagnostics d = validate_density(rho.mat());
            c.expect(d.acceptable(), "density validation");
            const double s = vn_entropy(rho);
            c.expect(s >= 0.0 && s <= 2.0 + 1e-12, "entropy bounds");
            for (const auto& basis : bases) {
                const auto [p1, p2] = bloch_projectors(basis);
                const double total = measure_on_b(rho, p1).probability +
                                     measure_on_b(rho, p2).probability;
                c.expect(std::abs(total - 1.0) < 1e-10, "probability completeness");
            }
            const CorrelationReport rep =
                discord(rho, Scheme::projective_at(bases[1]), Subsystem::b);
            c.expect(std::abs(rep.mutual_info - rep.classical_corr - rep.discord) < 1e-12,
                     "I = J + delta additivity");
        }
    }

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return EXIT_SUCCESS;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) FAILED\n";
    return EXIT_FAILURE;
}
