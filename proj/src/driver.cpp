#include "qcorr/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qcorr/closedform.hpp"
#include "qcorr/correlate.hpp"

namespace qcorr {
namespace driver {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 12 significant digits, locale-independent.
std::string format_cell(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

void write_row(std::ostream& os, const std::vector<double>& cells, const std::string& context) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!std::isfinite(cells[i])) {
            throw std::runtime_error("non-finite CSV cell at " + context);
        }
        if (i) line += ',';
        line += format_cell(cells[i]);
    }
    line += '\n';
    os << line;
}

// Closed-form advantage pair (projective optimum, weak at the point's
// direction) for any family point.
struct AdvPair {
    double proj;
    double weak;
};

AdvPair closed_adv(const FamilyPoint& p) {
    const WeakStrength x(p.x);
    const BlochBasis basis{p.theta, p.phi};
    switch (p.family) {
    case Family::pure: {
        const auto f = closedform::pure_family(p.lambda0, x, basis);
        return {f.adv_projective, f.adv_weak};
    }
    case Family::belldiag: {
        const auto f = closedform::belldiag_family(p.c, x, basis);
        return {f.adv_projective, f.adv_weak};
    }
    case Family::werner: {
        const auto f = closedform::werner_family(p.werner_c, x);
        return {f.adv_projective, f.adv_weak};
    }
    }
    throw std::logic_error("closed_adv: unreachable");
}

} // namespace

Family family_from_name(const std::string& name) {
    if (name == "pure") return Family::pure;
    if (name == "belldiag") return Family::belldiag;
    if (name == "werner") return Family::werner;
    throw std::invalid_argument("unknown family '" + name + "' (pure|belldiag|werner)");
}

DensityMatrix FamilyPoint::state() const {
    switch (family) {
    case Family::pure: return pure_schmidt({lambda0});
    case Family::belldiag: return bell_diagonal(c);
    case Family::werner: return werner(werner_c);
    }
    throw std::logic_error("FamilyPoint::state: unreachable");
}

void run_report(const ReportOptions& opt, std::ostream& os) {
    const DensityMatrix rho = opt.point.state();
    const BlochBasis basis{opt.point.theta, opt.point.phi};
    Scheme scheme = opt.weak ? Scheme::weak_at(WeakStrength(opt.point.x), basis)
                             : Scheme::projective_at(basis);
    if (opt.optimize) scheme.basis.reset();

    os << "family: ";
    switch (opt.point.family) {
    case Family::pure: os << "pure (lambda0 = " << opt.point.lambda0 << ")"; break;
    case Family::belldiag:
        os << "belldiag (c = " << opt.point.c.c1 << ", " << opt.point.c.c2 << ", "
           << opt.point.c.c3 << ")";
        break;
    case Family::werner: os << "werner (c = " << opt.point.werner_c << ")"; break;
    }
    os << "\nscheme: " << (opt.weak ? "weak" : "projective");
    if (opt.weak) os << " (x = " << opt.point.x << ")";
    if (opt.optimize) {
        os << ", basis optimized\n";
    } else {
        os << ", basis (theta = " << opt.point.theta << ", phi = " << opt.point.phi << ")\n";
    }

    const CorrelationReport corr = discord(rho, scheme, Subsystem::b);
    os << "mutual information I   = " << format_cell(corr.mutual_info) << "\n"
       << "classical correlation J = " << format_cell(corr.classical_corr) << "\n"
       << "discord delta           = " << format_cell(corr.discord) << "\n"
       << "argmin basis            = (" << corr.argmin_basis.theta << ", "
       << corr.argmin_basis.phi << ")\n";

    const AdvantageReport adv = advantage(rho, pauli_ensemble(), scheme);
    os << "maximal Pauli encoding:\n"
       << "  I0            = " << format_cell(adv.i0) << "\n"
       << "  Iq            = " << format_cell(adv.iq) << "\n"
       << "  Ic_b          = " << format_cell(adv.ic_b) << "\n"
       << "  Ic_a bound    = " << format_cell(adv.ic_a_bound) << "\n"
       << "  Ic (max)      = " << format_cell(adv.ic) << "\n"
       << "  delta I       = " << format_cell(adv.delta_i) << "\n"
       << "  delta discord = " << format_cell(adv.delta_discord) << "\n"
       << "  J~            = " << format_cell(adv.j_tilde) << "\n"
       << "  delta~        = " << format_cell(adv.delta_tilde) << "\n";

    const SandwichCheck chk = sandwich_check(adv);
    os << "sandwich: lower margin " << format_cell(chk.lower_margin) << ", upper margin "
       << format_cell(chk.upper_margin) << (chk.pass ? " [ok]\n" : " [VIOLATED]\n");
}

void run_sweep(const SweepSpec& spec, std::ostream& os) {
    if (spec.steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!(spec.start < spec.stop)) throw std::invalid_argument("sweep: require start < stop");

    const auto axis_ok = [&](std::initializer_list<const char*> names) {
        return std::any_of(names.begin(), names.end(),
                           [&](const char* n) { return spec.axis == n; });
    };
    bool recognized = false;
    switch (spec.point.family) {
    case Family::pure: recognized = axis_ok({"lambda0", "x", "theta"}); break;
    case Family::belldiag: recognized = axis_ok({"x", "theta"}); break;
    case Family::werner: recognized = axis_ok({"c", "x"}); break;
    }
    if (!recognized) {
        throw std::invalid_argument("sweep: axis '" + spec.axis +
                                    "' is not a parameter of this family");
    }

    os << spec.axis << ",adv_proj,adv_weak\n";
    for (int i = 0; i < spec.steps; ++i) {
        const double v =
            spec.start + (spec.stop - spec.start) * static_cast<double>(i) /
                             static_cast<double>(spec.steps - 1);
        FamilyPoint p = spec.point;
        if (spec.axis == "lambda0") p.lambda0 = v;
        else if (spec.axis == "c") p.werner_c = v;
        else if (spec.axis == "x") p.x = v;
        else p.theta = v;
        const AdvPair adv = closed_adv(p);
        std::ostringstream ctx;
        ctx << "sweep " << spec.axis << "=" << v;
        write_row(os, {v, adv.proj, adv.weak}, ctx.str());
    }
}

FigureId figure_from_name(const std::string& name) {
    if (name == "fig1") return FigureId::fig1;
    if (name == "fig2") return FigureId::fig2;
    if (name == "fig3") return FigureId::fig3;
    if (name == "fig4") return FigureId::fig4;
    throw std::invalid_argument("unknown figure id '" + name + "' (fig1|fig2|fig3|fig4)");
}

void run_figure(FigureId id, std::ostream& os) {
    switch (id) {
    case FigureId::fig1: {
        // Advantage vs strength for the maximally entangled state and
        // the lambda0 = sqrt(2)/2 pure state, weak and projective.
        os << "x,adv_weak_maxent,adv_proj_maxent,adv_weak_lam0_sqrt2over2,"
              "adv_proj_lam0_sqrt2over2\n";
        const double lam = std::sqrt(2.0) / 2.0;
        const BlochBasis schmidt_basis{0.0, 0.0};
        for (int i = 0; i < 500; ++i) {
            const double x = 0.01 + (5.0 - 0.01) * i / 499.0;
            const WeakStrength w(x);
            const auto f = closedform::pure_family(lam, w, schmidt_basis);
            std::ostringstream ctx;
            ctx << "fig1 x=" << x;
            write_row(os, {x, closedform::maxent_adv_weak(w), 1.0, f.adv_weak, f.adv_projective},
                      ctx.str());
        }
        break;
    }
    case FigureId::fig2: {
        os << "x,theta,adv_weak,adv_proj\n";
        const BellDiagParams c{0.15, 0.03, 0.7};
        for (int i = 0; i < 101; ++i) {
            const double x = 0.01 + (5.0 - 0.01) * i / 100.0;
            for (int j = 0; j < 101; ++j) {
                const double theta = kPi * j / 100.0;
                const auto f = closedform::belldiag_family(c, WeakStrength(x),
                                                           BlochBasis{theta, 0.0});
                std::ostringstream ctx;
                ctx << "fig2 x=" << x << " theta=" << theta;
                write_row(os, {x, theta, f.adv_weak, f.adv_projective}, ctx.str());
            }
        }
        break;
    }
    case FigureId::fig3: {
        os << "c,adv_weak,adv_proj\n";
        const WeakStrength w(0.7);
        for (int i = 0; i < 101; ++i) {
            const double c = i / 100.0;
            const auto f = closedform::werner_family(c, w);
            std::ostringstream ctx;
            ctx << "fig3 c=" << c;
            write_row(os, {c, f.adv_weak, f.adv_projective}, ctx.str());
        }
        break;
    }
    case FigureId::fig4: {
        os << "x,adv_weak,adv_proj\n";
        for (int i = 0; i < 200; ++i) {
            const double x = 0.05 * (i + 1); // 0.05 .. 10.00, hits x = 8 exactly
            const auto f = closedform::werner_family(0.4, WeakStrength(x));
            std::ostringstream ctx;
            ctx << "fig4 x=" << x;
            write_row(os, {x, f.adv_weak, f.adv_projective}, ctx.str());
        }
        break;
    }
    }
}

std::vector<BellDiagParams> sample_belldiag_triples(int count) {
    std::vector<BellDiagParams> out;
    out.reserve(static_cast<std::size_t>(count));
    std::mt19937 gen(20240229u);
    const auto uniform = [&]() {
        // mt19937 output is fully specified, so this stays identical
        // across platforms (std::uniform_real_distribution is not).
        return static_cast<double>(gen()) / 4294967296.0;
    };
    while (static_cast<int>(out.size()) < count) {
        const BellDiagParams c{2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0,
                               2.0 * uniform() - 1.0};
        const auto combos = c.eigenvalue_combinations();
        if (std::all_of(combos.begin(), combos.end(), [](double u) { return u >= 0.0; })) {
            out.push_back(c);
        }
    }
    return out;
}

namespace {

struct CheckResult {
    std::string name;
    double max_dev = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string detail; // worst-offender parameters
};

class CheckRunner {
public:
    explicit CheckRunner(std::ostream& os) : os_(os) {}

    void record(const std::string& name, double max_dev, double tol,
                const std::string& detail = {}) {
        CheckResult r{name, max_dev, tol, max_dev <= tol, detail};
        all_pass_ &= r.pass;
        os_ << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": max_dev=" << format_cell(r.max_dev)
            << " tol=" << format_cell(r.tol);
        if (!r.detail.empty()) os_ << " (" << r.detail << ")";
        os_ << "\n";
    }

    void record_bool(const std::string& name, bool pass, const std::string& detail = {}) {
        all_pass_ &= pass;
        os_ << (pass ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) os_ << ": " << detail;
        os_ << "\n";
    }

    bool all_pass() const { return all_pass_; }

private:
    std::ostream& os_;
    bool all_pass_ = true;
};

// Tracks the worst deviation and where it happened.
struct WorstDev {
    double dev = 0.0;
    std::string where;

    void consider(double d, const std::string& w) {
        if (d > dev) {
            dev = d;
            where = w;
        }
    }
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

// Direction aligned with the dominant |c_j| axis, where the projective
// optimum and the weak projective limit live.
BlochBasis optimal_direction(const BellDiagParams& c) {
    const double a1 = std::abs(c.c1), a2 = std::abs(c.c2), a3 = std::abs(c.c3);
    if (a3 >= a1 && a3 >= a2) return {0.0, 0.0};
    if (a1 >= a2) return {kPi / 2.0, 0.0};
    return {kPi / 2.0, kPi / 2.0};
}

std::string fmt_params(std::initializer_list<std::pair<const char*, double>> ps) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : ps) {
        if (!first) os << " ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

} // namespace

bool run_verify(const VerifyOptions& opt, std::ostream& os) {
    CheckRunner run(os);
    const EncodingEnsemble enc = pauli_ensemble();
    const std::vector<BellDiagParams> triples = sample_belldiag_triples(opt.grid);
    const std::vector<double> lambdas = lambda_grid();
    const std::vector<double> thetas = theta_grid();
    const std::vector<double> werner_cs = werner_grid();

    // Closed form vs numeric pipeline: projective advantage at the
    // optimized basis.
    {
        WorstDev w;
        for (double lam : lambdas) {
            const DensityMatrix rho = pure_schmidt({lam});
            const double numeric = advantage_delta_i(rho, enc, Scheme::projective_optimize());
            const double closed =
                closedform::pure_family(lam, WeakStrength(1.0), {0.0, 0.0}).adv_projective;
            w.consider(std::abs(numeric - closed), fmt_params({{"lambda0", lam}}));
        }
        run.record("oracle_pure_projective", w.dev, 1e-6, w.where);
    }
    {
        WorstDev w;
        for (const auto& c : triples) {
            const DensityMatrix rho = bell_diagonal(c);
            const double numeric = advantage_delta_i(rho, enc, Scheme::projective_optimize());
            const double closed =
                closedform::belldiag_family(c, WeakStrength(1.0), {0.0, 0.0}).adv_projective;
            w.consider(std::abs(numeric - closed),
                       fmt_params({{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}}));
        }
        run.record("oracle_belldiag_projective", w.dev, 1e-6, w.where);
    }
    {
        WorstDev w;
        for (double c : werner_cs) {
            const DensityMatrix rho = werner(c);
            const double numeric = advantage_delta_i(rho, enc, Scheme::projective_optimize());
            const double closed = closedform::werner_family(c, WeakStrength(1.0)).adv_projective;
            w.consider(std::abs(numeric - closed), fmt_params({{"c", c}}));
        }
        run.record("oracle_werner_projective", w.dev, 1e-6, w.where);
    }

    // Closed form vs numeric: weak advantage and weak conditional
    // entropy at matching fixed bases.
    {
        WorstDev wa, wc;
        for (double lam : lambdas) {
            const DensityMatrix rho = pure_schmidt({lam});
            for (double x : kXGrid) {
                for (double theta : thetas) {
                    const WeakStrength w(x);
                    const BlochBasis basis{theta, 0.0};
                    const Scheme scheme = Scheme::weak_at(w, basis);
                    const auto f = closedform::pure_family(lam, w, basis);
                    const std::string where =
                        fmt_params({{"lambda0", lam}, {"x", x}, {"theta", theta}});

                    const double numeric = advantage_delta_i(rho, enc, scheme);
                    wa.consider(std::abs(numeric - f.adv_weak), where);

                    const double cond = cond_entropy(rho, scheme, Subsystem::b);
                    const double cond_closed = f.p_plus * binary_entropy(f.k1_plus) +
                                               f.p_minus * binary_entropy(f.k1_minus);
                    wc.consider(std::abs(cond - cond_closed), where);
                }
            }
        }
        run.record("oracle_pure_weak_advantage", wa.dev, 1e-6, wa.where);
        run.record("oracle_pure_weak_cond_entropy", wc.dev, 1e-6, wc.where);
    }
    {
        WorstDev wa, wc;
        for (const auto& c : triples) {
            const DensityMatrix rho = bell_diagonal(c);
            for (double x : kXGrid) {
                for (double theta : thetas) {
                    const WeakStrength w(x);
                    const BlochBasis basis{theta, 0.0};
                    const Scheme scheme = Scheme::weak_at(w, basis);
                    const auto f = closedform::belldiag_family(c, w, basis);
                    const std::string where = fmt_params(
                        {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"x", x}, {"theta", theta}});

                    const double numeric = advantage_delta_i(rho, enc, scheme);
                    wa.consider(std::abs(numeric - f.adv_weak), where);

                    const double cond = cond_entropy(rho, scheme, Subsystem::b);
                    const double cond_closed =
                        0.5 * (binary_entropy(f.lam1_plus) + binary_entropy(f.lam1_minus));
                    wc.consider(std::abs(cond - cond_closed), where);
                }
            }
        }
        run.record("oracle_belldiag_weak_advantage", wa.dev, 1e-6, wa.where);
        run.record("oracle_belldiag_weak_cond_entropy", wc.dev, 1e-6, wc.where);
    }
    {
        WorstDev w;
        for (double c : werner_cs) {
            const DensityMatrix rho = werner(c);
            for (double x : kXGrid) {
                const WeakStrength ws(x);
                const double numeric =
                    advantage_delta_i(rho, enc, Scheme::weak_at(ws, {0.0, 0.0}));
                const double closed = closedform::werner_family(c, ws).adv_weak;
                w.consider(std::abs(numeric - closed), fmt_params({{"c", c}, {"x", x}}));
            }
        }
        run.record("oracle_werner_weak_advantage", w.dev, 1e-6, w.where);
    }

    // Luo minimum conditional entropy vs the numeric basis optimizer.
    {
        WorstDev w;
        for (const auto& c : triples) {
            const DensityMatrix rho = bell_diagonal(c);
            const BasisOptimum min_cond = minimize_over_basis([&](const BlochBasis& b) {
                return cond_entropy(rho, Scheme::projective_at(b), Subsystem::b);
            });
            const double closed =
                closedform::belldiag_family(c, WeakStrength(1.0), {0.0, 0.0}).cond_entropy_luo;
            w.consider(std::abs(min_cond.min - closed),
                       fmt_params({{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}}));
        }
        run.record("luo_min_cond_entropy", w.dev, 1e-6, w.where);
    }

    // Limits: zero-strength value for the maximally entangled state and
    // the projective limit at strong x for all families.
    {
        const double at_zero = closedform::maxent_adv_weak(WeakStrength(0.0));
        run.record("limit_maxent_x0_equals_2", std::abs(at_zero - 2.0), 1e-9);
    }
    {
        WorstDev w;
        const WeakStrength x10(10.0);
        for (double lam : lambdas) {
            const auto f = closedform::pure_family(lam, x10, {0.0, 0.0});
            w.consider(std::abs(f.adv_weak - f.adv_projective), fmt_params({{"lambda0", lam}}));
        }
        for (const auto& c : triples) {
            const auto f = closedform::belldiag_family(c, x10, optimal_direction(c));
            w.consider(std::abs(f.adv_weak - f.adv_projective),
                       fmt_params({{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}}));
        }
        for (double c : werner_cs) {
            const auto f = closedform::werner_family(c, x10);
            w.consider(std::abs(f.adv_weak - f.adv_projective), fmt_params({{"c", c}}));
        }
        run.record("limit_projective_x10", w.dev, 1e-3, w.where);
    }

    // Ordering: weak advantage never drops below projective; and
    // monotonicity: weak advantage nonincreasing along each x sweep.
    {
        WorstDev order, mono;
        const auto scan = [&](const std::string& where, auto adv_at) {
            double prev = 0.0;
            bool have_prev = false;
            for (double x : kXGrid) {
                const AdvPair a = adv_at(x);
                order.consider(a.proj - a.weak, where + fmt_params({{" x", x}}));
                if (have_prev) mono.consider(a.weak - prev, where + fmt_params({{" x", x}}));
                prev = a.weak;
                have_prev = true;
            }
        };
        for (double lam : lambdas) {
            for (double theta : thetas) {
                scan(fmt_params({{"lambda0", lam}, {"theta", theta}}), [&](double x) {
                    const auto f = closedform::pure_family(lam, WeakStrength(x), {theta, 0.0});
                    return AdvPair{f.adv_projective, f.adv_weak};
                });
            }
        }
        for (const auto& c : triples) {
            for (double theta : thetas) {
                scan(fmt_params({{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"theta", theta}}),
                     [&](double x) {
                         const auto f =
                             closedform::belldiag_family(c, WeakStrength(x), {theta, 0.0});
                         return AdvPair{f.adv_projective, f.adv_weak};
                     });
            }
        }
        for (double c : werner_cs) {
            scan(fmt_params({{"c", c}}), [&](double x) {
                const auto f = closedform::werner_family(c, WeakStrength(x));
                return AdvPair{f.adv_projective, f.adv_weak};
            });
        }
        run.record("ordering_weak_ge_projective", order.dev, 1e-9, order.where);
        run.record("monotone_weak_in_x", mono.dev, 1e-12, mono.where);
    }

    // Sandwich under maximal encoding: no correlation survives the
    // encoding and the advantage equals the discord consumed.
    {
        WorstDev j_tilde, d_tilde, gap;
        const auto probe = [&](const DensityMatrix& rho, const Scheme& scheme,
                               const std::string& where) {
            const AdvantageReport rep = advantage(rho, enc, scheme);
            j_tilde.consider(std::abs(rep.j_tilde), where);
            d_tilde.consider(std::abs(rep.delta_tilde), where);
            gap.consider(std::abs(rep.delta_i - rep.delta_discord), where);
        };
        const Scheme weak07 = Scheme::weak_at(WeakStrength(0.7), {0.0, 0.0});
        for (double lam : {0.3, 0.5, 0.8}) {
            probe(pure_schmidt({lam}), Scheme::projective_optimize(),
                  fmt_params({{"lambda0", lam}}) + " projective");
            probe(pure_schmidt({lam}), weak07, fmt_params({{"lambda0", lam}}) + " weak");
        }
        const BellDiagParams bd{0.15, 0.03, 0.7};
        probe(bell_diagonal(bd), Scheme::projective_optimize(), "belldiag projective");
        probe(bell_diagonal(bd), weak07, "belldiag weak");
        for (double c : {0.4, 0.8}) {
            probe(werner(c), Scheme::projective_optimize(),
                  fmt_params({{"c", c}}) + " projective");
            probe(werner(c), weak07, fmt_params({{"c", c}}) + " weak");
        }
        run.record("sandwich_j_tilde", j_tilde.dev, 1e-9, j_tilde.where);
        run.record("sandwich_delta_tilde", d_tilde.dev, 1e-9, d_tilde.where);
        run.record("sandwich_advantage_equals_discord", gap.dev, 1e-8, gap.where);
    }

    // Structural suites over every constructed state.
    {
        std::vector<DensityMatrix> states;
        for (double lam : lambdas) states.push_back(pure_schmidt({lam}));
        for (const auto& c : triples) states.push_back(bell_diagonal(c));
        for (double c : werner_cs) states.push_back(werner(c));

        WorstDev prob_sum, marg_avg, additivity, entropy_range, completeness;
        const std::vector<BlochBasis> bases = {
            {0.0, 0.0}, {kPi / 3.0, 0.9}, {kPi / 2.0, kPi / 2.0}, {2.6, 5.1}};
        for (const auto& basis : bases) {
            for (double x : {0.3, 1.7}) {
                const auto [mp, mm] = weak_pair(WeakStrength(x), basis);
                completeness.consider(
                    (mp * mp + mm * mm).max_abs_diff(CMatrix::identity(2)),
                    fmt_params({{"x", x}, {"theta", basis.theta}, {"phi", basis.phi}}));
            }
            const auto [p1, p2] = bloch_projectors(basis);
            completeness.consider((p1 + p2).max_abs_diff(CMatrix::identity(2)),
                                  fmt_params({{"theta", basis.theta}, {"phi", basis.phi}}));
        }
        std::size_t state_idx = 0;
        for (const auto& rho : states) {
            const std::string where = fmt_params({{"state", double(state_idx++)}});
            const double s = vn_entropy(rho);
            entropy_range.consider(std::max(-s, s - 2.0), where);
            for (const auto& basis : bases) {
                const auto [p1, p2] = bloch_projectors(basis);
                const auto o1 = measure_on_b(rho, p1);
                const auto o2 = measure_on_b(rho, p2);
                prob_sum.consider(std::abs(o1.probability + o2.probability - 1.0), where);
                if (o1.possible() && o2.possible()) {
                    const CMatrix avg = o1.conditional->mat() * cplx{o1.probability, 0.0} +
                                        o2.conditional->mat() * cplx{o2.probability, 0.0};
                    marg_avg.consider(
                        avg.max_abs_diff(partial_trace(rho, Subsystem::a).mat()), where);
                }
            }
            const CorrelationReport rep =
                discord(rho, Scheme::projective_at({1.1, 0.4}), Subsystem::b);
            additivity.consider(
                std::abs(rep.mutual_info - rep.classical_corr - rep.discord), where);
        }
        run.record("structural_probability_completeness", prob_sum.dev, 1e-10, prob_sum.where);
        run.record("structural_unconditioned_marginal", marg_avg.dev, 1e-10, marg_avg.where);
        run.record("structural_entropy_bounds", entropy_range.dev, 1e-12, entropy_range.where);
        run.record("structural_additivity_i_eq_j_plus_delta", additivity.dev, 1e-12,
                   additivity.where);
        run.record("structural_weak_completeness", completeness.dev, 1e-12, completeness.where);
    }

    // Unphysical inputs must be rejected before any computation.
    {
        bool rejected = false;
        try {
            bell_diagonal({0.9, 0.9, 0.9});
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        run.record_bool("reject_unphysical_triple", rejected,
                        rejected ? "c=(0.9,0.9,0.9) rejected" : "c=(0.9,0.9,0.9) accepted");
    }

    // The flagship point, reported explicitly.
    {
        const AdvantageReport rep =
            advantage(pure_schmidt({0.5}), enc, Scheme::projective_optimize());
        std::ostringstream detail;
        detail << "Iq=" << format_cell(rep.iq) << " Ic=" << format_cell(rep.ic)
               << " deltaI=" << format_cell(rep.delta_i);
        const double dev = std::max({std::abs(rep.iq - 2.0), std::abs(rep.ic - 1.0),
                                     std::abs(rep.delta_i - 1.0)});
        run.record("maxent_iq2_ic1_deltai1", dev, 1e-9, detail.str());
    }

    os << (run.all_pass() ? "verify: all checks passed\n" : "verify: FAILURES detected\n");
    return run.all_pass();
}

} // namespace driver
} // namespace qcorr
