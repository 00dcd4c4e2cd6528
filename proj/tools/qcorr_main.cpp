#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcorr/driver.hpp"

namespace {

using qcorr::driver::FamilyPoint;

// Shared family/parameter flags for report and sweep.
void add_family_flags(CLI::App* cmd, FamilyPoint& point, std::string& family_name) {
    cmd->add_option("--family", family_name, "State family: pure|belldiag|werner")->required();
    cmd->add_option("--lambda0", point.lambda0, "Schmidt weight (pure family)");
    cmd->add_option("--c1", point.c.c1, "Correlation c1 (belldiag family)");
    cmd->add_option("--c2", point.c.c2, "Correlation c2 (belldiag family)");
    cmd->add_option("--c3", point.c.c3, "Correlation c3 (belldiag family)");
    cmd->add_option("--c", point.werner_c, "Mixing parameter (werner family)");
    cmd->add_option("--x", point.x, "Weak measurement strength");
    cmd->add_option("--theta", point.theta, "Measurement polar angle (radians)");
    cmd->add_option("--phi", point.phi, "Measurement azimuthal angle (radians)");
}

int write_csv(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    std::ofstream out(path, std::ios::binary); // '\n' endings, unconditionally
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return 2;
    }
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit quantum correlation toolkit: discord, weak-measurement "
                 "super discord, and the information advantage of coherent decoding"};
    app.require_subcommand(1);

    // report
    auto* report = app.add_subcommand("report", "Correlation and advantage report for one state");
    qcorr::driver::ReportOptions rep_opt;
    std::string rep_family, rep_scheme;
    add_family_flags(report, rep_opt.point, rep_family);
    report->add_option("--scheme", rep_scheme, "Measurement scheme: projective|weak")->required();
    report->add_flag("--optimize", rep_opt.optimize, "Extremize over the measurement basis");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Closed-form sweep along one parameter axis");
    qcorr::driver::SweepSpec sweep_spec;
    std::string sweep_family, sweep_out;
    add_family_flags(sweep, sweep_spec.point, sweep_family);
    sweep->add_option("--axis", sweep_spec.axis, "Swept parameter name")->required();
    sweep->add_option("--start", sweep_spec.start, "Axis start")->required();
    sweep->add_option("--stop", sweep_spec.stop, "Axis stop")->required();
    sweep->add_option("--steps", sweep_spec.steps, "Number of rows (>= 2)")->required();
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();

    // figure
    auto* figure = app.add_subcommand("figure", "Emit the data behind one figure as CSV");
    std::string fig_id, fig_out;
    figure->add_option("--id", fig_id, "Figure id: fig1|fig2|fig3|fig4")->required();
    figure->add_option("--out", fig_out, "Output CSV path")->required();

    // verify
    auto* verify = app.add_subcommand("verify",
                                      "Cross-check closed forms against the numeric pipeline");
    qcorr::driver::VerifyOptions verify_opt;
    std::string verify_out;
    verify->add_option("--grid", verify_opt.grid, "Number of Bell-diagonal triples (default 50)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", verify_out, "Also write the report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // 2 = invalid arguments; help stays 0
    }

    try {
        if (*report) {
            rep_opt.point.family = qcorr::driver::family_from_name(rep_family);
            if (rep_scheme == "weak") {
                rep_opt.weak = true;
            } else if (rep_scheme != "projective") {
                std::cerr << "error: unknown scheme '" << rep_scheme
                          << "' (projective|weak)\n";
                return 2;
            }
            qcorr::driver::run_report(rep_opt, std::cout);
        } else if (*sweep) {
            sweep_spec.point.family = qcorr::driver::family_from_name(sweep_family);
            return write_csv(sweep_out,
                             [&](std::ostream& os) { qcorr::driver::run_sweep(sweep_spec, os); });
        } else if (*figure) {
            const auto id = qcorr::driver::figure_from_name(fig_id);
            return write_csv(fig_out,
                             [&](std::ostream& os) { qcorr::driver::run_figure(id, os); });
        } else if (*verify) {
            std::ostringstream buffer;
            const bool ok = qcorr::driver::run_verify(verify_opt, buffer);
            std::cout << buffer.str();
            if (!verify_out.empty()) {
                std::ofstream out(verify_out, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot open '" << verify_out << "' for writing\n";
                    return 2;
                }
                out << buffer.str();
            }
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
