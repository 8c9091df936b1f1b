/* qpt: partial transposes and entanglement functions for multipartite
 * density matrices.
 *
 * Subcommands
 *   pt            apply a partial transposition to a matrix file
 *   report        entanglement report for a state (PPT verdict, negativity,
 *                 log-negativity, Hilbert-Schmidt measure, optional closest
 *                 separable state)
 *   werner-sweep  CSV sweep of the Werner family on 2 or 3 qubits
 *   validate      check a matrix file for density-matrix invariants
 *
 * Subsystems are selected either with --mask (1 transposes a subsystem,
 * 0 leaves it alone) or with --ssys, where the encoding is inverted:
 * 0 transposes, 1 leaves alone.
 *
 * Exit codes: 0 success, 2 usage error, 3 unreadable or malformed input,
 * 4 numerical failure or violated invariants.
 */

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpt/density_matrix.hpp"
#include "qpt/entanglement.hpp"
#include "qpt/errors.hpp"
#include "qpt/matrix_io.hpp"
#include "qpt/partial_transpose.hpp"
#include "qpt/states.hpp"

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

qpt::TransposeMask make_mask(const std::vector<int>& ssys, const std::vector<bool>& mask) {
    if (ssys.empty() == mask.empty())
        throw std::invalid_argument("provide exactly one of --ssys or --mask");
    if (!ssys.empty())
        return qpt::TransposeMask::from_ssys(ssys);
    return qpt::TransposeMask(mask);
}

qpt::DensityMatrix load_state(const std::string& path, const std::vector<std::size_t>& dims) {
    qpt::ComplexMatrix m = qpt::read_matrix_file(path);
    return {std::move(m), qpt::DimensionSpec(dims)};
}

int run_pt(const std::string& in, const std::string& out, const std::vector<std::size_t>& dims,
           const qpt::TransposeMask& mask) {
    const qpt::DensityMatrix dm = load_state(in, dims);
    const qpt::ComplexMatrix pt = qpt::partial_transpose(dm.matrix(), dm.spec(), mask);
    qpt::write_matrix_file(out, pt);
    return 0;
}

int run_report(const std::string& in, const std::vector<std::size_t>& dims,
               const qpt::TransposeMask& mask, const std::string& css_path) {
    if (dims.size() != 2)
        throw std::invalid_argument(
            "report needs a bipartition: regroup the subsystems into two factors "
            "(e.g. --dims 2,4 for one qubit against the remaining two)");
    const qpt::DensityMatrix dm = load_state(in, dims);
    const qpt::PptVerdict verdict = qpt::ppt_verdict(dm, mask);
    const qpt::ComplexMatrix pt = qpt::partial_transpose(dm.matrix(), dm.spec(), mask);
    const double e_n = qpt::negativity(pt);
    const double e_ln = qpt::log_negativity(pt);
    const bool want_css = !css_path.empty();
    const qpt::HseReport rep = qpt::hse(pt, dm.spec(), mask, want_css);

    std::cout << "verdict = " << (verdict.npt_entangled ? "NPT-entangled" : "PPT") << "\n"
              << "E_n = " << fmt(e_n) << "\n"
              << "E_ln = " << fmt(e_ln) << "\n"
              << "E_hs = " << fmt(rep.e_hs) << "\n"
              << "d_plus_prime = " << rep.d_plus_prime << "\n"
              << "xi = " << fmt(rep.xi) << "\n"
              << "min_pt_eigenvalue = " << fmt(verdict.min_eigenvalue) << "\n"
              << "oracle_lower_bound = " << fmt(rep.oracle_lower_bound) << "\n";
    if (want_css) {
        if (rep.e_hs > 0.0 && rep.css.has_value()) {
            qpt::write_matrix_file(css_path, rep.css->matrix());
            std::cout << "css_min_eigenvalue = " << fmt(*rep.css_min_eigenvalue) << "\n"
                      << "css written to " << css_path << "\n";
        } else {
            std::cout << "css not written (E_hs = 0)\n";
        }
    }
    return 0;
}

int run_werner_sweep(int qubits, int steps, const std::string& out) {
    std::FILE* f = std::fopen(out.c_str(), "w");
    if (f == nullptr)
        throw qpt::ParseError("cannot open " + out + " for writing");
    std::fputs("w,E_n,E_hs,d_plus_prime,oracle_lower_bound\n", f);
    const qpt::TransposeMask mask = qpt::TransposeMask::single(2, 0);
    for (int i = 0; i < steps; ++i) {
        const double w = static_cast<double>(i) / static_cast<double>(steps - 1);
        qpt::DensityMatrix dm = qpt::werner(static_cast<std::size_t>(qubits), w);
        if (qubits == 3) {
            /* One qubit against the other two viewed as a ququart. */
            dm = qpt::DensityMatrix(dm.matrix(), qpt::DimensionSpec({2, 4}));
        }
        const qpt::ComplexMatrix pt = qpt::partial_transpose(dm.matrix(), dm.spec(), mask);
        const double e_n = qpt::negativity(pt);
        const qpt::HseReport rep = qpt::hse(pt);
        std::fprintf(f, "%s,%s,%s,%zu,%s\n", fmt(w).c_str(), fmt(e_n).c_str(),
                     fmt(rep.e_hs).c_str(), rep.d_plus_prime,
                     fmt(rep.oracle_lower_bound).c_str());
    }
    if (std::fclose(f) != 0)
        throw qpt::ParseError("failed writing " + out);
    return 0;
}

int run_validate(const std::string& in, const std::vector<std::size_t>& dims) {
    const qpt::DensityMatrix dm = load_state(in, dims);
    const qpt::ValidationReport report = qpt::validate_density(dm, true);
    const char* names[] = {"hermiticity", "unit_trace", "positivity"};
    for (const char* name : names) {
        bool violated = false;
        for (const auto& issue : report.issues)
            if (issue.invariant == name) {
                std::cout << name << ": violation " << fmt(issue.magnitude) << "\n";
                violated = true;
            }
        if (!violated)
            std::cout << name << ": ok\n";
    }
    std::cout << "verdict = " << (report.ok() ? "valid" : "invalid") << "\n";
    return report.ok() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial transposes and entanglement functions for density matrices"};
    app.require_subcommand(1);

    std::string in_path, out_path, css_path;
    std::vector<std::size_t> dims;
    std::vector<int> ssys;
    std::vector<bool> mask;
    int qubits = 2;
    int steps = 11;

    auto add_mask_opts = [&](CLI::App* cmd) {
        cmd->add_option("--dims", dims, "subsystem dimensions, e.g. 2,2")
            ->required()
            ->delimiter(',');
        cmd->add_option("--ssys", ssys, "0 transposes a subsystem, 1 leaves it alone")
            ->delimiter(',');
        cmd->add_option("--mask", mask, "1 transposes a subsystem, 0 leaves it alone")
            ->delimiter(',');
    };

    CLI::App* cmd_pt = app.add_subcommand("pt", "apply a partial transposition to a matrix file");
    cmd_pt->add_option("--in", in_path, "input matrix file")->required();
    cmd_pt->add_option("--out", out_path, "output matrix file")->required();
    add_mask_opts(cmd_pt);

    CLI::App* cmd_report = app.add_subcommand("report", "entanglement report for a state");
    cmd_report->add_option("--in", in_path, "input matrix file")->required();
    cmd_report->add_option("--css", css_path, "write the closest separable state here");
    add_mask_opts(cmd_report);

    CLI::App* cmd_sweep = app.add_subcommand("werner-sweep", "CSV sweep of the Werner family");
    cmd_sweep->add_option("--qubits", qubits, "2 or 3")
        ->required()
        ->check(CLI::IsMember({2, 3}));
    cmd_sweep->add_option("--steps", steps, "grid points on [0, 1]")
        ->required()
        ->check(CLI::Range(2, 1000000));
    cmd_sweep->add_option("--out", out_path, "output CSV file")->required();

    CLI::App* cmd_validate = app.add_subcommand("validate", "check density-matrix invariants");
    cmd_validate->add_option("--in", in_path, "input matrix file")->required();
    cmd_validate->add_option("--dims", dims, "subsystem dimensions, e.g. 2,2")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(cmd_pt))
            return run_pt(in_path, out_path, dims, make_mask(ssys, mask));
        if (app.got_subcommand(cmd_report))
            return run_report(in_path, dims, make_mask(ssys, mask), css_path);
        if (app.got_subcommand(cmd_sweep))
            return run_werner_sweep(qubits, steps, out_path);
        if (app.got_subcommand(cmd_validate))
            return run_validate(in_path, dims);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qpt::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qpt::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qpt::ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const qpt::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
