// jbhs: synthesize, check and count circuits for Hermitian unitaries.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "jbhs/baselines.hpp"
#include "jbhs/circuit.hpp"
#include "jbhs/errors.hpp"
#include "jbhs/matrix.hpp"
#include "jbhs/synthesize.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kMismatch = 1,
    kParse = 2,
    kPrecondition = 3,
    kNoConvergence = 4,
    kVerification = 5,
};

const char* kExitTable =
    "Exit codes:\n"
    "  0  success\n"
    "  1  verify: circuit and matrix differ by more than 1e-9\n"
    "  2  input could not be read or parsed\n"
    "  3  input violates a precondition (not Hermitian, not unitary, +-I, ...)\n"
    "  4  Jacobi iteration did not converge\n"
    "  5  synthesized circuit failed verification\n";

void print_counts(std::ostream& out, const jbhs::Histogram& h) {
    for (const auto& [cls, n] : h) out << cls << ": " << n << '\n';
    out << "total: " << jbhs::total(h) << '\n';
}

int run_synth(const std::string& matrix_path, const std::string& ordering, const std::string& opt,
              const std::string& lib, const std::string& out_path, const std::string& report_path) {
    jbhs::SynthesisOptions opts;
    opts.ordering = ordering == "parallel" ? jbhs::Ordering::Parallel : jbhs::Ordering::RowMajor;
    opts.opt_level = opt == "none"    ? jbhs::OptLevel::None
                     : opt == "basic" ? jbhs::OptLevel::Basic
                                      : jbhs::OptLevel::Full;
    if (lib == "cz") opts.library = jbhs::TargetLibrary::CZ;
    if (lib == "cnot") opts.library = jbhs::TargetLibrary::CNOT;

    const jbhs::CMatrix h = jbhs::read_matrix_file(matrix_path);
    const auto result = jbhs::jbhs_synthesize(h, opts);

    if (out_path.empty() || out_path == "-") {
        jbhs::write_circuit(std::cout, result.circuit);
    } else {
        std::ofstream f(out_path);
        if (!f) throw jbhs::ParseError(0, "cannot write " + out_path);
        jbhs::write_circuit(f, result.circuit);
    }
    if (!report_path.empty()) {
        if (report_path == "-") {
            jbhs::write_report(std::cerr, result.report);
        } else {
            std::ofstream f(report_path);
            if (!f) throw jbhs::ParseError(0, "cannot write " + report_path);
            jbhs::write_report(f, result.report);
        }
    }
    return kOk;
}

int run_verify(const std::string& matrix_path, const std::string& circuit_path) {
    const jbhs::CMatrix h = jbhs::read_matrix_file(matrix_path);
    const jbhs::Circuit c = jbhs::read_circuit_file(circuit_path);
    if ((std::size_t{1} << c.n_qubits) != h.dim()) {
        throw jbhs::ParseError(0, "circuit has " + std::to_string(c.n_qubits) +
                                      " qubits but the matrix has dimension " +
                                      std::to_string(h.dim()));
    }
    const double err = jbhs::max_abs_diff(jbhs::simulate(c), h);
    std::cout << "max_abs_diff: " << jbhs::format_double(err) << '\n';
    return err <= 1e-9 ? kOk : kMismatch;
}

jbhs::CMatrix named_or_file(const std::string& gate) {
    jbhs::GateKind kind;
    if (gate == "H" || gate == "X" || gate == "Y" || gate == "Z") {
        jbhs::kind_from_name(gate, kind);
        return jbhs::gate_matrix(kind);
    }
    return jbhs::read_matrix_file(gate);
}

int run_baseline(const std::string& gate, const std::string& method, int controls) {
    const jbhs::H2Params p = jbhs::h2_params(named_or_file(gate));
    jbhs::Circuit c;
    if (method == "jbhs") {
        c = jbhs::jbhs_cu(p, controls);
    } else {
        if (controls != 1) {
            throw jbhs::PreconditionError(method + " baseline is defined for one control only");
        }
        c = method == "barenco" ? jbhs::barenco_cu(p) : jbhs::qsd_cu(p);
    }
    jbhs::write_circuit(std::cout, c);
    std::cout << "# counts\n";
    for (const auto& [cls, n] : jbhs::counts(c)) std::cout << "# " << cls << ": " << n << '\n';
    return kOk;
}

int run_formulas(int n) {
    const auto j = jbhs::formula_mcu_counts(n, jbhs::BaselineMethod::Jbhs);
    const auto b = jbhs::formula_mcu_counts(n, jbhs::BaselineMethod::Barenco);
    std::cout << "jbhs_cz: " << j.two_qubit << '\n'
              << "jbhs_single: " << j.single << '\n'
              << "barenco_cnot: " << b.two_qubit << '\n'
              << "barenco_single: " << b.single << '\n';
    for (auto method : {jbhs::BaselineMethod::Jbhs, jbhs::BaselineMethod::Barenco}) {
        const auto reported = jbhs::table3_reported(n, method);
        const auto formula = jbhs::formula_mcu_counts(n, method);
        if (reported && !(*reported == formula)) {
            std::cout << "note: published " << (method == jbhs::BaselineMethod::Jbhs ? "jbhs" : "barenco")
                      << " counts for n=" << n << " are (" << reported->two_qubit << ", "
                      << reported->single << "), which differ from the closed form\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circuit synthesis for Hermitian unitaries"};
    app.footer(kExitTable);
    app.require_subcommand(1);

    std::string matrix_path, circuit_path, ordering = "row-major", opt = "full", lib = "cz",
                out_path, report_path;
    auto* synth = app.add_subcommand("synth", "Synthesize a circuit for a Hermitian unitary matrix");
    synth->add_option("matrix", matrix_path, "Matrix file")->required();
    synth->add_option("--ordering", ordering, "Pair ordering")
        ->check(CLI::IsMember({"row-major", "parallel"}))
        ->capture_default_str();
    synth->add_option("--opt", opt, "Optimization level")
        ->check(CLI::IsMember({"none", "basic", "full"}))
        ->capture_default_str();
    synth->add_option("--lib", lib, "Target gate library")
        ->check(CLI::IsMember({"cz", "cnot", "native"}))
        ->capture_default_str();
    synth->add_option("--out", out_path, "Circuit output file (default stdout)");
    synth->add_option("--report", report_path, "Report file ('-' for stderr)");

    auto* verify = app.add_subcommand("verify", "Compare a circuit against a matrix");
    verify->add_option("matrix", matrix_path, "Matrix file")->required();
    verify->add_option("circuit", circuit_path, "Circuit file")->required();

    auto* sim = app.add_subcommand("simulate", "Print the matrix of a circuit");
    sim->add_option("circuit", circuit_path, "Circuit file")->required();

    auto* cnt = app.add_subcommand("counts", "Print the gate-class histogram of a circuit");
    cnt->add_option("circuit", circuit_path, "Circuit file")->required();

    std::string gate = "H", method = "jbhs";
    int controls = 1;
    auto* base = app.add_subcommand("baseline", "Controlled single-qubit Hermitian gate");
    base->add_option("--gate", gate, "H, X, Y, Z or a 2x2 matrix file")->capture_default_str();
    base->add_option("--method", method, "Construction")
        ->check(CLI::IsMember({"jbhs", "barenco", "qsd"}))
        ->capture_default_str();
    base->add_option("--controls", controls, "Number of controls")
        ->check(CLI::Range(1, 19))
        ->capture_default_str();

    int formula_n = 0;
    auto* form = app.add_subcommand("formulas", "Closed-form gate counts for C^{n-2}U");
    form->add_option("--n", formula_n, "Qubit count (>= 5)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    try {
        if (*synth) return run_synth(matrix_path, ordering, opt, lib, out_path, report_path);
        if (*verify) return run_verify(matrix_path, circuit_path);
        if (*sim) {
            jbhs::write_matrix(std::cout, jbhs::simulate(jbhs::read_circuit_file(circuit_path)));
            return kOk;
        }
        if (*cnt) {
            print_counts(std::cout, jbhs::counts(jbhs::read_circuit_file(circuit_path)));
            return kOk;
        }
        if (*base) return run_baseline(gate, method, controls);
        if (*form) return run_formulas(formula_n);
    } catch (const jbhs::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const jbhs::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const jbhs::NoConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNoConvergence;
    } catch (const jbhs::VerificationFailed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerification;
    } catch (const jbhs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerification;
    }
    return kOk;
}
