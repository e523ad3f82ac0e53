#include "jbhs/synthesize.hpp"

#include <ostream>

#include "jbhs/diagonal.hpp"
#include "jbhs/errors.hpp"
#include "jbhs/two_level.hpp"

namespace jbhs {

Circuit assemble_circuit(const JacobiResult& jr, int n) {
    Circuit c;
    c.n_qubits = n;
    for (const auto& step : jr.steps) {
        auto g = emit_two_level_dagger(step, n);
        c.gates.insert(c.gates.end(), g.begin(), g.end());
    }
    const DiagonalCircuit diag = synthesize_diagonal(jr.signs);
    c.gates.insert(c.gates.end(), diag.gates.begin(), diag.gates.end());
    c.global_phase = diag.global_phase;
    for (auto it = jr.steps.rbegin(); it != jr.steps.rend(); ++it) {
        auto g = emit_two_level(*it, n);
        c.gates.insert(c.gates.end(), g.begin(), g.end());
    }
    return c;
}

SynthesisResult jbhs_synthesize(const CMatrix& h, const SynthesisOptions& opts) {
    int n = 0;
    if (!is_power_of_two(h.dim(), &n) || n < 1) {
        throw BadDimension("dimension " + std::to_string(h.dim()) + " is not 2^n with n >= 1");
    }
    SynthesisResult out;
    out.jacobi = diagonalize(h, opts.ordering, opts.tol, opts.max_sweeps);

    Circuit c = assemble_circuit(out.jacobi, n);
    out.report.raw_gate_count = c.gates.size();
    c = optimize(c, opts.opt_level);
    if (opts.library) {
        c = rewrite_cz_cnot(c, *opts.library);
        c = optimize(c, opts.opt_level);
    }

    auto& r = out.report;
    r.histogram = counts(c);
    r.sweeps = out.jacobi.sweeps;
    r.rotations_executed = out.jacobi.steps.size();
    r.residual_offnorm = out.jacobi.residual;
    r.verify_error = max_abs_diff(simulate(c), h);
    r.ordering = opts.ordering;
    r.opt_level = opts.opt_level;
    r.library = opts.library;
    out.circuit = std::move(c);
    if (!(r.verify_error <= opts.tol.verify_tol)) throw VerificationFailed(r.verify_error);
    return out;
}

std::string ordering_name(Ordering o) { return o == Ordering::RowMajor ? "row-major" : "parallel"; }

std::string opt_level_name(OptLevel o) {
    switch (o) {
        case OptLevel::None: return "none";
        case OptLevel::Basic: return "basic";
        case OptLevel::Full: return "full";
    }
    return "?";
}

std::string library_name(std::optional<TargetLibrary> lib) {
    if (!lib) return "native";
    return *lib == TargetLibrary::CZ ? "cz" : "cnot";
}

void write_report(std::ostream& out, const SynthesisReport& r) {
    out << "ordering: " << ordering_name(r.ordering) << '\n';
    out << "opt: " << opt_level_name(r.opt_level) << '\n';
    out << "lib: " << library_name(r.library) << '\n';
    out << "sweeps: " << r.sweeps << '\n';
    out << "rotations_executed: " << r.rotations_executed << '\n';
    out << "residual_offnorm: " << format_double(r.residual_offnorm) << '\n';
    out << "verify_error: " << format_double(r.verify_error) << '\n';
    out << "raw_gates: " << r.raw_gate_count << '\n';
    out << "gates: " << total(r.histogram) << '\n';
    for (const auto& [cls, n] : r.histogram) out << "count." << cls << ": " << n << '\n';
}

}  // namespace jbhs
