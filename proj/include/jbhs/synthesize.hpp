#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "jbhs/circuit.hpp"
#include "jbhs/jacobi.hpp"
#include "jbhs/optimizer.hpp"

namespace jbhs {

struct SynthesisOptions {
    Ordering ordering = Ordering::RowMajor;
    OptLevel opt_level = OptLevel::Full;
    /// Empty keeps the native mix (X ladders, Z diagonal).
    std::optional<TargetLibrary> library;
    Tolerances tol;
    int max_sweeps = 30;
};

struct SynthesisReport {
    Histogram histogram;
    int sweeps = 0;
    std::size_t rotations_executed = 0;
    double residual_offnorm = 0.0;
    double verify_error = 0.0;
    Ordering ordering = Ordering::RowMajor;
    OptLevel opt_level = OptLevel::Full;
    std::optional<TargetLibrary> library;
    std::size_t raw_gate_count = 0;  // before optimization
};

struct SynthesisResult {
    Circuit circuit;
    SynthesisReport report;
    JacobiResult jacobi;
};

/// Unoptimized circuit for a finished diagonalization. In time order: the
/// inverse two-level blocks of steps 1..m, the sign diagonal, then the forward
/// blocks of steps m..1, so that the matrix is Q'_1 ... Q'_m D Q'_m^dag ... Q'_1^dag.
Circuit assemble_circuit(const JacobiResult& jr, int n);

/// Full pipeline: diagonalize, assemble, optimize, convert library, verify.
/// Throws VerificationFailed when the result misses `h` by more than verify_tol.
SynthesisResult jbhs_synthesize(const CMatrix& h, const SynthesisOptions& opts = {});

std::string ordering_name(Ordering o);
std::string opt_level_name(OptLevel o);
std::string library_name(std::optional<TargetLibrary> lib);

/// Plain `key: value` lines.
void write_report(std::ostream& out, const SynthesisReport& r);

}  // namespace jbhs
