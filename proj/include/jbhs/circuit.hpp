#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jbhs/matrix.hpp"

namespace jbhs {

// Qubit 0 is the most significant bit of a basis-state index (the top wire).
// For n qubits, qubit k corresponds to bit (n - 1 - k).

enum class GateKind { RY, PHASE, RZ, X, Y, Z, H, S, SDG };

std::string_view kind_name(GateKind kind);
/// Inverse of kind_name; returns false for unknown names.
bool kind_from_name(std::string_view name, GateKind& kind);

/// RY, PHASE and RZ carry an angle; the rest carry none.
bool is_parametric(GateKind kind);
/// Diagonal in the computational basis (PHASE, RZ, Z, S, SDG).
bool is_diagonal_kind(GateKind kind);

/// 2x2 matrix of an uncontrolled gate.
///   RY(t)    = [[cos t/2, sin t/2], [-sin t/2, cos t/2]]
///   RZ(t)    = diag(e^{-it/2}, e^{it/2})
///   PHASE(a) = diag(1, e^{ia})
CMatrix gate_matrix(GateKind kind, double angle = 0.0);

struct Control {
    int qubit = 0;
    bool positive = true;

    bool operator==(const Control&) const = default;
};

struct Gate {
    GateKind kind = GateKind::X;
    int target = 0;
    std::vector<Control> controls;
    double angle = 0.0;  // used by parametric kinds only

    bool operator==(const Gate&) const = default;

    [[nodiscard]] CMatrix matrix() const { return gate_matrix(kind, angle); }
    /// Throws IndexOutOfRange on bad indices or repeated qubits.
    void validate(int n_qubits) const;
};

Gate make_gate(GateKind kind, int target, std::vector<Control> controls = {}, double angle = 0.0);

/// Inverse gate: same support, negated angle, S <-> SDG.
Gate inverse(const Gate& g);

/// Controls sorted by qubit; used to compare control sets.
std::vector<Control> sorted_controls(std::vector<Control> controls);
bool same_support(const Gate& a, const Gate& b);

struct Circuit {
    int n_qubits = 1;
    std::vector<Gate> gates;  // time order
    Complex global_phase{1.0, 0.0};

    bool operator==(const Circuit&) const = default;

    void validate() const;
};

/// Inverse circuit: reversed order, inverted gates, conjugated phase.
Circuit inverse(const Circuit& c);

/// Left-multiplies `m` (dimension 2^n) by the embedded gate.
void apply_gate(CMatrix& m, const Gate& gate, int n);

/// 2^n x 2^n matrix of the gate; identity wherever the controls do not match.
CMatrix embed(const Gate& gate, int n);

/// global_phase * G_last * ... * G_first
CMatrix simulate(const Circuit& c);

/// Gate-class histogram. Classes: CZ, CNOT (one control), MCZ, MCX (two or
/// more controls), MCRY, MCPHASE (any number of controls; S/SDG included),
/// MCRZ, MCY, MCH, and `single` for every uncontrolled gate.
using Histogram = std::map<std::string, std::size_t>;
std::string gate_class(const Gate& g);
Histogram counts(const Circuit& c);
std::size_t total(const Histogram& h);
std::size_t count_of(const Histogram& h, const std::string& cls);

// Text format:
//   qubits N
//   phase re,im
//   gate <KIND> target=<t> [controls=<+q|-q>,...] params=[<p1>]
void write_circuit(std::ostream& out, const Circuit& c);
std::string serialize(const Circuit& c);
Circuit read_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);
Circuit read_circuit_file(const std::string& path);

}  // namespace jbhs
