#pragma once

#include <cstdint>
#include <vector>

#include "jbhs/circuit.hpp"
#include "jbhs/jacobi.hpp"

namespace jbhs {

// Sign diagonals are synthesized exactly over GF(2): a -1 at basis index k is
// bit 1, and the Moebius transform of that truth table gives the set of
// positively controlled Z gates whose product reproduces the signs.

/// A monomial of the ANF; qubits listed in increasing order.
using QubitSet = std::vector<int>;

struct ZTermSet {
    std::vector<QubitSet> terms;  // nonempty, distinct
    bool has_global_minus = false;

    bool operator==(const ZTermSet&) const = default;
};

/// bit k = 1 iff signs[k] == -1
std::vector<std::uint8_t> sign_to_bits(const SignDiagonal& d);

/// Algebraic normal form of k -> bits[k]; bits.size() must be 2^n.
ZTermSet anf_decompose(const std::vector<std::uint8_t>& bits, int n);

struct DiagonalCircuit {
    std::vector<Gate> gates;
    Complex global_phase{1.0, 0.0};
};

/// One Z per term, targeting the largest qubit of the term and positively
/// controlled by the others; a constant term becomes global phase -1.
DiagonalCircuit emit_diag_circuit(const ZTermSet& t, int n);

/// sign_to_bits, anf_decompose and emit_diag_circuit in one call.
DiagonalCircuit synthesize_diagonal(const SignDiagonal& d);

}  // namespace jbhs
