#pragma once

#include <optional>
#include <utility>

#include "jbhs/circuit.hpp"
#include "jbhs/matrix.hpp"

namespace jbhs {

/// Any 2x2 Hermitian unitary other than +I and -I can be written as
///
///   H(theta, alpha) = [[cos theta,            e^{-i alpha} sin theta],
///                      [e^{i alpha} sin theta, -cos theta          ]]
///
/// with theta in [0, pi]. theta here is a full angle while RY(theta) uses
/// half angles; the two meet in RY(-theta) Z RY(theta) = H(theta, 0).
struct H2Params {
    double theta = 0.0;
    double alpha = 0.0;

    [[nodiscard]] CMatrix matrix() const;
};

/// Throws NotHermitianUnitary, or IsPlusMinusIdentity for +I / -I.
H2Params h2_params(const CMatrix& u, double tol = 1e-10);

/// Controlled H(theta, alpha) on k+1 qubits: positive controls on 0..k-1,
/// target k. Time order PHASE(-alpha), RY(theta), C^kZ, RY(-theta),
/// PHASE(alpha), with the outer gates uncontrolled. Zero angles are omitted
/// and PHASE(+-pi/2) is written as S / SDG.
Circuit jbhs_cu(const H2Params& p, int k);

/// Two-qubit controlled H(theta, alpha) via one CNOT: RZ(-alpha),
/// RY(theta - pi/2), CNOT, RY(pi/2 - theta), RZ(alpha) on the target.
Circuit barenco_cu(const H2Params& p);

/// Two-qubit controlled H(theta, alpha) as a single-select multiplexer:
/// H(theta, alpha), PHASE(-alpha), RY(theta), S on q1, RZ(3pi/2) on q0,
/// CNOT(q1 -> q0), RZ(-3pi/2) on q0, CNOT(q1 -> q0), RY(-theta),
/// PHASE(alpha) on q1. H(theta, alpha) is written as H, X, Y or Z when it is
/// one of them and expanded into rotations otherwise.
Circuit qsd_cu(const H2Params& p);

/// Dense controlled-U with k positive controls on the leading qubits.
CMatrix controlled_matrix(const CMatrix& u, int k);

/// Largest-modulus entry ratio actual/expected, used to divide out a global
/// phase before comparing.
Complex relative_phase(const CMatrix& actual, const CMatrix& expected);

enum class BaselineMethod { Jbhs, Barenco };

struct GateCountPair {
    long long two_qubit = 0;  // CZ for JBHS, CNOT-equivalent for the other row
    long long single = 0;

    bool operator==(const GateCountPair&) const = default;
};

/// Closed-form counts for C^{n-2}U with a single-qubit Hermitian U:
/// JBHS (24n - 48, 24n - 70), Barenco (48n - 214, 48n - 212). Requires n >= 5.
GateCountPair formula_mcu_counts(int n, BaselineMethod method);

/// Published table entries for n in {7, 8, 9}; empty otherwise.
std::optional<GateCountPair> table3_reported(int n, BaselineMethod method);

}  // namespace jbhs
