#pragma once

#include "jbhs/circuit.hpp"

namespace jbhs {

enum class OptLevel { None, Basic, Full };
enum class TargetLibrary { CZ, CNOT };

/// Removes list-adjacent gate pairs that multiply to the identity on the same
/// target and control set (X X, Y Y, Z Z, H H, S SDG, RY(t) RY(-t), ...),
/// fuses adjacent same-axis rotations on the same support, and drops
/// rotations whose angle is an identity (0 mod 4pi for RY/RZ, 0 mod 2pi for
/// PHASE). Runs to a fixpoint.
Circuit cancel_adjacent_inverses(const Circuit& c);

/// Finds windows A_1..A_a  D_1..D_d  B_1..B_b where every A and B gate shares
/// one target and one nonempty control set C, every D gate is diagonal and
/// only fires when C is satisfied, and B_b ... B_1 A_a ... A_1 = I. The
/// controls of the A and B gates are then removed; outside C the window
/// reduces to B A = I, inside C nothing changes.
Circuit strip_conjugate_controls(const Circuit& c);

/// CNOT library: every controlled Z becomes RY(-pi/2), controlled X,
/// RY(pi/2) on its target. CZ library: every controlled X becomes RY(pi/2),
/// controlled Z, RY(-pi/2). Followed by cancel_adjacent_inverses.
Circuit rewrite_cz_cnot(const Circuit& c, TargetLibrary lib);

/// None: unchanged. Basic: cancel_adjacent_inverses. Full: strip and cancel
/// repeated until the circuit stops changing.
Circuit optimize(const Circuit& c, OptLevel level);

}  // namespace jbhs
