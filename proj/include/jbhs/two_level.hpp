#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jbhs/circuit.hpp"
#include "jbhs/jacobi.hpp"

namespace jbhs {

/// Basis states touched by C^{n-1}U with target qubit i and control string j:
/// j with a 0 (resp. 1) inserted at qubit position i.
std::pair<std::size_t, std::size_t> target_control_to_states(int i, std::size_t j, int n);

struct TargetControl {
    int target = 0;
    std::size_t control_string = 0;

    bool operator==(const TargetControl&) const = default;
};

/// Inverse of target_control_to_states; empty unless p and q differ in one bit.
std::optional<TargetControl> states_to_target_control(std::size_t p, std::size_t q, int n);

struct GrayPath {
    std::vector<std::size_t> states;  // p ... q, one bit flipped per step
    int pivot_qubit = 0;              // qubit flipped by the final step
};

/// Flips the differing bits of p one at a time, most significant first.
GrayPath gray_path(std::size_t p, std::size_t q, int n);

/// Number of bits in which p and q differ.
int hamming_distance(std::size_t p, std::size_t q);

/// Fully controlled gate acting on the pair of basis states (a, a | bit of
/// target); the controls take the polarities of `state`.
Gate controlled_on_state(GateKind kind, int target, std::size_t state, int n, double angle = 0.0);

/// Time-ordered gates whose product is the two-level embedding of
/// Q' = R(-alpha) G(theta) on (p, q). A multi-controlled X ladder walks one
/// endpoint along the gray path until it sits next to the other, the rotation
/// pair acts there, and the ladder is undone. The walked endpoint is chosen so
/// the state carrying p has a 0 on the pivot qubit, which keeps the rotation
/// block in (p, q) orientation.
std::vector<Gate> emit_two_level(const RotationStep& step, int n);

/// Same ladder with the inverse rotation pair: the embedding of Q'^dag.
std::vector<Gate> emit_two_level_dagger(const RotationStep& step, int n);

}  // namespace jbhs
