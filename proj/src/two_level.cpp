#include "jbhs/two_level.hpp"

#include <bit>

#include "jbhs/errors.hpp"

namespace jbhs {

namespace {

std::size_t qubit_bit(int qubit, int n) { return std::size_t{1} << (n - 1 - qubit); }

int bit_to_qubit(std::size_t bit, int n) { return n - 1 - std::countr_zero(bit); }

void check_states(std::size_t p, std::size_t q, int n) {
    if (n < 1 || n > 24) throw BadDimension("qubit count out of range");
    const std::size_t dim = std::size_t{1} << n;
    if (!(p < q) || q >= dim) {
        throw IndexOutOfRange("state pair (" + std::to_string(p) + "," + std::to_string(q) +
                              ") invalid for " + std::to_string(n) + " qubits");
    }
}

struct Ladder {
    std::vector<Gate> forward;  // moves the walked endpoint next to the other
    std::size_t anchor = 0;     // state with 0 on the pivot qubit (carries p)
    int pivot = 0;
};

Ladder build_ladder(std::size_t p, std::size_t q, int n) {
    const GrayPath path = gray_path(p, q, n);
    const auto& s = path.states;
    const std::size_t l = s.size() - 1;
    Ladder lad;

    if (l == 1) {
        lad.anchor = p;
        lad.pivot = path.pivot_qubit;
        return lad;
    }

    const std::size_t last_bit = s[l] ^ s[l - 1];
    if ((s[l - 1] & last_bit) == 0) {
        // Walk p forward to s[l-1]; the pair (s[l-1], q) has p's image on the 0 side.
        for (std::size_t k = 0; k + 1 < l; ++k) {
            const int flip = bit_to_qubit(s[k] ^ s[k + 1], n);
            lad.forward.push_back(controlled_on_state(GateKind::X, flip, s[k], n));
        }
        lad.anchor = s[l - 1];
        lad.pivot = bit_to_qubit(last_bit, n);
    } else {
        // Walk q backward to s[1]; the first flip is p's leading differing bit,
        // where p has a 0.
        for (std::size_t k = l; k >= 2; --k) {
            const int flip = bit_to_qubit(s[k] ^ s[k - 1], n);
            lad.forward.push_back(controlled_on_state(GateKind::X, flip, s[k], n));
        }
        lad.anchor = p;
        lad.pivot = bit_to_qubit(s[0] ^ s[1], n);
    }
    return lad;
}

std::vector<Gate> wrap(const Ladder& lad, std::vector<Gate> core) {
    std::vector<Gate> out = lad.forward;
    out.insert(out.end(), core.begin(), core.end());
    out.insert(out.end(), lad.forward.rbegin(), lad.forward.rend());
    return out;
}

}  // namespace

std::pair<std::size_t, std::size_t> target_control_to_states(int i, std::size_t j, int n) {
    if (n < 1 || n > 24 || i < 0 || i >= n || j >= (std::size_t{1} << (n - 1))) {
        throw IndexOutOfRange("target/control (" + std::to_string(i) + "," + std::to_string(j) +
                              ") invalid for " + std::to_string(n) + " qubits");
    }
    const int pos = n - 1 - i;  // bit position counted from the LSB
    const std::size_t low_mask = (std::size_t{1} << pos) - 1;
    const std::size_t a = ((j & ~low_mask) << 1) | (j & low_mask);
    return {a, a | (std::size_t{1} << pos)};
}

std::optional<TargetControl> states_to_target_control(std::size_t p, std::size_t q, int n) {
    check_states(p, q, n);
    const std::size_t diff = p ^ q;
    if (std::popcount(diff) != 1) return std::nullopt;
    const int pos = std::countr_zero(diff);
    const std::size_t low_mask = (std::size_t{1} << pos) - 1;
    const std::size_t j = ((p >> (pos + 1)) << pos) | (p & low_mask);
    return TargetControl{n - 1 - pos, j};
}

int hamming_distance(std::size_t p, std::size_t q) { return std::popcount(p ^ q); }

GrayPath gray_path(std::size_t p, std::size_t q, int n) {
    check_states(p, q, n);
    GrayPath path;
    path.states.push_back(p);
    std::size_t cur = p;
    const std::size_t diff = p ^ q;
    for (int qubit = 0; qubit < n; ++qubit) {
        const std::size_t bit = qubit_bit(qubit, n);
        if (!(diff & bit)) continue;
        cur ^= bit;
        path.states.push_back(cur);
        path.pivot_qubit = qubit;
    }
    return path;
}

Gate controlled_on_state(GateKind kind, int target, std::size_t state, int n, double angle) {
    std::vector<Control> controls;
    controls.reserve(static_cast<std::size_t>(n - 1));
    for (int qubit = 0; qubit < n; ++qubit) {
        if (qubit == target) continue;
        controls.push_back({qubit, (state & qubit_bit(qubit, n)) != 0});
    }
    return make_gate(kind, target, std::move(controls), angle);
}

std::vector<Gate> emit_two_level(const RotationStep& step, int n) {
    check_states(step.p, step.q, n);
    const Ladder lad = build_ladder(step.p, step.q, n);
    std::vector<Gate> core;
    core.push_back(controlled_on_state(GateKind::RY, lad.pivot, lad.anchor, n, step.theta));
    if (step.has_phase) {
        core.push_back(controlled_on_state(GateKind::PHASE, lad.pivot, lad.anchor, n, -step.alpha));
    }
    return wrap(lad, std::move(core));
}

std::vector<Gate> emit_two_level_dagger(const RotationStep& step, int n) {
    check_states(step.p, step.q, n);
    const Ladder lad = build_ladder(step.p, step.q, n);
    std::vector<Gate> core;
    if (step.has_phase) {
        core.push_back(controlled_on_state(GateKind::PHASE, lad.pivot, lad.anchor, n, step.alpha));
    }
    core.push_back(controlled_on_state(GateKind::RY, lad.pivot, lad.anchor, n, -step.theta));
    return wrap(lad, std::move(core));
}

}  // namespace jbhs
