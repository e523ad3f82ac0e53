#include "jbhs/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jbhs {

namespace {

constexpr double kAngleEps = 1e-12;
constexpr std::size_t kMaxWindow = 24;

bool is_self_inverse(GateKind k) {
    return k == GateKind::X || k == GateKind::Y || k == GateKind::Z || k == GateKind::H;
}

bool is_identity_rotation(const Gate& g) {
    if (!is_parametric(g.kind)) return false;
    const double period = g.kind == GateKind::PHASE ? 2 * std::numbers::pi : 4 * std::numbers::pi;
    return std::abs(std::remainder(g.angle, period)) <= kAngleEps;
}

bool cancels(const Gate& a, const Gate& b) {
    if (is_self_inverse(a.kind) && a.kind == b.kind) return true;
    return (a.kind == GateKind::S && b.kind == GateKind::SDG) ||
           (a.kind == GateKind::SDG && b.kind == GateKind::S);
}

std::vector<Gate> cancel_pass(const std::vector<Gate>& gates) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (const Gate& g : gates) {
        if (is_identity_rotation(g)) continue;
        if (!out.empty() && same_support(out.back(), g)) {
            Gate& top = out.back();
            if (cancels(top, g)) {
                out.pop_back();
                continue;
            }
            if (is_parametric(g.kind) && top.kind == g.kind) {
                top.angle += g.angle;
                if (is_identity_rotation(top)) out.pop_back();
                continue;
            }
        }
        out.push_back(g);
    }
    return out;
}

// A diagonal gate that acts as the identity unless every control in `ctl` is
// satisfied.
bool fires_only_within(const Gate& d, const std::vector<Control>& ctl) {
    if (!is_diagonal_kind(d.kind) || d.kind == GateKind::RZ) return false;
    return std::all_of(ctl.begin(), ctl.end(), [&](const Control& c) {
        if (d.target == c.qubit) return c.positive;
        return std::any_of(d.controls.begin(), d.controls.end(),
                           [&](const Control& dc) { return dc == c; });
    });
}

bool product_is_identity(const std::vector<Gate>& gates, std::size_t a_begin, std::size_t a_end,
                         std::size_t b_begin, std::size_t b_end) {
    CMatrix m = CMatrix::identity(2);
    for (std::size_t i = a_begin; i < a_end; ++i) m = mat_mul(gates[i].matrix(), m);
    for (std::size_t i = b_begin; i < b_end; ++i) m = mat_mul(gates[i].matrix(), m);
    return max_abs_diff(m, CMatrix::identity(2)) <= kAngleEps;
}

}  // namespace

Circuit cancel_adjacent_inverses(const Circuit& c) {
    Circuit out = c;
    while (true) {
        auto next = cancel_pass(out.gates);
        if (next == out.gates) break;
        out.gates = std::move(next);
    }
    return out;
}

Circuit strip_conjugate_controls(const Circuit& c) {
    Circuit out = c;
    auto& gates = out.gates;
    std::size_t i = 0;
    while (i < gates.size()) {
        const Gate& head = gates[i];
        if (head.controls.empty()) {
            ++i;
            continue;
        }
        const std::vector<Control> ctl = head.controls;
        auto is_ab = [&](std::size_t j) { return same_support(gates[j], head); };
        auto is_d = [&](std::size_t j) { return fires_only_within(gates[j], ctl); };

        std::size_t run_end = i;
        while (run_end < gates.size() && run_end - i < kMaxWindow && (is_ab(run_end) || is_d(run_end)))
            ++run_end;

        bool matched = false;
        for (std::size_t a_end = i + 1; a_end < run_end && !matched; ++a_end) {
            if (!is_ab(a_end - 1)) break;
            for (std::size_t d_end = a_end + 1; d_end < run_end && !matched; ++d_end) {
                if (!is_d(d_end - 1)) break;
                for (std::size_t b_end = d_end + 1; b_end <= run_end; ++b_end) {
                    if (!is_ab(b_end - 1)) break;
                    if (product_is_identity(gates, i, a_end, d_end, b_end)) {
                        for (std::size_t k = i; k < a_end; ++k) gates[k].controls.clear();
                        for (std::size_t k = d_end; k < b_end; ++k) gates[k].controls.clear();
                        i = b_end;
                        matched = true;
                        break;
                    }
                }
            }
        }
        if (!matched) ++i;
    }
    return out;
}

Circuit rewrite_cz_cnot(const Circuit& c, TargetLibrary lib) {
    const GateKind from = lib == TargetLibrary::CNOT ? GateKind::Z : GateKind::X;
    const GateKind to = lib == TargetLibrary::CNOT ? GateKind::X : GateKind::Z;
    // Z = RY(pi/2) X RY(-pi/2) and X = RY(-pi/2) Z RY(pi/2) as matrix products.
    const double first = lib == TargetLibrary::CNOT ? -std::numbers::pi / 2 : std::numbers::pi / 2;

    Circuit out = c;
    out.gates.clear();
    for (const Gate& g : c.gates) {
        if (g.kind != from || g.controls.empty()) {
            out.gates.push_back(g);
            continue;
        }
        out.gates.push_back(make_gate(GateKind::RY, g.target, {}, first));
        out.gates.push_back(make_gate(to, g.target, g.controls));
        out.gates.push_back(make_gate(GateKind::RY, g.target, {}, -first));
    }
    return cancel_adjacent_inverses(out);
}

Circuit optimize(const Circuit& c, OptLevel level) {
    switch (level) {
        case OptLevel::None:
            return c;
        case OptLevel::Basic:
            return cancel_adjacent_inverses(c);
        case OptLevel::Full: {
            Circuit cur = c;
            while (true) {
                Circuit next = cancel_adjacent_inverses(strip_conjugate_controls(cur));
                if (next == cur) return cur;
                cur = std::move(next);
            }
        }
    }
    return c;
}

}  // namespace jbhs
