#include "jbhs/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jbhs/errors.hpp"

namespace jbhs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleEps = 1e-12;

bool near_angle(double a, double b, double period) {
    return std::abs(std::remainder(a - b, period)) <= kAngleEps;
}

void push_phase(std::vector<Gate>& gates, int target, double angle) {
    if (near_angle(angle, 0.0, 2 * kPi)) return;
    if (near_angle(angle, kPi / 2, 2 * kPi)) {
        gates.push_back(make_gate(GateKind::S, target));
    } else if (near_angle(angle, -kPi / 2, 2 * kPi)) {
        gates.push_back(make_gate(GateKind::SDG, target));
    } else {
        gates.push_back(make_gate(GateKind::PHASE, target, {}, angle));
    }
}

void push_rotation(std::vector<Gate>& gates, GateKind kind, int target, double angle) {
    if (std::abs(angle) <= kAngleEps) return;
    gates.push_back(make_gate(kind, target, {}, angle));
}

// Sets global_phase so that simulate(c) reproduces `exact` including phase.
void record_phase(Circuit& c, const CMatrix& exact) {
    c.global_phase = 1.0;
    Complex ph = relative_phase(simulate(c), exact);
    ph /= std::abs(ph);
    Complex correction = 1.0 / ph;
    if (std::abs(correction - 1.0) <= kAngleEps) correction = 1.0;
    c.global_phase = correction;
}

}  // namespace

CMatrix H2Params::matrix() const {
    const double c = std::cos(theta), s = std::sin(theta);
    return {{c, std::polar(s, -alpha)}, {std::polar(s, alpha), -c}};
}

H2Params h2_params(const CMatrix& u, double tol) {
    if (u.dim() != 2) throw NotHermitianUnitary("expected a 2x2 matrix");
    if (!is_hermitian(u, tol) || !is_unitary(u, tol)) {
        throw NotHermitianUnitary("gate is not a Hermitian unitary");
    }
    if (max_abs_diff(u, CMatrix::identity(2)) <= tol) throw IsPlusMinusIdentity(+1);
    if (max_abs_diff(u, scaled(CMatrix::identity(2), -1.0)) <= tol) throw IsPlusMinusIdentity(-1);

    H2Params p;
    p.theta = std::acos(std::clamp(u(0, 0).real(), -1.0, 1.0));
    p.alpha = std::abs(u(1, 0)) > tol ? std::arg(u(1, 0)) : 0.0;
    return p;
}

Circuit jbhs_cu(const H2Params& p, int k) {
    if (k < 1) throw PreconditionError("jbhs_cu needs at least one control");
    Circuit c;
    c.n_qubits = k + 1;
    const int t = k;
    std::vector<Control> controls;
    for (int q = 0; q < k; ++q) controls.push_back({q, true});

    push_phase(c.gates, t, -p.alpha);
    push_rotation(c.gates, GateKind::RY, t, p.theta);
    c.gates.push_back(make_gate(GateKind::Z, t, controls));
    push_rotation(c.gates, GateKind::RY, t, -p.theta);
    push_phase(c.gates, t, p.alpha);
    return c;
}

Circuit barenco_cu(const H2Params& p) {
    Circuit c;
    c.n_qubits = 2;
    push_rotation(c.gates, GateKind::RZ, 1, -p.alpha);
    push_rotation(c.gates, GateKind::RY, 1, p.theta - kPi / 2);
    c.gates.push_back(make_gate(GateKind::X, 1, {{0, true}}));
    push_rotation(c.gates, GateKind::RY, 1, kPi / 2 - p.theta);
    push_rotation(c.gates, GateKind::RZ, 1, p.alpha);
    record_phase(c, controlled_matrix(p.matrix(), 1));
    return c;
}

Circuit qsd_cu(const H2Params& p) {
    Circuit c;
    c.n_qubits = 2;
    const CMatrix h = p.matrix();

    bool named = false;
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z}) {
        if (max_abs_diff(h, gate_matrix(k)) <= kAngleEps) {
            c.gates.push_back(make_gate(k, 1));
            named = true;
            break;
        }
    }
    if (!named) {
        push_phase(c.gates, 1, -p.alpha);
        push_rotation(c.gates, GateKind::RY, 1, p.theta);
        c.gates.push_back(make_gate(GateKind::Z, 1));
        push_rotation(c.gates, GateKind::RY, 1, -p.theta);
        push_phase(c.gates, 1, p.alpha);
    }

    push_phase(c.gates, 1, -p.alpha);
    push_rotation(c.gates, GateKind::RY, 1, p.theta);
    c.gates.push_back(make_gate(GateKind::S, 1));
    c.gates.push_back(make_gate(GateKind::RZ, 0, {}, 3 * kPi / 2));
    c.gates.push_back(make_gate(GateKind::X, 0, {{1, true}}));
    c.gates.push_back(make_gate(GateKind::RZ, 0, {}, -3 * kPi / 2));
    c.gates.push_back(make_gate(GateKind::X, 0, {{1, true}}));
    push_rotation(c.gates, GateKind::RY, 1, -p.theta);
    push_phase(c.gates, 1, p.alpha);
    record_phase(c, controlled_matrix(h, 1));
    return c;
}

CMatrix controlled_matrix(const CMatrix& u, int k) {
    if (u.dim() != 2) throw DimensionMismatch(u.dim(), 2);
    if (k < 0 || k > 20) throw PreconditionError("control count out of range");
    const std::size_t dim = std::size_t{2} << k;
    return embed_two_level(dim, dim - 2, dim - 1, u);
}

Complex relative_phase(const CMatrix& actual, const CMatrix& expected) {
    if (actual.dim() != expected.dim()) throw DimensionMismatch(actual.dim(), expected.dim());
    auto e = expected.entries();
    const auto it = std::max_element(e.begin(), e.end(), [](const Complex& a, const Complex& b) {
        return std::abs(a) < std::abs(b);
    });
    const auto idx = static_cast<std::size_t>(it - e.begin());
    if (std::abs(*it) == 0.0) return 1.0;
    return actual.entries()[idx] / *it;
}

GateCountPair formula_mcu_counts(int n, BaselineMethod method) {
    if (n < 5) throw PreconditionError("count formulas hold for n >= 5");
    const long long m = n;
    if (method == BaselineMethod::Jbhs) return {24 * m - 48, 24 * m - 70};
    return {48 * m - 214, 48 * m - 212};
}

std::optional<GateCountPair> table3_reported(int n, BaselineMethod method) {
    if (method == BaselineMethod::Jbhs) {
        switch (n) {
            case 7: return GateCountPair{84, 98};
            case 8: return GateCountPair{108, 122};
            case 9: return GateCountPair{168, 146};
            default: return std::nullopt;
        }
    }
    switch (n) {
        case 7: return GateCountPair{122, 124};
        case 8: return GateCountPair{170, 172};
        case 9: return GateCountPair{218, 220};
        default: return std::nullopt;
    }
}

}  // namespace jbhs
