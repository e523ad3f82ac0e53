#include <doctest.h>

#include <numbers>

#include "jbhs/baselines.hpp"
#include "jbhs/errors.hpp"
#include "jbhs/optimizer.hpp"
#include "test_support.hpp"

using namespace jbhs;

namespace {
constexpr double pi = std::numbers::pi;
const double r2 = 1.0 / std::numbers::sqrt2;

CMatrix named(GateKind k) { return gate_matrix(k); }

// Compares after dividing out the phase ratio of the largest entry.
double phase_free_diff(const CMatrix& a, const CMatrix& b) {
    const Complex ph = relative_phase(a, b);
    return max_abs_diff(scaled(a, 1.0 / ph), b);
}

void check_sequence(const Circuit& c, const std::vector<std::pair<GateKind, double>>& expect) {
    REQUIRE(c.gates.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(c.gates[i].kind == expect[i].first);
        CHECK(std::abs(c.gates[i].angle - expect[i].second) <= 1e-12);
    }
}
}  // namespace

TEST_CASE("h2 parameters of named gates") {
    auto h = h2_params(named(GateKind::H));
    CHECK(h.theta == doctest::Approx(pi / 4));
    CHECK(h.alpha == doctest::Approx(0.0));
    auto y = h2_params(named(GateKind::Y));
    CHECK(y.theta == doctest::Approx(pi / 2));
    CHECK(y.alpha == doctest::Approx(pi / 2));
    auto x = h2_params(named(GateKind::X));
    CHECK(x.theta == doctest::Approx(pi / 2));
    CHECK(x.alpha == doctest::Approx(0.0));
    auto z = h2_params(named(GateKind::Z));
    CHECK(z.theta == doctest::Approx(0.0));
}

TEST_CASE("h2 parameter errors") {
    CHECK_THROWS_AS(h2_params(CMatrix::identity(2)), IsPlusMinusIdentity);
    CHECK_THROWS_AS(h2_params(scaled(CMatrix::identity(2), -1.0)), IsPlusMinusIdentity);
    CHECK_THROWS_AS(h2_params(named(GateKind::S)), NotHermitianUnitary);
    CHECK_THROWS_AS(h2_params(CMatrix::identity(4)), NotHermitianUnitary);
    try {
        h2_params(scaled(CMatrix::identity(2), -1.0));
    } catch (const IsPlusMinusIdentity& e) {
        CHECK(e.sign() == -1);
    }
}

TEST_CASE("RY(-t) Z RY(t) is H(t, 0)") {
    const double t = 0.83;
    Circuit c;
    c.n_qubits = 1;
    c.gates = {make_gate(GateKind::RY, 0, {}, t), make_gate(GateKind::Z, 0),
               make_gate(GateKind::RY, 0, {}, -t)};
    CHECK(max_abs_diff(simulate(c), H2Params{t, 0.0}.matrix()) < 1e-15);
}

TEST_CASE("jbhs_cu sequences for the named gates") {
    check_sequence(jbhs_cu(h2_params(named(GateKind::H)), 1),
                   {{GateKind::RY, pi / 4}, {GateKind::Z, 0}, {GateKind::RY, -pi / 4}});
    check_sequence(jbhs_cu(h2_params(named(GateKind::Y)), 1),
                   {{GateKind::SDG, 0}, {GateKind::RY, pi / 2}, {GateKind::Z, 0},
                    {GateKind::RY, -pi / 2}, {GateKind::S, 0}});
    check_sequence(jbhs_cu(h2_params(named(GateKind::X)), 1),
                   {{GateKind::RY, pi / 2}, {GateKind::Z, 0}, {GateKind::RY, -pi / 2}});
    check_sequence(jbhs_cu(h2_params(named(GateKind::Z)), 1), {{GateKind::Z, 0}});
}

TEST_CASE("jbhs_cu with two controls is a Toffoli") {
    const Circuit c = jbhs_cu(h2_params(named(GateKind::X)), 2);
    CHECK(c.n_qubits == 3);
    CHECK(counts(c).at("MCZ") == 1);
    CHECK(max_abs_diff(simulate(c), controlled_matrix(named(GateKind::X), 2)) < 1e-14);
    CHECK_THROWS_AS(jbhs_cu(h2_params(named(GateKind::X)), 0), PreconditionError);
}

TEST_CASE("barenco sequences") {
    check_sequence(barenco_cu(h2_params(named(GateKind::X))), {{GateKind::X, 0}});
    check_sequence(barenco_cu(h2_params(named(GateKind::H))),
                   {{GateKind::RY, -pi / 4}, {GateKind::X, 0}, {GateKind::RY, pi / 4}});
    check_sequence(barenco_cu(h2_params(named(GateKind::Y))),
                   {{GateKind::RZ, -pi / 2}, {GateKind::X, 0}, {GateKind::RZ, pi / 2}});
}

TEST_CASE("qsd counts") {
    CHECK(counts(qsd_cu(h2_params(named(GateKind::H)))) == Histogram{{"CNOT", 2}, {"single", 6}});
    CHECK(counts(qsd_cu(h2_params(named(GateKind::X)))) == Histogram{{"CNOT", 2}, {"single", 6}});
    CHECK(counts(qsd_cu(h2_params(named(GateKind::Z)))) == Histogram{{"CNOT", 2}, {"single", 4}});
    // The literal sequence for CY has eight single-qubit gates.
    CHECK(counts(qsd_cu(h2_params(named(GateKind::Y)))) == Histogram{{"CNOT", 2}, {"single", 8}});
}

TEST_CASE("CNOT^{2,1} gates act with control on q1") {
    const Circuit c = qsd_cu(h2_params(named(GateKind::H)));
    std::size_t seen = 0;
    for (const auto& g : c.gates)
        if (g.kind == GateKind::X && !g.controls.empty()) {
            CHECK(g.target == 0);
            CHECK(g.controls == std::vector<Control>{{1, true}});
            ++seen;
        }
    CHECK(seen == 2);
}

TEST_CASE("controlled_matrix and relative_phase") {
    const CMatrix ch = controlled_matrix(named(GateKind::H), 1);
    CHECK(ch(2, 2) == Complex(r2));
    CHECK(ch(3, 3) == Complex(-r2));
    CHECK(ch(0, 0) == Complex(1.0));
    const Complex ph = std::polar(1.0, 0.4);
    CHECK(std::abs(relative_phase(scaled(ch, ph), ch) - ph) < 1e-15);
    CHECK_THROWS_AS(controlled_matrix(CMatrix::identity(4), 1), DimensionMismatch);
}

TEST_CASE("closed-form counts") {
    CHECK(formula_mcu_counts(7, BaselineMethod::Barenco) == GateCountPair{122, 124});
    CHECK(formula_mcu_counts(8, BaselineMethod::Barenco) == GateCountPair{170, 172});
    CHECK(formula_mcu_counts(9, BaselineMethod::Jbhs) == GateCountPair{168, 146});
    CHECK(formula_mcu_counts(7, BaselineMethod::Jbhs) == GateCountPair{120, 98});
    CHECK_FALSE(*table3_reported(7, BaselineMethod::Jbhs) == formula_mcu_counts(7, BaselineMethod::Jbhs));
    CHECK(*table3_reported(9, BaselineMethod::Jbhs) == formula_mcu_counts(9, BaselineMethod::Jbhs));
    CHECK_FALSE(table3_reported(10, BaselineMethod::Jbhs).has_value());
    CHECK_THROWS_AS(formula_mcu_counts(4, BaselineMethod::Jbhs), PreconditionError);
}

TEST_CASE("property: baselines reproduce controlled H(theta, alpha) on a grid") {
    for (int i = 1; i < 12; ++i) {
        const double theta = pi * i / 12;
        for (int j = -5; j <= 6; ++j) {
            const double alpha = pi * j / 6;
            const H2Params p{theta, alpha};
            const CMatrix u = p.matrix();
            CHECK(is_hermitian(u, 1e-14));
            CHECK(is_unitary(u, 1e-14));

            const auto back = h2_params(u);
            CHECK(back.theta == doctest::Approx(theta).epsilon(1e-12));
            CHECK(std::abs(std::remainder(back.alpha - alpha, 2 * pi)) < 1e-12);

            for (int k = 1; k <= 3; ++k) {
                const Circuit c = jbhs_cu(p, k);
                CHECK(max_abs_diff(simulate(c), controlled_matrix(u, k)) < 1e-12);
                const auto h = counts(c);
                CHECK(total(h) == 1 + count_of(h, "single"));
            }
            const CMatrix cu = controlled_matrix(u, 1);
            CHECK(max_abs_diff(simulate(barenco_cu(p)), cu) < 1e-10);
            CHECK(max_abs_diff(simulate(qsd_cu(p)), cu) < 1e-10);
            CHECK(phase_free_diff(simulate(barenco_cu(p)), cu) < 1e-10);
        }
    }
}
