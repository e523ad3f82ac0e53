#include <doctest.h>

#include <algorithm>
#include <set>

#include "jbhs/diagonal.hpp"
#include "jbhs/errors.hpp"
#include "test_support.hpp"

using namespace jbhs;

namespace {

// Integer sign of basis state k under a term set: (-1)^(#terms fully set in k).
int term_sign(const ZTermSet& t, std::size_t k, int n) {
    int s = t.has_global_minus ? -1 : 1;
    for (const auto& term : t.terms) {
        bool all = true;
        for (int q : term)
            if (!((k >> (n - 1 - q)) & 1U)) all = false;
        if (all) s = -s;
    }
    return s;
}

// Integer sign of basis state k under the emitted gates; no floating point.
int circuit_sign(const DiagonalCircuit& c, std::size_t k, int n) {
    int s = c.global_phase.real() < 0 ? -1 : 1;
    for (const auto& g : c.gates) {
        bool fire = ((k >> (n - 1 - g.target)) & 1U) != 0;
        for (const auto& ctl : g.controls)
            if ((((k >> (n - 1 - ctl.qubit)) & 1U) != 0) != ctl.positive) fire = false;
        if (fire) s = -s;
    }
    return s;
}

SignDiagonal signs_from_mask(std::uint64_t mask, int n) {
    std::vector<int> s(std::size_t{1} << n);
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = (mask >> k) & 1U ? -1 : 1;
    return SignDiagonal(s);
}

}  // namespace

TEST_CASE("sign_to_bits") {
    CHECK(sign_to_bits(SignDiagonal({1, 1, 1, -1})) == std::vector<std::uint8_t>{0, 0, 0, 1});
    CHECK(sign_to_bits(SignDiagonal({1, -1, -1, 1})) == std::vector<std::uint8_t>{0, 1, 1, 0});
    CHECK(sign_to_bits(SignDiagonal({1, 1, 1, 1})) == std::vector<std::uint8_t>{0, 0, 0, 0});
}

TEST_CASE("anf of the AND function is one CZ term") {
    const ZTermSet t = anf_decompose({0, 0, 0, 1}, 2);
    CHECK_FALSE(t.has_global_minus);
    REQUIRE(t.terms.size() == 1);
    CHECK(t.terms[0] == QubitSet{0, 1});
}

TEST_CASE("anf of 0110 is Z on each qubit") {
    ZTermSet t = anf_decompose({0, 1, 1, 0}, 2);
    std::sort(t.terms.begin(), t.terms.end());
    CHECK(t.terms == std::vector<QubitSet>{{0}, {1}});
    CHECK_FALSE(t.has_global_minus);
}

TEST_CASE("all ones is a global minus") {
    const ZTermSet t = anf_decompose({1, 1, 1, 1}, 2);
    CHECK(t.has_global_minus);
    CHECK(t.terms.empty());
}

TEST_CASE("single qubit term maps through the MSB convention") {
    // bits for n = 3 where only qubit 0 (the MSB) matters: states 4..7 are -1
    const ZTermSet t = anf_decompose({0, 0, 0, 0, 1, 1, 1, 1}, 3);
    REQUIRE(t.terms.size() == 1);
    CHECK(t.terms[0] == QubitSet{0});
}

TEST_CASE("anf rejects bad lengths") {
    CHECK_THROWS_AS(anf_decompose({0, 1, 0}, 2), BadDimension);
}

TEST_CASE("emitted gates for the example term sets") {
    const DiagonalCircuit cz = emit_diag_circuit({{{0, 1}}, false}, 2);
    REQUIRE(cz.gates.size() == 1);
    CHECK(cz.gates[0].kind == GateKind::Z);
    CHECK(cz.gates[0].target == 1);
    CHECK(cz.gates[0].controls == std::vector<Control>{{0, true}});
    Circuit c{2, cz.gates, cz.global_phase};
    CHECK(simulate(c) == SignDiagonal({1, 1, 1, -1}).matrix());

    const DiagonalCircuit zz = emit_diag_circuit({{{0}, {1}}, false}, 2);
    Circuit c2{2, zz.gates, zz.global_phase};
    CHECK(simulate(c2) == SignDiagonal({1, -1, -1, 1}).matrix());

    const DiagonalCircuit minus = emit_diag_circuit({{}, true}, 1);
    CHECK(minus.gates.empty());
    CHECK(minus.global_phase == Complex(-1.0));

    CHECK_THROWS_AS(emit_diag_circuit({{{2}}, false}, 2), IndexOutOfRange);
    CHECK_THROWS_AS(emit_diag_circuit({{{}}, false}, 2), PreconditionError);
}

TEST_CASE("property: exhaustive reconstruction for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t cases = std::uint64_t{1} << (std::size_t{1} << n);
        const std::size_t dim = std::size_t{1} << n;
        std::size_t failures = 0;
        for (std::uint64_t mask = 0; mask < cases; ++mask) {
            const SignDiagonal d = signs_from_mask(mask, n);
            const ZTermSet t = anf_decompose(sign_to_bits(d), n);
            const DiagonalCircuit c = synthesize_diagonal(d);
            if (t.terms.size() > dim - 1) ++failures;
            for (std::size_t k = 0; k < dim; ++k) {
                if (term_sign(t, k, n) != d[k]) ++failures;
                if (circuit_sign(c, k, n) != d[k]) ++failures;
            }
        }
        CHECK(failures == 0);
    }
}

TEST_CASE("property: anf is linear over GF(2)") {
    std::mt19937_64 rng(3);
    const int n = 4;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint8_t> a(16), b(16), x(16);
        for (std::size_t k = 0; k < 16; ++k) {
            a[k] = rng() & 1U;
            b[k] = rng() & 1U;
            x[k] = a[k] ^ b[k];
        }
        const auto ta = anf_decompose(a, n), tb = anf_decompose(b, n), tx = anf_decompose(x, n);
        std::set<QubitSet> sym(ta.terms.begin(), ta.terms.end());
        for (const auto& t : tb.terms)
            if (!sym.erase(t)) sym.insert(t);
        CHECK(std::set<QubitSet>(tx.terms.begin(), tx.terms.end()) == sym);
        CHECK(tx.has_global_minus == (ta.has_global_minus != tb.has_global_minus));
    }
}

TEST_CASE("property: simulated diagonal circuits match exactly") {
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> s(std::size_t{1} << n);
            for (auto& v : s) v = (rng() & 1U) ? -1 : 1;
            const SignDiagonal d(s);
            const DiagonalCircuit dc = synthesize_diagonal(d);
            Circuit c{n, dc.gates, dc.global_phase};
            CHECK(simulate(c) == d.matrix());
        }
    }
}
