#include "jbhs/diagonal.hpp"

#include "jbhs/errors.hpp"

namespace jbhs {

std::vector<std::uint8_t> sign_to_bits(const SignDiagonal& d) {
    std::vector<std::uint8_t> bits(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) bits[k] = d[k] == -1 ? 1 : 0;
    return bits;
}

ZTermSet anf_decompose(const std::vector<std::uint8_t>& bits, int n) {
    if (n < 0 || n > 24 || bits.size() != (std::size_t{1} << n)) {
        throw BadDimension("truth table length must be 2^n");
    }
    // In-place Moebius transform: coeff[m] = XOR of bits[s] over s subset of m.
    std::vector<std::uint8_t> coeff(bits.begin(), bits.end());
    for (auto& c : coeff) c &= 1;
    for (std::size_t step = 1; step < coeff.size(); step <<= 1)
        for (std::size_t m = 0; m < coeff.size(); ++m)
            if (m & step) coeff[m] ^= coeff[m ^ step];

    ZTermSet out;
    out.has_global_minus = coeff[0] != 0;
    for (std::size_t m = 1; m < coeff.size(); ++m) {
        if (!coeff[m]) continue;
        QubitSet term;
        for (int q = 0; q < n; ++q)
            if (m & (std::size_t{1} << (n - 1 - q))) term.push_back(q);
        out.terms.push_back(std::move(term));
    }
    return out;
}

DiagonalCircuit emit_diag_circuit(const ZTermSet& t, int n) {
    DiagonalCircuit out;
    for (const auto& term : t.terms) {
        if (term.empty()) throw PreconditionError("empty Z term");
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i] < 0 || term[i] >= n) throw IndexOutOfRange("Z term qubit out of range");
            if (i > 0 && term[i] <= term[i - 1]) {
                throw PreconditionError("Z term qubits must be strictly increasing");
            }
        }
        std::vector<Control> controls;
        for (std::size_t i = 0; i + 1 < term.size(); ++i) controls.push_back({term[i], true});
        out.gates.push_back(make_gate(GateKind::Z, term.back(), std::move(controls)));
    }
    if (t.has_global_minus) out.global_phase = -1.0;
    return out;
}

DiagonalCircuit synthesize_diagonal(const SignDiagonal& d) {
    int n = 0;
    is_power_of_two(d.size(), &n);
    return emit_diag_circuit(anf_decompose(sign_to_bits(d), n), n);
}

}  // namespace jbhs
