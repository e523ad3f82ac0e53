#include "jbhs/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "jbhs/errors.hpp"

namespace jbhs {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 9> kNames{{
    {GateKind::RY, "RY"},
    {GateKind::PHASE, "PHASE"},
    {GateKind::RZ, "RZ"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::SDG, "SDG"},
}};

}  // namespace

std::string_view kind_name(GateKind kind) {
    for (const auto& [k, name] : kNames)
        if (k == kind) return name;
    return "?";
}

bool kind_from_name(std::string_view name, GateKind& kind) {
    for (const auto& [k, n] : kNames) {
        if (n == name) {
            kind = k;
            return true;
        }
    }
    return false;
}

bool is_parametric(GateKind kind) {
    return kind == GateKind::RY || kind == GateKind::PHASE || kind == GateKind::RZ;
}

bool is_diagonal_kind(GateKind kind) {
    switch (kind) {
        case GateKind::PHASE:
        case GateKind::RZ:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::SDG:
            return true;
        default:
            return false;
    }
}

CMatrix gate_matrix(GateKind kind, double angle) {
    using namespace std::complex_literals;
    switch (kind) {
        case GateKind::RY: {
            const double c = std::cos(angle / 2), s = std::sin(angle / 2);
            return {{c, s}, {-s, c}};
        }
        case GateKind::PHASE:
            return {{1.0, 0.0}, {0.0, std::polar(1.0, angle)}};
        case GateKind::RZ:
            return {{std::polar(1.0, -angle / 2), 0.0}, {0.0, std::polar(1.0, angle / 2)}};
        case GateKind::X:
            return {{0.0, 1.0}, {1.0, 0.0}};
        case GateKind::Y:
            return {{0.0, -1i}, {1i, 0.0}};
        case GateKind::Z:
            return {{1.0, 0.0}, {0.0, -1.0}};
        case GateKind::H: {
            const double r = 1.0 / std::numbers::sqrt2;
            return {{r, r}, {r, -r}};
        }
        case GateKind::S:
            return {{1.0, 0.0}, {0.0, 1i}};
        case GateKind::SDG:
            return {{1.0, 0.0}, {0.0, -1i}};
    }
    throw Error("unknown gate kind");
}

void Gate::validate(int n_qubits) const {
    auto check = [n_qubits](int q) {
        if (q < 0 || q >= n_qubits) {
            throw IndexOutOfRange("qubit " + std::to_string(q) + " out of range for " +
                                  std::to_string(n_qubits) + " qubits");
        }
    };
    check(target);
    for (std::size_t i = 0; i < controls.size(); ++i) {
        check(controls[i].qubit);
        if (controls[i].qubit == target) throw IndexOutOfRange("control on the target qubit");
        for (std::size_t j = 0; j < i; ++j)
            if (controls[j].qubit == controls[i].qubit)
                throw IndexOutOfRange("repeated control qubit");
    }
    if (!std::isfinite(angle)) throw PreconditionError("gate angle must be finite");
}

Gate make_gate(GateKind kind, int target, std::vector<Control> controls, double angle) {
    Gate g;
    g.kind = kind;
    g.target = target;
    g.controls = std::move(controls);
    g.angle = is_parametric(kind) ? angle : 0.0;
    return g;
}

Gate inverse(const Gate& g) {
    Gate out = g;
    if (is_parametric(g.kind)) out.angle = -g.angle;
    if (g.kind == GateKind::S) out.kind = GateKind::SDG;
    if (g.kind == GateKind::SDG) out.kind = GateKind::S;
    return out;
}

std::vector<Control> sorted_controls(std::vector<Control> controls) {
    std::sort(controls.begin(), controls.end(),
              [](const Control& a, const Control& b) { return a.qubit < b.qubit; });
    return controls;
}

bool same_support(const Gate& a, const Gate& b) {
    return a.target == b.target && a.controls.size() == b.controls.size() &&
           sorted_controls(a.controls) == sorted_controls(b.controls);
}

void Circuit::validate() const {
    if (n_qubits < 1 || n_qubits > 20) {
        throw BadDimension("qubit count must be in [1, 20], got " + std::to_string(n_qubits));
    }
    if (std::abs(std::abs(global_phase) - 1.0) > 1e-12) {
        throw PreconditionError("global phase must have unit modulus");
    }
    for (const auto& g : gates) g.validate(n_qubits);
}

Circuit inverse(const Circuit& c) {
    Circuit out;
    out.n_qubits = c.n_qubits;
    out.global_phase = std::conj(c.global_phase);
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) out.gates.push_back(inverse(*it));
    return out;
}

void apply_gate(CMatrix& m, const Gate& gate, int n) {
    gate.validate(n);
    const std::size_t dim = std::size_t{1} << n;
    if (m.dim() != dim) throw DimensionMismatch(m.dim(), dim);

    std::size_t care = 0, want = 0;
    for (const auto& c : gate.controls) {
        const std::size_t bit = std::size_t{1} << (n - 1 - c.qubit);
        care |= bit;
        if (c.positive) want |= bit;
    }
    const std::size_t tbit = std::size_t{1} << (n - 1 - gate.target);
    const CMatrix u = gate.matrix();
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);

    for (std::size_t a = 0; a < dim; ++a) {
        if ((a & tbit) != 0 || (a & care) != want) continue;
        const std::size_t b = a | tbit;
        for (std::size_t col = 0; col < dim; ++col) {
            const Complex va = m(a, col), vb = m(b, col);
            m(a, col) = u00 * va + u01 * vb;
            m(b, col) = u10 * va + u11 * vb;
        }
    }
}

CMatrix embed(const Gate& gate, int n) {
    CMatrix m = CMatrix::identity(std::size_t{1} << n);
    apply_gate(m, gate, n);
    return m;
}

CMatrix simulate(const Circuit& c) {
    c.validate();
    CMatrix m = CMatrix::identity(std::size_t{1} << c.n_qubits);
    for (const auto& g : c.gates) apply_gate(m, g, c.n_qubits);
    if (c.global_phase != Complex{1.0, 0.0}) m = scaled(m, c.global_phase);
    return m;
}

std::string gate_class(const Gate& g) {
    const std::size_t k = g.controls.size();
    if (k == 0) return "single";
    switch (g.kind) {
        case GateKind::X:
            return k == 1 ? "CNOT" : "MCX";
        case GateKind::Z:
            return k == 1 ? "CZ" : "MCZ";
        case GateKind::RY:
            return "MCRY";
        case GateKind::PHASE:
        case GateKind::S:
        case GateKind::SDG:
            return "MCPHASE";
        case GateKind::RZ:
            return "MCRZ";
        case GateKind::Y:
            return "MCY";
        case GateKind::H:
            return "MCH";
    }
    return "?";
}

Histogram counts(const Circuit& c) {
    Histogram h;
    for (const auto& g : c.gates) ++h[gate_class(g)];
    return h;
}

std::size_t total(const Histogram& h) {
    std::size_t n = 0;
    for (const auto& [cls, v] : h) n += v;
    return n;
}

std::size_t count_of(const Histogram& h, const std::string& cls) {
    const auto it = h.find(cls);
    return it == h.end() ? 0 : it->second;
}

void write_circuit(std::ostream& out, const Circuit& c) {
    out << "qubits " << c.n_qubits << '\n';
    out << "phase " << format_double(c.global_phase.real()) << ','
        << format_double(c.global_phase.imag()) << '\n';
    for (const auto& g : c.gates) {
        out << "gate " << kind_name(g.kind) << " target=" << g.target;
        if (!g.controls.empty()) {
            out << " controls=";
            for (std::size_t i = 0; i < g.controls.size(); ++i) {
                if (i) out << ',';
                out << (g.controls[i].positive ? '+' : '-') << g.controls[i].qubit;
            }
        }
        out << " params=";
        if (is_parametric(g.kind)) out << format_double(g.angle);
        out << '\n';
    }
}

std::string serialize(const Circuit& c) {
    std::ostringstream os;
    write_circuit(os, c);
    return os.str();
}

namespace {

int parse_int(const std::string& s, std::size_t line) {
    if (s.empty()) throw ParseError(line, "empty integer");
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || v < 0 || v > 1'000'000) {
        throw ParseError(line, "bad integer '" + s + "'");
    }
    return static_cast<int>(v);
}

double parse_real(const std::string& s, std::size_t line) {
    if (s.empty()) throw ParseError(line, "empty number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw ParseError(line, "bad number '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

Gate parse_gate_line(std::istringstream& ls, std::size_t line) {
    std::string kind_text;
    if (!(ls >> kind_text)) throw ParseError(line, "missing gate kind");
    Gate g;
    if (!kind_from_name(kind_text, g.kind)) throw ParseError(line, "unknown gate '" + kind_text + "'");

    bool have_target = false, have_params = false, have_controls = false;
    std::string field;
    while (ls >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "target") {
            if (have_target) throw ParseError(line, "duplicate target");
            g.target = parse_int(value, line);
            have_target = true;
        } else if (key == "controls") {
            if (have_controls) throw ParseError(line, "duplicate controls");
            have_controls = true;
            if (value.empty()) continue;
            for (const auto& item : split(value, ',')) {
                if (item.size() < 2 || (item[0] != '+' && item[0] != '-')) {
                    throw ParseError(line, "bad control '" + item + "' (expected +q or -q)");
                }
                g.controls.push_back({parse_int(item.substr(1), line), item[0] == '+'});
            }
        } else if (key == "params") {
            if (have_params) throw ParseError(line, "duplicate params");
            have_params = true;
            std::vector<double> params;
            if (!value.empty())
                for (const auto& p : split(value, ';')) params.push_back(parse_real(p, line));
            const std::size_t expected = is_parametric(g.kind) ? 1 : 0;
            if (params.size() != expected) {
                throw ParseError(line, std::string(kind_name(g.kind)) + " takes " +
                                           std::to_string(expected) + " parameter(s)");
            }
            if (expected) g.angle = params[0];
        } else {
            throw ParseError(line, "unknown field '" + key + "'");
        }
    }
    if (!have_target) throw ParseError(line, "missing target");
    if (is_parametric(g.kind) && !have_params) throw ParseError(line, "missing params");
    return g;
}

}  // namespace

Circuit read_circuit(std::istream& in) {
    Circuit c;
    bool have_qubits = false, have_phase = false;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::istringstream ls(raw);
        std::string head;
        ls >> head;
        if (head == "qubits") {
            if (have_qubits) throw ParseError(line, "duplicate qubits header");
            std::string v, extra;
            if (!(ls >> v) || (ls >> extra)) throw ParseError(line, "expected 'qubits N'");
            c.n_qubits = parse_int(v, line);
            if (c.n_qubits < 1 || c.n_qubits > 20) throw ParseError(line, "qubit count out of range");
            have_qubits = true;
        } else if (head == "phase") {
            if (!have_qubits) throw ParseError(line, "'qubits' header must come first");
            if (have_phase) throw ParseError(line, "duplicate phase");
            std::string v, extra;
            if (!(ls >> v) || (ls >> extra)) throw ParseError(line, "expected 'phase re,im'");
            const auto parts = split(v, ',');
            if (parts.size() != 2) throw ParseError(line, "expected 'phase re,im'");
            c.global_phase = {parse_real(parts[0], line), parse_real(parts[1], line)};
            if (std::abs(std::abs(c.global_phase) - 1.0) > 1e-12) {
                throw ParseError(line, "global phase must have unit modulus");
            }
            have_phase = true;
        } else if (head == "gate") {
            if (!have_qubits) throw ParseError(line, "'qubits' header must come first");
            Gate g = parse_gate_line(ls, line);
            try {
                g.validate(c.n_qubits);
            } catch (const Error& e) {
                throw ParseError(line, e.what());
            }
            c.gates.push_back(std::move(g));
        } else {
            throw ParseError(line, "unknown directive '" + head + "'");
        }
    }
    if (!have_qubits) throw ParseError(line, "missing 'qubits' header");
    return c;
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    return read_circuit(in);
}

Circuit read_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return read_circuit(in);
}

}  // namespace jbhs
