#include "jbhs/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "jbhs/errors.hpp"

namespace jbhs {

void Tolerances::validate() const {
    for (double v : {hermitian_tol, unitary_tol, zero_tol, sign_tol, verify_tol}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw PreconditionError("tolerances must be positive and finite");
        }
    }
}

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) throw BadDimension("matrix dimension must be at least 1");
}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim == 0) throw BadDimension("matrix dimension must be at least 1");
    if (data_.size() != dim * dim) {
        throw BadDimension("expected " + std::to_string(dim * dim) + " entries, got " +
                           std::to_string(data_.size()));
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    if (dim_ == 0) throw BadDimension("matrix dimension must be at least 1");
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) throw BadDimension("matrix rows must be square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> entries) {
    CMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

std::vector<Complex> CMatrix::diagonal_entries() const {
    std::vector<Complex> d(dim_);
    for (std::size_t i = 0; i < dim_; ++i) d[i] = (*this)(i, i);
    return d;
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

CMatrix dagger(const CMatrix& a) {
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    CMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return out;
}

CMatrix scaled(const CMatrix& a, Complex factor) {
    CMatrix out = a;
    for (auto& v : out.entries()) v *= factor;
    return out;
}

double hermitian_deviation(const CMatrix& a) {
    const std::size_t n = a.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

double unitary_deviation(const CMatrix& a) {
    const std::size_t n = a.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s{};
            for (std::size_t k = 0; k < n; ++k) s += a(i, k) * std::conj(a(j, k));
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

bool is_hermitian(const CMatrix& a, double tol) { return hermitian_deviation(a) <= tol; }

bool is_unitary(const CMatrix& a, double tol) { return unitary_deviation(a) <= tol; }

double off_norm(const CMatrix& a) {
    const std::size_t n = a.dim();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

double frobenius_norm(const CMatrix& a) {
    double sum = 0.0;
    for (const auto& v : a.entries()) sum += std::norm(v);
    return std::sqrt(sum);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

CMatrix embed_two_level(std::size_t dim, std::size_t p, std::size_t q, const CMatrix& u) {
    if (u.dim() != 2) throw DimensionMismatch(u.dim(), 2);
    if (p >= dim || q >= dim || p == q) {
        throw IndexOutOfRange("two-level indices (" + std::to_string(p) + "," +
                              std::to_string(q) + ") invalid for dimension " +
                              std::to_string(dim));
    }
    CMatrix m = CMatrix::identity(dim);
    m(p, p) = u(0, 0);
    m(p, q) = u(0, 1);
    m(q, p) = u(1, 0);
    m(q, q) = u(1, 1);
    return m;
}

bool is_power_of_two(std::size_t dim, int* qubits) {
    if (dim == 0 || (dim & (dim - 1)) != 0) return false;
    if (qubits != nullptr) {
        int k = 0;
        while ((std::size_t{1} << k) < dim) ++k;
        *qubits = k;
    }
    return true;
}

std::string format_double(double v) {
    if (v == 0.0) return std::signbit(v) ? "-0" : "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

double parse_number(const std::string& text, std::size_t line) {
    if (text.empty()) throw ParseError(line, "empty number");
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + text.size()) throw ParseError(line, "bad number '" + text + "'");
    if (!std::isfinite(v)) throw ParseError(line, "non-finite number '" + text + "'");
    return v;
}

Complex parse_complex(const std::string& token, std::size_t line) {
    const auto comma = token.find(',');
    if (comma == std::string::npos || token.find(',', comma + 1) != std::string::npos) {
        throw ParseError(line, "expected 're,im', got '" + token + "'");
    }
    return {parse_number(token.substr(0, comma), line),
            parse_number(token.substr(comma + 1), line)};
}

}  // namespace

CMatrix read_matrix(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    std::vector<Complex> entries;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::istringstream ls(raw);
        if (dim == 0) {
            std::string key, extra;
            long long d = 0;
            if (!(ls >> key >> d) || key != "dim" || (ls >> extra)) {
                throw ParseError(line_no, "expected header 'dim D'");
            }
            if (d < 1) throw ParseError(line_no, "dimension must be positive");
            dim = static_cast<std::size_t>(d);
            entries.reserve(dim * dim);
            continue;
        }
        std::string token;
        std::size_t count = 0;
        while (ls >> token) {
            entries.push_back(parse_complex(token, line_no));
            ++count;
        }
        if (count != dim) {
            throw ParseError(line_no, "expected " + std::to_string(dim) + " entries, got " +
                                          std::to_string(count));
        }
        if (entries.size() > dim * dim) throw ParseError(line_no, "too many rows");
    }
    if (dim == 0) throw ParseError(line_no, "missing 'dim' header");
    if (entries.size() != dim * dim) throw ParseError(line_no, "too few rows");
    return CMatrix(dim, std::move(entries));
}

CMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const CMatrix& m) {
    out << "dim " << m.dim() << '\n';
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
        }
        out << '\n';
    }
}

}  // namespace jbhs
