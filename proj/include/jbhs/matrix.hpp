#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace jbhs {

using Complex = std::complex<double>;

/// Absolute tolerances shared by the whole pipeline.
struct Tolerances {
    double hermitian_tol = 1e-10;
    double unitary_tol = 1e-10;
    double zero_tol = 1e-12;
    double sign_tol = 1e-8;
    double verify_tol = 1e-9;

    /// Throws PreconditionError unless every field is positive and finite.
    void validate() const;
};

/// Dense square complex matrix, row-major.
class CMatrix {
public:
    /// Zero matrix of the given dimension (dim >= 1).
    explicit CMatrix(std::size_t dim);
    CMatrix(std::size_t dim, std::vector<Complex> entries);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t dim);
    static CMatrix diagonal(std::span<const Complex> entries);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * dim_ + c];
    }

    [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }
    [[nodiscard]] std::span<Complex> entries() noexcept { return data_; }

    [[nodiscard]] std::vector<Complex> diagonal_entries() const;

    bool operator==(const CMatrix&) const = default;

private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

CMatrix mat_mul(const CMatrix& a, const CMatrix& b);
CMatrix dagger(const CMatrix& a);
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix scaled(const CMatrix& a, Complex factor);

/// max |a - a^dag|
double hermitian_deviation(const CMatrix& a);
/// max |a a^dag - I|
double unitary_deviation(const CMatrix& a);

bool is_hermitian(const CMatrix& a, double tol);
bool is_unitary(const CMatrix& a, double tol);

/// Frobenius norm of the off-diagonal part, using complex moduli.
double off_norm(const CMatrix& a);
double frobenius_norm(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Identity of dimension `dim` with the 2x2 block `u` placed on rows/columns
/// {p, q}: u(0,0) at (p,p), u(0,1) at (p,q), u(1,0) at (q,p), u(1,1) at (q,q).
CMatrix embed_two_level(std::size_t dim, std::size_t p, std::size_t q, const CMatrix& u);

/// True when `dim` is 2^k for some k >= 0; `qubits` receives k.
bool is_power_of_two(std::size_t dim, int* qubits = nullptr);

// Text format:
//   # comment
//   dim D
//   re,im re,im ...   (D rows of D tokens)
CMatrix read_matrix(std::istream& in);
CMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const CMatrix& m);
std::string format_double(double v);

}  // namespace jbhs
