#pragma once

#include <cstddef>
#include <complex>
#include <stdexcept>
#include <string>

namespace jbhs {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (shape, Hermiticity, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public PreconditionError {
public:
    DimensionMismatch(std::size_t a, std::size_t b)
        : PreconditionError("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b)) {}
};

class BadDimension : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class IndexOutOfRange : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotHermitian : public PreconditionError {
public:
    explicit NotHermitian(double deviation)
        : PreconditionError("matrix is not Hermitian (max |A - A^dag| = " +
                            std::to_string(deviation) + ")") {}
};

class NotUnitary : public PreconditionError {
public:
    explicit NotUnitary(double deviation)
        : PreconditionError("matrix is not unitary (max |A A^dag - I| = " +
                            std::to_string(deviation) + ")") {}
};

class NotHermitianUnitary : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A 2x2 Hermitian unitary equal to +I or -I has no H(theta, alpha) form.
class IsPlusMinusIdentity : public PreconditionError {
public:
    explicit IsPlusMinusIdentity(int sign)
        : PreconditionError(std::string("gate is ") + (sign > 0 ? "+I" : "-I") +
                            ", nothing to synthesize"),
          sign_(sign) {}
    [[nodiscard]] int sign() const noexcept { return sign_; }

private:
    int sign_;
};

class ZeroOffDiagonal : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DiagonalNotPM1 : public PreconditionError {
public:
    DiagonalNotPM1(std::size_t index, std::complex<double> value)
        : PreconditionError("diagonal entry " + std::to_string(index) + " = (" +
                            std::to_string(value.real()) + "," +
                            std::to_string(value.imag()) + ") is not +1 or -1"),
          index_(index),
          value_(value) {}
    [[nodiscard]] std::size_t index() const noexcept { return index_; }
    [[nodiscard]] std::complex<double> value() const noexcept { return value_; }

private:
    std::size_t index_;
    std::complex<double> value_;
};

/// Internal consistency failure: a rotation did not zero its target entry.
class RotationFailed : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    NoConvergence(double residual, int sweeps)
        : Error("Jacobi iteration did not converge after " + std::to_string(sweeps) +
                " sweeps (off-norm " + std::to_string(residual) + ")"),
          residual_(residual) {}
    [[nodiscard]] double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class VerificationFailed : public Error {
public:
    explicit VerificationFailed(double err)
        : Error("synthesized circuit deviates from the target by " + std::to_string(err)),
          error_(err) {}
    [[nodiscard]] double error() const noexcept { return error_; }

private:
    double error_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace jbhs
