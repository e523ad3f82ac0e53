#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jbhs/matrix.hpp"

namespace jbhs {

/// Diagonal over {+1, -1}; length is a power of two.
class SignDiagonal {
public:
    SignDiagonal() = default;
    /// Throws PreconditionError unless every entry is +1 or -1 and the length
    /// is a power of two.
    explicit SignDiagonal(std::vector<int> signs);

    [[nodiscard]] const std::vector<int>& signs() const noexcept { return signs_; }
    [[nodiscard]] std::size_t size() const noexcept { return signs_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return signs_[i]; }
    [[nodiscard]] CMatrix matrix() const;

    bool operator==(const SignDiagonal&) const = default;

private:
    std::vector<int> signs_;
};

/// One elimination Q' = R(-alpha) G(theta) applied at (p, q) as A <- Q'^dag A Q'.
struct RotationStep {
    std::size_t p = 0;
    std::size_t q = 1;
    double theta = 0.0;  // in [-pi/2, pi/2]
    double alpha = 0.0;  // in (-pi, pi]; zero when has_phase is false
    bool has_phase = false;

    bool operator==(const RotationStep&) const = default;

    /// 2x2 block of Q' = R(-alpha) G(theta) in the (p, q) basis.
    [[nodiscard]] CMatrix block() const;
    /// Dense embedding of Q' in dimension `dim`.
    [[nodiscard]] CMatrix embedded(std::size_t dim) const;
};

struct RotationParams {
    double theta = 0.0;
    double alpha = 0.0;
    bool has_phase = false;
};

/// theta and alpha that zero the (p, q) entry. A real a_pq (imaginary part
/// within zero_tol) keeps its sign and needs no phase factor; otherwise
/// alpha = arg(a_pq) and the modulus drives theta. theta is folded into
/// [-pi/2, pi/2]. Throws ZeroOffDiagonal when |a_pq| <= zero_tol.
RotationParams rotation_params(double app, double aqq, Complex apq, double zero_tol = 1e-12);

/// Q'^dag a Q'. Only rows and columns p and q change. Throws RotationFailed if
/// the (p, q) entry is not driven below zero_tol.
CMatrix apply_rotation(const CMatrix& a, const RotationStep& step, double zero_tol = 1e-12);

enum class Ordering { RowMajor, Parallel };

using IndexPair = std::pair<std::size_t, std::size_t>;

/// All pairs p < q in lexicographic order.
std::vector<IndexPair> ordering_row_major(std::size_t dim);

/// dim - 1 rounds of dim / 2 disjoint pairs covering every pair once. Round r
/// pairs each index i with i XOR m_r, where m_r runs over 1..dim-1 in
/// bit-reversed order; dim = 4 gives {(0,2),(1,3)}, {(0,1),(2,3)}, {(0,3),(1,2)}.
std::vector<std::vector<IndexPair>> ordering_parallel(std::size_t dim);

/// Pairs of one sweep in visiting order.
std::vector<IndexPair> sweep_order(std::size_t dim, Ordering ordering);

struct JacobiResult {
    std::vector<RotationStep> steps;   // application order
    SignDiagonal signs;
    int sweeps = 0;
    double residual = 0.0;             // final off-norm
    std::vector<std::size_t> rotations_per_sweep;
};

/// Maps a converged diagonal onto {+1, -1}. Throws DiagonalNotPM1 for any
/// entry farther than sign_tol from +1 or -1.
SignDiagonal snap_signs(const std::vector<Complex>& diagonal, double sign_tol);

/// Cyclic complex Jacobi on a Hermitian unitary of dimension 2^n. Sweeps
/// repeat until off_norm <= zero_tol * dim; pairs with |a_pq| <= zero_tol are
/// skipped. Throws NotHermitian, NotUnitary, BadDimension or NoConvergence.
JacobiResult diagonalize(const CMatrix& h, Ordering ordering = Ordering::RowMajor,
                         const Tolerances& tol = {}, int max_sweeps = 30);

/// Q'_1 ... Q'_m diag(signs) Q'_m^dag ... Q'_1^dag
CMatrix reconstruct(const JacobiResult& result);

}  // namespace jbhs
