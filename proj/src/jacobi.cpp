#include "jbhs/jacobi.hpp"

#include <cmath>
#include <numbers>

#include "jbhs/errors.hpp"

namespace jbhs {

SignDiagonal::SignDiagonal(std::vector<int> signs) : signs_(std::move(signs)) {
    if (!is_power_of_two(signs_.size())) {
        throw BadDimension("sign diagonal length must be a power of two");
    }
    for (int s : signs_)
        if (s != 1 && s != -1) throw PreconditionError("sign diagonal entries must be +1 or -1");
}

CMatrix SignDiagonal::matrix() const {
    std::vector<Complex> d(signs_.begin(), signs_.end());
    return CMatrix::diagonal(d);
}

CMatrix RotationStep::block() const {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const Complex ph = has_phase ? std::polar(1.0, -alpha) : Complex{1.0, 0.0};
    return {{c, s}, {-ph * s, ph * c}};
}

CMatrix RotationStep::embedded(std::size_t dim) const {
    return embed_two_level(dim, p, q, block());
}

RotationParams rotation_params(double app, double aqq, Complex apq, double zero_tol) {
    const double modulus = std::abs(apq);
    if (modulus <= zero_tol) throw ZeroOffDiagonal("off-diagonal entry is already zero");

    RotationParams r;
    double numerator;
    if (std::abs(apq.imag()) <= zero_tol) {
        numerator = -2.0 * apq.real();
    } else {
        numerator = -2.0 * modulus;
        r.alpha = std::arg(apq);
        r.has_phase = true;
    }
    double t = std::atan2(numerator, app - aqq);
    if (t < -std::numbers::pi / 2) t += std::numbers::pi;
    if (t > std::numbers::pi / 2) t -= std::numbers::pi;
    r.theta = t;
    return r;
}

namespace {

// In-place A <- Q'^dag A Q' on rows/columns p, q.
void rotate_in_place(CMatrix& a, const RotationStep& st) {
    const std::size_t n = a.dim(), p = st.p, q = st.q;
    const CMatrix blk = st.block();
    const Complex q00 = blk(0, 0), q01 = blk(0, 1), q10 = blk(1, 0), q11 = blk(1, 1);

    // A <- A Q' (columns p, q)
    for (std::size_t i = 0; i < n; ++i) {
        const Complex ap = a(i, p), aq = a(i, q);
        a(i, p) = ap * q00 + aq * q10;
        a(i, q) = ap * q01 + aq * q11;
    }
    // A <- Q'^dag A (rows p, q)
    for (std::size_t j = 0; j < n; ++j) {
        const Complex ap = a(p, j), aq = a(q, j);
        a(p, j) = std::conj(q00) * ap + std::conj(q10) * aq;
        a(q, j) = std::conj(q01) * ap + std::conj(q11) * aq;
    }
}

void check_indices(const CMatrix& a, const RotationStep& st) {
    if (!(st.p < st.q) || st.q >= a.dim()) {
        throw IndexOutOfRange("rotation indices (" + std::to_string(st.p) + "," +
                              std::to_string(st.q) + ") invalid for dimension " +
                              std::to_string(a.dim()));
    }
}

}  // namespace

CMatrix apply_rotation(const CMatrix& a, const RotationStep& step, double zero_tol) {
    check_indices(a, step);
    CMatrix out = a;
    rotate_in_place(out, step);
    if (std::abs(out(step.p, step.q)) > zero_tol) {
        throw RotationFailed("rotation left |a_pq| = " + std::to_string(std::abs(out(step.p, step.q))));
    }
    return out;
}

std::vector<IndexPair> ordering_row_major(std::size_t dim) {
    std::vector<IndexPair> pairs;
    pairs.reserve(dim * (dim - 1) / 2);
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = p + 1; q < dim; ++q) pairs.emplace_back(p, q);
    return pairs;
}

std::vector<std::vector<IndexPair>> ordering_parallel(std::size_t dim) {
    int bits = 0;
    if (dim < 2 || !is_power_of_two(dim, &bits)) {
        throw BadDimension("parallel ordering needs a power-of-two dimension >= 2");
    }
    auto reverse_bits = [bits](std::size_t v) {
        std::size_t r = 0;
        for (int b = 0; b < bits; ++b)
            if (v & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        return r;
    };
    std::vector<std::vector<IndexPair>> rounds;
    rounds.reserve(dim - 1);
    for (std::size_t k = 1; k < dim; ++k) {
        const std::size_t mask = reverse_bits(k);
        std::vector<IndexPair> round;
        round.reserve(dim / 2);
        for (std::size_t i = 0; i < dim; ++i)
            if (i < (i ^ mask)) round.emplace_back(i, i ^ mask);
        rounds.push_back(std::move(round));
    }
    return rounds;
}

std::vector<IndexPair> sweep_order(std::size_t dim, Ordering ordering) {
    if (ordering == Ordering::RowMajor) return ordering_row_major(dim);
    std::vector<IndexPair> flat;
    for (auto& round : ordering_parallel(dim)) flat.insert(flat.end(), round.begin(), round.end());
    return flat;
}

SignDiagonal snap_signs(const std::vector<Complex>& diagonal, double sign_tol) {
    std::vector<int> signs;
    signs.reserve(diagonal.size());
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        const Complex v = diagonal[i];
        if (std::abs(v.imag()) <= sign_tol && std::abs(v.real() - 1.0) <= sign_tol) {
            signs.push_back(1);
        } else if (std::abs(v.imag()) <= sign_tol && std::abs(v.real() + 1.0) <= sign_tol) {
            signs.push_back(-1);
        } else {
            throw DiagonalNotPM1(i, v);
        }
    }
    return SignDiagonal(std::move(signs));
}

JacobiResult diagonalize(const CMatrix& h, Ordering ordering, const Tolerances& tol,
                         int max_sweeps) {
    tol.validate();
    const std::size_t dim = h.dim();
    if (!is_power_of_two(dim)) {
        throw BadDimension("dimension " + std::to_string(dim) + " is not a power of two");
    }
    if (const double d = hermitian_deviation(h); d > tol.hermitian_tol) throw NotHermitian(d);
    if (const double d = unitary_deviation(h); d > tol.unitary_tol) throw NotUnitary(d);

    JacobiResult result;
    CMatrix a = h;
    const double threshold = tol.zero_tol * static_cast<double>(dim);
    double residual = off_norm(a);

    if (dim > 1) {
        const auto order = sweep_order(dim, ordering);
        do {
            std::size_t executed = 0;
            for (const auto& [p, q] : order) {
                const Complex apq = a(p, q);
                if (std::abs(apq) <= tol.zero_tol) continue;
                const auto params = rotation_params(a(p, p).real(), a(q, q).real(), apq, tol.zero_tol);
                const RotationStep step{p, q, params.theta, params.alpha, params.has_phase};
                rotate_in_place(a, step);
                if (std::abs(a(p, q)) > tol.zero_tol) {
                    throw RotationFailed("rotation at (" + std::to_string(p) + "," +
                                         std::to_string(q) + ") left |a_pq| = " +
                                         std::to_string(std::abs(a(p, q))));
                }
                result.steps.push_back(step);
                ++executed;
            }
            ++result.sweeps;
            result.rotations_per_sweep.push_back(executed);
            residual = off_norm(a);
        } while (residual > threshold && result.sweeps < max_sweeps);
    } else {
        result.sweeps = 1;
        result.rotations_per_sweep.push_back(0);
    }

    result.residual = residual;
    if (residual > threshold) throw NoConvergence(residual, result.sweeps);
    result.signs = snap_signs(a.diagonal_entries(), tol.sign_tol);
    return result;
}

CMatrix reconstruct(const JacobiResult& result) {
    const std::size_t dim = result.signs.size();
    CMatrix m = result.signs.matrix();
    for (auto it = result.steps.rbegin(); it != result.steps.rend(); ++it) {
        const CMatrix q = it->embedded(dim);
        m = mat_mul(mat_mul(q, m), dagger(q));
    }
    return m;
}

}  // namespace jbhs
