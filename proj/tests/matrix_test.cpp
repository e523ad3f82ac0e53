#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "jbhs/errors.hpp"
#include "jbhs/matrix.hpp"
#include "test_support.hpp"

using namespace jbhs;

namespace {
const double r2 = 1.0 / std::numbers::sqrt2;
const Complex I{0.0, 1.0};
}  // namespace

TEST_CASE("identity, dagger and product basics") {
    const CMatrix id = CMatrix::identity(4);
    CHECK(id(0, 0) == Complex(1.0));
    CHECK(id(0, 1) == Complex(0.0));
    CHECK(off_norm(id) == 0.0);

    const CMatrix y{{0.0, -I}, {I, 0.0}};
    CHECK(dagger(y) == y);
    CHECK(mat_mul(y, y) == CMatrix::identity(2));
    CHECK_THROWS_AS(mat_mul(y, id), DimensionMismatch);
}

TEST_CASE("off_norm of Pauli X is sqrt 2") {
    const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(off_norm(x) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // complex moduli, not squares of complex numbers
    const CMatrix y{{0.0, -I}, {I, 0.0}};
    CHECK(off_norm(y) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("hermitian and unitary checks") {
    const CMatrix h{{r2, r2}, {r2, -r2}};
    CHECK(is_hermitian(h, 1e-12));
    CHECK(is_unitary(h, 1e-12));

    const CMatrix s{{1.0, 0.0}, {0.0, I}};
    CHECK_FALSE(is_hermitian(s, 1e-12));
    CHECK(is_unitary(s, 1e-12));
    CHECK(hermitian_deviation(s) == doctest::Approx(2.0));

    const CMatrix a{{1.0, 2.0}, {2.0, 1.0}};
    CHECK(is_hermitian(a, 1e-12));
    CHECK_FALSE(is_unitary(a, 1e-12));
}

TEST_CASE("tensor follows the kron layout") {
    const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    const CMatrix z{{1.0, 0.0}, {0.0, -1.0}};
    const CMatrix xz = tensor(x, z);
    // X (x) Z = [[0, Z], [Z, 0]]
    CHECK(xz(0, 2) == Complex(1.0));
    CHECK(xz(1, 3) == Complex(-1.0));
    CHECK(xz(2, 0) == Complex(1.0));
    CHECK(xz(3, 1) == Complex(-1.0));
    CHECK(xz(0, 0) == Complex(0.0));
}

TEST_CASE("embed_two_level places the block on p and q") {
    const CMatrix u{{1.0, 2.0}, {3.0, 4.0}};
    const CMatrix m = embed_two_level(8, 1, 6, u);
    CHECK(m(1, 1) == Complex(1.0));
    CHECK(m(1, 6) == Complex(2.0));
    CHECK(m(6, 1) == Complex(3.0));
    CHECK(m(6, 6) == Complex(4.0));
    CHECK(m(0, 0) == Complex(1.0));
    CHECK(m(7, 7) == Complex(1.0));
    CHECK_THROWS_AS(embed_two_level(8, 3, 3, u), IndexOutOfRange);
    CHECK_THROWS_AS(embed_two_level(8, 3, 8, u), IndexOutOfRange);
}

TEST_CASE("power of two detection") {
    int k = -1;
    CHECK(is_power_of_two(1, &k));
    CHECK(k == 0);
    CHECK(is_power_of_two(16, &k));
    CHECK(k == 4);
    CHECK_FALSE(is_power_of_two(0));
    CHECK_FALSE(is_power_of_two(6));
}

TEST_CASE("tolerances validate") {
    Tolerances t;
    CHECK_NOTHROW(t.validate());
    t.zero_tol = -1;
    CHECK_THROWS_AS(t.validate(), PreconditionError);
    t.zero_tol = std::nan("");
    CHECK_THROWS_AS(t.validate(), PreconditionError);
}

TEST_CASE("matrix text round trip is exact") {
    std::mt19937_64 rng(7);
    for (std::size_t dim : {1u, 2u, 4u, 8u}) {
        const CMatrix m = testing::random_unitary(dim, rng);
        std::ostringstream out;
        write_matrix(out, m);
        std::istringstream in(out.str());
        CHECK(read_matrix(in) == m);
    }
}

TEST_CASE("matrix reader accepts comments and rejects junk") {
    std::istringstream ok("# a comment\ndim 2\n1,0 0,0\n0,0 -1,0 # trailing\n");
    const CMatrix z = read_matrix(ok);
    CHECK(z(1, 1) == Complex(-1.0));

    std::istringstream short_row("dim 2\n1,0\n0,0 1,0\n");
    CHECK_THROWS_AS(read_matrix(short_row), ParseError);
    std::istringstream bad_token("dim 2\n1;0 0,0\n0,0 1,0\n");
    CHECK_THROWS_AS(read_matrix(bad_token), ParseError);
    std::istringstream no_header("1,0 0,0\n0,0 1,0\n");
    CHECK_THROWS_AS(read_matrix(no_header), ParseError);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_matrix(empty), ParseError);
    std::istringstream extra("dim 1\n1,0\n1,0\n");
    CHECK_THROWS_AS(read_matrix(extra), ParseError);
}

TEST_CASE("property: random Hermitian unitaries square to the identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix h = testing::random_hermitian_unitary(8, rng);
        CHECK(is_hermitian(h, 1e-12));
        CHECK(is_unitary(h, 1e-12));
        CHECK(max_abs_diff(mat_mul(h, h), CMatrix::identity(8)) < 1e-12);
        CHECK(frobenius_norm(h) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
    }
}
