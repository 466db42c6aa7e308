#include <doctest.h>

#include <stdexcept>

#include <random>

#include "koszulkit/matrix.hpp"

using namespace koszulkit;

namespace {

FpMatrix random_matrix(Fp f, size_t rows, size_t cols, std::mt19937& rng) {
    FpMatrix m(f, rows, cols);
    std::uniform_int_distribution<uint32_t> dist(0, f.modulus() - 1);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            m(r, c) = dist(rng);
    return m;
}

FpMatrix trim_zero_rows(FpMatrix m, size_t rank) {
    FpMatrix t(m.field(), rank, m.cols());
    for (size_t r = 0; r < rank; ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            t(r, c) = m(r, c);
    return t;
}

}  // namespace

TEST_CASE("field basics") {
    CHECK(is_prime(2));
    CHECK(is_prime(7919));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9));
    CHECK_THROWS_AS(Fp(4), std::invalid_argument);

    Fp f5(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.sub(1, 3) == 3);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.inv(3) == 2);
    CHECK(f5.pow(2, -1) == 3);
    CHECK(f5.from_int(-7) == 3);
}

TEST_CASE("rref examples") {
    // proportional rows over F_5 collapse to one
    FpMatrix m = FpMatrix::from_rows(Fp(5), 2, {{2, 4}, {1, 2}});
    size_t rk = rref(m);
    CHECK(rk == 1);
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 1) == 2);

    // zero rows dropped
    FpMatrix z = FpMatrix::from_rows(Fp(2), 2, {{0, 0}});
    CHECK(rref(z) == 0);

    // full rank over F_2
    FpMatrix fr = FpMatrix::from_rows(Fp(2), 2, {{1, 1}, {1, 0}});
    CHECK(rref(fr) == 2);
    CHECK(fr == FpMatrix::identity(Fp(2), 2));
}

TEST_CASE("rref is idempotent and matches the serial reference") {
    std::mt19937 rng(42);
    for (uint32_t l : {2u, 3u, 5u}) {
        Fp f(l);
        for (int trial = 0; trial < 20; ++trial) {
            FpMatrix m = random_matrix(f, 7, 9, rng);
            FpMatrix a = m, b = m;
            size_t ra = rref(a);
            size_t rb = rref_serial(b);
            CHECK(ra == rb);
            CHECK(a == b);
            FpMatrix again = trim_zero_rows(a, ra);
            FpMatrix before = again;
            rref(again);
            CHECK(again == before);
        }
    }
}

TEST_CASE("matmul agrees with the serial reference") {
    std::mt19937 rng(7);
    Fp f(3);
    for (int trial = 0; trial < 10; ++trial) {
        FpMatrix a = random_matrix(f, 6, 8, rng);
        FpMatrix b = random_matrix(f, 8, 5, rng);
        CHECK(matmul(a, b) == matmul_serial(a, b));
    }
}

TEST_CASE("kronecker respects the leftmost-major index convention") {
    Fp f(3);
    FpMatrix a = FpMatrix::from_rows(f, 2, {{1, 2}});
    FpMatrix b = FpMatrix::from_rows(f, 2, {{0, 1}});
    FpMatrix k = kronecker(a, b);
    REQUIRE(k.rows() == 1);
    REQUIRE(k.cols() == 4);
    // (e_i ⊗ e_j) has index i*2 + j
    CHECK(k(0, 0) == 0);
    CHECK(k(0, 1) == 1);
    CHECK(k(0, 2) == 0);
    CHECK(k(0, 3) == 2);
}
