#include <doctest.h>

#include <stdexcept>

#include <random>

#include "koszulkit/linear_map.hpp"

using namespace koszulkit;

namespace {

Subspace random_subspace(Fp f, size_t ambient, size_t gens, std::mt19937& rng) {
    FpMatrix m(f, gens, ambient);
    std::uniform_int_distribution<uint32_t> dist(0, f.modulus() - 1);
    for (size_t r = 0; r < gens; ++r)
        for (size_t c = 0; c < ambient; ++c)
            m(r, c) = dist(rng);
    return Subspace::from_rows(std::move(m));
}

}  // namespace

TEST_CASE("sum examples") {
    Fp f2(2);
    Subspace e1 = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{1, 0}}));
    Subspace e2 = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{0, 1}}));
    CHECK(sum(e1, e2) == Subspace::full(f2, 2));
    CHECK(sum(e1, e1) == e1);

    Fp f3(3);
    Subspace a = Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{1, 0}}));
    Subspace b = Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{1, 1}}));
    CHECK(sum(a, b) == Subspace::full(f3, 2));
}

TEST_CASE("intersection examples") {
    Fp f2(2);
    Subspace e1 = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{1, 0}}));
    Subspace e2 = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{0, 1}}));
    CHECK(intersect(e1, e2).dim() == 0);
    CHECK(intersect(e1, e1) == e1);

    Fp f5(5);
    Subspace u = Subspace::from_rows(FpMatrix::from_rows(f5, 3, {{1, 0, 0}, {0, 1, 0}}));
    Subspace v = Subspace::from_rows(FpMatrix::from_rows(f5, 3, {{0, 1, 0}, {0, 0, 1}}));
    Subspace w = intersect(u, v);
    CHECK(w == Subspace::from_rows(FpMatrix::from_rows(f5, 3, {{0, 1, 0}})));
}

TEST_CASE("ambient mismatch is rejected") {
    Fp f2(2);
    Subspace a(f2, 2), b(f2, 3);
    CHECK_THROWS_AS(sum(a, b), std::invalid_argument);
    CHECK_THROWS_AS(intersect(a, b), std::invalid_argument);
}

TEST_CASE("dimension formula and canonicality on random pairs") {
    std::mt19937 rng(123);
    for (uint32_t l : {2u, 3u, 5u}) {
        Fp f(l);
        for (int trial = 0; trial < 25; ++trial) {
            Subspace a = random_subspace(f, 6, 3, rng);
            Subspace b = random_subspace(f, 6, 3, rng);
            CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
            if (a.contains(b) && b.contains(a))
                CHECK(a.basis() == b.basis());
            // mutual containment via construction: a and a+a
            Subspace c = sum(a, a);
            CHECK(c.basis() == a.basis());
        }
    }
}

TEST_CASE("kernel and image examples") {
    Fp f2(2);
    CHECK(kernel(LinearMap::identity(f2, 3)).dim() == 0);
    CHECK(image(LinearMap::zero(f2, 3, 2)).dim() == 0);

    LinearMap f(FpMatrix::from_rows(f2, 2, {{1, 1}}));
    Subspace k = kernel(f);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis()(0, 0) == 1);
    CHECK(k.basis()(0, 1) == 1);
}

TEST_CASE("zero ambient dimension is legal") {
    Fp f3(3);
    Subspace z(f3, 0);
    CHECK(z.dim() == 0);
    CHECK(sum(z, z) == z);
    CHECK(intersect(z, z) == z);
}

TEST_CASE("quotient projection and section") {
    Fp f3(3);
    Subspace u = Subspace::from_rows(FpMatrix::from_rows(f3, 3, {{1, 2, 0}}));
    FpMatrix p = quotient_projection(u);
    FpMatrix s = quotient_section(u);
    CHECK(matmul(p, s) == FpMatrix::identity(f3, 2));
    // the projection kills u
    FpMatrix pu = matmul(p, transpose(u.basis()));
    for (size_t r = 0; r < pu.rows(); ++r)
        for (size_t c = 0; c < pu.cols(); ++c)
            CHECK(pu(r, c) == 0);
}

TEST_CASE("preimage of a subspace") {
    Fp f2(2);
    // projection F_2^2 -> F_2, (x, y) -> x + y; preimage of 0 is the diagonal
    LinearMap f(FpMatrix::from_rows(f2, 2, {{1, 1}}));
    Subspace zero(f2, 1);
    Subspace pre = preimage_of(f, zero);
    CHECK(pre == kernel(f));
    CHECK(preimage_of(f, Subspace::full(f2, 1)) == Subspace::full(f2, 2));
}
