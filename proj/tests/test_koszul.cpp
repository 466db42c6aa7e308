#include <doctest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "koszulkit/koszul.hpp"

using namespace koszulkit;

namespace {

SubspaceCollection three_lines_f3() {
    Fp f3(3);
    std::vector<Subspace> lines;
    lines.push_back(Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{1, 0}})));
    lines.push_back(Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{0, 1}})));
    lines.push_back(Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{1, 1}})));
    return {f3, 2, std::move(lines)};
}

// a frozen non-Koszul quadratic presentation over F_2 (dim V = 3, dim R = 3);
// both criteria fail first at degree 4
QuadraticPresentation non_koszul_f2() {
    Fp f(2);
    FpMatrix rel = FpMatrix::from_rows(f, 9,
                                       {{1, 0, 1, 1, 0, 1, 1, 1, 0},
                                        {0, 1, 0, 1, 0, 1, 1, 1, 0},
                                        {0, 0, 0, 0, 1, 0, 1, 0, 1}});
    return {f, {"x", "y", "z"}, Subspace::from_rows(std::move(rel))};
}

}  // namespace

TEST_CASE("B_* complexes of small collections") {
    Fp f2(2);
    // single subspace: X -> W, trivially exact away from W
    Subspace x = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{1, 0}}));
    SubspaceCollection single(f2, 2, {x});
    CHECK(b_lower_exact(single));

    // a pair of lines: W <- X⊕Y <- X∩Y = 0
    Subspace y = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{0, 1}}));
    SubspaceCollection pair(f2, 2, {x, y});
    FiniteComplex b = b_lower_complex(pair);
    CHECK(b.dims() == std::vector<size_t>{0, 2, 2});
    CHECK(b_lower_exact(pair));

    // three distinct lines in F_3^2: middle homology is nonzero
    SubspaceCollection lines = three_lines_f3();
    FiniteComplex bl = b_lower_complex(lines);
    CHECK(bl.dims() == std::vector<size_t>{0, 0, 3, 2});
    CHECK(!b_lower_exact(lines));
}

TEST_CASE("B^* complexes") {
    Fp f3(3);
    Subspace x = Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{1, 0}}));
    Subspace y = Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{0, 1}}));
    CHECK(b_upper_exact(SubspaceCollection(f3, 2, {x, y})));

    CHECK(!b_upper_exact(three_lines_f3()));

    // a member equal to W collapses its quotients consistently
    SubspaceCollection with_full(f3, 2, {x, Subspace::full(f3, 2)});
    FiniteComplex bu = b_upper_complex(with_full);
    CHECK(bu.dim(0) == 2);
    CHECK(b_upper_exact(with_full));
}

TEST_CASE("distributivity of named collections") {
    Fp f2(2);
    Subspace x = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{1, 0}}));
    Subspace y = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{0, 1}}));
    CHECK(is_distributive(SubspaceCollection(f2, 2, {x, y})).distributive);

    DistributivityResult r = is_distributive(three_lines_f3());
    CHECK(!r.distributive);
    CHECK(r.witness == std::vector<size_t>{0, 1, 2});

    // coordinate subspaces always admit the common basis refinement
    Subspace e1 = Subspace::from_rows(FpMatrix::from_rows(f2, 3, {{1, 0, 0}}));
    Subspace e23 = Subspace::from_rows(FpMatrix::from_rows(f2, 3, {{0, 1, 0}, {0, 0, 1}}));
    Subspace e12 = Subspace::from_rows(FpMatrix::from_rows(f2, 3, {{1, 1, 0}, {0, 1, 0}}));
    CHECK(is_distributive(SubspaceCollection(f2, 3, {e1, e23, e12})).distributive);
}

TEST_CASE("direct distributivity oracle") {
    Fp f2(2);
    Subspace x = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{1, 0}}));
    Subspace y = Subspace::from_rows(FpMatrix::from_rows(f2, 2, {{0, 1}}));
    CHECK(is_distributive_direct(SubspaceCollection(f2, 2, {x, y})) ==
          DirectVerdict::distributive);
    CHECK(is_distributive_direct(three_lines_f3()) == DirectVerdict::not_distributive);

    // the n = 3 collection of the symmetric-algebra presentation is small and
    // distributive, matching Koszulity of the polynomial ring
    SubspaceCollection sym3 = relation_collection(polynomial_presentation(Fp(2), 2), 3);
    CHECK(is_distributive_direct(sym3) == DirectVerdict::distributive);

    // a tiny closure bound forces the inconclusive signal
    CHECK(is_distributive_direct(three_lines_f3(), 2) == DirectVerdict::inconclusive);
}

TEST_CASE("the B_* recursion matches the direct oracle on the corpus") {
    for (const auto& p : corpus::standard(14, 1212)) {
        for (int n = 3; n <= 4; ++n) {
            SubspaceCollection col = relation_collection(p, n);
            DirectVerdict direct = is_distributive_direct(col);
            if (direct == DirectVerdict::inconclusive)
                continue;
            DistributivityResult rec = is_distributive(col);
            CHECK(rec.distributive == (direct == DirectVerdict::distributive));
        }
    }
}

TEST_CASE("under distributive proper subcollections both B complexes agree") {
    for (const auto& p : corpus::standard(10, 1313)) {
        SubspaceCollection col = relation_collection(p, 4);
        bool proper_ok = true;
        for (size_t k = 0; k < col.size() && proper_ok; ++k) {
            std::vector<size_t> rest;
            for (size_t i = 0; i < col.size(); ++i)
                if (i != k)
                    rest.push_back(i);
            proper_ok = is_distributive(col.subcollection(rest)).distributive;
        }
        if (!proper_ok)
            continue;
        bool lower = b_lower_exact(col);
        bool upper = b_upper_exact(col);
        CHECK(lower == upper);
        CHECK(lower == is_distributive(col).distributive);
    }
}

TEST_CASE("Koszul verdicts for named presentations") {
    // symmetric algebra on 2 generators over F_3
    QuadraticPresentation sym = polynomial_presentation(Fp(3), 2);
    KoszulVerdict kd = koszul_by_distributivity(sym, 4);
    KoszulVerdict kh = koszul_by_homology(sym, 4);
    CHECK(kd.koszul);
    CHECK(kh.koszul);

    // free algebra and the fully collapsed algebra are Koszul
    CHECK(koszul_by_distributivity(free_presentation(Fp(2), 2), 5).koszul);
    CHECK(koszul_by_distributivity(full_relations_presentation(Fp(2), 2), 5).koszul);
    CHECK(koszul_by_homology(free_presentation(Fp(2), 2), 4).koszul);

    // polynomial ring in one variable
    CHECK(koszul_by_homology(free_presentation(Fp(3), 1), 4).koszul);
}

TEST_CASE("a frozen non-Koszul presentation fails both criteria at degree 4") {
    QuadraticPresentation p = non_koszul_f2();
    KoszulVerdict kd = koszul_by_distributivity(p, 4);
    KoszulVerdict kh = koszul_by_homology(p, 4);
    CHECK(!kd.koszul);
    CHECK(!kh.koszul);
    CHECK(kd.failure_degree == 4);
    CHECK(kh.failure_degree == 4);
    REQUIRE(kh.witness_bidegree.has_value());
    CHECK(kh.witness_bidegree->second == 4);

    // witness replay: the reported subcollection is genuinely non-distributive
    SubspaceCollection col = relation_collection(p, kd.failure_degree);
    SubspaceCollection witness = col.subcollection(kd.witness_subcollection);
    CHECK(!b_lower_exact(witness));
    CHECK(is_distributive_direct(witness) == DirectVerdict::not_distributive);

    // monotonicity: the same first failure for every larger bound
    KoszulVerdict kd5 = koszul_by_distributivity(p, 5);
    CHECK(!kd5.koszul);
    CHECK(kd5.failure_degree == 4);
    CHECK(kd5.witness_subcollection == kd.witness_subcollection);
}

TEST_CASE("both Koszulity criteria agree on the corpus") {
    for (const auto& p : corpus::standard(16, 1414)) {
        KoszulVerdict kd = koszul_by_distributivity(p, 4);
        KoszulVerdict kh = koszul_by_homology(p, 4);
        CHECK(kd.koszul == kh.koszul);
        CHECK(kd.failure_degree == kh.failure_degree);
    }
}

TEST_CASE("subcollections of distributive collections are distributive") {
    QuadraticPresentation sym = polynomial_presentation(Fp(3), 2);
    SubspaceCollection col = relation_collection(sym, 4);
    REQUIRE(is_distributive(col).distributive);
    for (size_t k = 0; k < col.size(); ++k) {
        std::vector<size_t> sub;
        for (size_t i = 0; i < col.size(); ++i)
            if (i != k)
                sub.push_back(i);
        CHECK(is_distributive(col.subcollection(sub)).distributive);
    }
}
