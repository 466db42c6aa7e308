#include <doctest.h>

#include <stdexcept>

#include "koszulkit/nilpotent.hpp"

using namespace koszulkit;

TEST_CASE("group table validation and builders") {
    FiniteGroupTable z4 = cyclic_group(4);
    CHECK(z4.order() == 4);
    CHECK(z4.identity == 0);

    FiniteGroupTable v4 = elementary_abelian_group(2, 2);
    CHECK(v4.order() == 4);
    for (size_t g = 0; g < 4; ++g)
        CHECK(v4.table[g][g] == v4.identity);  // exponent 2

    FiniteGroupTable d8 = dihedral_group(8);
    CHECK(d8.order() == 8);

    FiniteGroupTable q8 = quaternion_group(8);
    CHECK(q8.order() == 8);
    // Q_8 has a unique element of order 2
    size_t involutions = 0;
    for (size_t g = 0; g < 8; ++g)
        if (g != q8.identity && q8.table[g][g] == q8.identity)
            ++involutions;
    CHECK(involutions == 1);

    // a broken table is rejected
    std::vector<std::vector<size_t>> bad{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(FiniteGroupTable({"e", "a"}, bad), std::invalid_argument);
}

TEST_CASE("augmentation filtration of function coalgebras") {
    // F_2(Z/2): N_0 has dim 1, N_1 is everything
    AugmentedCoalgebra z2(group_coalgebra(cyclic_group(2), Fp(2)));
    Filtration filt = augmentation_filtration(z2);
    CHECK(filt.steps.size() == 2);
    CHECK(filt.steps[0].dim() == 1);
    CHECK(filt.steps[1].dim() == 2);
    CHECK(filt.full);
    CHECK(is_nilpotent(z2));

    // F_2(Z/3): the filtration stops at N_0
    AugmentedCoalgebra z3_f2(group_coalgebra(cyclic_group(3), Fp(2)));
    Filtration coprime = augmentation_filtration(z3_f2);
    CHECK(coprime.steps.size() == 1);
    CHECK(!coprime.full);
    CHECK(!is_nilpotent(z3_f2));

    // the trivial coalgebra is nilpotent immediately
    AugmentedCoalgebra trivial(group_coalgebra(cyclic_group(1), Fp(3)));
    CHECK(is_nilpotent(trivial));
    CHECK(augmentation_filtration(trivial).steps.size() == 1);
}

TEST_CASE("the recursion agrees with the literal definition") {
    std::vector<AugmentedCoalgebra> instances;
    instances.emplace_back(group_coalgebra(cyclic_group(2), Fp(2)));
    instances.emplace_back(group_coalgebra(cyclic_group(3), Fp(2)));
    instances.emplace_back(group_coalgebra(cyclic_group(3), Fp(3)));
    instances.emplace_back(group_coalgebra(cyclic_group(4), Fp(2)));
    instances.emplace_back(group_coalgebra(elementary_abelian_group(2, 2), Fp(2)));
    for (const AugmentedCoalgebra& c : instances) {
        Filtration fast = augmentation_filtration(c);
        Filtration literal = augmentation_filtration_literal(c, 5);
        REQUIRE(fast.steps.size() == literal.steps.size());
        for (size_t i = 0; i < fast.steps.size(); ++i)
            CHECK(fast.steps[i] == literal.steps[i]);
        CHECK(fast.full == literal.full);
    }
}

TEST_CASE("filtration length bound for l-groups") {
    // for groups of order l^k the filtration is full and reaches the top at
    // index <= dim - 1; coprime orders stall below the top
    std::vector<std::pair<FiniteGroupTable, uint32_t>> cases;
    cases.emplace_back(cyclic_group(4), 2);
    cases.emplace_back(elementary_abelian_group(2, 2), 2);
    cases.emplace_back(cyclic_group(3), 3);
    cases.emplace_back(quaternion_group(8), 2);
    cases.emplace_back(dihedral_group(8), 2);
    for (const auto& [g, l] : cases) {
        AugmentedCoalgebra c(group_coalgebra(g, Fp(l)));
        Filtration filt = augmentation_filtration(c);
        CHECK(filt.full);
        CHECK(filt.stabilization() <= c.dim() - 1);
    }
    AugmentedCoalgebra bad(group_coalgebra(cyclic_group(5), Fp(2)));
    CHECK(!is_nilpotent(bad));
}

TEST_CASE("filtration compatibility and one-cogeneration of gr") {
    std::vector<AugmentedCoalgebra> instances;
    instances.emplace_back(group_coalgebra(cyclic_group(2), Fp(2)));
    instances.emplace_back(group_coalgebra(cyclic_group(4), Fp(2)));
    instances.emplace_back(group_coalgebra(elementary_abelian_group(2, 2), Fp(2)));
    instances.emplace_back(group_coalgebra(cyclic_group(3), Fp(3)));
    instances.emplace_back(group_coalgebra(quaternion_group(8), Fp(2)));
    for (const AugmentedCoalgebra& c : instances) {
        Filtration filt = augmentation_filtration(c);
        // claim 1: Δ(N_n) ⊆ Σ N_i ⊗ N_j, checked literally
        CHECK(filtration_respects_comult(c, filt));
        // claim 2: gr_N C is one-cogenerated
        GradedSliceCoalgebra gr = associated_graded(c);
        CHECK(one_cogenerated_verdict(gr, gr.n_max()));
    }
}

TEST_CASE("associated graded dimensions") {
    GradedSliceCoalgebra z2 = associated_graded(
        AugmentedCoalgebra(group_coalgebra(cyclic_group(2), Fp(2))));
    CHECK(z2.dims() == std::vector<size_t>{1, 1});

    GradedSliceCoalgebra v4 = associated_graded(
        AugmentedCoalgebra(group_coalgebra(elementary_abelian_group(2, 2), Fp(2))));
    CHECK(v4.dims() == std::vector<size_t>{1, 2, 1});

    GradedSliceCoalgebra z3 = associated_graded(
        AugmentedCoalgebra(group_coalgebra(cyclic_group(3), Fp(3))));
    CHECK(z3.dims() == std::vector<size_t>{1, 1, 1});

    CHECK_THROWS_AS(
        associated_graded(AugmentedCoalgebra(group_coalgebra(cyclic_group(3), Fp(2)))),
        std::invalid_argument);
}

TEST_CASE("cohomology harness on (Z/2)^2") {
    AugmentedCoalgebra c(group_coalgebra(elementary_abelian_group(2, 2), Fp(2)));
    CohomologyHarnessReport r = cohomology_harness(c, 4);
    CHECK(r.h_dims == std::vector<size_t>{1, 2, 3, 4, 5});
    CHECK(r.hypothesis1);
    CHECK(r.hypothesis2);
    CHECK(r.hypothesis3);
    CHECK(r.h_gr_dims == r.h_dims);
    CHECK(r.endpoint_dims_equal);
    CHECK(r.h_quadratic_through_n_max);
    // qH is the polynomial ring on two variables
    CHECK(r.q_h.dim_v() == 2);
    CHECK(r.q_h.relations.dim() == 1);
}

TEST_CASE("cohomology harness on Z/4: hypothesis 1 fails") {
    AugmentedCoalgebra c(group_coalgebra(cyclic_group(4), Fp(2)));
    CohomologyHarnessReport r = cohomology_harness(c, 4);
    CHECK(r.h_dims == std::vector<size_t>{1, 1, 1, 1, 1});
    CHECK(!r.hypothesis1);  // the square of the degree-1 class vanishes
    // both dimension sequences are still produced
    CHECK(r.h_gr_dims.size() == r.h_dims.size());
}

TEST_CASE("cohomology harness on Z/2") {
    AugmentedCoalgebra c(group_coalgebra(cyclic_group(2), Fp(2)));
    CohomologyHarnessReport r = cohomology_harness(c, 4);
    CHECK(r.h_dims == std::vector<size_t>{1, 1, 1, 1, 1});
    CHECK(r.hypothesis1);
    CHECK(r.hypothesis2);
    CHECK(r.hypothesis3);
    CHECK(r.endpoint_dims_equal);
}

TEST_CASE("harness rejects non-nilpotent input") {
    AugmentedCoalgebra c(group_coalgebra(cyclic_group(3), Fp(2)));
    CHECK_THROWS_AS(cohomology_harness(c, 4), std::invalid_argument);
}

TEST_CASE("cohomology harness on Q_8: hypothesis 2 fails") {
    // H^*(Q_8; F_2) has dims 1,2,2,1 and a genuine new relation in degree 3,
    // so the endpoint comparison with gr_N must come out unequal
    AugmentedCoalgebra c(group_coalgebra(quaternion_group(8), Fp(2)));
    CohomologyHarnessReport r = cohomology_harness(c, 3);
    CHECK(r.h_dims == std::vector<size_t>{1, 2, 2, 1});
    CHECK(r.hypothesis1);
    CHECK(!r.hypothesis2);
    CHECK(!r.endpoint_dims_equal);
}

TEST_CASE("cohomology harness on D_8: hypothesis 1 fails") {
    AugmentedCoalgebra c(group_coalgebra(dihedral_group(8), Fp(2)));
    CohomologyHarnessReport r = cohomology_harness(c, 3);
    CHECK(r.h_dims == std::vector<size_t>{1, 2, 3, 4});
    CHECK(!r.hypothesis1);
    CHECK(r.endpoint_dims_equal);
}
