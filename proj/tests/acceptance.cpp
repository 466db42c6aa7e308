// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "koszulkit/run.hpp"

using namespace koszulkit;

namespace {

using clock_type = std::chrono::steady_clock;

struct Criterion {
    std::string name;
    double budget_ms;
    std::function<bool(std::string&)> run;
};

bool check(bool condition, std::string& detail, const std::string& message) {
    if (!condition && detail.empty())
        detail = message;
    return condition;
}

// ---- criterion 1: d∘d = 0 and the contracting homotopy, corpus-wide ----
bool criterion1(std::string& detail) {
    bool ok = true;
    std::vector<QuadraticPresentation> presentations = corpus::standard(32);
    presentations.push_back(polynomial_presentation(Fp(3), 2));
    presentations.push_back(free_presentation(Fp(2), 2));
    presentations.push_back(full_relations_presentation(Fp(5), 1));
    for (const QuadraticPresentation& p : presentations) {
        GradedSliceAlgebra a = build_algebra_slice(p, 4);
        GradedSliceCoalgebra c = build_coalgebra_slice(p, 4);
        for (int j = 0; j <= 4; ++j) {
            try {
                bar_strand_complex(a, j);    // constructor asserts d∘d = 0
                cobar_strand_complex(c, j);
            } catch (const std::exception& e) {
                ok = check(false, detail, std::string("d∘d failed: ") + e.what());
            }
        }
        ok = check(!homotopy_check(a, 4).has_value(), detail, "bar homotopy identity") && ok;
        ok = check(!homotopy_check(c, 4).has_value(), detail, "cobar homotopy identity") && ok;
    }
    // named ungraded instances
    AugmentedAlgebraData tp2 = slice_to_augmented(truncated_polynomial_algebra(Fp(2), 2, 3));
    ok = check(!homotopy_check(tp2, 3).has_value(), detail, "F_2[x]/x^2 homotopy") && ok;
    AugmentedCoalgebraData z3 = group_coalgebra(cyclic_group(3), Fp(3));
    ok = check(!homotopy_check(z3, 3).has_value(), detail, "F_3(Z/3) homotopy") && ok;
    return ok;
}

// ---- criterion 2: the quadraticity obstruction numbers for F_l[x]/x^3 ----
bool criterion2(std::string& detail) {
    bool ok = true;
    for (uint32_t l : {2u, 3u, 5u}) {
        GradedSliceAlgebra tp = truncated_polynomial_algebra(Fp(l), 3, 4);
        BigradedTable t = homology_table(tp, 4);
        ok = check(t.entry(2, 3) == 1, detail,
                   "H_{2,3}(F_" + std::to_string(l) + "[x]/x^3) != 1") && ok;
        QuadraticVerdict v = quadratic_verdict(tp, 4);
        ok = check(!v.quadratic && v.first_failure_degree == 3, detail,
                   "quadratic verdict must fail exactly at degree 3") && ok;
    }
    return ok;
}

// ---- criterion 3: cross-validation of the Koszulity criteria ----
bool criterion3(std::string& detail) {
    bool ok = true;
    for (const QuadraticPresentation& p : corpus::standard(32)) {
        KoszulVerdict kh = koszul_by_homology(p, 4);
        KoszulVerdict kd = koszul_by_distributivity(p, 4);
        ok = check(kh.koszul == kd.koszul && kh.failure_degree == kd.failure_degree, detail,
                   "criteria disagree on a corpus presentation") && ok;
    }
    QuadraticPresentation sym = polynomial_presentation(Fp(3), 2);
    ok = check(koszul_by_homology(sym, 4).koszul, detail, "symmetric algebra not Koszul") && ok;
    ok = check(koszul_by_distributivity(sym, 4).koszul, detail,
               "symmetric algebra not Koszul (distributivity)") && ok;
    BigradedTable t = homology_table(build_algebra_slice(sym, 4), 4);
    std::vector<size_t> diag;
    for (int i = 0; i <= 4; ++i)
        diag.push_back(t.entry(i, i));
    ok = check(diag == std::vector<size_t>{1, 2, 1, 0, 0} && t.diagonal_only(), detail,
               "symmetric algebra diagonal dims differ from (1,2,1,0,0)") && ok;
    ok = check(koszul_by_distributivity(free_presentation(Fp(2), 2), 4).koszul, detail,
               "{V,0} not Koszul") && ok;
    ok = check(koszul_by_distributivity(full_relations_presentation(Fp(2), 2), 4).koszul,
               detail, "{V,V⊗V} not Koszul") && ok;
    return ok;
}

// ---- criterion 4: the distributivity recursion against the direct oracle ----
bool criterion4(std::string& detail) {
    bool ok = true;
    size_t conclusive = 0;
    for (const QuadraticPresentation& p : corpus::standard(32))
        for (int n = 3; n <= 4; ++n) {
            SubspaceCollection col = relation_collection(p, n);
            DirectVerdict direct = is_distributive_direct(col, 512);
            if (direct == DirectVerdict::inconclusive)
                continue;
            ++conclusive;
            DistributivityResult rec = is_distributive(col);
            ok = check(rec.distributive == (direct == DirectVerdict::distributive), detail,
                       "B_* recursion disagrees with the direct oracle") && ok;
        }
    ok = check(conclusive > 0, detail, "no conclusive collections in the corpus") && ok;

    // three distinct lines in F_3^2: false with a replayable witness
    Fp f3(3);
    std::vector<Subspace> lines;
    lines.push_back(Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{1, 0}})));
    lines.push_back(Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{0, 1}})));
    lines.push_back(Subspace::from_rows(FpMatrix::from_rows(f3, 2, {{1, 1}})));
    SubspaceCollection three(f3, 2, lines);
    DistributivityResult r = is_distributive(three);
    ok = check(!r.distributive, detail, "three lines reported distributive") && ok;
    SubspaceCollection witness = three.subcollection(r.witness);
    ok = check(is_distributive_direct(witness) == DirectVerdict::not_distributive, detail,
               "witness does not replay") && ok;
    ok = check(!b_lower_exact(witness), detail, "witness B_* complex is exact") && ok;
    return ok;
}

// ---- criterion 5: diagonal-algebra round trips ----
bool criterion5(std::string& detail) {
    bool ok = true;
    std::vector<QuadraticPresentation> ps = corpus::standard(12, 515);
    for (const QuadraticPresentation& p : ps) {
        GradedSliceCoalgebra c = build_coalgebra_slice(p, 4);
        GradedSliceAlgebra diag = diagonal_algebra(c, 4);
        QuadraticPartResult qp = quadratic_part_of_algebra(diag);
        ok = check(qp.presentation.relations == p.relations &&
                       qp.presentation.dim_v() == p.dim_v(),
                   detail, "diagonal algebra does not recover (V,R)") && ok;
    }
    return ok;
}

// ---- criterion 6: the PBW suite ----
bool criterion6(std::string& detail) {
    bool ok = true;
    std::vector<PbwReport> passing;
    for (uint32_t l : {2u, 3u}) {
        GradedSliceAlgebra sym = build_algebra_slice(polynomial_presentation(Fp(l), 2), 4);
        OrderedGenerators order;
        order.ranks = {0, 1};
        PbwReport r = pbw_check(sym, order, 4);
        ok = check(r.is_pbw && r.certified_koszul, detail,
                   "F_" + std::to_string(l) + "[x,y] fails pbw_check") && ok;
        passing.push_back(r);
    }
    GradedSliceAlgebra ext = build_algebra_slice(exterior_presentation(Fp(5), 3), 4);
    OrderedGenerators skew_order;
    skew_order.ranks = {0, 1, 2};
    skew_order.parity = Parity::skew;
    PbwReport re = pbw_check(ext, skew_order, 4);
    ok = check(re.is_pbw && re.certified_koszul, detail,
               "exterior algebra on 3 generators fails pbw_check") && ok;
    passing.push_back(re);

    GradedSliceAlgebra tp = truncated_polynomial_algebra(Fp(2), 3, 4);
    OrderedGenerators single;
    single.ranks = {0};
    PbwReport rt = pbw_check(tp, single, 4);
    ok = check(!rt.is_pbw, detail, "F_2[x]/x^3 passes is_pbw") && ok;

    // degree-3 sufficiency spot-checked at degree 4 on every passing member
    for (const PbwReport& r : passing)
        ok = check(r.degree4_matches.has_value() && *r.degree4_matches, detail,
                   "degree-4 spot check failed on a passing member") && ok;
    return ok;
}

// ---- criterion 7: the nilpotent-coalgebra suite ----
bool criterion7(std::string& detail) {
    bool ok = true;
    struct Case {
        FiniteGroupTable group;
        uint32_t l;
    };
    std::vector<Case> nilpotent_cases;
    nilpotent_cases.push_back({cyclic_group(2), 2});
    nilpotent_cases.push_back({elementary_abelian_group(2, 2), 2});
    nilpotent_cases.push_back({cyclic_group(3), 3});
    for (const Case& cs : nilpotent_cases) {
        AugmentedCoalgebra c(group_coalgebra(cs.group, Fp(cs.l)));
        Filtration filt = augmentation_filtration(c);
        ok = check(filt.full, detail, "expected a nilpotent coalgebra") && ok;
        ok = check(filtration_respects_comult(c, filt), detail,
                   "filtration compatibility fails") && ok;
        GradedSliceCoalgebra gr = associated_graded(c);
        ok = check(one_cogenerated_verdict(gr, gr.n_max()), detail,
                   "gr is not one-cogenerated") && ok;
    }
    AugmentedCoalgebra coprime(group_coalgebra(cyclic_group(3), Fp(2)));
    ok = check(!is_nilpotent(coprime), detail, "F_2(Z/3) reported nilpotent") && ok;

    std::vector<size_t> z2_dims =
        cobar_cohomology_dims(group_coalgebra(cyclic_group(2), Fp(2)), 4);
    ok = check(z2_dims == std::vector<size_t>{1, 1, 1, 1, 1}, detail,
               "H^*(F_2(Z/2)) dims differ from (1,1,1,1,1)") && ok;
    std::vector<size_t> v4_dims =
        cobar_cohomology_dims(group_coalgebra(elementary_abelian_group(2, 2), Fp(2)), 4);
    ok = check(v4_dims == std::vector<size_t>{1, 2, 3, 4, 5}, detail,
               "H^*(F_2((Z/2)^2)) dims differ from (1,2,3,4,5)") && ok;
    return ok;
}

// ---- criterion 8: the cohomology harness ----
bool criterion8(std::string& detail) {
    bool ok = true;
    AugmentedCoalgebra v4(group_coalgebra(elementary_abelian_group(2, 2), Fp(2)));
    CohomologyHarnessReport r = cohomology_harness(v4, 4);
    ok = check(r.hypothesis1 && r.hypothesis2 && r.hypothesis3, detail,
               "hypotheses fail on F_2((Z/2)^2)") && ok;
    ok = check(r.endpoint_dims_equal, detail, "endpoint dims differ on F_2((Z/2)^2)") && ok;

    AugmentedCoalgebra z4(group_coalgebra(cyclic_group(4), Fp(2)));
    CohomologyHarnessReport neg = cohomology_harness(z4, 4);
    ok = check(!neg.hypothesis1, detail, "hypothesis (1) must fail on F_2(Z/4)") && ok;
    ok = check(neg.h_dims.size() == 5 && neg.h_gr_dims.size() == 5, detail,
               "both dimension sequences must still be produced") && ok;
    return ok;
}

// ---- criterion 9: the Milnor-Q suite ----
bool criterion9(std::string& detail) {
    bool ok = true;
    MilnorReport r2 = verify_pbw_milnor(RationalSymbolAlgebraSpec(2, 4), 4);
    ok = check(r2.split.q_set == std::vector<int64_t>{3, 5} &&
                   r2.split.r_set == std::vector<int64_t>{7},
               detail, "Q/R split differs from {3,5}/{7}") && ok;
    ok = check(r2.split.q_of_r.at(7) == 3, detail, "q(7) != 3") && ok;
    std::vector<std::string> names;
    for (const Monomial& m : r2.pbw.s2)
        names.push_back(monomial_symbol_string(m, r2.generators, r2.order));
    std::sort(names.begin(), names.end());
    ok = check(names == std::vector<std::string>{"{-1,-1}", "{2,3}", "{2,5}", "{3,7}"}, detail,
               "S_2 differs from {2,3},{2,5},{3,7},{-1,-1}") && ok;
    ok = check(r2.pbw.is_pbw && r2.pbw.certified_koszul, detail,
               "l=2 pool-4 PBW certification failed") && ok;

    MilnorReport r3 = verify_pbw_milnor(RationalSymbolAlgebraSpec(3, 4), 4);
    ok = check(r3.pbw.s2.size() == 1 &&
                   monomial_symbol_string(r3.pbw.s2[0], r3.generators, r3.order) == "{2,7}",
               detail, "l=3 pool-4 S_2 differs from {2,7}") && ok;
    ok = check(r3.pbw.is_pbw, detail, "l=3 pool-4 is_pbw failed") && ok;

    ok = check(tame_symbol({2, 1}, {3, 1}, 3) == 2, detail, "{2,3}_3 != 2") && ok;
    for (int64_t p : {3, 5, 7})
        ok = check(tame_symbol({p, 1}, {p, 1}, p) == static_cast<uint32_t>(p - 1), detail,
                   "{p,p}_p != -1") && ok;
    std::mt19937 rng(909);
    int steinberg = 0;
    const int64_t primes[] = {3, 5, 7};
    while (steinberg < 100) {
        int64_t p = primes[rng() % 3];
        int64_t num = static_cast<int64_t>(rng() % 40) - 20;
        int64_t den = 1 + static_cast<int64_t>(rng() % 6);
        if (num == 0 || num == den)
            continue;
        Rational a{num, den}, one_minus_a{den - num, den};
        ok = check(tame_symbol(a, one_minus_a, p) == 1, detail, "Steinberg identity failed") &&
             ok;
        ++steinberg;
    }
    return ok;
}

// ---- criterion 10: CLI determinism ----
bool criterion10(std::string& detail) {
#ifndef KOSZULKIT_CLI_PATH
    detail = "CLI path not configured";
    return false;
#else
    const std::string cli = KOSZULKIT_CLI_PATH;
    const std::string doc = "/tmp/koszulkit_acceptance_sym2.doc";
    {
        std::ofstream out(doc);
        out << "[field]\nl = 3\n[generators]\nx\ny\n[relations]\nsymbolic: x*y - y*x\n";
    }
    auto capture = [&](const std::string& out_path, const std::string& args) {
        std::string cmd = cli + " " + args + " > " + out_path + " 2>/dev/null";
        return std::system(cmd.c_str()) == 0;
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    bool ok = true;
    std::vector<std::string> invocations{
        "koszul --criterion both --format structured " + doc,
        "homology --format structured " + doc,
        "milnor-q --l 2 --pool-size 4 --format structured",
    };
    for (size_t i = 0; i < invocations.size(); ++i) {
        std::string a = "/tmp/koszulkit_acceptance_a" + std::to_string(i) + ".txt";
        std::string b = "/tmp/koszulkit_acceptance_b" + std::to_string(i) + ".txt";
        if (!capture(a, invocations[i]) || !capture(b, invocations[i])) {
            ok = check(false, detail, "CLI invocation failed: " + invocations[i]);
            continue;
        }
        std::string run_a = slurp(a), run_b = slurp(b);
        ok = check(!run_a.empty() && run_a == run_b, detail,
                   "structured output not byte-stable: " + invocations[i]) && ok;
    }
    return ok;
#endif
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"bar/cobar exactness and contracting homotopy on the corpus", 10000, criterion1},
        {"H_{2,3}(F_l[x]/x^3) = 1 and failure flagged at degree 3", 1000, criterion2},
        {"homological and distributivity Koszulity criteria agree", 120000, criterion3},
        {"distributivity recursion vs the direct lattice oracle", 30000, criterion4},
        {"diagonal algebra recovers (V,R)", 60000, criterion5},
        {"commutative PBW suite", 30000, criterion6},
        {"nilpotent coalgebra suite (filtration, gr, cohomology dims)", 120000, criterion7},
        {"cohomology harness with negative controls", 120000, criterion8},
        {"Milnor-Q suite", 30000, criterion9},
        {"CLI structured output is byte-stable", 60000, criterion10},
    };
    bool all_ok = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        auto t0 = clock_type::now();
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        bool in_budget = ms < criteria[i].budget_ms;
        bool pass = ok && in_budget;
        all_ok = all_ok && pass;
        std::printf("[%s] criterion %zu: %s (%.0f ms, budget %.0f ms)%s%s\n",
                    pass ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(), ms,
                    criteria[i].budget_ms, detail.empty() ? "" : " -- ", detail.c_str());
    }
    return all_ok ? 0 : 1;
}
