#pragma once

#include <memory>
#include <mutex>

#include "koszulkit/koszul.hpp"

namespace koszulkit {

// A finite group given by its multiplication table. Group axioms are checked
// exhaustively on construction and the identity is located automatically.
struct FiniteGroupTable {
    std::vector<std::string> names;
    std::vector<std::vector<size_t>> table;  // table[g][h] = g·h
    size_t identity = 0;

    FiniteGroupTable(std::vector<std::string> element_names,
                     std::vector<std::vector<size_t>> mult_table);
    size_t order() const { return names.size(); }
};

FiniteGroupTable cyclic_group(size_t n);
FiniteGroupTable elementary_abelian_group(size_t l, size_t k);
FiniteGroupTable dihedral_group(size_t order);    // order 2n, n >= 1
FiniteGroupTable quaternion_group(size_t order);  // 8 or 16

// Function coalgebra F_l(G): basis of indicator functions with the
// convolution-dual comultiplication Δ(δ_g) = Σ_{hk=g} δ_h ⊗ δ_k, counit
// evaluation at the identity, augmentation the constant function 1.
AugmentedCoalgebraData group_coalgebra(const FiniteGroupTable& g, Fp field);

// An augmented coalgebra with cached iterated comultiplications
// Δ^{(m)} : C -> C^{⊗m} (Δ^{(0)} = ε, Δ^{(1)} = id).
class AugmentedCoalgebra {
public:
    explicit AugmentedCoalgebra(AugmentedCoalgebraData data);
    const AugmentedCoalgebraData& data() const { return data_; }
    size_t dim() const { return data_.dim(); }
    Fp field() const { return data_.field; }
    const FpMatrix& iterated_comult(size_t m) const;

private:
    AugmentedCoalgebraData data_;
    std::unique_ptr<std::mutex> cache_mutex_;
    mutable std::vector<FpMatrix> cache_;
};

struct Filtration {
    std::vector<Subspace> steps;  // N_0 ⊆ N_1 ⊆ ... ending at stabilization
    bool full = false;

    size_t stabilization() const { return steps.size() - 1; }
};

// production path: the one-step recursion N_n = {c | Δ(c) ∈ N_{n-1}⊗C + C⊗N_0}
Filtration augmentation_filtration(const AugmentedCoalgebra& c);
// oracle: the literal Δ^{(n+1)}-preimage definition; cost grows as dim^{n+1},
// so capped by max_steps
Filtration augmentation_filtration_literal(const AugmentedCoalgebra& c, size_t max_steps);

bool is_nilpotent(const AugmentedCoalgebra& c);

// compatibility of the filtration with comultiplication, checked literally: Δ(N_n) ⊆ Σ_{i+j=n} N_i ⊗ N_j
bool filtration_respects_comult(const AugmentedCoalgebra& c, const Filtration& filt);

// gr_N C as a complete graded coalgebra slice. Requires a nilpotent input;
// raises a hard error if Δ(N_n) escapes Σ N_i ⊗ N_j, which would indicate an
// implementation bug rather than bad input.
GradedSliceCoalgebra associated_graded(const AugmentedCoalgebra& c);

struct CohomologyHarnessReport {
    std::vector<size_t> h_dims;     // dim H^i(C) for i = 0..n_max
    std::vector<size_t> h_gr_dims;  // dim H^i(gr_N C) for i = 0..n_max
    bool hypothesis1;               // H^2 is generated by H^1
    bool hypothesis2;               // no new relations in degree 3
    bool hypothesis3;               // qH is Koszul through n_max
    QuadraticPresentation q_h;      // (H^1, ker(H^1⊗H^1 -> H^2))
    std::vector<bool> generated_in_degree;        // degrees 0..n_max
    std::vector<bool> no_new_relations_in_degree; // degrees 0..n_max
    bool endpoint_dims_equal;
    bool h_quadratic_through_n_max;
};

// Checks the quadraticity-transfer hypotheses on a nilpotent coalgebra and
// compares dim H^i(C) with dim H^i(gr_N C). Hypothesis failures are reported,
// not fatal.
CohomologyHarnessReport cohomology_harness(const AugmentedCoalgebra& c, int n_max);

}  // namespace koszulkit
