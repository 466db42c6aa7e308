#pragma once

#include "koszulkit/quadratic.hpp"

namespace koszulkit {

// ---------------------------------------------------------------------------
// finite-dimensional augmented algebras and coalgebras (ungraded inputs)
// ---------------------------------------------------------------------------

// Multiplication is a map A ⊗ A -> A; `augmentation` is the row vector of an
// algebra homomorphism A -> k. Associativity, the unit laws and the
// homomorphism axioms are checked on construction.
struct AugmentedAlgebraData {
    Fp field;
    FpMatrix mult;  // dim x dim^2
    std::vector<uint32_t> unit;
    std::vector<uint32_t> augmentation;

    AugmentedAlgebraData(Fp f, FpMatrix mult_map, std::vector<uint32_t> unit_vec,
                         std::vector<uint32_t> aug_row);
    size_t dim() const { return mult.rows(); }
};

// Comultiplication C -> C ⊗ C with counit row ε and augmentation vector
// γ(1) ∈ C. Coassociativity, the counit laws, Δ(γ(1)) = γ(1)⊗γ(1) and
// ε(γ(1)) = 1 are checked on construction.
struct AugmentedCoalgebraData {
    Fp field;
    FpMatrix comult;  // dim^2 x dim
    std::vector<uint32_t> counit;
    std::vector<uint32_t> augmentation;

    AugmentedCoalgebraData(Fp f, FpMatrix comult_map, std::vector<uint32_t> counit_row,
                           std::vector<uint32_t> aug_vec);
    size_t dim() const { return comult.cols(); }
};

// the slice as a finite-dimensional augmented (co)algebra, products above
// n_max truncated to zero
AugmentedAlgebraData slice_to_augmented(const GradedSliceAlgebra& a);
AugmentedCoalgebraData slice_to_augmented(const GradedSliceCoalgebra& c);

// ---------------------------------------------------------------------------
// reduced (co)bar complexes
// ---------------------------------------------------------------------------

// Reduced bar complex k <- A_+ <- A_+⊗A_+ <- ... through homological degree
// i_max, stored with spaces in order (A_+)^{⊗i_max}, ..., A_+, k so that the
// differentials run forward; homological degree i sits at position i_max - i.
FiniteComplex bar_complex(const AugmentedAlgebraData& a, int i_max);
std::vector<size_t> bar_homology_dims(const AugmentedAlgebraData& a, int i_max);

// Reduced cobar complex k -> C^+ -> C^+⊗C^+ -> ... through degree i_max;
// homological degree i sits at position i.
FiniteComplex cobar_complex(const AugmentedCoalgebraData& c, int i_max);
std::vector<size_t> cobar_cohomology_dims(const AugmentedCoalgebraData& c, int i_max);

// The bidegree strand of the (co)bar complex of a graded slice at internal
// degree j. Bar: position t holds homological degree j - t. Cobar: position i
// holds homological degree i.
FiniteComplex bar_strand_complex(const GradedSliceAlgebra& a, int j);
FiniteComplex cobar_strand_complex(const GradedSliceCoalgebra& c, int j);

// ---------------------------------------------------------------------------
// bigraded tables
// ---------------------------------------------------------------------------

class BigradedTable {
public:
    explicit BigradedTable(int n_max) : n_max_(n_max) {}

    int n_max() const { return n_max_; }
    size_t entry(int i, int j) const;
    void set(int i, int j, size_t dim);
    bool diagonal_only() const;
    // smallest internal degree j carrying a nonzero off-diagonal entry, with
    // the corresponding i; nullopt when concentrated on the diagonal
    std::optional<std::pair<int, int>> first_off_diagonal() const;
    const std::map<std::pair<int, int>, size_t>& entries() const { return entries_; }

    // optional cocycle bases, keyed by (i, j)
    std::map<std::pair<int, int>, Subspace> cocycles;

private:
    int n_max_;
    std::map<std::pair<int, int>, size_t> entries_;
};

BigradedTable homology_table(const GradedSliceAlgebra& a, int n_max,
                             bool keep_cocycles = false);
BigradedTable cohomology_table(const GradedSliceCoalgebra& c, int n_max,
                               bool keep_cocycles = false);

// total cohomology dimensions H^i = sum_j H^{i,j} for a complete slice
// (components above n_max genuinely zero), i = 0..i_max
std::vector<size_t> total_cohomology_dims(const GradedSliceCoalgebra& c, int i_max);

// ---------------------------------------------------------------------------
// one-cogeneratedness and quadraticity verdicts
// ---------------------------------------------------------------------------

bool one_cogenerated_verdict(const GradedSliceCoalgebra& c, int n_max);
bool one_generated_verdict(const GradedSliceAlgebra& a, int n_max);

struct QuadraticVerdict {
    bool low_degree_generated;       // one-(co)generated through n_max
    std::vector<int> degrees;        // 2..n_max
    std::vector<bool> iso_through;   // comparison-map route, per degree
    std::vector<bool> h2_vanishing;  // H^{2,j} route, per degree
    bool quadratic;                  // iso through n_max
    int first_failure_degree;        // -1 when quadratic

    bool routes_agree() const { return iso_through == h2_vanishing; }
};

// Both routes are computed independently; when the slice is one-(co)generated
// a disagreement is a bug and throws.
QuadraticVerdict quadratic_verdict(const GradedSliceAlgebra& a, int n_max);
QuadraticVerdict quadratic_verdict(const GradedSliceCoalgebra& c, int n_max);

// ---------------------------------------------------------------------------
// the diagonal cohomology algebra
// ---------------------------------------------------------------------------

// The algebra ⊕_i H^{i,i}(C) with the concatenation product, realized as
// quotients of C_1^{⊗i} by the images of the cobar differential.
GradedSliceAlgebra diagonal_algebra(const GradedSliceCoalgebra& c, int n_max);

// ---------------------------------------------------------------------------
// contracting homotopy checks
// ---------------------------------------------------------------------------

struct HomotopyViolation {
    int internal_degree;  // -1 for ungraded instances
    int position;         // homological position in the resolution
    size_t basis_index;
};

// Verifies d∘h + h∘d = id on the augmented resolutions (bar: k <- A <- A⊗A_+
// <- ...; cobar: k -> C -> C⊗C^+ -> ...) on every basis vector, strand by
// strand for graded slices. Returns the first violating basis vector.
std::optional<HomotopyViolation> homotopy_check(const AugmentedAlgebraData& a, int i_max);
std::optional<HomotopyViolation> homotopy_check(const AugmentedCoalgebraData& c, int i_max);
std::optional<HomotopyViolation> homotopy_check(const GradedSliceAlgebra& a, int j_max);
std::optional<HomotopyViolation> homotopy_check(const GradedSliceCoalgebra& c, int j_max);

}  // namespace koszulkit
