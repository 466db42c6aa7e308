#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "koszulkit/complex.hpp"

namespace koszulkit {

// d^n with an overflow guard; coordinates of V^{⊗n} are ordered by the
// mixed-radix expansion of the index in base d, most significant factor
// leftmost. All modules share this convention.
size_t tensor_pow(size_t d, int n);

// Solves x = coeffs * M for a fixed spanning matrix M (rows span a subspace).
class RowSolver {
public:
    explicit RowSolver(const FpMatrix& spanning);
    // coefficients w.r.t. the rows of the original spanning matrix
    std::optional<std::vector<uint32_t>> solve(std::span<const uint32_t> v) const;
    size_t rank() const { return rref_.rows(); }
    const FpMatrix& reduced() const { return rref_; }
    // reduced() = transform() * spanning
    const FpMatrix& transform() const { return transform_; }

private:
    FpMatrix rref_;       // r x n
    FpMatrix transform_;  // r x k with rref_ = transform_ * spanning
    std::vector<size_t> pivots_;
};

// A quadratic presentation (V, R): generators span V, R ⊆ V⊗V. The same data
// presents both the quadratic algebra {V,R} = T(V)/(R) and the quadratic
// coalgebra ⟨V,R⟩ ⊆ N(V).
struct QuadraticPresentation {
    Fp field;
    std::vector<std::string> generators;
    Subspace relations;

    QuadraticPresentation(Fp f, std::vector<std::string> gens, Subspace rel);
    size_t dim_v() const { return generators.size(); }
};

enum class PresentationSide { algebra, coalgebra };

struct TaggedPresentation {
    QuadraticPresentation presentation;
    PresentationSide side;
};

// Quadratic duality: identical (V, R) data, flipped interpretation.
TaggedPresentation dual(const TaggedPresentation& t);

// presets
QuadraticPresentation free_presentation(Fp field, size_t dim_v);
QuadraticPresentation polynomial_presentation(Fp field, size_t dim_v);
QuadraticPresentation exterior_presentation(Fp field, size_t dim_v);
QuadraticPresentation full_relations_presentation(Fp field, size_t dim_v);

// V^{⊗i-1} ⊗ R ⊗ V^{⊗n-i-1} inside V^{⊗n}, 1 <= i <= n-1
Subspace embed_relations(const QuadraticPresentation& p, int i, int n);

// V^{⊗n} / U with canonical pivot-complement coordinates.
struct QuotientSpace {
    Subspace denominator;
    FpMatrix projection;  // dim x ambient
    FpMatrix section;     // ambient x dim

    size_t ambient() const { return projection.cols(); }
    size_t dim() const { return projection.rows(); }
};
QuotientSpace make_quotient(const Subspace& u);

// A_n = V^{⊗n} / sum_i V^{⊗i-1}⊗R⊗V^{⊗n-i-1}
QuotientSpace algebra_component(const QuadraticPresentation& p, int n);
// C_n = intersection_i V^{⊗i-1}⊗R⊗V^{⊗n-i-1}
Subspace coalgebra_component(const QuadraticPresentation& p, int n);

// Graded algebra truncated at n_max: component dimensions plus the
// multiplication maps A_i ⊗ A_j -> A_{i+j} for i, j >= 1. A_0 = k acts as the
// unit implicitly. Associativity is checked on construction for every
// composable triple within n_max.
class GradedSliceAlgebra {
public:
    GradedSliceAlgebra(Fp field, std::vector<size_t> dims,
                       std::map<std::pair<int, int>, FpMatrix> mult_maps);

    Fp field() const { return field_; }
    int n_max() const { return static_cast<int>(dims_.size()) - 1; }
    size_t dim(int n) const { return dims_[n]; }
    const std::vector<size_t>& dims() const { return dims_; }
    const FpMatrix& mult(int i, int j) const;

    // provenance when built from a presentation or a diagonal-cohomology
    // construction: A_n as a quotient of V^{⊗n}
    std::vector<std::optional<QuotientSpace>> quotients;

private:
    Fp field_;
    std::vector<size_t> dims_;
    std::map<std::pair<int, int>, FpMatrix> mult_;
};

// Graded coalgebra truncated at n_max with comultiplication components
// C_{i+j} -> C_i ⊗ C_j for i, j >= 1. `complete` marks slices whose
// components above n_max are genuinely zero (finite-dimensional graded
// coalgebras such as associated graded coalgebras), as opposed to
// truncations of infinite objects.
class GradedSliceCoalgebra {
public:
    GradedSliceCoalgebra(Fp field, std::vector<size_t> dims,
                         std::map<std::pair<int, int>, FpMatrix> comult_maps, bool complete = false);

    Fp field() const { return field_; }
    int n_max() const { return static_cast<int>(dims_.size()) - 1; }
    size_t dim(int n) const { return dims_[n]; }
    const std::vector<size_t>& dims() const { return dims_; }
    const FpMatrix& comult(int i, int j) const;
    bool complete() const { return complete_; }

    // carriers: C_n realized as a subspace of V^{⊗n} when available
    std::vector<std::optional<Subspace>> carriers;

private:
    Fp field_;
    std::vector<size_t> dims_;
    std::map<std::pair<int, int>, FpMatrix> comult_;
    bool complete_;
};

GradedSliceAlgebra build_algebra_slice(const QuadraticPresentation& p, int n_max);
GradedSliceCoalgebra build_coalgebra_slice(const QuadraticPresentation& p, int n_max);

// quotients of tensor powers with concatenation product; shared by
// build_algebra_slice and the diagonal-cohomology algebra
GradedSliceAlgebra tensor_quotient_algebra(Fp field, size_t dim_v,
                                           const std::vector<Subspace>& denominators);

// the multiplication map A_1^{⊗n} -> A_n
FpMatrix iterated_product_map(const GradedSliceAlgebra& a, int n);
// the iterated comultiplication C_n -> C_1^{⊗n}
FpMatrix iterated_comult_map(const GradedSliceCoalgebra& c, int n);

struct DegreeComparison {
    int degree;
    size_t dim_from;  // (qA)_n resp. C_n
    size_t dim_to;    // A_n resp. (qC)_n
    bool injective;
    bool surjective;
};

struct QuadraticPartResult {
    QuadraticPresentation presentation;
    // algebra: A_1·A_1 = A_2; coalgebra: Δ injective on C_2
    bool low_degree_ok;
    std::vector<DegreeComparison> comparisons;  // degrees 0..n_max

    bool isomorphism_through(int n) const;
};

QuadraticPartResult quadratic_part_of_algebra(const GradedSliceAlgebra& a);
QuadraticPartResult quadratic_part_of_coalgebra(const GradedSliceCoalgebra& c);

// the slice of F_l[x]/x^power through degree n_max (not quadratic for
// power >= 3; used as the standard non-quadratic example)
GradedSliceAlgebra truncated_polynomial_algebra(Fp field, int power, int n_max);

}  // namespace koszulkit
