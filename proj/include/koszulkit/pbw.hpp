#pragma once

#include "koszulkit/homology.hpp"

namespace koszulkit {

// exponent vector over the generators of A_1
using Monomial = std::vector<int>;

enum class Parity { commutative, skew };

// A strict total order on the generators: ranks[r] is the generator index in
// rank position r (smallest first). At l = 2 skew parity degrades to plain
// commutative (squares need not vanish).
struct OrderedGenerators {
    std::vector<size_t> ranks;
    Parity parity = Parity::commutative;

    size_t dim() const { return ranks.size(); }
};

// Inverse lexicographic comparison of equal-degree monomials: at the first
// generator (scanned in increasing rank order) where the exponents differ,
// the larger exponent sorts first. Returns -1, 0 or 1.
int inverse_lex_compare(const Monomial& m1, const Monomial& m2, const OrderedGenerators& order);

// all monomials of the given degree, sorted increasingly
std::vector<Monomial> monomials_of_degree(size_t dim_v, int degree,
                                          const OrderedGenerators& order);

// image of a monomial in A_n under iterated multiplication, slots in
// increasing rank order
std::vector<uint32_t> monomial_image(const GradedSliceAlgebra& a, const Monomial& m,
                                     const OrderedGenerators& order);

// The greedy monomial basis S_n: scan X^{(n)} in increasing inverse-lex order
// and keep a monomial iff its image is independent of the images already
// kept. Requires a (skew-)commutative one-generated slice.
std::vector<Monomial> monomial_basis(const GradedSliceAlgebra& a, const OrderedGenerators& order,
                                     int n);

// all degree-k divisors of a monomial
std::vector<Monomial> divisors_of_degree(const Monomial& m, int k);

struct PbwReport {
    Parity effective_parity;
    std::vector<Monomial> s2, s3;
    std::vector<Monomial> predicted_s3;
    bool is_pbw;
    bool quadratic;
    bool certified_koszul;
    // redundant spot check at degree 4 when the slice reaches that far
    std::optional<bool> degree4_matches;
    std::vector<Monomial> s4, predicted_s4;
};

// The degree-3 PBW test: S_3 must equal the set of degree-3 monomials whose
// degree-2 divisors all lie in S_2. certified_koszul additionally requires
// the quadratic verdict through n_max.
PbwReport pbw_check(const GradedSliceAlgebra& a, const OrderedGenerators& order, int n_max);

}  // namespace koszulkit
