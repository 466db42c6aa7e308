#pragma once

#include "koszulkit/koszul.hpp"
#include "koszulkit/pbw.hpp"

namespace koszulkit {

struct Rational {
    int64_t num;
    int64_t den = 1;

    bool negative() const { return (num < 0) != (den < 0); }
};

// p-adic valuation of a nonzero rational
int64_t valuation(const Rational& a, int64_t p);

// the tame symbol {a,b}_p = (-1)^{ν(a)ν(b)} a^{ν(b)} / b^{ν(a)} mod p for an
// odd prime p, valued in F_p^* (1..p-1)
uint32_t tame_symbol(const Rational& a, const Rational& b, int64_t p);

// 1 when every argument is negative, else 0
uint32_t infinity_symbol(std::span<const Rational> args);

std::vector<int64_t> first_primes(size_t k);
int64_t smallest_primitive_root(int64_t p);
// discrete log base the smallest primitive root mod p, reduced mod l
uint32_t dlog_mod_l(uint32_t value, int64_t p, uint32_t l);

struct RationalSymbolAlgebraSpec {
    uint32_t l;
    size_t pool_size;          // the first pool_size rational primes
    bool include_minus_one;    // forced true when l = 2, false otherwise

    RationalSymbolAlgebraSpec(uint32_t l_prime, size_t k);
};

struct SplitGenerators {
    std::vector<int64_t> q_set;
    std::vector<int64_t> r_set;
    std::map<int64_t, int64_t> q_of_r;
};

// the Q/R residue split of the pool with q(r) the minimal non-residue in Q;
// errors when q(r) is not found within the pool
SplitGenerators split_generators(const RationalSymbolAlgebraSpec& spec);

// degree-1 symbols in index order: pool primes ascending, then {-1} at l = 2
std::vector<Rational> generator_symbols(const RationalSymbolAlgebraSpec& spec);

// the printed order: {2} < {q} < {r} < {-1} for l = 2; {q} < {r} for l > 2,
// ascending numeric inside Q and R
OrderedGenerators canonical_symbol_order(const RationalSymbolAlgebraSpec& spec);

// The subalgebra of K^M(Q) ⊗ F_l generated by the pool symbols, realized in
// boundary coordinates: tame symbols at the pool primes p with l | p - 1 in
// degree 2, the sign-at-infinity bit in every degree when l = 2.
struct MilnorAlgebra {
    RationalSymbolAlgebraSpec spec;
    std::vector<Rational> generators;
    std::vector<int64_t> coord_primes;  // odd pool primes with l | p - 1
    GradedSliceAlgebra slice;

    // boundary coordinates of a product symbol of the given degree
    std::vector<uint32_t> symbol_coords(std::span<const Rational> args) const;
};

MilnorAlgebra build_truncated_algebra(const RationalSymbolAlgebraSpec& spec, int n_max);

struct MilnorReport {
    SplitGenerators split;
    std::vector<Rational> generators;
    OrderedGenerators order;
    PbwReport pbw;
    std::vector<Monomial> predicted_s2;  // the predicted basis on the pool
    bool s2_matches_prediction;
    bool symbol_identities_ok;  // {2,2} = {2,r} = 0 (l=2); {q,q'} = 0 (l>2)
};

MilnorReport verify_pbw_milnor(const RationalSymbolAlgebraSpec& spec, int n_max);

// a monomial as a symbol string, e.g. "{2,3}" or "{-1,-1}"
std::string monomial_symbol_string(const Monomial& m, const std::vector<Rational>& gens,
                                   const OrderedGenerators& order);

struct FiniteFieldExample {
    int64_t q;       // the prime power
    uint32_t l;
    size_t a1_dim;   // 1 when l | q - 1, else 0
    bool koszul;     // cross-checked by both criteria
};

FiniteFieldExample finite_field_example(int64_t l_prime, int64_t k, uint32_t l);

}  // namespace koszulkit
