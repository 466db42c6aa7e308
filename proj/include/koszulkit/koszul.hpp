#pragma once

#include "koszulkit/homology.hpp"

namespace koszulkit {

// A collection of subspaces X_1, ..., X_m of a common ambient space W.
struct SubspaceCollection {
    Fp field;
    size_t ambient;
    std::vector<Subspace> members;

    SubspaceCollection(Fp f, size_t ambient_dim, std::vector<Subspace> xs);
    size_t size() const { return members.size(); }
    SubspaceCollection subcollection(const std::vector<size_t>& indices) const;
};

// B_*(W, X): W <- ⊕_s X_s <- ⊕_{s<t} X_s∩X_t <- ... <- ⋂_k X_k, with
// alternating-sign inclusion components. Stored with the r-fold intersections
// first so the differentials run forward; W sits at the last position.
FiniteComplex b_lower_complex(const SubspaceCollection& col);

// B^*(W, X): W -> ⊕_s W/X_s -> ⊕_{s<t} W/(X_s+X_t) -> ..., with signed
// projection components. W sits at position 0.
FiniteComplex b_upper_complex(const SubspaceCollection& col);

// exactness everywhere outside the W term
bool b_lower_exact(const SubspaceCollection& col);
bool b_upper_exact(const SubspaceCollection& col);

struct DistributivityResult {
    bool distributive;
    // on failure: the minimal subcollection (member indices) whose B_* complex
    // fails exactness while all of its proper subcollections are distributive
    std::vector<size_t> witness;
};

// Recursive criterion: collections of size <= 2 are distributive; otherwise a
// collection is distributive iff all proper subcollections are (recursively)
// and B_* is exact outside W. Memoized over the subset lattice.
DistributivityResult is_distributive(const SubspaceCollection& col);

enum class DirectVerdict { distributive, not_distributive, inconclusive };

// Independent oracle: closes the collection under sum and intersection and
// checks the identity (X+Y)∩Z = X∩Z + Y∩Z on all triples of the closure.
// Bails out with `inconclusive` when the closure exceeds `max_elements`.
DirectVerdict is_distributive_direct(const SubspaceCollection& col,
                                     size_t max_elements = 512);

struct KoszulVerdict {
    bool koszul;
    int up_to_degree;       // certified through this degree
    int failure_degree;     // -1 when koszul
    // distributivity route: failing subcollection indices at failure_degree
    std::vector<size_t> witness_subcollection;
    // homology route: offending bidegree
    std::optional<std::pair<int, int>> witness_bidegree;
};

// the collection {V^{⊗k-1} ⊗ R ⊗ V^{⊗n-k-1}} in V^{⊗n} for a presentation
SubspaceCollection relation_collection(const QuadraticPresentation& p, int n);

KoszulVerdict koszul_by_distributivity(const QuadraticPresentation& p, int n_max);
KoszulVerdict koszul_by_homology(const QuadraticPresentation& p, int n_max);

}  // namespace koszulkit
