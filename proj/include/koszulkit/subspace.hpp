#pragma once

#include <optional>
#include <vector>

#include "koszulkit/matrix.hpp"

namespace koszulkit {

// A subspace of F_l^d stored as its reduced row echelon basis. The RREF
// matrix is a canonical representative: equal subspaces compare equal bitwise.
class Subspace {
public:
    // zero subspace
    Subspace(Fp field, size_t ambient_dim);
    static Subspace from_rows(FpMatrix rows);
    static Subspace full(Fp field, size_t ambient_dim);

    Fp field() const { return basis_.field(); }
    size_t ambient_dim() const { return basis_.cols(); }
    size_t dim() const { return basis_.rows(); }
    const FpMatrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool contains_vector(std::span<const uint32_t> v) const;
    bool contains(const Subspace& other) const;
    // coordinates of v in the basis rows; empty optional if v is not a member
    std::optional<std::vector<uint32_t>> coordinates(std::span<const uint32_t> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    FpMatrix basis_;
    std::vector<size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Canonical coordinates on the quotient F^d / U: reduce modulo U, read off the
// non-pivot columns. quotient_projection * quotient_section = identity.
FpMatrix quotient_projection(const Subspace& u);
FpMatrix quotient_section(const Subspace& u);

}  // namespace koszulkit
