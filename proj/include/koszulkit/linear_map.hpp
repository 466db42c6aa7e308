#pragma once

#include "koszulkit/subspace.hpp"

namespace koszulkit {

// Linear map F^m -> F^n given by its n x m matrix; columns are the images of
// the domain basis vectors.
struct LinearMap {
    FpMatrix matrix;

    explicit LinearMap(FpMatrix m) : matrix(std::move(m)) {}
    static LinearMap zero(Fp field, size_t domain_dim, size_t codomain_dim) {
        return LinearMap(FpMatrix(field, codomain_dim, domain_dim));
    }
    static LinearMap identity(Fp field, size_t n) {
        return LinearMap(FpMatrix::identity(field, n));
    }

    Fp field() const { return matrix.field(); }
    size_t domain_dim() const { return matrix.cols(); }
    size_t codomain_dim() const { return matrix.rows(); }

    std::vector<uint32_t> apply(std::span<const uint32_t> v) const;
    bool is_zero() const;
};

LinearMap compose(const LinearMap& g, const LinearMap& f);  // g after f
LinearMap tensor_product(const LinearMap& f, const LinearMap& g);

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);
Subspace image_of(const LinearMap& f, const Subspace& u);
Subspace preimage_of(const LinearMap& f, const Subspace& u);

}  // namespace koszulkit
