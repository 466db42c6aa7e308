#include "koszulkit/linear_map.hpp"

#include <stdexcept>

namespace koszulkit {

std::vector<uint32_t> LinearMap::apply(std::span<const uint32_t> v) const {
    if (v.size() != domain_dim())
        throw std::invalid_argument("apply: vector length mismatch");
    const Fp f = field();
    std::vector<uint32_t> out(codomain_dim(), 0);
    for (size_t c = 0; c < domain_dim(); ++c) {
        uint32_t x = v[c];
        if (!x)
            continue;
        for (size_t r = 0; r < codomain_dim(); ++r)
            out[r] = f.add(out[r], f.mul(x, matrix(r, c)));
    }
    return out;
}

bool LinearMap::is_zero() const {
    for (size_t r = 0; r < matrix.rows(); ++r)
        for (size_t c = 0; c < matrix.cols(); ++c)
            if (matrix(r, c))
                return false;
    return true;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
    if (g.domain_dim() != f.codomain_dim())
        throw std::invalid_argument("compose: dimension mismatch");
    return LinearMap(matmul(g.matrix, f.matrix));
}

LinearMap tensor_product(const LinearMap& f, const LinearMap& g) {
    return LinearMap(kronecker(f.matrix, g.matrix));
}

Subspace kernel(const LinearMap& f) {
    FpMatrix m = f.matrix;
    std::vector<size_t> pivots;
    size_t rk = rref(m, &pivots);
    const Fp field = f.field();
    const size_t d = f.domain_dim();
    std::vector<bool> is_pivot(d, false);
    for (size_t p : pivots)
        is_pivot[p] = true;
    FpMatrix basis(field, 0, d);
    for (size_t c = 0; c < d; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<uint32_t> v(d, 0);
        v[c] = 1;
        for (size_t i = 0; i < rk; ++i)
            v[pivots[i]] = field.neg(m(i, c));
        basis.append_row(v);
    }
    return Subspace::from_rows(std::move(basis));
}

Subspace image(const LinearMap& f) { return Subspace::from_rows(transpose(f.matrix)); }

Subspace image_of(const LinearMap& f, const Subspace& u) {
    if (u.ambient_dim() != f.domain_dim())
        throw std::invalid_argument("image_of: ambient mismatch");
    // rows of u.basis * f^T are the images of the basis vectors
    return Subspace::from_rows(matmul(u.basis(), transpose(f.matrix)));
}

Subspace preimage_of(const LinearMap& f, const Subspace& u) {
    if (u.ambient_dim() != f.codomain_dim())
        throw std::invalid_argument("preimage_of: ambient mismatch");
    if (u.dim() == u.ambient_dim())
        return Subspace::full(f.field(), f.domain_dim());
    return kernel(LinearMap(matmul(quotient_projection(u), f.matrix)));
}

}  // namespace koszulkit
