#include "koszulkit/subspace.hpp"

#include <stdexcept>

namespace koszulkit {

Subspace::Subspace(Fp field, size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace Subspace::from_rows(FpMatrix rows) {
    std::vector<size_t> pivots;
    size_t r = rref(rows, &pivots);
    FpMatrix trimmed(rows.field(), r, rows.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t c = 0; c < rows.cols(); ++c)
            trimmed(i, c) = rows(i, c);
    Subspace s(rows.field(), rows.cols());
    s.basis_ = std::move(trimmed);
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::full(Fp field, size_t ambient_dim) {
    return from_rows(FpMatrix::identity(field, ambient_dim));
}

bool Subspace::contains_vector(std::span<const uint32_t> v) const {
    return coordinates(v).has_value();
}

std::optional<std::vector<uint32_t>> Subspace::coordinates(std::span<const uint32_t> v) const {
    if (v.size() != ambient_dim())
        throw std::invalid_argument("vector length does not match ambient dimension");
    const Fp f = field();
    std::vector<uint32_t> residue(v.begin(), v.end());
    std::vector<uint32_t> coords(dim(), 0);
    for (size_t i = 0; i < dim(); ++i) {
        uint32_t c = residue[pivots_[i]];
        if (!c)
            continue;
        coords[i] = c;
        for (size_t j = 0; j < ambient_dim(); ++j)
            residue[j] = f.sub(residue[j], f.mul(c, basis_(i, j)));
    }
    for (uint32_t x : residue)
        if (x)
            return std::nullopt;
    return coords;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim() || other.field() != field())
        throw std::invalid_argument("subspace containment: ambient mismatch");
    for (size_t r = 0; r < other.dim(); ++r)
        if (!contains_vector(other.basis_.row(r)))
            return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw std::invalid_argument("subspace sum: ambient mismatch");
    return Subspace::from_rows(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw std::invalid_argument("subspace intersection: ambient mismatch");
    const Fp f = a.field();
    const size_t d = a.ambient_dim();
    // Zassenhaus block construction: rref of [A | A; B | 0]; rows whose left
    // half vanishes carry the intersection in the right half.
    FpMatrix block(f, a.dim() + b.dim(), 2 * d);
    for (size_t r = 0; r < a.dim(); ++r)
        for (size_t c = 0; c < d; ++c) {
            block(r, c) = a.basis()(r, c);
            block(r, d + c) = a.basis()(r, c);
        }
    for (size_t r = 0; r < b.dim(); ++r)
        for (size_t c = 0; c < d; ++c)
            block(a.dim() + r, c) = b.basis()(r, c);
    size_t rk = rref(block);
    FpMatrix inter(f, 0, d);
    for (size_t r = 0; r < rk; ++r) {
        bool left_zero = true;
        for (size_t c = 0; c < d && left_zero; ++c)
            left_zero = block(r, c) == 0;
        if (left_zero)
            inter.append_row(std::span<const uint32_t>(block.row(r).data() + d, d));
    }
    return Subspace::from_rows(std::move(inter));
}

FpMatrix quotient_projection(const Subspace& u) {
    const Fp f = u.field();
    const size_t d = u.ambient_dim();
    std::vector<bool> is_pivot(d, false);
    for (size_t p : u.pivots())
        is_pivot[p] = true;
    FpMatrix proj(f, d - u.dim(), d);
    size_t r = 0;
    for (size_t c = 0; c < d; ++c) {
        if (is_pivot[c])
            continue;
        proj(r, c) = 1;
        // reducing e_p by the basis leaves -basis(i, c) at the non-pivot column c
        for (size_t i = 0; i < u.dim(); ++i)
            proj(r, u.pivots()[i]) = f.neg(u.basis()(i, c));
        ++r;
    }
    return proj;
}

FpMatrix quotient_section(const Subspace& u) {
    const Fp f = u.field();
    const size_t d = u.ambient_dim();
    std::vector<bool> is_pivot(d, false);
    for (size_t p : u.pivots())
        is_pivot[p] = true;
    FpMatrix sec(f, d, d - u.dim());
    size_t c = 0;
    for (size_t col = 0; col < d; ++col) {
        if (is_pivot[col])
            continue;
        sec(col, c) = 1;
        ++c;
    }
    return sec;
}

}  // namespace koszulkit
