#include "koszulkit/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace koszulkit {

// ---------------------------------------------------------------------------
// augmented data validation
// ---------------------------------------------------------------------------

AugmentedAlgebraData::AugmentedAlgebraData(Fp f, FpMatrix mult_map,
                                           std::vector<uint32_t> unit_vec,
                                           std::vector<uint32_t> aug_row)
    : field(f), mult(std::move(mult_map)), unit(std::move(unit_vec)),
      augmentation(std::move(aug_row)) {
    const size_t m = mult.rows();
    if (mult.cols() != m * m || unit.size() != m || augmentation.size() != m)
        throw std::invalid_argument("augmented algebra: shape mismatch");
    auto product = [&](size_t p, size_t q) {
        std::vector<uint32_t> v(m);
        for (size_t r = 0; r < m; ++r)
            v[r] = mult(r, p * m + q);
        return v;
    };
    // unit laws
    for (size_t q = 0; q < m; ++q) {
        std::vector<uint32_t> left(m, 0), right(m, 0);
        for (size_t p = 0; p < m; ++p) {
            if (unit[p])
                for (size_t r = 0; r < m; ++r) {
                    left[r] = f.add(left[r], f.mul(unit[p], mult(r, p * m + q)));
                    right[r] = f.add(right[r], f.mul(unit[p], mult(r, q * m + p)));
                }
        }
        for (size_t r = 0; r < m; ++r)
            if (left[r] != (r == q ? 1u : 0u) || right[r] != (r == q ? 1u : 0u))
                throw std::invalid_argument("augmented algebra: unit law fails");
    }
    // associativity
    for (size_t p = 0; p < m; ++p)
        for (size_t q = 0; q < m; ++q) {
            std::vector<uint32_t> pq = product(p, q);
            for (size_t s = 0; s < m; ++s) {
                std::vector<uint32_t> qs = product(q, s);
                std::vector<uint32_t> lhs(m, 0), rhs(m, 0);
                for (size_t t = 0; t < m; ++t) {
                    if (pq[t])
                        for (size_t r = 0; r < m; ++r)
                            lhs[r] = f.add(lhs[r], f.mul(pq[t], mult(r, t * m + s)));
                    if (qs[t])
                        for (size_t r = 0; r < m; ++r)
                            rhs[r] = f.add(rhs[r], f.mul(qs[t], mult(r, p * m + t)));
                }
                if (lhs != rhs)
                    throw std::invalid_argument("augmented algebra: not associative");
            }
        }
    // augmentation is an algebra homomorphism
    uint32_t aug_unit = 0;
    for (size_t r = 0; r < m; ++r)
        aug_unit = f.add(aug_unit, f.mul(augmentation[r], unit[r]));
    if (aug_unit != 1)
        throw std::invalid_argument("augmented algebra: augmentation of the unit is not 1");
    for (size_t p = 0; p < m; ++p)
        for (size_t q = 0; q < m; ++q) {
            uint32_t lhs = 0;
            for (size_t r = 0; r < m; ++r)
                lhs = f.add(lhs, f.mul(augmentation[r], mult(r, p * m + q)));
            if (lhs != f.mul(augmentation[p], augmentation[q]))
                throw std::invalid_argument(
                    "augmented algebra: augmentation is not multiplicative");
        }
}

AugmentedCoalgebraData::AugmentedCoalgebraData(Fp f, FpMatrix comult_map,
                                               std::vector<uint32_t> counit_row,
                                               std::vector<uint32_t> aug_vec)
    : field(f), comult(std::move(comult_map)), counit(std::move(counit_row)),
      augmentation(std::move(aug_vec)) {
    const size_t m = comult.cols();
    if (comult.rows() != m * m || counit.size() != m || augmentation.size() != m)
        throw std::invalid_argument("augmented coalgebra: shape mismatch");
    // counit laws: (ε⊗id)Δ = id = (id⊗ε)Δ
    for (size_t b = 0; b < m; ++b) {
        std::vector<uint32_t> left(m, 0), right(m, 0);
        for (size_t p = 0; p < m; ++p)
            for (size_t q = 0; q < m; ++q) {
                uint32_t w = comult(p * m + q, b);
                if (!w)
                    continue;
                left[q] = f.add(left[q], f.mul(counit[p], w));
                right[p] = f.add(right[p], f.mul(counit[q], w));
            }
        for (size_t r = 0; r < m; ++r)
            if (left[r] != (r == b ? 1u : 0u) || right[r] != (r == b ? 1u : 0u))
                throw std::invalid_argument("augmented coalgebra: counit law fails");
    }
    // coassociativity, evaluated per basis vector without forming Kroneckers
    for (size_t b = 0; b < m; ++b) {
        std::vector<uint32_t> lhs(m * m * m, 0), rhs(m * m * m, 0);
        for (size_t p = 0; p < m; ++p)
            for (size_t q = 0; q < m; ++q) {
                uint32_t w = comult(p * m + q, b);
                if (!w)
                    continue;
                for (size_t x = 0; x < m; ++x)
                    for (size_t y = 0; y < m; ++y) {
                        uint32_t l = comult(x * m + y, p);
                        if (l)
                            lhs[(x * m + y) * m + q] =
                                f.add(lhs[(x * m + y) * m + q], f.mul(w, l));
                        uint32_t r = comult(x * m + y, q);
                        if (r)
                            rhs[(p * m + x) * m + y] =
                                f.add(rhs[(p * m + x) * m + y], f.mul(w, r));
                    }
            }
        if (lhs != rhs)
            throw std::invalid_argument("augmented coalgebra: not coassociative");
    }
    // augmentation axioms: Δ(γ(1)) = γ(1)⊗γ(1), ε(γ(1)) = 1
    std::vector<uint32_t> dg(m * m, 0);
    for (size_t b = 0; b < m; ++b) {
        if (!augmentation[b])
            continue;
        for (size_t pq = 0; pq < m * m; ++pq)
            dg[pq] = f.add(dg[pq], f.mul(augmentation[b], comult(pq, b)));
    }
    for (size_t p = 0; p < m; ++p)
        for (size_t q = 0; q < m; ++q)
            if (dg[p * m + q] != f.mul(augmentation[p], augmentation[q]))
                throw std::invalid_argument(
                    "augmented coalgebra: augmentation is not a coalgebra map");
    uint32_t eg = 0;
    for (size_t r = 0; r < m; ++r)
        eg = f.add(eg, f.mul(counit[r], augmentation[r]));
    if (eg != 1)
        throw std::invalid_argument("augmented coalgebra: counit of the augmentation is not 1");
}

AugmentedAlgebraData slice_to_augmented(const GradedSliceAlgebra& a) {
    const Fp f = a.field();
    const int n_max = a.n_max();
    std::vector<size_t> offset(n_max + 2, 0);
    for (int n = 0; n <= n_max; ++n)
        offset[n + 1] = offset[n] + a.dim(n);
    const size_t total = offset[n_max + 1];
    FpMatrix mult(f, total, total * total);
    for (int i = 0; i <= n_max; ++i)
        for (int j = 0; j <= n_max; ++j) {
            if (i + j > n_max)
                continue;  // truncated product
            for (size_t u = 0; u < a.dim(i); ++u)
                for (size_t v = 0; v < a.dim(j); ++v) {
                    size_t col = (offset[i] + u) * total + (offset[j] + v);
                    if (i == 0) {
                        mult(offset[j] + v, col) = 1;
                    } else if (j == 0) {
                        mult(offset[i] + u, col) = 1;
                    } else {
                        const FpMatrix& m = a.mult(i, j);
                        for (size_t r = 0; r < a.dim(i + j); ++r)
                            mult(offset[i + j] + r, col) = m(r, u * a.dim(j) + v);
                    }
                }
        }
    std::vector<uint32_t> unit(total, 0), aug(total, 0);
    unit[offset[0]] = 1;
    aug[offset[0]] = 1;
    return {f, std::move(mult), std::move(unit), std::move(aug)};
}

AugmentedCoalgebraData slice_to_augmented(const GradedSliceCoalgebra& c) {
    const Fp f = c.field();
    const int n_max = c.n_max();
    std::vector<size_t> offset(n_max + 2, 0);
    for (int n = 0; n <= n_max; ++n)
        offset[n + 1] = offset[n] + c.dim(n);
    const size_t total = offset[n_max + 1];
    FpMatrix comult(f, total * total, total);
    for (int n = 0; n <= n_max; ++n)
        for (size_t u = 0; u < c.dim(n); ++u) {
            size_t col = offset[n] + u;
            // i = 0 and j = 0 pieces are the canonical 1⊗c and c⊗1
            comult(offset[0] * total + col, col) = f.add(comult(offset[0] * total + col, col), 1);
            comult(col * total + offset[0], col) = f.add(comult(col * total + offset[0], col), 1);
            for (int i = 1; i < n; ++i) {
                int j = n - i;
                const FpMatrix& d = c.comult(i, j);
                for (size_t p = 0; p < c.dim(i); ++p)
                    for (size_t q = 0; q < c.dim(j); ++q) {
                        uint32_t w = d(p * c.dim(j) + q, u);
                        if (w)
                            comult((offset[i] + p) * total + (offset[j] + q), col) = f.add(
                                comult((offset[i] + p) * total + (offset[j] + q), col), w);
                    }
            }
        }
    std::vector<uint32_t> counit(total, 0), aug(total, 0);
    counit[offset[0]] = 1;
    aug[offset[0]] = 1;
    return {f, std::move(comult), std::move(counit), std::move(aug)};
}

// ---------------------------------------------------------------------------
// reduced structures
// ---------------------------------------------------------------------------

namespace {

struct ReducedCoalgebra {
    FpMatrix pi;         // (m-1) x m
    FpMatrix sigma;      // m x (m-1), image inside ker ε
    FpMatrix delta_bar;  // (m-1)^2 x (m-1)
};

ReducedCoalgebra reduce(const AugmentedCoalgebraData& c) {
    const Fp f = c.field;
    const size_t m = c.dim();
    FpMatrix gamma_row(f, 1, m);
    for (size_t i = 0; i < m; ++i)
        gamma_row(0, i) = c.augmentation[i];
    Subspace gamma = Subspace::from_rows(gamma_row);
    FpMatrix pi = quotient_projection(gamma);
    FpMatrix s = quotient_section(gamma);
    // correct the naive section so that it lands in ker ε
    FpMatrix sigma = s;
    for (size_t col = 0; col + 1 < m + 1 && col < sigma.cols(); ++col) {
        uint32_t eps = 0;
        for (size_t r = 0; r < m; ++r)
            eps = f.add(eps, f.mul(c.counit[r], s(r, col)));
        if (eps)
            for (size_t r = 0; r < m; ++r)
                sigma(r, col) = f.sub(sigma(r, col), f.mul(eps, c.augmentation[r]));
    }
    FpMatrix delta_bar = matmul(kronecker(pi, pi), matmul(c.comult, sigma));
    return {std::move(pi), std::move(sigma), std::move(delta_bar)};
}

struct ReducedAlgebra {
    FpMatrix iota;     // m x (m-1), inclusion of A_+ = ker α
    FpMatrix pi_plus;  // (m-1) x m, projection along the unit line
    FpMatrix mu_bar;   // (m-1) x (m-1)^2
};

ReducedAlgebra reduce(const AugmentedAlgebraData& a) {
    const Fp f = a.field;
    const size_t m = a.dim();
    FpMatrix aug_row(f, 1, m);
    for (size_t i = 0; i < m; ++i)
        aug_row(0, i) = a.augmentation[i];
    Subspace plus = kernel(LinearMap(aug_row));
    FpMatrix iota = transpose(plus.basis());
    // coordinates w.r.t. the RREF basis: pick pivot entries of v - α(v)·1
    FpMatrix pi_plus(f, plus.dim(), m);
    for (size_t i = 0; i < plus.dim(); ++i) {
        size_t piv = plus.pivots()[i];
        pi_plus(i, piv) = 1;
        for (size_t cc = 0; cc < m; ++cc)
            pi_plus(i, cc) =
                f.sub(pi_plus(i, cc), f.mul(a.unit[piv], a.augmentation[cc]));
    }
    FpMatrix mu_bar = matmul(pi_plus, matmul(a.mult, kronecker(iota, iota)));
    return {std::move(iota), std::move(pi_plus), std::move(mu_bar)};
}

FpMatrix kron3(const FpMatrix& left_id, const FpMatrix& mid, const FpMatrix& right_id) {
    return kronecker(left_id, kronecker(mid, right_id));
}

void add_scaled(Fp f, FpMatrix& into, const FpMatrix& term, uint32_t scale) {
    for (size_t r = 0; r < into.rows(); ++r)
        for (size_t c = 0; c < into.cols(); ++c)
            into(r, c) = f.add(into(r, c), f.mul(scale, term(r, c)));
}

}  // namespace

// ---------------------------------------------------------------------------
// ungraded reduced complexes
// ---------------------------------------------------------------------------

FiniteComplex bar_complex(const AugmentedAlgebraData& a, int i_max) {
    if (i_max < 0)
        throw std::invalid_argument("bar_complex: negative degree bound");
    const Fp f = a.field;
    ReducedAlgebra red = reduce(a);
    const size_t ad = red.mu_bar.rows();  // dim A_+
    std::vector<size_t> dims;
    for (int i = i_max; i >= 0; --i)
        dims.push_back(tensor_pow(ad, i));
    std::vector<LinearMap> diffs;
    for (int i = i_max; i >= 1; --i) {
        FpMatrix d(f, tensor_pow(ad, i - 1), tensor_pow(ad, i));
        for (int t = 1; t <= i - 1; ++t) {
            FpMatrix term = kron3(FpMatrix::identity(f, tensor_pow(ad, t - 1)), red.mu_bar,
                                  FpMatrix::identity(f, tensor_pow(ad, i - t - 1)));
            add_scaled(f, d, term, t % 2 == 1 ? 1 : f.neg(1));
        }
        diffs.emplace_back(std::move(d));
    }
    return FiniteComplex(f, std::move(dims), std::move(diffs));
}

std::vector<size_t> bar_homology_dims(const AugmentedAlgebraData& a, int i_max) {
    // one extra homological degree so the top requested degree sees its
    // incoming differential
    FiniteComplex c = bar_complex(a, i_max + 1);
    std::vector<size_t> out;
    for (int i = 0; i <= i_max; ++i)
        out.push_back(c.homology_dim(i_max + 1 - i));
    return out;
}

FiniteComplex cobar_complex(const AugmentedCoalgebraData& c, int i_max) {
    if (i_max < 0)
        throw std::invalid_argument("cobar_complex: negative degree bound");
    const Fp f = c.field;
    ReducedCoalgebra red = reduce(c);
    const size_t cd = red.delta_bar.cols();  // dim C^+
    std::vector<size_t> dims;
    for (int i = 0; i <= i_max; ++i)
        dims.push_back(tensor_pow(cd, i));
    std::vector<LinearMap> diffs;
    diffs.push_back(LinearMap::zero(f, 1, cd));  // k -> C^+
    for (int i = 1; i <= i_max - 1; ++i) {
        FpMatrix d(f, tensor_pow(cd, i + 1), tensor_pow(cd, i));
        for (int s = 1; s <= i; ++s) {
            FpMatrix term = kron3(FpMatrix::identity(f, tensor_pow(cd, s - 1)), red.delta_bar,
                                  FpMatrix::identity(f, tensor_pow(cd, i - s)));
            add_scaled(f, d, term, s % 2 == 1 ? 1 : f.neg(1));
        }
        diffs.emplace_back(std::move(d));
    }
    if (i_max == 0)
        diffs.clear();
    return FiniteComplex(f, std::move(dims), std::move(diffs));
}

std::vector<size_t> cobar_cohomology_dims(const AugmentedCoalgebraData& c, int i_max) {
    // one extra degree so H^{i_max} sees its outgoing differential
    FiniteComplex k = cobar_complex(c, i_max + 1);
    std::vector<size_t> out;
    for (int i = 0; i <= i_max; ++i)
        out.push_back(k.homology_dim(i));
    return out;
}

// ---------------------------------------------------------------------------
// graded strand machinery
// ---------------------------------------------------------------------------

namespace {

struct Strand {
    std::vector<std::vector<int>> comps;
    std::vector<size_t> offsets;
    std::map<std::vector<int>, size_t> index;
    size_t dim = 0;

    size_t block_dim(const std::vector<size_t>& dims, size_t ci) const {
        size_t d = 1;
        for (int part : comps[ci])
            d *= dims[part];
        return d;
    }
};

// compositions of `total` into `parts` parts; part 0 may be zero when
// `resolution` is set (the A- resp. C-slot), all other parts are >= 1. Parts
// with zero-dimensional components are skipped entirely.
Strand make_strand(const std::vector<size_t>& dims, int parts, int total, bool resolution) {
    const int max_part = static_cast<int>(dims.size()) - 1;
    Strand s;
    std::vector<int> cur(parts);
    auto emit = [&](const std::vector<int>& comp) {
        size_t d = 1;
        for (int part : comp)
            d *= dims[part];
        if (d == 0)
            return;
        s.index[comp] = s.comps.size();
        s.comps.push_back(comp);
        s.offsets.push_back(s.dim);
        s.dim += d;
    };
    if (parts == 0) {
        if (total == 0)
            emit({});
        return s;
    }
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == parts - 1) {
            int lo = (slot == 0 && resolution) ? 0 : 1;
            if (remaining >= lo && remaining <= max_part) {
                cur[slot] = remaining;
                emit(cur);
            }
            return;
        }
        int lo = (slot == 0 && resolution) ? 0 : 1;
        for (int v = lo; v <= std::min(remaining - (parts - 1 - slot), max_part); ++v) {
            cur[slot] = v;
            self(self, slot + 1, remaining - v);
        }
        // allow trailing slots to absorb everything only via the loop above
    };
    rec(rec, 0, total);
    return s;
}

std::vector<size_t> tuple_of_flat(size_t flat, const std::vector<size_t>& bd) {
    std::vector<size_t> u(bd.size());
    for (size_t t = bd.size(); t-- > 0;) {
        u[t] = flat % bd[t];
        flat /= bd[t];
    }
    return u;
}

size_t flat_of_tuple(const std::vector<size_t>& u, const std::vector<size_t>& bd) {
    size_t flat = 0;
    for (size_t t = 0; t < bd.size(); ++t)
        flat = flat * bd[t] + u[t];
    return flat;
}

struct SparseCols {
    size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<size_t, uint32_t>>> col;

    void apply_accumulate(Fp f, size_t src, uint32_t scale, std::vector<uint32_t>& out) const {
        for (auto [r, v] : col[src])
            out[r] = f.add(out[r], f.mul(scale, v));
    }
    FpMatrix dense(Fp f) const {
        FpMatrix m(f, rows, cols);
        for (size_t c = 0; c < cols; ++c)
            for (auto [r, v] : col[c])
                m(r, c) = f.add(m(r, c), v);
        return m;
    }
};

// bar differential between strands: merge adjacent slots. `resolution`
// selects the resolution signs (merge (t,t+1) zero-based gets (-1)^{t+1});
// the reduced complex uses (-1)^t.
SparseCols bar_strand_differential(const GradedSliceAlgebra& a, const Strand& from,
                                   const Strand& to, bool resolution) {
    const Fp f = a.field();
    SparseCols out;
    out.rows = to.dim;
    out.cols = from.dim;
    out.col.resize(from.dim);
    for (size_t ci = 0; ci < from.comps.size(); ++ci) {
        const std::vector<int>& comp = from.comps[ci];
        const int parts = static_cast<int>(comp.size());
        std::vector<size_t> bd(parts);
        for (int t = 0; t < parts; ++t)
            bd[t] = a.dim(comp[t]);
        size_t block = 1;
        for (size_t d : bd)
            block *= d;
        for (size_t flat = 0; flat < block; ++flat) {
            std::vector<size_t> u = tuple_of_flat(flat, bd);
            size_t src = from.offsets[ci] + flat;
            for (int t = 0; t + 1 < parts; ++t) {
                uint32_t sign;
                if (resolution)
                    sign = (t % 2 == 0) ? f.neg(1) : 1;
                else
                    sign = (t % 2 == 0) ? 1 : f.neg(1);
                std::vector<int> merged(comp);
                merged[t] = comp[t] + comp[t + 1];
                merged.erase(merged.begin() + t + 1);
                auto it = to.index.find(merged);
                if (it == to.index.end())
                    continue;
                size_t tci = it->second;
                std::vector<size_t> tbd(merged.size());
                for (size_t s = 0; s < merged.size(); ++s)
                    tbd[s] = a.dim(merged[s]);
                // column of the merge map at (u_t, u_{t+1})
                const int x = comp[t], y = comp[t + 1];
                std::vector<size_t> v(u);
                v.erase(v.begin() + t + 1);
                if (x == 0 || y == 0) {
                    v[t] = x == 0 ? u[t + 1] : u[t];
                    size_t dst = to.offsets[tci] + flat_of_tuple(v, tbd);
                    out.col[src].emplace_back(dst, sign);
                } else {
                    const FpMatrix& m = a.mult(x, y);
                    size_t mcol = u[t] * a.dim(y) + u[t + 1];
                    for (size_t r = 0; r < m.rows(); ++r) {
                        uint32_t w = m(r, mcol);
                        if (!w)
                            continue;
                        v[t] = r;
                        size_t dst = to.offsets[tci] + flat_of_tuple(v, tbd);
                        out.col[src].emplace_back(dst, f.mul(sign, w));
                    }
                }
            }
        }
    }
    return out;
}

// cobar differential between strands: split one slot. `resolution` selects
// the resolution signs (slot s zero-based gets (-1)^{s-1}); the reduced
// complex uses (-1)^s. In resolution mode slot 0 may split as (x >= 0, y >= 1).
SparseCols cobar_strand_differential(const GradedSliceCoalgebra& c, const Strand& from,
                                     const Strand& to, bool resolution) {
    const Fp f = c.field();
    SparseCols out;
    out.rows = to.dim;
    out.cols = from.dim;
    out.col.resize(from.dim);
    for (size_t ci = 0; ci < from.comps.size(); ++ci) {
        const std::vector<int>& comp = from.comps[ci];
        const int parts = static_cast<int>(comp.size());
        std::vector<size_t> bd(parts);
        for (int t = 0; t < parts; ++t)
            bd[t] = c.dim(comp[t]);
        size_t block = 1;
        for (size_t d : bd)
            block *= d;
        for (size_t flat = 0; flat < block; ++flat) {
            std::vector<size_t> u = tuple_of_flat(flat, bd);
            size_t src = from.offsets[ci] + flat;
            for (int s = 0; s < parts; ++s) {
                uint32_t sign;
                if (resolution)
                    sign = (s % 2 == 0) ? f.neg(1) : 1;
                else
                    sign = (s % 2 == 0) ? 1 : f.neg(1);
                int x_lo = (s == 0 && resolution) ? 0 : 1;
                for (int x = x_lo; x <= comp[s] - 1; ++x) {
                    int y = comp[s] - x;
                    std::vector<int> split(comp);
                    split[s] = x;
                    split.insert(split.begin() + s + 1, y);
                    auto it = to.index.find(split);
                    if (it == to.index.end())
                        continue;
                    size_t tci = it->second;
                    std::vector<size_t> tbd(split.size());
                    for (size_t k = 0; k < split.size(); ++k)
                        tbd[k] = c.dim(split[k]);
                    std::vector<size_t> v(u);
                    v.insert(v.begin() + s + 1, 0);
                    if (x == 0) {
                        // Δ_{0,y} is the canonical 1 ⊗ c
                        v[s] = 0;
                        v[s + 1] = u[s];
                        size_t dst = to.offsets[tci] + flat_of_tuple(v, tbd);
                        out.col[src].emplace_back(dst, sign);
                    } else {
                        const FpMatrix& d = c.comult(x, y);
                        for (size_t p = 0; p < c.dim(x); ++p)
                            for (size_t q = 0; q < c.dim(y); ++q) {
                                uint32_t w = d(p * c.dim(y) + q, u[s]);
                                if (!w)
                                    continue;
                                v[s] = p;
                                v[s + 1] = q;
                                size_t dst = to.offsets[tci] + flat_of_tuple(v, tbd);
                                out.col[src].emplace_back(dst, f.mul(sign, w));
                            }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

FiniteComplex bar_strand_complex(const GradedSliceAlgebra& a, int j) {
    if (j < 0 || j > a.n_max())
        throw std::invalid_argument("bar_strand_complex: internal degree out of slice range");
    const Fp f = a.field();
    std::vector<Strand> strands;
    for (int i = 0; i <= j; ++i)
        strands.push_back(make_strand(a.dims(), i, j, false));
    std::vector<size_t> dims;
    std::vector<LinearMap> diffs;
    for (int i = j; i >= 0; --i)
        dims.push_back(strands[i].dim);
    for (int i = j; i >= 1; --i)
        diffs.emplace_back(
            bar_strand_differential(a, strands[i], strands[i - 1], false).dense(f));
    return FiniteComplex(f, std::move(dims), std::move(diffs));
}

FiniteComplex cobar_strand_complex(const GradedSliceCoalgebra& c, int j) {
    if (j < 0 || (!c.complete() && j > c.n_max()))
        throw std::invalid_argument("cobar_strand_complex: internal degree out of slice range");
    const Fp f = c.field();
    std::vector<Strand> strands;
    for (int i = 0; i <= j; ++i)
        strands.push_back(make_strand(c.dims(), i, j, false));
    std::vector<size_t> dims;
    std::vector<LinearMap> diffs;
    for (int i = 0; i <= j; ++i)
        dims.push_back(strands[i].dim);
    for (int i = 0; i + 1 <= j; ++i)
        diffs.emplace_back(
            cobar_strand_differential(c, strands[i], strands[i + 1], false).dense(f));
    return FiniteComplex(f, std::move(dims), std::move(diffs));
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

size_t BigradedTable::entry(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BigradedTable::set(int i, int j, size_t dim) {
    if (dim)
        entries_[{i, j}] = dim;
}

bool BigradedTable::diagonal_only() const {
    for (const auto& [key, dim] : entries_)
        if (key.first != key.second && dim)
            return false;
    return true;
}

std::optional<std::pair<int, int>> BigradedTable::first_off_diagonal() const {
    std::optional<std::pair<int, int>> best;
    for (const auto& [key, dim] : entries_) {
        if (key.first == key.second || !dim)
            continue;
        if (!best || key.second < best->second ||
            (key.second == best->second && key.first < best->first))
            best = key;
    }
    return best;
}

BigradedTable homology_table(const GradedSliceAlgebra& a, int n_max, bool keep_cocycles) {
    if (n_max > a.n_max())
        throw std::invalid_argument("homology_table: n_max exceeds slice coverage");
    BigradedTable table(n_max);
    for (int j = 0; j <= n_max; ++j) {
        FiniteComplex strand = bar_strand_complex(a, j);
        for (int i = 0; i <= j; ++i) {
            table.set(i, j, strand.homology_dim(j - i));
            if (keep_cocycles)
                table.cocycles.emplace(std::make_pair(i, j), strand.cycles(j - i));
        }
    }
    return table;
}

BigradedTable cohomology_table(const GradedSliceCoalgebra& c, int n_max, bool keep_cocycles) {
    if (!c.complete() && n_max > c.n_max())
        throw std::invalid_argument("cohomology_table: n_max exceeds slice coverage");
    BigradedTable table(n_max);
    for (int j = 0; j <= n_max; ++j) {
        FiniteComplex strand = cobar_strand_complex(c, j);
        for (int i = 0; i <= j; ++i) {
            table.set(i, j, strand.homology_dim(i));
            if (keep_cocycles)
                table.cocycles.emplace(std::make_pair(i, j), strand.cycles(i));
        }
    }
    return table;
}

std::vector<size_t> total_cohomology_dims(const GradedSliceCoalgebra& c, int i_max) {
    if (!c.complete())
        throw std::invalid_argument(
            "total_cohomology_dims needs a complete (finite-dimensional) coalgebra");
    std::vector<size_t> dims(i_max + 1, 0);
    dims[0] = 1;
    const int j_max = i_max * std::max(c.n_max(), 1);
    // only homological degrees <= i_max matter, so build each strand pair
    // locally instead of the whole complex (whose top degrees explode with j)
    for (int j = 1; j <= j_max; ++j) {
        const int top = std::min(i_max, j);
        std::vector<Strand> strands;
        for (int i = 0; i <= top + 1; ++i)
            strands.push_back(make_strand(c.dims(), i, j, false));
        for (int i = 1; i <= top; ++i) {
            if (strands[i].dim == 0)
                continue;
            size_t rank_out =
                rank(cobar_strand_differential(c, strands[i], strands[i + 1], false)
                         .dense(c.field()));
            size_t rank_in =
                rank(cobar_strand_differential(c, strands[i - 1], strands[i], false)
                         .dense(c.field()));
            dims[i] += strands[i].dim - rank_out - rank_in;
        }
    }
    return dims;
}

// ---------------------------------------------------------------------------
// verdicts
// ---------------------------------------------------------------------------

bool one_cogenerated_verdict(const GradedSliceCoalgebra& c, int n_max) {
    BigradedTable t = cohomology_table(c, n_max);
    for (int j = 2; j <= n_max; ++j)
        if (t.entry(1, j))
            return false;
    return true;
}

bool one_generated_verdict(const GradedSliceAlgebra& a, int n_max) {
    BigradedTable t = homology_table(a, n_max);
    for (int j = 2; j <= n_max; ++j)
        if (t.entry(1, j))
            return false;
    return true;
}

namespace {

QuadraticVerdict assemble_verdict(bool low_degree_generated,
                                  const std::vector<DegreeComparison>& comparisons,
                                  const BigradedTable& table, int n_max) {
    QuadraticVerdict v;
    v.low_degree_generated = low_degree_generated;
    bool iso_so_far = true;
    bool h2_so_far = true;
    v.first_failure_degree = -1;
    for (int n = 2; n <= n_max; ++n) {
        for (const auto& cmp : comparisons)
            if (cmp.degree == n)
                iso_so_far = iso_so_far && cmp.injective && cmp.surjective;
        if (n > 2)
            h2_so_far = h2_so_far && table.entry(2, n) == 0;
        v.degrees.push_back(n);
        v.iso_through.push_back(iso_so_far);
        v.h2_vanishing.push_back(h2_so_far);
        if (!iso_so_far && v.first_failure_degree < 0)
            v.first_failure_degree = n;
    }
    v.quadratic = v.degrees.empty() || v.iso_through.back();
    if (low_degree_generated && !v.routes_agree())
        throw std::logic_error(
            "quadratic_verdict: comparison-map route and H^{2,j} route disagree");
    return v;
}

}  // namespace

QuadraticVerdict quadratic_verdict(const GradedSliceAlgebra& a, int n_max) {
    if (n_max > a.n_max())
        throw std::invalid_argument("quadratic_verdict: n_max exceeds slice coverage");
    QuadraticPartResult qp = quadratic_part_of_algebra(a);
    BigradedTable table = homology_table(a, n_max);
    return assemble_verdict(one_generated_verdict(a, n_max), qp.comparisons, table, n_max);
}

QuadraticVerdict quadratic_verdict(const GradedSliceCoalgebra& c, int n_max) {
    if (!c.complete() && n_max > c.n_max())
        throw std::invalid_argument("quadratic_verdict: n_max exceeds slice coverage");
    QuadraticPartResult qp = quadratic_part_of_coalgebra(c);
    BigradedTable table = cohomology_table(c, n_max);
    return assemble_verdict(one_cogenerated_verdict(c, n_max), qp.comparisons, table, n_max);
}

// ---------------------------------------------------------------------------
// diagonal cohomology algebra
// ---------------------------------------------------------------------------

GradedSliceAlgebra diagonal_algebra(const GradedSliceCoalgebra& c, int n_max) {
    if (!c.complete() && n_max > c.n_max())
        throw std::invalid_argument("diagonal_algebra: n_max exceeds slice coverage");
    const Fp f = c.field();
    const size_t d1 = c.dim(1);
    std::vector<Subspace> denominators;
    denominators.emplace_back(f, 1);
    if (n_max >= 1)
        denominators.emplace_back(f, d1);
    for (int n = 2; n <= n_max; ++n) {
        FiniteComplex strand = cobar_strand_complex(c, n);
        denominators.push_back(strand.boundaries(n));
    }
    return tensor_quotient_algebra(f, d1, denominators);
}

// ---------------------------------------------------------------------------
// contracting homotopy checks
// ---------------------------------------------------------------------------

std::optional<HomotopyViolation> homotopy_check(const GradedSliceAlgebra& a, int j_max) {
    if (j_max > a.n_max())
        throw std::invalid_argument("homotopy_check: degree bound exceeds slice coverage");
    const Fp f = a.field();
    for (int j = 1; j <= j_max; ++j) {
        std::vector<Strand> strands;
        for (int n = 0; n <= j; ++n)
            strands.push_back(make_strand(a.dims(), n + 1, j, true));
        std::vector<SparseCols> del;  // del[n]: strand n -> strand n-1, n = 1..j
        del.emplace_back();
        for (int n = 1; n <= j; ++n)
            del.push_back(bar_strand_differential(a, strands[n], strands[n - 1], true));
        // h[n]: strand n -> strand n+1: prepend a zero slot when slot 0 has
        // positive degree, with coefficient -1
        auto apply_h = [&](int n, const std::vector<uint32_t>& vec, std::vector<uint32_t>& out) {
            const Strand& from = strands[n];
            const Strand& to = strands[n + 1];
            for (size_t ci = 0; ci < from.comps.size(); ++ci) {
                const std::vector<int>& comp = from.comps[ci];
                if (comp[0] == 0)
                    continue;
                std::vector<int> target(comp);
                target.insert(target.begin(), 0);
                auto it = to.index.find(target);
                if (it == to.index.end())
                    continue;
                size_t block = from.block_dim(a.dims(), ci);
                for (size_t flat = 0; flat < block; ++flat) {
                    uint32_t w = vec[from.offsets[ci] + flat];
                    if (w)
                        out[to.offsets[it->second] + flat] = f.add(
                            out[to.offsets[it->second] + flat], f.mul(f.neg(1), w));
                }
            }
        };
        for (int n = 0; n <= j; ++n) {
            const Strand& here = strands[n];
            for (size_t e = 0; e < here.dim; ++e) {
                std::vector<uint32_t> acc(here.dim, 0);
                if (n < j) {
                    // d(h(e))
                    std::vector<uint32_t> he(strands[n + 1].dim, 0);
                    std::vector<uint32_t> basis(here.dim, 0);
                    basis[e] = 1;
                    apply_h(n, basis, he);
                    for (size_t src = 0; src < he.size(); ++src)
                        if (he[src])
                            del[n + 1].apply_accumulate(f, src, he[src], acc);
                }
                if (n >= 1) {
                    // h(d(e))
                    std::vector<uint32_t> de(strands[n - 1].dim, 0);
                    del[n].apply_accumulate(f, e, 1, de);
                    if (n - 1 < j) {
                        std::vector<uint32_t> tmp(here.dim, 0);
                        apply_h(n - 1, de, tmp);
                        for (size_t r = 0; r < here.dim; ++r)
                            acc[r] = f.add(acc[r], tmp[r]);
                    }
                } else {
                    // position 0 carries the unit/augmentation boundary term,
                    // which vanishes on strands of positive internal degree
                }
                for (size_t r = 0; r < here.dim; ++r) {
                    uint32_t expect = (r == e) ? 1u : 0u;
                    if (acc[r] != expect)
                        return HomotopyViolation{j, n, e};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<HomotopyViolation> homotopy_check(const GradedSliceCoalgebra& c, int j_max) {
    if (!c.complete() && j_max > c.n_max())
        throw std::invalid_argument("homotopy_check: degree bound exceeds slice coverage");
    const Fp f = c.field();
    for (int j = 1; j <= j_max; ++j) {
        std::vector<Strand> strands;
        for (int n = 0; n <= j; ++n)
            strands.push_back(make_strand(c.dims(), n + 1, j, true));
        std::vector<SparseCols> dd;  // dd[n]: strand n -> strand n+1, n = 0..j-1
        for (int n = 0; n < j; ++n)
            dd.push_back(cobar_strand_differential(c, strands[n], strands[n + 1], true));
        // h[n]: strand n -> strand n-1: drop a zero-degree slot 0, coefficient -1
        auto apply_h = [&](int n, const std::vector<uint32_t>& vec, std::vector<uint32_t>& out) {
            const Strand& from = strands[n];
            const Strand& to = strands[n - 1];
            for (size_t ci = 0; ci < from.comps.size(); ++ci) {
                const std::vector<int>& comp = from.comps[ci];
                if (comp[0] != 0)
                    continue;
                std::vector<int> target(comp.begin() + 1, comp.end());
                auto it = to.index.find(target);
                if (it == to.index.end())
                    continue;
                size_t block = from.block_dim(c.dims(), ci);
                for (size_t flat = 0; flat < block; ++flat) {
                    uint32_t w = vec[from.offsets[ci] + flat];
                    if (w)
                        out[to.offsets[it->second] + flat] = f.add(
                            out[to.offsets[it->second] + flat], f.mul(f.neg(1), w));
                }
            }
        };
        for (int n = 0; n <= j; ++n) {
            const Strand& here = strands[n];
            for (size_t e = 0; e < here.dim; ++e) {
                std::vector<uint32_t> acc(here.dim, 0);
                if (n < j) {
                    // h(d(e))
                    std::vector<uint32_t> de(strands[n + 1].dim, 0);
                    dd[n].apply_accumulate(f, e, 1, de);
                    apply_h(n + 1, de, acc);
                }
                if (n >= 1) {
                    // d(h(e))
                    std::vector<uint32_t> he(strands[n - 1].dim, 0);
                    std::vector<uint32_t> basis(here.dim, 0);
                    basis[e] = 1;
                    apply_h(n, basis, he);
                    if (n - 1 < j)
                        for (size_t src = 0; src < he.size(); ++src)
                            if (he[src])
                                dd[n - 1].apply_accumulate(f, src, he[src], acc);
                }
                for (size_t r = 0; r < here.dim; ++r) {
                    uint32_t expect = (r == e) ? 1u : 0u;
                    if (acc[r] != expect)
                        return HomotopyViolation{j, n, e};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<HomotopyViolation> homotopy_check(const AugmentedAlgebraData& a, int i_max) {
    const Fp f = a.field;
    ReducedAlgebra red = reduce(a);
    const size_t m = a.dim();
    const size_t ad = red.mu_bar.rows();
    // resolution spaces P_n = A ⊗ A_+^{⊗n}
    auto space_dim = [&](int n) { return m * tensor_pow(ad, n); };
    // merge of the two leftmost slots: A ⊗ A_+ -> A
    FpMatrix m01 = matmul(a.mult, kronecker(FpMatrix::identity(f, m), red.iota));
    auto boundary = [&](int n) {
        FpMatrix d(f, space_dim(n - 1), space_dim(n));
        FpMatrix t0 = kronecker(m01, FpMatrix::identity(f, tensor_pow(ad, n - 1)));
        add_scaled(f, d, t0, f.neg(1));  // i = 1 carries (-1)^1
        for (int i = 2; i <= n; ++i) {
            FpMatrix term = kron3(FpMatrix::identity(f, m * tensor_pow(ad, i - 2)), red.mu_bar,
                                  FpMatrix::identity(f, tensor_pow(ad, n - i)));
            add_scaled(f, d, term, i % 2 == 0 ? 1 : f.neg(1));
        }
        return d;
    };
    // flipped homotopy: v -> -(1 ⊗ π_+(v) ⊗ ...)
    FpMatrix unit_col(f, m, 1);
    for (size_t r = 0; r < m; ++r)
        unit_col(r, 0) = a.unit[r];
    FpMatrix h0 = kronecker(unit_col, red.pi_plus);
    auto homotopy = [&](int n) {
        FpMatrix h = kronecker(h0, FpMatrix::identity(f, tensor_pow(ad, n)));
        FpMatrix out(f, h.rows(), h.cols());
        add_scaled(f, out, h, f.neg(1));
        return out;
    };
    std::vector<FpMatrix> dmat;  // dmat[n]: P_n -> P_{n-1}
    dmat.emplace_back(f, 0, 0);
    for (int n = 1; n <= i_max + 1; ++n)
        dmat.push_back(boundary(n));
    for (int n = 0; n <= i_max; ++n) {
        FpMatrix id_check = matmul(dmat[n + 1], homotopy(n));
        if (n >= 1)
            add_scaled(f, id_check, matmul(homotopy(n - 1), dmat[n]), 1);
        else {
            FpMatrix alpha_row(f, 1, m);
            for (size_t cc = 0; cc < m; ++cc)
                alpha_row(0, cc) = a.augmentation[cc];
            add_scaled(f, id_check, matmul(unit_col, alpha_row), 1);
        }
        FpMatrix expect = FpMatrix::identity(f, space_dim(n));
        for (size_t col = 0; col < expect.cols(); ++col)
            for (size_t r = 0; r < expect.rows(); ++r)
                if (id_check(r, col) != expect(r, col))
                    return HomotopyViolation{-1, n, col};
    }
    return std::nullopt;
}

std::optional<HomotopyViolation> homotopy_check(const AugmentedCoalgebraData& c, int i_max) {
    const Fp f = c.field;
    ReducedCoalgebra red = reduce(c);
    const size_t m = c.dim();
    const size_t cd = red.delta_bar.cols();
    auto space_dim = [&](int n) { return m * tensor_pow(cd, n); };
    FpMatrix d0 = matmul(kronecker(FpMatrix::identity(f, m), red.pi), c.comult);  // C -> C⊗C^+
    auto coboundary = [&](int n) {
        FpMatrix d(f, space_dim(n + 1), space_dim(n));
        FpMatrix t0 = kronecker(d0, FpMatrix::identity(f, tensor_pow(cd, n)));
        add_scaled(f, d, t0, f.neg(1));  // i = 0 carries (-1)^{-1}
        for (int s = 1; s <= n; ++s) {
            FpMatrix term = kron3(FpMatrix::identity(f, m * tensor_pow(cd, s - 1)),
                                  red.delta_bar, FpMatrix::identity(f, tensor_pow(cd, n - s)));
            add_scaled(f, d, term, s % 2 == 1 ? 1 : f.neg(1));
        }
        return d;
    };
    // flipped homotopy: c_0 ⊗ c_1 ⊗ ... -> -ε(c_0) σ(c_1) ⊗ ...
    FpMatrix eps_row(f, 1, m);
    for (size_t cc = 0; cc < m; ++cc)
        eps_row(0, cc) = c.counit[cc];
    FpMatrix collapse = matmul(red.sigma, kronecker(eps_row, FpMatrix::identity(f, cd)));
    auto homotopy = [&](int n) {  // R_n -> R_{n-1}
        FpMatrix h = kronecker(collapse, FpMatrix::identity(f, tensor_pow(cd, n - 1)));
        FpMatrix out(f, h.rows(), h.cols());
        add_scaled(f, out, h, f.neg(1));
        return out;
    };
    std::vector<FpMatrix> dmat;  // dmat[n]: R_n -> R_{n+1}
    for (int n = 0; n <= i_max; ++n)
        dmat.push_back(coboundary(n));
    for (int n = 0; n <= i_max; ++n) {
        FpMatrix id_check = matmul(homotopy(n + 1), dmat[n]);
        if (n >= 1)
            add_scaled(f, id_check, matmul(dmat[n - 1], homotopy(n)), 1);
        else {
            FpMatrix gamma_col(f, m, 1);
            for (size_t r = 0; r < m; ++r)
                gamma_col(r, 0) = c.augmentation[r];
            add_scaled(f, id_check, matmul(gamma_col, eps_row), 1);
        }
        for (size_t col = 0; col < id_check.cols(); ++col)
            for (size_t r = 0; r < id_check.rows(); ++r)
                if (id_check(r, col) != ((r == col) ? 1u : 0u))
                    return HomotopyViolation{-1, n, col};
    }
    return std::nullopt;
}

}  // namespace koszulkit
