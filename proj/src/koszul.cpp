#include "koszulkit/koszul.hpp"

#include <map>
#include <stdexcept>

namespace koszulkit {

SubspaceCollection::SubspaceCollection(Fp f, size_t ambient_dim, std::vector<Subspace> xs)
    : field(f), ambient(ambient_dim), members(std::move(xs)) {
    for (const Subspace& x : members)
        if (x.ambient_dim() != ambient || x.field() != field)
            throw std::invalid_argument("subspace collection: ambient mismatch");
}

SubspaceCollection SubspaceCollection::subcollection(const std::vector<size_t>& indices) const {
    std::vector<Subspace> xs;
    for (size_t i : indices)
        xs.push_back(members[i]);
    return {field, ambient, std::move(xs)};
}

namespace {

// all r-subsets of {0..m-1} as sorted index lists, in lexicographic order
std::vector<std::vector<size_t>> subsets_of_size(size_t m, size_t r) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < m; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

uint32_t mask_of(const std::vector<size_t>& subset) {
    uint32_t m = 0;
    for (size_t i : subset)
        m |= 1u << i;
    return m;
}

// X_S = ⋂_{s∈S} X_s with memoization over the subset lattice
const Subspace& intersection_of(const SubspaceCollection& col,
                                std::map<uint32_t, Subspace>& memo, uint32_t mask) {
    auto it = memo.find(mask);
    if (it != memo.end())
        return it->second;
    Subspace value(col.field, col.ambient);
    if (mask == 0) {
        value = Subspace::full(col.field, col.ambient);
    } else {
        uint32_t low = mask & (mask - 1);
        size_t bit = 0;
        while (!((mask ^ low) >> bit & 1))
            ++bit;
        if (low == 0)
            value = col.members[bit];
        else
            value = intersect(intersection_of(col, memo, low), col.members[bit]);
    }
    return memo.emplace(mask, std::move(value)).first->second;
}

Subspace sum_of(const SubspaceCollection& col, const std::vector<size_t>& subset) {
    Subspace acc(col.field, col.ambient);
    for (size_t s : subset)
        acc = sum(acc, col.members[s]);
    return acc;
}

}  // namespace

FiniteComplex b_lower_complex(const SubspaceCollection& col) {
    const Fp f = col.field;
    const size_t m = col.size();
    std::map<uint32_t, Subspace> memo;

    // per level: subsets, offsets, total dim
    std::vector<std::vector<std::vector<size_t>>> level_subsets(m + 1);
    std::vector<std::map<uint32_t, size_t>> level_offsets(m + 1);
    std::vector<size_t> level_dim(m + 1, 0);
    for (size_t r = 0; r <= m; ++r) {
        level_subsets[r] = subsets_of_size(m, r);
        for (const auto& s : level_subsets[r]) {
            level_offsets[r][mask_of(s)] = level_dim[r];
            level_dim[r] += intersection_of(col, memo, mask_of(s)).dim();
        }
    }

    // stored with the deepest intersections first; W at the last position
    std::vector<size_t> dims;
    for (size_t r = m + 1; r-- > 0;)
        dims.push_back(level_dim[r]);
    std::vector<LinearMap> diffs;
    for (size_t r = m; r >= 1; --r) {
        FpMatrix d(f, level_dim[r - 1], level_dim[r]);
        for (const auto& s : level_subsets[r]) {
            const Subspace& xs = intersection_of(col, memo, mask_of(s));
            size_t src_off = level_offsets[r][mask_of(s)];
            for (size_t k = 0; k < s.size(); ++k) {
                std::vector<size_t> t(s);
                t.erase(t.begin() + k);
                const Subspace& xt = intersection_of(col, memo, mask_of(t));
                size_t dst_off = level_offsets[r - 1][mask_of(t)];
                uint32_t sign = (k % 2 == 0) ? 1 : f.neg(1);
                for (size_t row = 0; row < xs.dim(); ++row) {
                    auto coords = xt.coordinates(xs.basis().row(row));
                    if (!coords)
                        throw std::logic_error("intersection does not embed in its superspace");
                    for (size_t i = 0; i < coords->size(); ++i)
                        d(dst_off + i, src_off + row) =
                            f.add(d(dst_off + i, src_off + row), f.mul(sign, (*coords)[i]));
                }
            }
        }
        diffs.emplace_back(std::move(d));
    }
    return FiniteComplex(f, std::move(dims), std::move(diffs));
}

FiniteComplex b_upper_complex(const SubspaceCollection& col) {
    const Fp f = col.field;
    const size_t m = col.size();

    std::vector<std::vector<std::vector<size_t>>> level_subsets(m + 1);
    std::vector<std::map<uint32_t, size_t>> level_offsets(m + 1);
    std::vector<size_t> level_dim(m + 1, 0);
    std::map<uint32_t, QuotientSpace> quotients;
    for (size_t r = 0; r <= m; ++r) {
        level_subsets[r] = subsets_of_size(m, r);
        for (const auto& s : level_subsets[r]) {
            QuotientSpace q = make_quotient(sum_of(col, s));
            level_offsets[r][mask_of(s)] = level_dim[r];
            level_dim[r] += q.dim();
            quotients.emplace(mask_of(s), std::move(q));
        }
    }

    std::vector<size_t> dims(level_dim.begin(), level_dim.end());
    std::vector<LinearMap> diffs;
    for (size_t r = 0; r + 1 <= m; ++r) {
        FpMatrix d(f, level_dim[r + 1], level_dim[r]);
        for (const auto& s : level_subsets[r + 1]) {
            const QuotientSpace& qs = quotients.at(mask_of(s));
            size_t dst_off = level_offsets[r + 1][mask_of(s)];
            for (size_t k = 0; k < s.size(); ++k) {
                std::vector<size_t> t(s);
                t.erase(t.begin() + k);
                const QuotientSpace& qt = quotients.at(mask_of(t));
                size_t src_off = level_offsets[r][mask_of(t)];
                uint32_t sign = (k % 2 == 0) ? 1 : f.neg(1);
                FpMatrix block = matmul(qs.projection, qt.section);
                for (size_t rr = 0; rr < block.rows(); ++rr)
                    for (size_t cc = 0; cc < block.cols(); ++cc)
                        d(dst_off + rr, src_off + cc) = f.add(d(dst_off + rr, src_off + cc),
                                                              f.mul(sign, block(rr, cc)));
            }
        }
        diffs.emplace_back(std::move(d));
    }
    return FiniteComplex(f, std::move(dims), std::move(diffs));
}

bool b_lower_exact(const SubspaceCollection& col) {
    FiniteComplex b = b_lower_complex(col);
    for (size_t k = 0; k + 1 < b.length(); ++k)
        if (b.homology_dim(k))
            return false;
    return true;
}

bool b_upper_exact(const SubspaceCollection& col) {
    FiniteComplex b = b_upper_complex(col);
    for (size_t k = 1; k < b.length(); ++k)
        if (b.homology_dim(k))
            return false;
    return true;
}

DistributivityResult is_distributive(const SubspaceCollection& col) {
    const size_t m = col.size();
    if (m > 20)
        throw std::invalid_argument("distributivity recursion: too many members");
    std::vector<char> distributive(size_t(1) << m, 1);
    std::vector<size_t> first_witness;
    // process subsets in order of increasing size
    for (size_t r = 3; r <= m; ++r)
        for (const auto& s : subsets_of_size(m, r)) {
            uint32_t mask = mask_of(s);
            bool proper_ok = true;
            for (size_t k = 0; k < s.size() && proper_ok; ++k)
                proper_ok = distributive[mask & ~(1u << s[k])];
            bool ok = proper_ok && b_lower_exact(col.subcollection(s));
            distributive[mask] = ok ? 1 : 0;
            if (!ok && proper_ok && first_witness.empty())
                first_witness = s;  // minimal failing subcollection
        }
    uint32_t full = (m == 0) ? 0 : ((uint32_t(1) << m) - 1);
    if (distributive[full])
        return {true, {}};
    return {false, first_witness};
}

DirectVerdict is_distributive_direct(const SubspaceCollection& col, size_t max_elements) {
    // close the members under sum and intersection
    std::vector<Subspace> closure;
    std::map<std::pair<size_t, std::vector<uint32_t>>, size_t> seen;
    auto key_of = [](const Subspace& s) {
        std::vector<uint32_t> data;
        data.reserve(s.dim() * s.ambient_dim());
        for (size_t r = 0; r < s.dim(); ++r)
            for (size_t c = 0; c < s.ambient_dim(); ++c)
                data.push_back(s.basis()(r, c));
        return std::make_pair(s.dim(), std::move(data));
    };
    auto add = [&](const Subspace& s) -> size_t {
        auto key = key_of(s);
        auto it = seen.find(key);
        if (it != seen.end())
            return it->second;
        closure.push_back(s);
        seen.emplace(std::move(key), closure.size() - 1);
        return closure.size() - 1;
    };
    for (const Subspace& x : col.members)
        add(x);
    for (size_t i = 0; i < closure.size(); ++i) {
        if (closure.size() > max_elements)
            return DirectVerdict::inconclusive;
        for (size_t j = 0; j <= i; ++j) {
            add(sum(closure[i], closure[j]));
            add(intersect(closure[i], closure[j]));
        }
    }
    if (closure.size() > max_elements)
        return DirectVerdict::inconclusive;

    const size_t n = closure.size();
    std::vector<std::vector<uint32_t>> sum_idx(n, std::vector<uint32_t>(n));
    std::vector<std::vector<uint32_t>> int_idx(n, std::vector<uint32_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) {
            uint32_t s = static_cast<uint32_t>(add(sum(closure[i], closure[j])));
            uint32_t t = static_cast<uint32_t>(add(intersect(closure[i], closure[j])));
            sum_idx[i][j] = sum_idx[j][i] = s;
            int_idx[i][j] = int_idx[j][i] = t;
        }
    // (X+Y)∩Z = X∩Z + Y∩Z on every triple of the closure
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y <= x; ++y) {
            uint32_t xy = sum_idx[x][y];
            for (size_t z = 0; z < n; ++z)
                if (int_idx[xy][z] != sum_idx[int_idx[x][z]][int_idx[y][z]])
                    return DirectVerdict::not_distributive;
        }
    return DirectVerdict::distributive;
}

SubspaceCollection relation_collection(const QuadraticPresentation& p, int n) {
    std::vector<Subspace> members;
    for (int i = 1; i <= n - 1; ++i)
        members.push_back(embed_relations(p, i, n));
    return {p.field, tensor_pow(p.dim_v(), n), std::move(members)};
}

KoszulVerdict koszul_by_distributivity(const QuadraticPresentation& p, int n_max) {
    if (n_max < 2)
        throw std::invalid_argument("koszul_by_distributivity: n_max must be at least 2");
    for (int n = 2; n <= n_max; ++n) {
        DistributivityResult r = is_distributive(relation_collection(p, n));
        if (!r.distributive)
            return {false, n - 1, n, r.witness, std::nullopt};
    }
    return {true, n_max, -1, {}, std::nullopt};
}

KoszulVerdict koszul_by_homology(const QuadraticPresentation& p, int n_max) {
    if (n_max < 2)
        throw std::invalid_argument("koszul_by_homology: n_max must be at least 2");
    BigradedTable ta = homology_table(build_algebra_slice(p, n_max), n_max);
    BigradedTable tc = cohomology_table(build_coalgebra_slice(p, n_max), n_max);
    auto bad_a = ta.first_off_diagonal();
    auto bad_c = tc.first_off_diagonal();
    // the algebra and coalgebra tables must fail together and at the
    // same internal degree
    if (bad_a.has_value() != bad_c.has_value() ||
        (bad_a && bad_a->second != bad_c->second))
        throw std::logic_error(
            "koszul_by_homology: algebra and coalgebra tables disagree");
    if (!bad_a)
        return {true, n_max, -1, {}, std::nullopt};
    return {false, bad_a->second - 1, bad_a->second, {}, bad_a};
}

}  // namespace koszulkit
