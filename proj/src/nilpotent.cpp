#include "koszulkit/nilpotent.hpp"

#include <stdexcept>
#include <string>

namespace koszulkit {

FiniteGroupTable::FiniteGroupTable(std::vector<std::string> element_names,
                                   std::vector<std::vector<size_t>> mult_table)
    : names(std::move(element_names)), table(std::move(mult_table)) {
    const size_t n = names.size();
    if (n == 0 || table.size() != n)
        throw std::invalid_argument("group table: shape mismatch");
    for (const auto& row : table) {
        if (row.size() != n)
            throw std::invalid_argument("group table: shape mismatch");
        for (size_t v : row)
            if (v >= n)
                throw std::invalid_argument("group table: entry out of range");
    }
    // locate the identity
    bool found = false;
    for (size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (size_t g = 0; g < n && ok; ++g)
            ok = table[e][g] == g && table[g][e] == g;
        if (ok) {
            identity = e;
            found = true;
        }
    }
    if (!found)
        throw std::invalid_argument("group table: no identity element");
    // associativity and inverses
    for (size_t a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (size_t b = 0; b < n; ++b) {
            if (table[a][b] == identity && table[b][a] == identity)
                has_inverse = true;
            for (size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("group table: not associative");
        }
        if (!has_inverse)
            throw std::invalid_argument("group table: missing inverse");
    }
}

FiniteGroupTable cyclic_group(size_t n) {
    if (n == 0)
        throw std::invalid_argument("cyclic group: order must be positive");
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i)
        names.push_back(i == 0 ? "e" : "a" + std::to_string(i));
    std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h)
            table[g][h] = (g + h) % n;
    return {std::move(names), std::move(table)};
}

FiniteGroupTable elementary_abelian_group(size_t l, size_t k) {
    if (!is_prime(static_cast<uint32_t>(l)))
        throw std::invalid_argument("elementary abelian group: l must be prime");
    size_t n = 1;
    for (size_t i = 0; i < k; ++i)
        n *= l;
    std::vector<std::string> names;
    for (size_t g = 0; g < n; ++g) {
        std::string name = "v";
        size_t rest = g;
        for (size_t i = 0; i < k; ++i) {
            name += std::to_string(rest % l);
            rest /= l;
        }
        names.push_back(k == 0 ? "e" : name);
    }
    std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h) {
            size_t gg = g, hh = h, out = 0, base = 1;
            for (size_t i = 0; i < k; ++i) {
                out += ((gg % l + hh % l) % l) * base;
                base *= l;
                gg /= l;
                hh /= l;
            }
            table[g][h] = out;
        }
    return {std::move(names), std::move(table)};
}

FiniteGroupTable dihedral_group(size_t order) {
    if (order < 2 || order % 2)
        throw std::invalid_argument("dihedral group: order must be even");
    const size_t n = order / 2;  // rotations
    auto idx = [n](size_t i, size_t j) { return j * n + i; };
    std::vector<std::string> names(order);
    for (size_t i = 0; i < n; ++i) {
        names[idx(i, 0)] = "r" + std::to_string(i);
        names[idx(i, 1)] = "sr" + std::to_string(i);
    }
    std::vector<std::vector<size_t>> table(order, std::vector<size_t>(order));
    for (size_t i1 = 0; i1 < n; ++i1)
        for (size_t j1 = 0; j1 < 2; ++j1)
            for (size_t i2 = 0; i2 < n; ++i2)
                for (size_t j2 = 0; j2 < 2; ++j2) {
                    size_t i = j1 ? (i1 + n - i2 % n) % n : (i1 + i2) % n;
                    size_t j = (j1 + j2) % 2;
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    return {std::move(names), std::move(table)};
}

FiniteGroupTable quaternion_group(size_t order) {
    if (order != 8 && order != 16)
        throw std::invalid_argument("quaternion group: order must be 8 or 16");
    const size_t m = order / 4;      // b² = a^{2m/2}... relations below
    const size_t two_m = order / 2;  // a has order 2m
    auto idx = [two_m](size_t i, size_t j) { return j * two_m + i; };
    std::vector<std::string> names(order);
    for (size_t i = 0; i < two_m; ++i) {
        names[idx(i, 0)] = "a" + std::to_string(i);
        names[idx(i, 1)] = "a" + std::to_string(i) + "b";
    }
    std::vector<std::vector<size_t>> table(order, std::vector<size_t>(order));
    for (size_t i1 = 0; i1 < two_m; ++i1)
        for (size_t j1 = 0; j1 < 2; ++j1)
            for (size_t i2 = 0; i2 < two_m; ++i2)
                for (size_t j2 = 0; j2 < 2; ++j2) {
                    // a^{i1} b^{j1} · a^{i2} b^{j2} with b a = a^{-1} b, b² = a^m
                    size_t i = j1 ? (i1 + two_m - i2 % two_m) % two_m : (i1 + i2) % two_m;
                    size_t j = j1 + j2;
                    if (j == 2) {
                        i = (i + m) % two_m;
                        j = 0;
                    }
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    return {std::move(names), std::move(table)};
}

AugmentedCoalgebraData group_coalgebra(const FiniteGroupTable& g, Fp field) {
    const size_t n = g.order();
    FpMatrix comult(field, n * n, n);
    for (size_t h = 0; h < n; ++h)
        for (size_t k = 0; k < n; ++k)
            comult(h * n + k, g.table[h][k]) = 1;
    std::vector<uint32_t> counit(n, 0), aug(n, 1);
    counit[g.identity] = 1;
    return {field, std::move(comult), std::move(counit), std::move(aug)};
}

AugmentedCoalgebra::AugmentedCoalgebra(AugmentedCoalgebraData data)
    : data_(std::move(data)), cache_mutex_(std::make_unique<std::mutex>()) {}

const FpMatrix& AugmentedCoalgebra::iterated_comult(size_t m) const {
    const Fp f = data_.field;
    const size_t n = data_.dim();
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    if (cache_.empty()) {
        FpMatrix eps(f, 1, n);
        for (size_t c = 0; c < n; ++c)
            eps(0, c) = data_.counit[c];
        cache_.push_back(std::move(eps));
        cache_.push_back(FpMatrix::identity(f, n));
    }
    while (cache_.size() <= m) {
        size_t k = cache_.size() - 1;
        if (tensor_pow(n, static_cast<int>(k + 1)) > (size_t(1) << 24))
            throw std::invalid_argument("iterated comultiplication too large");
        cache_.push_back(
            matmul(kronecker(cache_[k], FpMatrix::identity(f, n)), data_.comult));
    }
    return cache_[m];
}

namespace {

Subspace augmentation_span(const AugmentedCoalgebra& c) {
    FpMatrix row(c.field(), 1, c.dim());
    for (size_t i = 0; i < c.dim(); ++i)
        row(0, i) = c.data().augmentation[i];
    return Subspace::from_rows(std::move(row));
}

}  // namespace

Filtration augmentation_filtration(const AugmentedCoalgebra& c) {
    const Fp f = c.field();
    const size_t m = c.dim();
    Filtration out;
    const Subspace n0 = augmentation_span(c);
    out.steps.push_back(n0);
    LinearMap delta(c.data().comult);
    FpMatrix id = FpMatrix::identity(f, m);
    while (true) {
        const Subspace& prev = out.steps.back();
        Subspace target = sum(Subspace::from_rows(kronecker(prev.basis(), id)),
                              Subspace::from_rows(kronecker(id, n0.basis())));
        Subspace next = preimage_of(delta, target);
        if (next == prev)
            break;
        out.steps.push_back(std::move(next));
    }
    out.full = out.steps.back().dim() == m;
    return out;
}

Filtration augmentation_filtration_literal(const AugmentedCoalgebra& c, size_t max_steps) {
    const Fp f = c.field();
    const size_t m = c.dim();
    Filtration out;
    for (size_t n = 0; n <= max_steps; ++n) {
        // C^{⊗n+1}_γ = Σ_i C^{⊗i-1} ⊗ γ(k) ⊗ C^{⊗n-i+1}
        size_t ambient = tensor_pow(m, static_cast<int>(n + 1));
        FpMatrix rows(f, 0, ambient);
        for (size_t slot = 0; slot <= n; ++slot) {
            size_t left = tensor_pow(m, static_cast<int>(slot));
            size_t right = tensor_pow(m, static_cast<int>(n - slot));
            for (size_t u = 0; u < left; ++u)
                for (size_t w = 0; w < right; ++w) {
                    std::vector<uint32_t> v(ambient, 0);
                    for (size_t t = 0; t < m; ++t)
                        v[(u * m + t) * right + w] = c.data().augmentation[t];
                    rows.append_row(v);
                }
        }
        Subspace gamma_part = Subspace::from_rows(std::move(rows));
        Subspace step = preimage_of(LinearMap(c.iterated_comult(n + 1)), gamma_part);
        if (!out.steps.empty() && step == out.steps.back())
            break;
        out.steps.push_back(std::move(step));
    }
    out.full = out.steps.back().dim() == m;
    return out;
}

bool is_nilpotent(const AugmentedCoalgebra& c) { return augmentation_filtration(c).full; }

bool filtration_respects_comult(const AugmentedCoalgebra& c, const Filtration& filt) {
    const Fp f = c.field();
    const size_t m = c.dim();
    LinearMap delta(c.data().comult);
    for (size_t n = 0; n < filt.steps.size(); ++n) {
        FpMatrix rows(f, 0, m * m);
        for (size_t i = 0; i <= n; ++i) {
            const Subspace& a = filt.steps[std::min(i, filt.steps.size() - 1)];
            const Subspace& b = filt.steps[std::min(n - i, filt.steps.size() - 1)];
            rows.append_rows(kronecker(a.basis(), b.basis()));
        }
        Subspace target = Subspace::from_rows(std::move(rows));
        if (!target.contains(image_of(delta, filt.steps[n])))
            return false;
    }
    return true;
}

GradedSliceCoalgebra associated_graded(const AugmentedCoalgebra& c) {
    Filtration filt = augmentation_filtration(c);
    if (!filt.full)
        throw std::invalid_argument("associated_graded: coalgebra is not nilpotent");
    const Fp f = c.field();
    const size_t m = c.dim();
    const size_t stab = filt.stabilization();

    // adapted basis: for each level, the rows of N_n whose pivots are new
    std::vector<size_t> level_of;
    FpMatrix adapted(f, 0, m);
    std::vector<size_t> dims(stab + 1, 0);
    std::vector<size_t> level_offset(stab + 2, 0);
    for (size_t n = 0; n <= stab; ++n) {
        std::vector<bool> old_pivot(m, false);
        if (n > 0)
            for (size_t p : filt.steps[n - 1].pivots())
                old_pivot[p] = true;
        const Subspace& nn = filt.steps[n];
        for (size_t r = 0; r < nn.dim(); ++r) {
            if (old_pivot[nn.pivots()[r]])
                continue;
            adapted.append_row(nn.basis().row(r));
            level_of.push_back(n);
            ++dims[n];
        }
        level_offset[n + 1] = level_of.size();
    }
    if (adapted.rows() != m)
        throw std::logic_error("associated_graded: adapted basis is not complete");

    // T columns are the adapted vectors; solve for T^{-1}
    FpMatrix t = transpose(adapted);
    FpMatrix aug(f, m, 2 * m);
    for (size_t r = 0; r < m; ++r) {
        for (size_t cc = 0; cc < m; ++cc)
            aug(r, cc) = t(r, cc);
        aug(r, m + r) = 1;
    }
    if (rref(aug) != m)
        throw std::logic_error("associated_graded: adapted basis is singular");
    FpMatrix tinv(f, m, m);
    for (size_t r = 0; r < m; ++r)
        for (size_t cc = 0; cc < m; ++cc)
            tinv(r, cc) = aug(r, m + cc);

    // comultiplication of each adapted vector, rewritten in adapted ⊗ adapted
    // coordinates: Δ(t_g) reshaped as X gives Y = T^{-1} X T^{-T}
    std::map<std::pair<int, int>, FpMatrix> comult;
    for (size_t i = 1; i <= stab; ++i)
        for (size_t j = 1; i + j <= stab; ++j)
            comult.emplace(std::make_pair(static_cast<int>(i), static_cast<int>(j)),
                           FpMatrix(f, dims[i] * dims[j], dims[i + j]));
    LinearMap delta(c.data().comult);
    for (size_t g = 0; g < m; ++g) {
        const size_t n = level_of[g];
        std::vector<uint32_t> w = delta.apply(adapted.row(g));
        FpMatrix x(f, m, m);
        for (size_t p = 0; p < m; ++p)
            for (size_t q = 0; q < m; ++q)
                x(p, q) = w[p * m + q];
        FpMatrix y = matmul(matmul(tinv, x), transpose(tinv));
        for (size_t u = 0; u < m; ++u)
            for (size_t v = 0; v < m; ++v) {
                size_t lu = level_of[u], lv = level_of[v];
                if (lu + lv > n) {
                    if (y(u, v))
                        throw std::logic_error(
                            "associated_graded: comultiplication escapes the filtration");
                    continue;
                }
                if (lu + lv == n && lu >= 1 && lv >= 1) {
                    FpMatrix& target = comult.at({static_cast<int>(lu), static_cast<int>(lv)});
                    size_t u_local = u - level_offset[lu];
                    size_t v_local = v - level_offset[lv];
                    target(u_local * dims[lv] + v_local, g - level_offset[n]) = y(u, v);
                }
            }
    }
    return GradedSliceCoalgebra(f, dims, std::move(comult), true);
}

namespace {

std::vector<uint32_t> kron_row(Fp f, std::span<const uint32_t> a, std::span<const uint32_t> b) {
    std::vector<uint32_t> out(a.size() * b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i * b.size() + j] = f.mul(a[i], b[j]);
    }
    return out;
}

// spans of all n-fold concatenation products of the degree-one cocycles
FpMatrix cocycle_products(Fp f, const Subspace& z1, int n) {
    FpMatrix rows(f, 1, 1);
    rows(0, 0) = 1;
    for (int k = 0; k < n; ++k) {
        FpMatrix next(f, 0, rows.cols() * z1.ambient_dim());
        for (size_t r = 0; r < rows.rows(); ++r)
            for (size_t s = 0; s < z1.dim(); ++s)
                next.append_row(kron_row(f, rows.row(r), z1.basis().row(s)));
        rows = std::move(next);
    }
    return rows;
}

}  // namespace

CohomologyHarnessReport cohomology_harness(const AugmentedCoalgebra& c, int n_max) {
    if (n_max < 3)
        throw std::invalid_argument("cohomology_harness: n_max must be at least 3");
    if (!is_nilpotent(c))
        throw std::invalid_argument("cohomology_harness: coalgebra is not nilpotent");
    const Fp f = c.field();

    FiniteComplex cobar = cobar_complex(c.data(), n_max + 1);
    std::vector<size_t> h_dims;
    for (int i = 0; i <= n_max; ++i)
        h_dims.push_back(cobar.homology_dim(i));

    Subspace z1 = cobar.cycles(1);
    const size_t h1 = z1.dim();  // B^1 = 0

    // per-degree generation and relation counts for the subalgebra generated
    // by H^1
    std::vector<bool> generated(n_max + 1, true);
    std::vector<bool> no_new_relations(n_max + 1, true);
    std::vector<size_t> image_dims(n_max + 1, 0);
    image_dims[0] = 1;
    image_dims[1] = h1;
    generated[1] = h_dims[1] == h1;

    // qH = (H^1, ker(H^1 ⊗ H^1 -> H^2))
    Subspace z2 = cobar.cycles(2);
    Subspace b2 = cobar.boundaries(2);
    FpMatrix b2_in_z2(f, 0, z2.dim());
    for (size_t r = 0; r < b2.dim(); ++r) {
        auto coords = z2.coordinates(b2.basis().row(r));
        if (!coords)
            throw std::logic_error("coboundaries escape the cocycles");
        b2_in_z2.append_row(*coords);
    }
    FpMatrix h2_proj = quotient_projection(Subspace::from_rows(std::move(b2_in_z2)));
    FpMatrix pair_map(f, h2_proj.rows(), h1 * h1);
    for (size_t u = 0; u < h1; ++u)
        for (size_t v = 0; v < h1; ++v) {
            std::vector<uint32_t> prod = kron_row(f, z1.basis().row(u), z1.basis().row(v));
            auto coords = z2.coordinates(prod);
            if (!coords)
                throw std::logic_error("a product of cocycles is not a cocycle");
            std::vector<uint32_t> cls = LinearMap(h2_proj).apply(*coords);
            for (size_t r = 0; r < cls.size(); ++r)
                pair_map(r, u * h1 + v) = cls[r];
        }
    std::vector<std::string> gen_names;
    for (size_t i = 0; i < h1; ++i)
        gen_names.push_back("h" + std::to_string(i));
    QuadraticPresentation q_h(f, gen_names, kernel(LinearMap(pair_map)));

    for (int n = 2; n <= n_max; ++n) {
        Subspace zn = cobar.cycles(n);
        Subspace bn = cobar.boundaries(n);
        Subspace un = Subspace::from_rows(cocycle_products(f, z1, n));
        if (!zn.contains(un))
            throw std::logic_error("a product of cocycles is not a cocycle");
        Subspace span = sum(un, bn);
        generated[n] = span == zn;
        image_dims[n] = span.dim() - bn.dim();
        no_new_relations[n] = image_dims[n] == algebra_component(q_h, n).dim();
    }

    CohomologyHarnessReport report{
        std::move(h_dims),
        {},
        generated[2],
        no_new_relations[3],
        false,
        std::move(q_h),
        std::move(generated),
        std::move(no_new_relations),
        false,
        false,
    };

    // hypothesis (3): Koszulity of qH through n_max, both criteria compared
    KoszulVerdict kd = koszul_by_distributivity(report.q_h, n_max);
    KoszulVerdict kh = koszul_by_homology(report.q_h, n_max);
    if (kd.koszul != kh.koszul || kd.failure_degree != kh.failure_degree)
        throw std::logic_error("cohomology_harness: Koszulity criteria disagree");
    report.hypothesis3 = kd.koszul;

    GradedSliceCoalgebra gr = associated_graded(c);
    report.h_gr_dims = total_cohomology_dims(gr, n_max);
    report.endpoint_dims_equal = report.h_dims == report.h_gr_dims;

    bool quad = true;
    for (int n = 2; n <= n_max; ++n)
        quad = quad && report.generated_in_degree[n] && report.no_new_relations_in_degree[n];
    report.h_quadratic_through_n_max = quad;
    return report;
}

}  // namespace koszulkit
