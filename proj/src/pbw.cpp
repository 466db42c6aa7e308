#include "koszulkit/pbw.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace koszulkit {

int inverse_lex_compare(const Monomial& m1, const Monomial& m2,
                        const OrderedGenerators& order) {
    int deg1 = 0, deg2 = 0;
    for (int e : m1)
        deg1 += e;
    for (int e : m2)
        deg2 += e;
    if (deg1 != deg2 || m1.size() != order.dim() || m2.size() != order.dim())
        throw std::invalid_argument("inverse_lex_compare: monomials of unequal degree");
    for (size_t g : order.ranks) {
        if (m1[g] != m2[g])
            return m1[g] > m2[g] ? -1 : 1;
    }
    return 0;
}

std::vector<Monomial> monomials_of_degree(size_t dim_v, int degree,
                                          const OrderedGenerators& order) {
    std::vector<Monomial> out;
    Monomial cur(dim_v, 0);
    auto rec = [&](auto&& self, size_t slot, int remaining) -> void {
        if (slot + 1 == dim_v) {
            cur[slot] = remaining;
            out.push_back(cur);
            cur[slot] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[slot] = e;
            self(self, slot + 1, remaining - e);
        }
        cur[slot] = 0;
    };
    if (dim_v == 0) {
        if (degree == 0)
            out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return inverse_lex_compare(a, b, order) < 0;
    });
    return out;
}

std::vector<uint32_t> monomial_image(const GradedSliceAlgebra& a, const Monomial& m,
                                     const OrderedGenerators& order) {
    const Fp f = a.field();
    int degree = 0;
    for (int e : m)
        degree += e;
    if (degree == 0)
        return {1};
    // slots in increasing rank order
    std::vector<size_t> word;
    for (size_t g : order.ranks)
        for (int k = 0; k < m[g]; ++k)
            word.push_back(g);
    std::vector<uint32_t> v(a.dim(1), 0);
    if (word[0] >= a.dim(1))
        throw std::invalid_argument("monomial_image: generator index out of range");
    v[word[0]] = 1;
    for (size_t k = 1; k < word.size(); ++k) {
        int deg = static_cast<int>(k);
        if (a.dim(deg) == 0 || a.dim(deg + 1) == 0) {
            return std::vector<uint32_t>(a.dim(degree), 0);
        }
        const FpMatrix& mult = a.mult(deg, 1);
        std::vector<uint32_t> next(a.dim(deg + 1), 0);
        for (size_t u = 0; u < v.size(); ++u) {
            if (!v[u])
                continue;
            size_t col = u * a.dim(1) + word[k];
            for (size_t r = 0; r < next.size(); ++r)
                next[r] = f.add(next[r], f.mul(v[u], mult(r, col)));
        }
        v = std::move(next);
        bool zero = true;
        for (uint32_t x : v)
            if (x) {
                zero = false;
                break;
            }
        if (zero)
            return std::vector<uint32_t>(a.dim(degree), 0);
    }
    return v;
}

namespace {

Parity effective_parity(const GradedSliceAlgebra& a, Parity parity) {
    if (parity == Parity::skew && a.field().modulus() == 2)
        return Parity::commutative;
    return parity;
}

void check_parity(const GradedSliceAlgebra& a, Parity parity) {
    const Fp f = a.field();
    const size_t d = a.dim(1);
    if (a.n_max() < 2)
        throw std::invalid_argument("parity check needs a slice through degree 2");
    const FpMatrix& m = a.mult(1, 1);
    auto column = [&](size_t i, size_t j) {
        std::vector<uint32_t> v(a.dim(2));
        for (size_t r = 0; r < v.size(); ++r)
            v[r] = m(r, i * d + j);
        return v;
    };
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            std::vector<uint32_t> xy = column(i, j), yx = column(j, i);
            bool ok = true;
            if (parity == Parity::commutative) {
                ok = xy == yx;
            } else {
                for (size_t r = 0; r < xy.size() && ok; ++r)
                    ok = xy[r] == f.neg(yx[r]);
                if (i == j)
                    for (uint32_t x : xy)
                        ok = ok && x == 0;
            }
            if (!ok)
                throw std::invalid_argument("not (skew-)commutative under this parity");
        }
}

}  // namespace

std::vector<Monomial> monomial_basis(const GradedSliceAlgebra& a,
                                     const OrderedGenerators& order, int n) {
    if (order.dim() != a.dim(1))
        throw std::invalid_argument("monomial_basis: order does not cover the generators");
    std::vector<bool> seen(order.dim(), false);
    for (size_t g : order.ranks) {
        if (g >= order.dim() || seen[g])
            throw std::invalid_argument("monomial_basis: order is not a strict total order");
        seen[g] = true;
    }
    check_parity(a, effective_parity(a, order.parity));
    const Fp f = a.field();
    std::vector<Monomial> kept;
    FpMatrix span(f, 0, a.dim(n));
    size_t span_rank = 0;
    for (const Monomial& m : monomials_of_degree(a.dim(1), n, order)) {
        std::vector<uint32_t> img = monomial_image(a, m, order);
        FpMatrix candidate = span;
        candidate.append_row(img);
        size_t r = rank(candidate);
        if (r > span_rank) {
            span.append_row(img);
            rref(span);
            span_rank = r;
            kept.push_back(m);
        }
    }
    return kept;
}

std::vector<Monomial> divisors_of_degree(const Monomial& m, int k) {
    std::vector<Monomial> out;
    Monomial cur(m.size(), 0);
    auto rec = [&](auto&& self, size_t slot, int remaining) -> void {
        if (slot == m.size()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        for (int e = 0; e <= std::min(m[slot], remaining); ++e) {
            cur[slot] = e;
            self(self, slot + 1, remaining - e);
        }
        cur[slot] = 0;
    };
    rec(rec, 0, k);
    return out;
}

namespace {

std::vector<Monomial> pbw_prediction(const std::vector<Monomial>& s2, size_t dim_v, int degree,
                                     const OrderedGenerators& order) {
    std::set<Monomial> allowed(s2.begin(), s2.end());
    std::vector<Monomial> out;
    for (const Monomial& m : monomials_of_degree(dim_v, degree, order)) {
        bool ok = true;
        for (const Monomial& d : divisors_of_degree(m, 2))
            if (!allowed.count(d)) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(m);
    }
    return out;
}

}  // namespace

PbwReport pbw_check(const GradedSliceAlgebra& a, const OrderedGenerators& order, int n_max) {
    if (n_max < 3 || a.n_max() < 3)
        throw std::invalid_argument("pbw_check needs a slice through degree 3");
    PbwReport report;
    report.effective_parity = effective_parity(a, order.parity);
    report.s2 = monomial_basis(a, order, 2);
    report.s3 = monomial_basis(a, order, 3);
    report.predicted_s3 = pbw_prediction(report.s2, a.dim(1), 3, order);
    report.is_pbw = report.s3 == report.predicted_s3;
    QuadraticVerdict qv = quadratic_verdict(a, std::min(n_max, a.n_max()));
    report.quadratic = qv.quadratic;
    report.certified_koszul = report.is_pbw && report.quadratic;
    if (n_max >= 4 && a.n_max() >= 4) {
        report.s4 = monomial_basis(a, order, 4);
        report.predicted_s4 = pbw_prediction(report.s2, a.dim(1), 4, order);
        report.degree4_matches = report.s4 == report.predicted_s4;
    }
    return report;
}

}  // namespace koszulkit
