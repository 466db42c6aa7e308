#include "koszulkit/quadratic.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace koszulkit {

size_t tensor_pow(size_t d, int n) {
    if (n < 0)
        throw std::invalid_argument("negative tensor power");
    size_t out = 1;
    for (int k = 0; k < n; ++k) {
        if (d != 0 && out > (size_t(1) << 24) / (d ? d : 1))
            throw std::invalid_argument("tensor power dimension too large");
        out *= d;
    }
    return out;
}

RowSolver::RowSolver(const FpMatrix& spanning)
    : rref_(spanning.field(), 0, 0), transform_(spanning.field(), 0, 0) {
    const Fp f = spanning.field();
    const size_t k = spanning.rows(), n = spanning.cols();
    FpMatrix aug(f, k, n + k);
    for (size_t r = 0; r < k; ++r) {
        for (size_t c = 0; c < n; ++c)
            aug(r, c) = spanning(r, c);
        aug(r, n + r) = 1;
    }
    std::vector<size_t> piv;
    rref(aug, &piv);
    size_t r = 0;
    while (r < piv.size() && piv[r] < n)
        ++r;
    rref_ = FpMatrix(f, r, n);
    transform_ = FpMatrix(f, r, k);
    pivots_.assign(piv.begin(), piv.begin() + r);
    for (size_t i = 0; i < r; ++i) {
        for (size_t c = 0; c < n; ++c)
            rref_(i, c) = aug(i, c);
        for (size_t c = 0; c < k; ++c)
            transform_(i, c) = aug(i, n + c);
    }
}

std::optional<std::vector<uint32_t>> RowSolver::solve(std::span<const uint32_t> v) const {
    if (v.size() != rref_.cols())
        throw std::invalid_argument("RowSolver: vector length mismatch");
    const Fp f = rref_.field();
    std::vector<uint32_t> residue(v.begin(), v.end());
    std::vector<uint32_t> reduced(rref_.rows(), 0);
    for (size_t i = 0; i < rref_.rows(); ++i) {
        uint32_t c = residue[pivots_[i]];
        if (!c)
            continue;
        reduced[i] = c;
        for (size_t j = 0; j < rref_.cols(); ++j)
            residue[j] = f.sub(residue[j], f.mul(c, rref_(i, j)));
    }
    for (uint32_t x : residue)
        if (x)
            return std::nullopt;
    std::vector<uint32_t> coeffs(transform_.cols(), 0);
    for (size_t i = 0; i < rref_.rows(); ++i) {
        if (!reduced[i])
            continue;
        for (size_t c = 0; c < transform_.cols(); ++c)
            coeffs[c] = f.add(coeffs[c], f.mul(reduced[i], transform_(i, c)));
    }
    return coeffs;
}

QuadraticPresentation::QuadraticPresentation(Fp f, std::vector<std::string> gens, Subspace rel)
    : field(f), generators(std::move(gens)), relations(std::move(rel)) {
    if (relations.field() != field)
        throw std::invalid_argument("presentation: relation field mismatch");
    if (relations.ambient_dim() != generators.size() * generators.size())
        throw std::invalid_argument("presentation: relations must live in V⊗V");
    std::set<std::string> names(generators.begin(), generators.end());
    if (names.size() != generators.size())
        throw std::invalid_argument("presentation: duplicate generator names");
}

TaggedPresentation dual(const TaggedPresentation& t) {
    return {t.presentation, t.side == PresentationSide::algebra ? PresentationSide::coalgebra
                                                                : PresentationSide::algebra};
}

namespace {

std::vector<std::string> default_names(size_t d) {
    std::vector<std::string> names;
    for (size_t i = 0; i < d; ++i)
        names.push_back("g" + std::to_string(i));
    return names;
}

}  // namespace

QuadraticPresentation free_presentation(Fp field, size_t dim_v) {
    return {field, default_names(dim_v), Subspace(field, dim_v * dim_v)};
}

QuadraticPresentation polynomial_presentation(Fp field, size_t dim_v) {
    FpMatrix rel(field, 0, dim_v * dim_v);
    for (size_t i = 0; i < dim_v; ++i)
        for (size_t j = i + 1; j < dim_v; ++j) {
            std::vector<uint32_t> v(dim_v * dim_v, 0);
            v[i * dim_v + j] = 1;
            v[j * dim_v + i] = field.neg(1);
            rel.append_row(v);
        }
    return {field, default_names(dim_v), Subspace::from_rows(std::move(rel))};
}

QuadraticPresentation exterior_presentation(Fp field, size_t dim_v) {
    FpMatrix rel(field, 0, dim_v * dim_v);
    for (size_t i = 0; i < dim_v; ++i) {
        std::vector<uint32_t> sq(dim_v * dim_v, 0);
        sq[i * dim_v + i] = 1;
        rel.append_row(sq);
        for (size_t j = i + 1; j < dim_v; ++j) {
            std::vector<uint32_t> v(dim_v * dim_v, 0);
            v[i * dim_v + j] = 1;
            v[j * dim_v + i] = 1;
            rel.append_row(v);
        }
    }
    return {field, default_names(dim_v), Subspace::from_rows(std::move(rel))};
}

QuadraticPresentation full_relations_presentation(Fp field, size_t dim_v) {
    return {field, default_names(dim_v), Subspace::full(field, dim_v * dim_v)};
}

Subspace embed_relations(const QuadraticPresentation& p, int i, int n) {
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("embed_relations: index out of range");
    const size_t d = p.dim_v();
    const size_t left = tensor_pow(d, i - 1);
    const size_t right = tensor_pow(d, n - i - 1);
    const size_t ambient = tensor_pow(d, n);
    const FpMatrix& rel = p.relations.basis();
    FpMatrix rows(p.field, rel.rows() * left * right, ambient);
    size_t out = 0;
    for (size_t u = 0; u < left; ++u)
        for (size_t k = 0; k < rel.rows(); ++k)
            for (size_t w = 0; w < right; ++w, ++out)
                for (size_t t = 0; t < d * d; ++t)
                    rows(out, (u * d * d + t) * right + w) = rel(k, t);
    return Subspace::from_rows(std::move(rows));
}

QuotientSpace make_quotient(const Subspace& u) {
    return {u, quotient_projection(u), quotient_section(u)};
}

QuotientSpace algebra_component(const QuadraticPresentation& p, int n) {
    if (n < 0)
        throw std::invalid_argument("algebra_component: negative degree");
    const size_t d = p.dim_v();
    if (n <= 1)
        return make_quotient(Subspace(p.field, tensor_pow(d, n)));
    FpMatrix rows(p.field, 0, tensor_pow(d, n));
    for (int i = 1; i <= n - 1; ++i)
        rows.append_rows(embed_relations(p, i, n).basis());
    return make_quotient(Subspace::from_rows(std::move(rows)));
}

Subspace coalgebra_component(const QuadraticPresentation& p, int n) {
    if (n < 0)
        throw std::invalid_argument("coalgebra_component: negative degree");
    const size_t d = p.dim_v();
    if (n <= 1)
        return Subspace::full(p.field, tensor_pow(d, n));
    Subspace acc = embed_relations(p, 1, n);
    for (int i = 2; i <= n - 1; ++i)
        acc = intersect(acc, embed_relations(p, i, n));
    return acc;
}

GradedSliceAlgebra::GradedSliceAlgebra(Fp field, std::vector<size_t> dims,
                                       std::map<std::pair<int, int>, FpMatrix> mult_maps)
    : field_(field), dims_(std::move(dims)), mult_(std::move(mult_maps)) {
    if (dims_.empty() || dims_[0] != 1)
        throw std::invalid_argument("graded algebra slice: component 0 must have dimension 1");
    const int n = n_max();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j) {
            auto it = mult_.find({i, j});
            if (it == mult_.end())
                throw std::invalid_argument("graded algebra slice: missing multiplication map");
            const FpMatrix& m = it->second;
            if (m.rows() != dims_[i + j] || m.cols() != dims_[i] * dims_[j] ||
                m.field() != field_)
                throw std::invalid_argument("graded algebra slice: multiplication shape mismatch");
        }
    // associativity on all composable triples
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j)
            for (int k = 1; i + j + k <= n; ++k) {
                FpMatrix lhs = matmul(mult(i + j, k),
                                      kronecker(mult(i, j), FpMatrix::identity(field_, dims_[k])));
                FpMatrix rhs = matmul(mult(i, j + k),
                                      kronecker(FpMatrix::identity(field_, dims_[i]), mult(j, k)));
                if (!(lhs == rhs))
                    throw std::invalid_argument("graded algebra slice: multiplication is not "
                                                "associative at (" + std::to_string(i) + "," +
                                                std::to_string(j) + "," + std::to_string(k) + ")");
            }
    quotients.assign(dims_.size(), std::nullopt);
}

const FpMatrix& GradedSliceAlgebra::mult(int i, int j) const {
    auto it = mult_.find({i, j});
    if (it == mult_.end())
        throw std::invalid_argument("multiplication map out of slice range");
    return it->second;
}

GradedSliceCoalgebra::GradedSliceCoalgebra(Fp field, std::vector<size_t> dims,
                                           std::map<std::pair<int, int>, FpMatrix> comult_maps,
                                           bool complete)
    : field_(field), dims_(std::move(dims)), comult_(std::move(comult_maps)), complete_(complete) {
    if (dims_.empty() || dims_[0] != 1)
        throw std::invalid_argument("graded coalgebra slice: component 0 must have dimension 1");
    const int n = n_max();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j) {
            auto it = comult_.find({i, j});
            if (it == comult_.end())
                throw std::invalid_argument("graded coalgebra slice: missing comultiplication");
            const FpMatrix& m = it->second;
            if (m.rows() != dims_[i] * dims_[j] || m.cols() != dims_[i + j] ||
                m.field() != field_)
                throw std::invalid_argument(
                    "graded coalgebra slice: comultiplication shape mismatch");
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j)
            for (int k = 1; i + j + k <= n; ++k) {
                FpMatrix lhs = matmul(
                    kronecker(comult(i, j), FpMatrix::identity(field_, dims_[k])),
                    comult(i + j, k));
                FpMatrix rhs = matmul(
                    kronecker(FpMatrix::identity(field_, dims_[i]), comult(j, k)),
                    comult(i, j + k));
                if (!(lhs == rhs))
                    throw std::invalid_argument("graded coalgebra slice: comultiplication is not "
                                                "coassociative at (" + std::to_string(i) + "," +
                                                std::to_string(j) + "," + std::to_string(k) + ")");
            }
    carriers.assign(dims_.size(), std::nullopt);
}

const FpMatrix& GradedSliceCoalgebra::comult(int i, int j) const {
    auto it = comult_.find({i, j});
    if (it == comult_.end())
        throw std::invalid_argument("comultiplication map out of slice range");
    return it->second;
}

GradedSliceAlgebra tensor_quotient_algebra(Fp field, size_t dim_v,
                                           const std::vector<Subspace>& denominators) {
    const int n_max = static_cast<int>(denominators.size()) - 1;
    std::vector<QuotientSpace> q;
    std::vector<size_t> dims;
    for (int n = 0; n <= n_max; ++n) {
        if (denominators[n].ambient_dim() != tensor_pow(dim_v, n))
            throw std::invalid_argument("tensor_quotient_algebra: denominator ambient mismatch");
        q.push_back(make_quotient(denominators[n]));
        dims.push_back(q.back().dim());
    }
    std::map<std::pair<int, int>, FpMatrix> mult;
    for (int i = 1; i <= n_max; ++i)
        for (int j = 1; i + j <= n_max; ++j)
            mult.emplace(std::make_pair(i, j),
                         matmul(q[i + j].projection, kronecker(q[i].section, q[j].section)));
    GradedSliceAlgebra a(field, dims, std::move(mult));
    for (int n = 0; n <= n_max; ++n)
        a.quotients[n] = q[n];
    return a;
}

GradedSliceAlgebra build_algebra_slice(const QuadraticPresentation& p, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("build_algebra_slice: negative n_max");
    std::vector<Subspace> denominators;
    for (int n = 0; n <= n_max; ++n)
        denominators.push_back(algebra_component(p, n).denominator);
    return tensor_quotient_algebra(p.field, p.dim_v(), denominators);
}

GradedSliceCoalgebra build_coalgebra_slice(const QuadraticPresentation& p, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("build_coalgebra_slice: negative n_max");
    std::vector<Subspace> comps;
    std::vector<size_t> dims;
    for (int n = 0; n <= n_max; ++n) {
        comps.push_back(coalgebra_component(p, n));
        dims.push_back(comps.back().dim());
    }
    // comultiplication = deconcatenation of basis rows, expressed in the
    // Kronecker basis of C_i ⊗ C_j
    std::map<std::pair<int, int>, FpMatrix> comult;
    for (int i = 1; i <= n_max; ++i)
        for (int j = 1; i + j <= n_max; ++j) {
            FpMatrix m(p.field, dims[i] * dims[j], dims[i + j]);
            if (dims[i] * dims[j] > 0 && dims[i + j] > 0) {
                RowSolver solver(kronecker(comps[i].basis(), comps[j].basis()));
                for (size_t col = 0; col < dims[i + j]; ++col) {
                    auto coeffs = solver.solve(comps[i + j].basis().row(col));
                    if (!coeffs)
                        throw std::logic_error("coalgebra component fails to deconcatenate");
                    for (size_t r = 0; r < m.rows(); ++r)
                        m(r, col) = (*coeffs)[r];
                }
            } else if (dims[i + j] > 0 && dims[i] * dims[j] == 0) {
                // C_{i+j} must vanish whenever a deconcatenation target does
                throw std::logic_error("coalgebra component fails to deconcatenate");
            }
            comult.emplace(std::make_pair(i, j), std::move(m));
        }
    GradedSliceCoalgebra c(p.field, dims, std::move(comult));
    for (int n = 0; n <= n_max; ++n)
        c.carriers[n] = comps[n];
    return c;
}

FpMatrix iterated_product_map(const GradedSliceAlgebra& a, int n) {
    if (n < 1 || n > a.n_max())
        throw std::invalid_argument("iterated_product_map: degree out of range");
    const size_t d1 = a.dim(1);
    FpMatrix m = FpMatrix::identity(a.field(), d1);
    for (int k = 2; k <= n; ++k)
        m = matmul(a.mult(k - 1, 1), kronecker(m, FpMatrix::identity(a.field(), d1)));
    return m;
}

FpMatrix iterated_comult_map(const GradedSliceCoalgebra& c, int n) {
    if (n < 1 || n > c.n_max())
        throw std::invalid_argument("iterated_comult_map: degree out of range");
    const size_t d1 = c.dim(1);
    FpMatrix m = FpMatrix::identity(c.field(), d1);
    for (int k = 2; k <= n; ++k)
        m = matmul(kronecker(m, FpMatrix::identity(c.field(), d1)), c.comult(k - 1, 1));
    return m;
}

bool QuadraticPartResult::isomorphism_through(int n) const {
    for (const auto& cmp : comparisons)
        if (cmp.degree <= n && !(cmp.injective && cmp.surjective))
            return false;
    return true;
}

QuadraticPartResult quadratic_part_of_algebra(const GradedSliceAlgebra& a) {
    if (a.n_max() < 2)
        throw std::invalid_argument("quadratic part needs a slice through degree 2");
    const Fp f = a.field();
    const size_t d1 = a.dim(1);
    Subspace relations = kernel(LinearMap(a.mult(1, 1)));
    QuadraticPresentation p(f, default_names(d1), relations);
    bool low_ok = rank(a.mult(1, 1)) == a.dim(2);

    std::vector<DegreeComparison> comparisons;
    comparisons.push_back({0, 1, 1, true, true});
    comparisons.push_back({1, d1, d1, true, true});
    for (int n = 2; n <= a.n_max(); ++n) {
        QuotientSpace qa_n = algebra_component(p, n);
        FpMatrix induced = matmul(iterated_product_map(a, n), qa_n.section);
        size_t r = rank(induced);
        comparisons.push_back(
            {n, qa_n.dim(), a.dim(n), r == qa_n.dim(), r == a.dim(n)});
    }
    return {std::move(p), low_ok, std::move(comparisons)};
}

QuadraticPartResult quadratic_part_of_coalgebra(const GradedSliceCoalgebra& c) {
    if (c.n_max() < 2)
        throw std::invalid_argument("quadratic part needs a slice through degree 2");
    const Fp f = c.field();
    const size_t d1 = c.dim(1);
    Subspace relations = image(LinearMap(c.comult(1, 1)));
    QuadraticPresentation p(f, default_names(d1), relations);
    bool low_ok = rank(c.comult(1, 1)) == c.dim(2);

    std::vector<DegreeComparison> comparisons;
    comparisons.push_back({0, 1, 1, true, true});
    comparisons.push_back({1, d1, d1, true, true});
    for (int n = 2; n <= c.n_max(); ++n) {
        Subspace qc_n = coalgebra_component(p, n);
        FpMatrix delta_n = iterated_comult_map(c, n);
        FpMatrix r_c(f, qc_n.dim(), c.dim(n));
        if (qc_n.dim() > 0 && c.dim(n) > 0) {
            RowSolver solver(qc_n.basis());
            for (size_t col = 0; col < c.dim(n); ++col) {
                std::vector<uint32_t> v(delta_n.rows());
                for (size_t r = 0; r < delta_n.rows(); ++r)
                    v[r] = delta_n(r, col);
                auto coeffs = solver.solve(v);
                if (!coeffs)
                    throw std::logic_error(
                        "iterated comultiplication image escapes the quadratic part");
                for (size_t r = 0; r < r_c.rows(); ++r)
                    r_c(r, col) = (*coeffs)[r];
            }
        } else if (c.dim(n) > 0 && qc_n.dim() == 0) {
            // C_n maps to zero; the comparison is injective only if C_n = 0
            bool zero_image = true;
            for (size_t r = 0; r < delta_n.rows() && zero_image; ++r)
                for (size_t col = 0; col < delta_n.cols() && zero_image; ++col)
                    zero_image = delta_n(r, col) == 0;
            if (!zero_image)
                throw std::logic_error(
                    "iterated comultiplication image escapes the quadratic part");
        }
        size_t r = rank(r_c);
        comparisons.push_back({n, c.dim(n), qc_n.dim(), r == c.dim(n), r == qc_n.dim()});
    }
    return {std::move(p), low_ok, std::move(comparisons)};
}

GradedSliceAlgebra truncated_polynomial_algebra(Fp field, int power, int n_max) {
    if (power < 1 || n_max < 0)
        throw std::invalid_argument("truncated_polynomial_algebra: bad parameters");
    std::vector<size_t> dims;
    for (int n = 0; n <= n_max; ++n)
        dims.push_back(n < power ? 1 : 0);
    std::map<std::pair<int, int>, FpMatrix> mult;
    for (int i = 1; i <= n_max; ++i)
        for (int j = 1; i + j <= n_max; ++j) {
            FpMatrix m(field, dims[i + j], dims[i] * dims[j]);
            if (dims[i + j] == 1 && dims[i] * dims[j] == 1)
                m(0, 0) = 1;
            mult.emplace(std::make_pair(i, j), std::move(m));
        }
    return GradedSliceAlgebra(field, dims, std::move(mult));
}

}  // namespace koszulkit
