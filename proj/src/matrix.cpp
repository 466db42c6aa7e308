#include "koszulkit/matrix.hpp"

#include <stdexcept>

namespace koszulkit {

FpMatrix::FpMatrix(Fp field, size_t rows, size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(Fp field, size_t rows, size_t cols, std::vector<uint32_t> data)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix data size does not match shape");
    for (uint32_t v : data_)
        if (v >= field_.modulus())
            throw std::invalid_argument("matrix entry out of range for the field");
}

FpMatrix FpMatrix::identity(Fp field, size_t n) {
    FpMatrix m(field, n, n);
    for (size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(Fp field, size_t cols,
                             std::initializer_list<std::initializer_list<int64_t>> rows) {
    FpMatrix m(field, rows.size(), cols);
    size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw std::invalid_argument("row length mismatch");
        size_t c = 0;
        for (int64_t v : row)
            m(r, c++) = field.from_int(v);
        ++r;
    }
    return m;
}

void FpMatrix::append_row(std::span<const uint32_t> v) {
    if (v.size() != cols_)
        throw std::invalid_argument("appended row has wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

void FpMatrix::append_rows(const FpMatrix& other) {
    if (other.cols_ != cols_ || other.field_ != field_)
        throw std::invalid_argument("appended rows have wrong shape or field");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

namespace {

// row_r -= f * row_p on columns [from, cols)
inline void eliminate(uint32_t* row_r, const uint32_t* row_p, uint32_t f, size_t from,
                      size_t cols, Fp field) {
    for (size_t c = from; c < cols; ++c)
        row_r[c] = field.sub(row_r[c], field.mul(f, row_p[c]));
}

}  // namespace

size_t rref(FpMatrix& m, std::vector<size_t>* pivots) {
    const Fp field = m.field();
    const size_t rows = m.rows(), cols = m.cols();
    if (pivots)
        pivots->clear();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t p = rank;
        while (p < rows && m(p, col) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rank)
            for (size_t c = col; c < cols; ++c)
                std::swap(m(rank, c), m(p, c));
        uint32_t piv_inv = field.inv(m(rank, col));
        if (piv_inv != 1)
            for (size_t c = col; c < cols; ++c)
                m(rank, c) = field.mul(piv_inv, m(rank, c));
        const uint32_t* prow = m.row(rank).data();
        const bool big = rows * (cols - col) >= 1u << 15;
        (void)big;
#pragma omp parallel for schedule(static) if (big)
        for (long r = 0; r < static_cast<long>(rows); ++r) {
            if (static_cast<size_t>(r) == rank)
                continue;
            uint32_t f = m(r, col);
            if (f)
                eliminate(m.row(r).data(), prow, f, col, cols, field);
        }
        if (pivots)
            pivots->push_back(col);
        ++rank;
    }
    return rank;
}

size_t rref_serial(FpMatrix& m, std::vector<size_t>* pivots) {
    const Fp field = m.field();
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> piv;
    size_t rank = 0;
    // forward pass to row echelon form
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t p = rank;
        while (p < rows && m(p, col) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rank)
            for (size_t c = 0; c < cols; ++c)
                std::swap(m(rank, c), m(p, c));
        uint32_t piv_inv = field.inv(m(rank, col));
        for (size_t c = col; c < cols; ++c)
            m(rank, c) = field.mul(piv_inv, m(rank, c));
        for (size_t r = rank + 1; r < rows; ++r) {
            uint32_t f = m(r, col);
            if (f)
                eliminate(m.row(r).data(), m.row(rank).data(), f, col, cols, field);
        }
        piv.push_back(col);
        ++rank;
    }
    // backward pass
    for (size_t k = rank; k-- > 0;) {
        size_t col = piv[k];
        for (size_t r = 0; r < k; ++r) {
            uint32_t f = m(r, col);
            if (f)
                eliminate(m.row(r).data(), m.row(k).data(), f, col, cols, field);
        }
    }
    if (pivots)
        *pivots = std::move(piv);
    return rank;
}

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("matmul: field mismatch");
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimension mismatch");
    const Fp field = a.field();
    const uint64_t l = field.modulus();
    FpMatrix c(field, a.rows(), b.cols());
    const bool big = a.rows() * a.cols() * b.cols() >= 1u << 18;
    (void)big;
#pragma omp parallel for schedule(static) if (big)
    for (long i = 0; i < static_cast<long>(a.rows()); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
            uint64_t f = a(i, k);
            if (!f)
                continue;
            auto brow = b.row(k);
            auto crow = c.row(i);
            for (size_t j = 0; j < b.cols(); ++j)
                crow[j] = static_cast<uint32_t>((crow[j] + f * brow[j]) % l);
        }
    }
    return c;
}

FpMatrix matmul_serial(const FpMatrix& a, const FpMatrix& b) {
    if (a.field() != b.field() || a.cols() != b.rows())
        throw std::invalid_argument("matmul_serial: shape or field mismatch");
    const Fp field = a.field();
    FpMatrix c(field, a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
            uint64_t acc = 0;
            for (size_t k = 0; k < a.cols(); ++k)
                acc += static_cast<uint64_t>(a(i, k)) * b(k, j) % field.modulus();
            c(i, j) = static_cast<uint32_t>(acc % field.modulus());
        }
    return c;
}

FpMatrix transpose(const FpMatrix& m) {
    FpMatrix t(m.field(), m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            t(c, r) = m(r, c);
    return t;
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("kronecker: field mismatch");
    const Fp field = a.field();
    FpMatrix k(field, a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ++ar)
        for (size_t ac = 0; ac < a.cols(); ++ac) {
            uint32_t f = a(ar, ac);
            if (!f)
                continue;
            for (size_t br = 0; br < b.rows(); ++br)
                for (size_t bc = 0; bc < b.cols(); ++bc)
                    k(ar * b.rows() + br, ac * b.cols() + bc) = field.mul(f, b(br, bc));
        }
    return k;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
    FpMatrix out = a;
    out.append_rows(b);
    return out;
}

size_t rank(FpMatrix m) { return rref(m); }

}  // namespace koszulkit
