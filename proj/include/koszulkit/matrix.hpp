#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "koszulkit/fp.hpp"

namespace koszulkit {

// Dense row-major matrix over F_l. Every matrix carries its field; entries
// are canonical residues in [0, l).
class FpMatrix {
public:
    FpMatrix(Fp field, size_t rows, size_t cols);
    FpMatrix(Fp field, size_t rows, size_t cols, std::vector<uint32_t> data);

    static FpMatrix identity(Fp field, size_t n);
    // Convenience for tests: values are reduced mod l.
    static FpMatrix from_rows(Fp field, size_t cols,
                              std::initializer_list<std::initializer_list<int64_t>> rows);

    Fp field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    uint32_t& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }

    std::span<const uint32_t> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<uint32_t> row(size_t r) { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const uint32_t> v);
    void append_rows(const FpMatrix& other);

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.data_ == b.data_;
    }

private:
    Fp field_;
    size_t rows_, cols_;
    std::vector<uint32_t> data_;
};

// In-place Gauss-Jordan reduction to reduced row echelon form. Returns the
// rank; zero rows end up at the bottom. Pivot columns are reported through
// `pivots` when given. The production version parallelizes the elimination
// loop with OpenMP; rref_serial is the plain reference kept for testing.
size_t rref(FpMatrix& m, std::vector<size_t>* pivots = nullptr);
size_t rref_serial(FpMatrix& m, std::vector<size_t>* pivots = nullptr);

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b);
FpMatrix matmul_serial(const FpMatrix& a, const FpMatrix& b);

FpMatrix transpose(const FpMatrix& m);
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
size_t rank(FpMatrix m);

}  // namespace koszulkit
