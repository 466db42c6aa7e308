#pragma once

#include "koszulkit/linear_map.hpp"

namespace koszulkit {

// A finite complex F^{d_0} -> F^{d_1} -> ... -> F^{d_n} with differentials
// diffs[k] : F^{d_k} -> F^{d_{k+1}}. Consecutive differentials must compose
// to zero; this is checked on construction.
class FiniteComplex {
public:
    FiniteComplex(Fp field, std::vector<size_t> dims, std::vector<LinearMap> diffs);

    Fp field() const { return field_; }
    size_t length() const { return dims_.size(); }
    size_t dim(size_t k) const { return dims_[k]; }
    const std::vector<size_t>& dims() const { return dims_; }
    const LinearMap& differential(size_t k) const { return diffs_[k]; }

    size_t homology_dim(size_t k) const;
    Subspace cycles(size_t k) const;      // ker of the outgoing differential
    Subspace boundaries(size_t k) const;  // im of the incoming differential

    // alternating sum of space dims equals alternating sum of homology dims
    int64_t euler_characteristic() const;

private:
    Fp field_;
    std::vector<size_t> dims_;
    std::vector<LinearMap> diffs_;
};

}  // namespace koszulkit
