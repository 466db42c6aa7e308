#include "koszulkit/complex.hpp"

#include <stdexcept>
#include <string>

namespace koszulkit {

FiniteComplex::FiniteComplex(Fp field, std::vector<size_t> dims, std::vector<LinearMap> diffs)
    : field_(field), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (dims_.empty())
        throw std::invalid_argument("complex needs at least one space");
    if (diffs_.size() + 1 != dims_.size())
        throw std::invalid_argument("complex needs one differential per consecutive pair");
    for (size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].domain_dim() != dims_[k] || diffs_[k].codomain_dim() != dims_[k + 1])
            throw std::invalid_argument("differential " + std::to_string(k) +
                                        " has mismatched shape");
        if (diffs_[k].field() != field_)
            throw std::invalid_argument("differential field mismatch");
    }
    for (size_t k = 0; k + 1 < diffs_.size(); ++k)
        if (!compose(diffs_[k + 1], diffs_[k]).is_zero())
            throw std::invalid_argument("differentials at positions " + std::to_string(k) +
                                        "," + std::to_string(k + 1) + " do not compose to zero");
}

size_t FiniteComplex::homology_dim(size_t k) const {
    size_t rank_out = k < diffs_.size() ? rank(diffs_[k].matrix) : 0;
    size_t rank_in = k > 0 ? rank(diffs_[k - 1].matrix) : 0;
    return dims_[k] - rank_out - rank_in;
}

Subspace FiniteComplex::cycles(size_t k) const {
    if (k < diffs_.size())
        return kernel(diffs_[k]);
    return Subspace::full(field_, dims_[k]);
}

Subspace FiniteComplex::boundaries(size_t k) const {
    if (k == 0)
        return Subspace(field_, dims_[0]);
    return image(diffs_[k - 1]);
}

int64_t FiniteComplex::euler_characteristic() const {
    int64_t chi = 0;
    for (size_t k = 0; k < dims_.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<int64_t>(dims_[k]);
    return chi;
}

}  // namespace koszulkit
