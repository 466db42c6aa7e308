#pragma once

// Deterministic random corpus shared by the test suites: quadratic
// presentations over F_2 and F_3 with dim V <= 3 and small relation spaces.

#include <random>
#include <vector>

#include "koszulkit/quadratic.hpp"

namespace corpus {

inline koszulkit::QuadraticPresentation random_presentation(uint32_t l, size_t dim_v,
                                                            size_t rel_rows,
                                                            std::mt19937& rng) {
    koszulkit::Fp f(l);
    std::uniform_int_distribution<uint32_t> dist(0, l - 1);
    koszulkit::FpMatrix rel(f, rel_rows, dim_v * dim_v);
    for (size_t r = 0; r < rel_rows; ++r)
        for (size_t c = 0; c < dim_v * dim_v; ++c)
            rel(r, c) = dist(rng);
    std::vector<std::string> names;
    for (size_t i = 0; i < dim_v; ++i)
        names.push_back(std::string(1, static_cast<char>('x' + i)));
    return {f, names, koszulkit::Subspace::from_rows(std::move(rel))};
}

// the standard corpus: >= 30 random presentations over F_2/F_3, dim V <= 3
inline std::vector<koszulkit::QuadraticPresentation> standard(size_t count = 32,
                                                              uint32_t seed = 20240601) {
    std::mt19937 rng(seed);
    std::vector<koszulkit::QuadraticPresentation> out;
    const uint32_t fields[2] = {2, 3};
    while (out.size() < count) {
        uint32_t l = fields[rng() % 2];
        size_t dim_v = 1 + rng() % 3;
        size_t rel_rows = rng() % std::min<size_t>(dim_v * dim_v + 1, 5);
        out.push_back(random_presentation(l, dim_v, rel_rows, rng));
    }
    return out;
}

}  // namespace corpus
