#pragma once

#include <stdexcept>

#include "koszulkit/milnor.hpp"
#include "koszulkit/nilpotent.hpp"

namespace koszulkit {

// Line-oriented input document. Sections in square brackets ([field],
// [generators], [relations], [slice], [group], [milnor]), one item per line,
// '#' comments. Relations are either
//     coeff-row: c11 c12 c21 c22 ...      (row-major in the tensor ordering)
// or  symbolic: x*y - y*x                 (integer coefficients, two
//                                          generator factors per term)
// Symbolic relations are sugar resolved at parse time.
struct InputDocument {
    enum class Kind { presentation, graded_slice, group, milnor_spec };

    Kind kind;
    std::optional<uint32_t> l;
    std::optional<QuadraticPresentation> presentation;
    std::optional<PresentationSide> slice_side;
    std::optional<GradedSliceAlgebra> slice_algebra;
    std::optional<GradedSliceCoalgebra> slice_coalgebra;
    std::optional<FiniteGroupTable> group;
    std::optional<RationalSymbolAlgebraSpec> milnor;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

InputDocument parse_document(const std::string& text);

// canonical serialization; parse(serialize(doc)) reproduces the document
std::string serialize_document(const InputDocument& doc);

bool documents_equal(const InputDocument& a, const InputDocument& b);

const char* kind_name(InputDocument::Kind kind);

}  // namespace koszulkit
