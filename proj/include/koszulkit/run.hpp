#pragma once

#include "koszulkit/doc.hpp"
#include "koszulkit/report.hpp"

namespace koszulkit {

struct RunOptions {
    int max_degree = 4;
    std::string criterion = "both";  // koszul: homology | distributivity | both
    std::string side = "algebra";    // quadratic-part on presentations
    std::string order;               // pbw: e.g. "x<y<z"; empty = generator order
    std::string parity = "commutative";  // pbw: commutative | skew
    bool harness = false;                // group-coalgebra: run the hypothesis harness
    uint32_t milnor_l = 2;               // milnor-q without a document
    size_t pool_size = 4;
    int64_t ff_q = 7;  // finite-field: the prime power q
    uint32_t ff_l = 3;
};

// Dispatches a CLI command. Engine errors surface as exceptions; negative
// verdicts are ordinary report content.
Report run_command(const std::string& command, const RunOptions& options,
                   const InputDocument* doc);

}  // namespace koszulkit
