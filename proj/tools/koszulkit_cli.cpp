// Command-line front end: parses an input document, dispatches to the
// engines, prints a deterministic report.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "koszulkit/run.hpp"

using namespace koszulkit;

namespace {

InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input document '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Koszulity of quadratic algebras over F_l"};
    app.require_subcommand(1);

    RunOptions options;
    std::string format = "text";
    std::string doc_path;

    auto add_common = [&](CLI::App* sub, bool with_doc) {
        sub->add_option("--max-degree", options.max_degree, "internal degree bound")
            ->capture_default_str();
        sub->add_option("--format", format, "text | structured")->capture_default_str();
        if (with_doc)
            sub->add_option("document", doc_path, "input document path")->required();
    };

    CLI::App* homology = app.add_subcommand("homology", "bigraded bar homology of {V,R}");
    add_common(homology, true);
    CLI::App* cohomology =
        app.add_subcommand("cohomology", "bigraded cobar cohomology of <V,R> or H^*(F_l(G))");
    add_common(cohomology, true);
    CLI::App* koszul = app.add_subcommand("koszul", "Koszulity of a quadratic presentation");
    add_common(koszul, true);
    koszul->add_option("--criterion", options.criterion, "homology | distributivity | both")
        ->capture_default_str();
    CLI::App* dual_cmd = app.add_subcommand("dual", "quadratic duality of a presentation");
    add_common(dual_cmd, true);
    CLI::App* quadratic_part =
        app.add_subcommand("quadratic-part", "qA or qC with comparison maps");
    add_common(quadratic_part, true);
    quadratic_part->add_option("--side", options.side, "algebra | coalgebra")
        ->capture_default_str();
    CLI::App* pbw = app.add_subcommand("pbw", "commutative PBW-basis test");
    add_common(pbw, true);
    pbw->add_option("--order", options.order, "generator order, e.g. \"x<y<z\"");
    pbw->add_option("--parity", options.parity, "commutative | skew")->capture_default_str();
    CLI::App* group =
        app.add_subcommand("group-coalgebra", "augmentation filtration of F_l(G)");
    add_common(group, true);
    group->add_flag("--harness", options.harness, "check the quadraticity-transfer hypotheses");
    CLI::App* milnor = app.add_subcommand("milnor-q", "truncated K^M(Q)⊗F_l and its PBW basis");
    add_common(milnor, false);
    milnor->add_option("document", doc_path, "optional milnor-spec document");
    milnor->add_option("--l", options.milnor_l, "the coefficient prime")->capture_default_str();
    milnor->add_option("--pool-size", options.pool_size, "number of pool primes")
        ->capture_default_str();
    CLI::App* ff = app.add_subcommand("finite-field", "the K^M(F_q)⊗F_l example");
    add_common(ff, false);
    ff->add_option("--q", options.ff_q, "prime power order of the field")->capture_default_str();
    ff->add_option("--l", options.ff_l, "the coefficient prime")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        std::optional<InputDocument> doc;
        if (!doc_path.empty())
            doc = load_document(doc_path);
        auto t0 = std::chrono::steady_clock::now();
        Report report = run_command(sub->get_name(), options, doc ? &*doc : nullptr);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (format == "structured")
            std::cout << report.structured();
        else if (format == "text")
            std::cout << report.text(ms);
        else
            throw std::invalid_argument("format must be 'text' or 'structured'");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
