#include "koszulkit/run.hpp"

#include <sstream>
#include <stdexcept>

namespace koszulkit {

namespace {

const InputDocument& need_doc(const InputDocument* doc, const char* command) {
    if (!doc)
        throw std::invalid_argument(std::string(command) + " needs an input document");
    return *doc;
}

const QuadraticPresentation& need_presentation(const InputDocument& doc, const char* command) {
    if (doc.kind != InputDocument::Kind::presentation)
        throw std::invalid_argument(std::string(command) + " needs a presentation document");
    return *doc.presentation;
}

void add_table(Report& report, const std::string& prefix, const BigradedTable& table) {
    for (const auto& [key, dim] : table.entries())
        report.add(prefix + "." + std::to_string(key.first) + "." + std::to_string(key.second),
                   dim);
    report.add(prefix + ".diagonal_only", table.diagonal_only());
}

void add_verdict(Report& report, const std::string& prefix, const KoszulVerdict& v) {
    report.add(prefix + ".koszul", v.koszul);
    report.add(prefix + ".up_to_degree", static_cast<int64_t>(v.up_to_degree));
    if (!v.koszul) {
        report.add(prefix + ".failure_degree", static_cast<int64_t>(v.failure_degree));
        if (!v.witness_subcollection.empty()) {
            std::ostringstream w;
            for (size_t i = 0; i < v.witness_subcollection.size(); ++i)
                w << (i ? " " : "") << v.witness_subcollection[i];
            report.add(prefix + ".witness.subcollection", w.str());
        }
        if (v.witness_bidegree)
            report.add(prefix + ".witness.bidegree",
                       std::to_string(v.witness_bidegree->first) + " " +
                           std::to_string(v.witness_bidegree->second));
    }
}

void add_quadratic_part(Report& report, const QuadraticPartResult& qp) {
    report.add("result.dim_v", qp.presentation.dim_v());
    report.add("result.dim_r", qp.presentation.relations.dim());
    for (size_t r = 0; r < qp.presentation.relations.dim(); ++r) {
        std::ostringstream row;
        for (size_t c = 0; c < qp.presentation.relations.ambient_dim(); ++c)
            row << (c ? " " : "") << qp.presentation.relations.basis()(r, c);
        report.add("result.relation." + std::to_string(r), row.str());
    }
    report.add("result.low_degree_ok", qp.low_degree_ok);
    for (const DegreeComparison& cmp : qp.comparisons) {
        std::string key = "result.compare." + std::to_string(cmp.degree);
        report.add(key + ".dims", std::to_string(cmp.dim_from) + " -> " +
                                      std::to_string(cmp.dim_to));
        report.add(key + ".injective", cmp.injective);
        report.add(key + ".surjective", cmp.surjective);
    }
}

OrderedGenerators parse_order(const std::string& text, const QuadraticPresentation& p,
                              const std::string& parity) {
    OrderedGenerators order;
    order.parity = parity == "skew" ? Parity::skew : Parity::commutative;
    if (parity != "skew" && parity != "commutative")
        throw std::invalid_argument("parity must be 'commutative' or 'skew'");
    if (text.empty()) {
        for (size_t i = 0; i < p.dim_v(); ++i)
            order.ranks.push_back(i);
        return order;
    }
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
        if (c == '<') {
            names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    names.push_back(cur);
    if (names.size() != p.dim_v())
        throw std::invalid_argument("order must list every generator exactly once");
    std::vector<bool> used(p.dim_v(), false);
    for (const std::string& n : names) {
        bool found = false;
        for (size_t i = 0; i < p.dim_v(); ++i)
            if (p.generators[i] == n) {
                if (used[i])
                    throw std::invalid_argument("generator '" + n + "' repeated in order");
                used[i] = true;
                order.ranks.push_back(i);
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("unknown generator '" + n + "' in order");
    }
    return order;
}

}  // namespace

Report run_command(const std::string& command, const RunOptions& options,
                   const InputDocument* doc) {
    Report report(command);
    const int n_max = options.max_degree;
    if (doc)
        report.add("input.kind", kind_name(doc->kind));
    report.add("params.max_degree", static_cast<int64_t>(n_max));

    if (command == "homology") {
        const InputDocument& d = need_doc(doc, "homology");
        if (d.kind == InputDocument::Kind::graded_slice &&
            d.slice_side == PresentationSide::algebra) {
            const GradedSliceAlgebra& a = *d.slice_algebra;
            int bound = std::min(n_max, a.n_max());
            add_table(report, "result.h", homology_table(a, bound));
            QuadraticVerdict v = quadratic_verdict(a, bound);
            report.add("result.one_generated", v.low_degree_generated);
            report.add("result.quadratic", v.quadratic);
            if (!v.quadratic)
                report.add("result.first_failure_degree",
                           static_cast<int64_t>(v.first_failure_degree));
            return report;
        }
        const QuadraticPresentation& p = need_presentation(d, "homology");
        GradedSliceAlgebra a = build_algebra_slice(p, n_max);
        add_table(report, "result.h", homology_table(a, n_max));
        QuadraticVerdict v = quadratic_verdict(a, n_max);
        report.add("result.one_generated", v.low_degree_generated);
        report.add("result.quadratic", v.quadratic);
        return report;
    }

    if (command == "cohomology") {
        const InputDocument& d = need_doc(doc, "cohomology");
        if (d.kind == InputDocument::Kind::group) {
            if (!d.l)
                throw std::invalid_argument("group cohomology needs a [field] section");
            AugmentedCoalgebraData c = group_coalgebra(*d.group, Fp(*d.l));
            report.add_dims("result.h_dims", cobar_cohomology_dims(c, n_max));
            return report;
        }
        if (d.kind == InputDocument::Kind::graded_slice &&
            d.slice_side == PresentationSide::coalgebra) {
            const GradedSliceCoalgebra& c = *d.slice_coalgebra;
            int bound = c.complete() ? n_max : std::min(n_max, c.n_max());
            add_table(report, "result.h", cohomology_table(c, bound));
            report.add("result.one_cogenerated", one_cogenerated_verdict(c, bound));
            return report;
        }
        const QuadraticPresentation& p = need_presentation(d, "cohomology");
        GradedSliceCoalgebra c = build_coalgebra_slice(p, n_max);
        add_table(report, "result.h", cohomology_table(c, n_max));
        QuadraticVerdict v = quadratic_verdict(c, n_max);
        report.add("result.one_cogenerated", v.low_degree_generated);
        report.add("result.quadratic", v.quadratic);
        return report;
    }

    if (command == "koszul") {
        const QuadraticPresentation& p = need_presentation(need_doc(doc, "koszul"), "koszul");
        report.add("params.criterion", options.criterion);
        if (options.criterion == "homology") {
            add_verdict(report, "result.homology", koszul_by_homology(p, n_max));
        } else if (options.criterion == "distributivity") {
            add_verdict(report, "result.distributivity", koszul_by_distributivity(p, n_max));
        } else if (options.criterion == "both") {
            KoszulVerdict kh = koszul_by_homology(p, n_max);
            KoszulVerdict kd = koszul_by_distributivity(p, n_max);
            add_verdict(report, "result.homology", kh);
            add_verdict(report, "result.distributivity", kd);
            bool agree = kh.koszul == kd.koszul && kh.failure_degree == kd.failure_degree;
            report.add("result.criteria_agree", agree);
            if (!agree)
                throw std::logic_error("Koszulity criteria disagree: this is a bug, "
                                       "not a property of the input");
            // third route: the direct lattice oracle, degree by degree; an
            // inconclusive closure is a warning, not an error
            for (int n = 2; n <= n_max; ++n) {
                SubspaceCollection col = relation_collection(p, n);
                DirectVerdict direct = is_distributive_direct(col);
                std::string key = "result.direct_oracle." + std::to_string(n);
                if (direct == DirectVerdict::inconclusive) {
                    report.add(key, "inconclusive");
                    report.add("warning.direct_oracle",
                               "lattice closure bound exceeded at degree " + std::to_string(n));
                    break;
                }
                bool distributive = direct == DirectVerdict::distributive;
                report.add(key, distributive ? "distributive" : "not-distributive");
                bool expected = kd.koszul || n < kd.failure_degree;
                if (distributive != expected)
                    throw std::logic_error("direct distributivity oracle disagrees with the "
                                           "B_* recursion");
            }
        } else {
            throw std::invalid_argument("criterion must be homology, distributivity or both");
        }
        return report;
    }

    if (command == "dual") {
        const QuadraticPresentation& p = need_presentation(need_doc(doc, "dual"), "dual");
        TaggedPresentation t{p, PresentationSide::algebra};
        TaggedPresentation flipped = dual(t);
        report.add("result.side",
                   flipped.side == PresentationSide::coalgebra ? "coalgebra" : "algebra");
        std::vector<size_t> adims, cdims;
        for (int n = 0; n <= n_max; ++n) {
            adims.push_back(algebra_component(p, n).dim());
            cdims.push_back(coalgebra_component(p, n).dim());
        }
        report.add_dims("result.algebra_dims", adims);
        report.add_dims("result.coalgebra_dims", cdims);
        return report;
    }

    if (command == "quadratic-part") {
        const InputDocument& d = need_doc(doc, "quadratic-part");
        if (d.kind == InputDocument::Kind::graded_slice) {
            if (d.slice_side == PresentationSide::algebra)
                add_quadratic_part(report, quadratic_part_of_algebra(*d.slice_algebra));
            else
                add_quadratic_part(report, quadratic_part_of_coalgebra(*d.slice_coalgebra));
            return report;
        }
        const QuadraticPresentation& p = need_presentation(d, "quadratic-part");
        report.add("params.side", options.side);
        if (options.side == "algebra")
            add_quadratic_part(report, quadratic_part_of_algebra(build_algebra_slice(p, n_max)));
        else if (options.side == "coalgebra")
            add_quadratic_part(report,
                               quadratic_part_of_coalgebra(build_coalgebra_slice(p, n_max)));
        else
            throw std::invalid_argument("side must be 'algebra' or 'coalgebra'");
        return report;
    }

    if (command == "pbw") {
        const InputDocument& d = need_doc(doc, "pbw");
        GradedSliceAlgebra a(Fp(2), {1}, {});
        OrderedGenerators order;
        if (d.kind == InputDocument::Kind::graded_slice &&
            d.slice_side == PresentationSide::algebra) {
            a = *d.slice_algebra;
            for (size_t i = 0; i < a.dim(1); ++i)
                order.ranks.push_back(i);
            order.parity = options.parity == "skew" ? Parity::skew : Parity::commutative;
        } else {
            const QuadraticPresentation& p = need_presentation(d, "pbw");
            a = build_algebra_slice(p, std::max(n_max, 3));
            order = parse_order(options.order, p, options.parity);
        }
        PbwReport r = pbw_check(a, order, std::max(n_max, 3));
        report.add("params.parity",
                   r.effective_parity == Parity::skew ? "skew" : "commutative");
        auto add_monomials = [&](const std::string& key, const std::vector<Monomial>& ms) {
            std::ostringstream line;
            for (size_t i = 0; i < ms.size(); ++i) {
                line << (i ? " " : "");
                for (size_t g = 0; g < ms[i].size(); ++g)
                    line << (g ? "," : "") << ms[i][g];
            }
            report.add(key, line.str());
        };
        add_monomials("result.s2", r.s2);
        add_monomials("result.s3", r.s3);
        add_monomials("result.predicted_s3", r.predicted_s3);
        report.add("result.is_pbw", r.is_pbw);
        report.add("result.quadratic", r.quadratic);
        report.add("result.certified_koszul", r.certified_koszul);
        if (r.degree4_matches)
            report.add("result.degree4_matches", *r.degree4_matches);
        return report;
    }

    if (command == "group-coalgebra") {
        const InputDocument& d = need_doc(doc, "group-coalgebra");
        if (d.kind != InputDocument::Kind::group)
            throw std::invalid_argument("group-coalgebra needs a group document");
        if (!d.l)
            throw std::invalid_argument("group-coalgebra needs a [field] section");
        Fp field(*d.l);
        AugmentedCoalgebra c(group_coalgebra(*d.group, field));
        report.add("result.dim", c.dim());
        Filtration filt = augmentation_filtration(c);
        std::vector<size_t> step_dims;
        for (const Subspace& s : filt.steps)
            step_dims.push_back(s.dim());
        report.add_dims("result.filtration_dims", step_dims);
        report.add("result.nilpotent", filt.full);
        report.add("result.filtration_respects_comult",
                   filtration_respects_comult(c, filt));
        if (options.harness && !filt.full)
            throw std::invalid_argument("the cohomology harness needs a nilpotent coalgebra");
        if (filt.full) {
            GradedSliceCoalgebra gr = associated_graded(c);
            report.add_dims("result.gr_dims", gr.dims());
            report.add("result.gr_one_cogenerated", one_cogenerated_verdict(gr, gr.n_max()));
            report.add_dims("result.h_dims", cobar_cohomology_dims(c.data(), n_max));
            if (options.harness) {
                CohomologyHarnessReport h = cohomology_harness(c, n_max);
                report.add("result.harness.hypothesis1", h.hypothesis1);
                report.add("result.harness.hypothesis2", h.hypothesis2);
                report.add("result.harness.hypothesis3", h.hypothesis3);
                report.add_dims("result.harness.h_dims", h.h_dims);
                report.add_dims("result.harness.h_gr_dims", h.h_gr_dims);
                report.add("result.harness.endpoint_dims_equal", h.endpoint_dims_equal);
                report.add("result.harness.h_quadratic", h.h_quadratic_through_n_max);
            }
        }
        return report;
    }

    if (command == "milnor-q") {
        RationalSymbolAlgebraSpec spec =
            doc && doc->milnor ? *doc->milnor
                               : RationalSymbolAlgebraSpec(options.milnor_l, options.pool_size);
        report.add("params.l", static_cast<int64_t>(spec.l));
        report.add("params.pool_size", spec.pool_size);
        MilnorReport r = verify_pbw_milnor(spec, std::max(n_max, 3));
        std::ostringstream q, rr;
        for (size_t i = 0; i < r.split.q_set.size(); ++i)
            q << (i ? " " : "") << r.split.q_set[i];
        for (size_t i = 0; i < r.split.r_set.size(); ++i)
            rr << (i ? " " : "") << r.split.r_set[i];
        report.add("result.q_set", q.str());
        report.add("result.r_set", rr.str());
        for (const auto& [rp, qp] : r.split.q_of_r)
            report.add("result.q_of_r." + std::to_string(rp), static_cast<int64_t>(qp));
        std::ostringstream s2;
        for (size_t i = 0; i < r.pbw.s2.size(); ++i)
            s2 << (i ? " " : "") << monomial_symbol_string(r.pbw.s2[i], r.generators, r.order);
        report.add("result.s2", s2.str());
        report.add("result.is_pbw", r.pbw.is_pbw);
        report.add("result.certified_koszul", r.pbw.certified_koszul);
        report.add("result.s2_matches_prediction", r.s2_matches_prediction);
        report.add("result.symbol_identities_ok", r.symbol_identities_ok);
        return report;
    }

    if (command == "finite-field") {
        int64_t q = options.ff_q;
        int64_t p = 0, k = 0;
        for (int64_t cand = 2; cand <= q; ++cand)
            if (is_prime(static_cast<uint32_t>(cand)) && q % cand == 0) {
                p = cand;
                int64_t m = q;
                while (m % p == 0) {
                    m /= p;
                    ++k;
                }
                if (m != 1)
                    throw std::invalid_argument("q must be a prime power");
                break;
            }
        if (p == 0)
            throw std::invalid_argument("q must be a prime power");
        FiniteFieldExample ex = finite_field_example(p, k, options.ff_l);
        report.add("params.q", ex.q);
        report.add("params.l", static_cast<int64_t>(ex.l));
        report.add("result.a1_dim", ex.a1_dim);
        report.add("result.koszul", ex.koszul);
        return report;
    }

    throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace koszulkit
