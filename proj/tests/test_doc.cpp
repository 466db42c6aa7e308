#include <doctest.h>

#include "koszulkit/run.hpp"

using namespace koszulkit;

TEST_CASE("parsing a minimal presentation") {
    InputDocument doc = parse_document(
        "# commutative relations on two generators\n"
        "[field]\n"
        "l = 3\n"
        "[generators]\n"
        "x\n"
        "y\n"
        "[relations]\n"
        "symbolic: x*y - y*x\n");
    CHECK(doc.kind == InputDocument::Kind::presentation);
    REQUIRE(doc.presentation.has_value());
    CHECK(doc.presentation->dim_v() == 2);
    CHECK(doc.presentation->relations.dim() == 1);
    CHECK(doc.presentation->relations == polynomial_presentation(Fp(3), 2).relations);
}

TEST_CASE("relation parsing errors") {
    // unknown generator named in a relation
    CHECK_THROWS_WITH_AS(parse_document("[field]\nl = 3\n[generators]\nx\ny\n"
                                        "[relations]\nsymbolic: x*z\n"),
                         "line 7: unknown generator 'z'", ParseError);
    // non-prime l
    CHECK_THROWS_AS(parse_document("[field]\nl = 4\n[generators]\nx\n"), ParseError);
    // duplicate keys
    CHECK_THROWS_AS(parse_document("[field]\nl = 3\nl = 5\n[generators]\nx\n"), ParseError);
    // wrong coeff-row length
    CHECK_THROWS_AS(parse_document("[field]\nl = 2\n[generators]\nx\ny\n"
                                   "[relations]\ncoeff-row: 1 0\n"),
                    ParseError);
    // terms must be quadratic
    CHECK_THROWS_AS(parse_document("[field]\nl = 2\n[generators]\nx\n"
                                   "[relations]\nsymbolic: x\n"),
                    ParseError);
}

TEST_CASE("coefficient rows and symbolic sugar agree") {
    InputDocument a = parse_document("[field]\nl = 5\n[generators]\nx\ny\n"
                                     "[relations]\nsymbolic: 2*x*y + 3*y*x\n");
    InputDocument b = parse_document("[field]\nl = 5\n[generators]\nx\ny\n"
                                     "[relations]\ncoeff-row: 0 2 3 0\n");
    CHECK(documents_equal(a, b));
}

TEST_CASE("group documents") {
    InputDocument doc = parse_document(
        "[field]\nl = 2\n"
        "[group]\n"
        "elements = e a b c\n"
        "row = e a b c\n"
        "row = a b c e\n"
        "row = b c e a\n"
        "row = c e a b\n");
    CHECK(doc.kind == InputDocument::Kind::group);
    REQUIRE(doc.group.has_value());
    CHECK(doc.group->order() == 4);
    CHECK(doc.group->identity == 0);

    InputDocument builtin = parse_document("[field]\nl = 2\n[group]\nbuiltin = cyclic 4\n");
    CHECK(builtin.group->table == doc.group->table);

    // a non-group table is rejected
    CHECK_THROWS_AS(parse_document("[group]\nelements = e a\nrow = e a\nrow = a a\n"),
                    std::invalid_argument);
}

TEST_CASE("slice and milnor documents") {
    InputDocument tp = parse_document("[field]\nl = 2\n[slice]\nside = algebra\n"
                                      "builtin = truncated-polynomial 3\n");
    CHECK(tp.kind == InputDocument::Kind::graded_slice);
    REQUIRE(tp.slice_algebra.has_value());
    CHECK(tp.slice_algebra->dims() == std::vector<size_t>{1, 1, 1, 0, 0});

    InputDocument mil = parse_document("[milnor]\nl = 2\npool-size = 4\n");
    CHECK(mil.kind == InputDocument::Kind::milnor_spec);
    CHECK(mil.milnor->pool_size == 4);

    // mixing kinds is rejected
    CHECK_THROWS_AS(parse_document("[field]\nl = 2\n[generators]\nx\n"
                                   "[group]\nbuiltin = cyclic 2\n"),
                    ParseError);
}

TEST_CASE("serialize round trips") {
    std::vector<std::string> sources{
        "[field]\nl = 3\n[generators]\nx\ny\n[relations]\nsymbolic: x*y - y*x\n",
        "[field]\nl = 2\n[generators]\nu\nv\n[relations]\ncoeff-row: 1 1 0 0\n"
        "coeff-row: 0 0 1 1\n",
        "[field]\nl = 2\n[group]\nbuiltin = quaternion 8\n",
        "[milnor]\nl = 3\npool-size = 4\n",
        "[field]\nl = 2\n[slice]\nside = algebra\nbuiltin = truncated-polynomial 3\n",
    };
    for (const std::string& src : sources) {
        InputDocument doc = parse_document(src);
        InputDocument again = parse_document(serialize_document(doc));
        CHECK(documents_equal(doc, again));
    }
}

TEST_CASE("run_command dispatch") {
    InputDocument sym = parse_document("[field]\nl = 3\n[generators]\nx\ny\n"
                                       "[relations]\nsymbolic: x*y - y*x\n");
    RunOptions opt;

    Report koszul = run_command("koszul", opt, &sym);
    std::string s = koszul.structured();
    CHECK(s.find("result.homology.koszul = true") != std::string::npos);
    CHECK(s.find("result.criteria_agree = true") != std::string::npos);

    Report hom = run_command("homology", opt, &sym);
    CHECK(hom.structured().find("result.h.diagonal_only = true") != std::string::npos);

    Report pbw = run_command("pbw", opt, &sym);
    CHECK(pbw.structured().find("result.is_pbw = true") != std::string::npos);

    opt.milnor_l = 2;
    opt.pool_size = 4;
    Report mil = run_command("milnor-q", opt, nullptr);
    CHECK(mil.structured().find("result.s2 = {2,3} {2,5} {3,7} {-1,-1}") != std::string::npos);
    CHECK(mil.structured().find("result.is_pbw = true") != std::string::npos);

    InputDocument v4 = parse_document("[field]\nl = 2\n[group]\nbuiltin = elementary-abelian 2 2\n");
    opt.harness = true;
    Report grp = run_command("group-coalgebra", opt, &v4);
    CHECK(grp.structured().find("result.nilpotent = true") != std::string::npos);
    CHECK(grp.structured().find("result.harness.endpoint_dims_equal = true") !=
          std::string::npos);

    opt.ff_q = 7;
    opt.ff_l = 3;
    Report ff = run_command("finite-field", opt, nullptr);
    CHECK(ff.structured().find("result.koszul = true") != std::string::npos);

    CHECK_THROWS_AS(run_command("nope", opt, nullptr), std::invalid_argument);
}

TEST_CASE("structured reports are deterministic") {
    InputDocument sym = parse_document("[field]\nl = 3\n[generators]\nx\ny\n"
                                       "[relations]\nsymbolic: x*y - y*x\n");
    RunOptions opt;
    std::string a = run_command("koszul", opt, &sym).structured();
    std::string b = run_command("koszul", opt, &sym).structured();
    CHECK(a == b);
}
