#include <doctest.h>

#include <string>

#include "nullsolve/io.hpp"

using namespace nullsolve;

namespace {

template <typename Parse>
void check_position(Parse parse, const std::string& text, int line, int col) {
    try {
        parse(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == line);
        CHECK(e.column == col);
    }
}

} // namespace

TEST_CASE("graph files round-trip") {
    const std::string text =
        "# a square with a chord\n"
        "graph 4 5\n"
        "1 2\n"
        "2 3  # comments allowed after fields\n"
        "3 4\n"
        "1 4\n"
        "1 3\n"
        "forbid 2: 1 3\n";
    GraphFile gf = parse_graph_file(text);
    CHECK(gf.g.n == 4);
    CHECK(gf.g.edges.size() == 5);
    CHECK(gf.forbid.at(2) == std::set<std::int64_t>{1, 3});
    CHECK(parse_graph_file(serialize_graph_file(gf)) == gf);
    CHECK(serialize_graph_file(parse_graph_file("graph 2 1\n1 2\n")) ==
          "graph 2 1\n1 2\n");
}

TEST_CASE("olson files round-trip") {
    const std::string text =
        "olson 2 2 3\n"
        "d: 2 1\n"
        "Q: 0 2\n"
        "Q: 0\n"
        "1 3 2\n"
        "1 1 0\n";
    OlsonInstance inst = parse_olson_file(text);
    CHECK(inst.p() == 2);
    CHECK(inst.n() == 2);
    CHECK(inst.m() == 3);
    CHECK(inst.Q()[0] == ResidueSet(2, 2, {0, 2}));
    CHECK(inst.a()[1] == std::vector<std::int64_t>{1, 1, 0});
    CHECK(parse_olson_file(serialize_olson_file(inst)) == inst);
}

TEST_CASE("genpoly files round-trip") {
    const std::string text =
        "genpoly 2 1\n"
        "block 2\n"
        "x1\n"
        "x2 + 1\n"
        "fullpairs:\n"
        "leftover: 1 1 1\n";
    GeneralFormPoly inst = parse_genpoly_file(text);
    CHECK(inst.m == 2);
    REQUIRE(inst.blocks.size() == 1);
    REQUIRE(inst.blocks[0].polys.size() == 2);
    CHECK(inst.blocks[0].polys[0] == ExplicitPoly{{0b01}});
    CHECK(inst.blocks[0].polys[1] == ExplicitPoly{{0b10, 0}});
    REQUIRE(inst.leftover.has_value());
    CHECK(*inst.leftover == TermTuple{0, {0, 0}});
    CHECK(parse_genpoly_file(serialize_genpoly_file(inst)) == inst);
    // without the section the unique full occurrence is designated
    GeneralFormPoly bare =
        parse_genpoly_file("genpoly 2 1\nblock 2\nx1\nx2 + 1\n");
    CHECK(bare == inst);
    // empty polynomial spelled "0"
    GeneralFormPoly zero =
        parse_genpoly_file("genpoly 2 2\nblock 1\n0\nblock 1\nx1x2\n");
    CHECK(zero.blocks[0].polys[0].monomials.empty());
    CHECK(parse_genpoly_file(serialize_genpoly_file(zero)) == zero);
}

TEST_CASE("parse errors carry one-based positions") {
    check_position(parse_graph_file, "graph x 3\n", 1, 7);
    check_position(parse_graph_file, "graph 2 1\n1 2\nfrobid 1: 1\n", 3, 1);
    check_position(parse_olson_file, "olson 2 1 2\nd: 1\nQ: 0\n1 oops\n", 4, 3);
    check_position(parse_genpoly_file, "genpoly 2 1\nblock 1\nx1 + y2\n", 3, 6);
    check_position(parse_olson_file, "", 1, 1);
}

TEST_CASE("semantic violations become positioned parse errors") {
    check_position(parse_graph_file, "graph 2 1\n1 3\n", 2, 3);
    check_position(parse_olson_file, "olson 2 1 1\nd: 1\nQ: 1\n1\n", 4, 1);
    try {
        parse_olson_file("olson 2 1 1\nd: 1\nQ: 1\n1\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("must contain 0") != std::string::npos);
    }
}
