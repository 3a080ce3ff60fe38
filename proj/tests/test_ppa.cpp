#include <doctest.h>

#include <string>
#include <vector>

#include "nullsolve/ppa.hpp"

using namespace nullsolve;

namespace {

// f = x1 (x2 + 1) with its unique full occurrence designated
GeneralFormPoly worked() {
    GeneralFormPoly inst;
    inst.m = 2;
    inst.blocks = {Block{{ExplicitPoly{{0b01}}, ExplicitPoly{{0b10, 0}}}}};
    inst.leftover = TermTuple{0, {0, 0}};
    return inst;
}

} // namespace

TEST_CASE("ExplicitPoly value and degree") {
    ExplicitPoly p{{0b11, 0b01, 0b01}};
    CHECK(p.degree() == 2);
    CHECK(p.value_at(0b01) == 0);  // the duplicate x1 cancels
    CHECK(p.value_at(0b11) == 1);  // x1 x2 + x1 + x1
    CHECK(ExplicitPoly{}.degree() == 0);
    CHECK(ExplicitPoly{}.value_at(0b11) == 0);
    CHECK(ExplicitPoly{{0}}.value_at(0) == 1);
}

TEST_CASE("term monomials and evaluation") {
    GeneralFormPoly inst = worked();
    CHECK(term_monomial(inst, {0, {0, 0}}) == 0b11);
    CHECK(term_monomial(inst, {0, {0, 1}}) == 0b01);
    CHECK(eval_general(inst, 0b00) == 0);
    CHECK(eval_general(inst, 0b01) == 1);
    CHECK(eval_general(inst, 0b10) == 0);
    CHECK(eval_general(inst, 0b11) == 0);
}

TEST_CASE("adjacency rules") {
    GeneralFormPoly inst = worked();
    PPANode leaf = PPANode::leaf();
    PPANode full_term = PPANode::term_node({0, {0, 0}});
    PPANode unit_term = PPANode::term_node({0, {0, 1}});
    CHECK(is_edge(inst, leaf, full_term));
    CHECK_FALSE(is_edge(inst, leaf, unit_term));
    CHECK(is_edge(inst, PPANode::vector(0b11), full_term));
    CHECK(is_edge(inst, PPANode::vector(0b11), unit_term));
    CHECK(is_edge(inst, PPANode::vector(0b01), unit_term));
    CHECK_FALSE(is_edge(inst, PPANode::vector(0b01), full_term));
    CHECK_FALSE(is_edge(inst, leaf, PPANode::vector(0b11)));
}

TEST_CASE("enumerate_terms and full_occurrences") {
    GeneralFormPoly inst = worked();
    std::vector<TermTuple> terms = enumerate_terms(inst);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0] == TermTuple{0, {0, 0}});
    CHECK(terms[1] == TermTuple{0, {0, 1}});
    std::vector<TermTuple> occ = full_occurrences(inst);
    REQUIRE(occ.size() == 1);
    CHECK(occ[0] == TermTuple{0, {0, 0}});
}

TEST_CASE("degree report of the worked instance") {
    GeneralFormPoly inst = worked();
    DegreeReport rep = enumerate_graph(inst);
    CHECK(rep.leaf_degree == 1);
    REQUIRE(rep.vector_degree.size() == 4);
    CHECK(rep.vector_degree[0b00] == 0);
    CHECK(rep.vector_degree[0b01] == 1);
    CHECK(rep.vector_degree[0b10] == 0);
    CHECK(rep.vector_degree[0b11] == 2);
    CHECK(rep.term_degree.at({0, {0, 0}}) == 2);
    CHECK(rep.term_degree.at({0, {0, 1}}) == 2);
    for (Mask s = 0; s < 4; ++s)
        CHECK(rep.vector_degree[s] % 2 == eval_general(inst, s));
}

TEST_CASE("mate pairs edges and flags the leftover") {
    GeneralFormPoly inst = worked();
    PPAEdge leftover{TermTuple{0, {0, 0}}, true, 0};
    CHECK_FALSE(mate(inst, PPANode::leaf(), leftover).has_value());
    // at the even vector 11 the two edges pair up
    PPAEdge a{TermTuple{0, {0, 0}}, false, 0b11};
    PPAEdge b{TermTuple{0, {0, 1}}, false, 0b11};
    auto ma = mate(inst, PPANode::vector(0b11), a);
    REQUIRE(ma.has_value());
    CHECK(*ma == b);
    auto mb = mate(inst, PPANode::vector(0b11), b);
    REQUIRE(mb.has_value());
    CHECK(*mb == a);
    // the odd vector 01 leaves its single edge unmatched
    PPAEdge c{TermTuple{0, {0, 1}}, false, 0b01};
    CHECK_FALSE(mate(inst, PPANode::vector(0b01), c).has_value());
    CHECK_THROWS_AS(mate(inst, PPANode::vector(0b01), a), NotIncident);
}

TEST_CASE("follow_path walks the worked instance") {
    GeneralFormPoly inst = worked();
    PathResult path = follow_path(inst);
    CHECK(path.s == 0b01);
    CHECK(path.length == 4);
    REQUIRE(path.nodes.size() == 5);
    CHECK(path.nodes.front() == PPANode::leaf());
    CHECK(path.nodes[1] == PPANode::term_node({0, {0, 0}}));
    CHECK(path.nodes[2] == PPANode::vector(0b11));
    CHECK(path.nodes[3] == PPANode::term_node({0, {0, 1}}));
    CHECK(path.nodes.back() == PPANode::vector(0b01));
    CHECK(eval_general(inst, path.s) == 1);
}

TEST_CASE("explicit caps are honored verbatim") {
    CHECK_THROWS_AS(follow_path(worked(), 1), StepCapExceeded);
    CHECK(follow_path(worked(), 4).length == 4);
}

TEST_CASE("validate_instance accepts the worked instance") {
    Validation v = validate_instance(worked());
    CHECK(v.ok);
    CHECK(v.certificate.empty());
}

TEST_CASE("validate_instance rejects broken pairings") {
    GeneralFormPoly inst = worked();
    inst.leftover = TermTuple{0, {0, 1}};  // monomial x1, not full
    CHECK_FALSE(validate_instance(inst).ok);
    inst = worked();
    inst.leftover.reset();
    CHECK_FALSE(validate_instance(inst).ok);
}

TEST_CASE("validate_instance tracks multiple occurrences") {
    GeneralFormPoly inst;
    inst.m = 2;
    inst.blocks = {Block{{ExplicitPoly{{0b01}}, ExplicitPoly{{0b10}}}},
                   Block{{ExplicitPoly{{0b11}}}},
                   Block{{ExplicitPoly{{0b10}}, ExplicitPoly{{0b01}}}}};
    inst.leftover = TermTuple{0, {0, 0}};
    CHECK_FALSE(validate_instance(inst).ok);  // two occurrences unpaired
    inst.full_pairs = {{TermTuple{1, {0}}, TermTuple{2, {0, 0}}}};
    CHECK(validate_instance(inst).ok);
    inst.full_pairs = {{TermTuple{1, {0}}, TermTuple{1, {0}}}};
    CHECK_FALSE(validate_instance(inst).ok);  // self-pair
    Validation v = validate_instance(inst);
    CHECK_FALSE(v.certificate.empty());
}

TEST_CASE("infer_full_pairing fills the unique designation") {
    GeneralFormPoly inst = worked();
    inst.leftover.reset();
    inst.full_pairs.clear();
    infer_full_pairing(inst);
    REQUIRE(inst.leftover.has_value());
    CHECK(*inst.leftover == TermTuple{0, {0, 0}});
    CHECK(inst.full_pairs.empty());
}

TEST_CASE("node_str formats") {
    CHECK(node_str(PPANode::leaf(), 2) == "w");
    CHECK(node_str(PPANode::vector(0b01), 2) == "(1,0)");
    CHECK(node_str(PPANode::vector(0b10), 2) == "(0,1)");
    CHECK(node_str(PPANode::term_node({0, {0, 1}}), 2) == "(1,1,2)");
}

TEST_CASE("render_ppa_report is byte stable") {
    GeneralFormPoly inst = worked();
    PathResult path = follow_path(inst);
    const std::string expected =
        "TRACE w -> (1,1,1)\n"
        "TRACE (1,1,1) -> (1,1)\n"
        "TRACE (1,1) -> (1,1,2)\n"
        "TRACE (1,1,2) -> (1,0)\n"
        "RESULT s = 10\n"
        "RESULT f(s) = 1\n"
        "RESULT path_length = 4\n";
    CHECK(render_ppa_report(inst, path, true) == expected);
    const std::string no_trace =
        "RESULT s = 10\n"
        "RESULT f(s) = 1\n"
        "RESULT path_length = 4\n";
    CHECK(render_ppa_report(inst, path, false) == no_trace);
}
