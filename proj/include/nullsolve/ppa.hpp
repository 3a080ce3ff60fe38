#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nullsolve/lift.hpp"

namespace nullsolve {

/// Explicit F_2 polynomial: a list of coefficient-1 monomials in the order
/// they were written. Duplicates cancel mod 2 at evaluation time but are
/// kept verbatim so files round-trip.
struct ExplicitPoly {
    std::vector<Mask> monomials;

    /// Largest monomial degree (0 for a constant or empty polynomial).
    int degree() const;
    /// Value at s in {0,1}^m: parity of the monomials dividing s.
    int value_at(Mask s) const;

    bool operator==(const ExplicitPoly&) const = default;
};

/// One product prod_j p_{ij} of the general-form input polynomial.
struct Block {
    std::vector<ExplicitPoly> polys;

    bool operator==(const Block&) const = default;
};

/// A term of a block: one monomial chosen from each factor.
/// Indices are 0-based internally; serialization and traces are 1-based.
struct TermTuple {
    int block = 0;
    std::vector<int> choice;

    auto operator<=>(const TermTuple&) const = default;
};

/// f = sum_i prod_j p_{ij} over F_2, plus the pairing certificate for the
/// occurrences of the full monomial x_1...x_m across all blocks: disjoint
/// pairs and exactly one designated leftover occurrence.
struct GeneralFormPoly {
    int m = 0;
    std::vector<Block> blocks;
    std::vector<std::pair<TermTuple, TermTuple>> full_pairs;
    std::optional<TermTuple> leftover;

    bool operator==(const GeneralFormPoly&) const = default;
};

/// Node of the End-of-the-Line graph: the standard leaf w, a vector
/// x in {0,1}^m, or a term.
struct PPANode {
    enum class Kind { Leaf, Vector, Term };
    Kind kind = Kind::Leaf;
    Mask vec = 0;
    TermTuple term;

    static PPANode leaf() { return {}; }
    static PPANode vector(Mask s) { return {Kind::Vector, s, {}}; }
    static PPANode term_node(TermTuple t) {
        return {Kind::Term, 0, std::move(t)};
    }

    bool operator==(const PPANode&) const = default;
};

/// An edge is determined by its term endpoint plus the other end
/// (the standard leaf, or a vector).
struct PPAEdge {
    TermTuple term;
    bool to_leaf = false;
    Mask vec = 0;

    bool operator==(const PPAEdge&) const = default;
};

/// Product of the chosen monomials (union of their variable sets).
Mask term_monomial(const GeneralFormPoly& inst, const TermTuple& t);

/// Value of f at s: sum of block products mod 2.
int eval_general(const GeneralFormPoly& inst, Mask s);

/// Vector-term edge iff the term evaluates to 1 at the vector; leaf-term
/// edge iff the term's monomial is exactly x_1...x_m. No other adjacency.
bool is_edge(const GeneralFormPoly& inst, const PPANode& u, const PPANode& v);

/// The pairing function: the edge paired with e at node v, or nullopt when
/// e is v's designated leftover edge. Throws NotIncident if e is not an
/// edge at v.
std::optional<PPAEdge> mate(const GeneralFormPoly& inst, const PPANode& v,
                            const PPAEdge& e);

struct PathResult {
    Mask s = 0;                 // terminal vector, f(s) != 0
    std::vector<PPANode> nodes; // starts at the leaf, ends at the terminal
    std::int64_t length = 0;    // number of edges traversed
};

/// Walks from the standard leaf along its designated unmatched edge,
/// alternating cross-edge / mate, until an Unmatched edge is reached.
/// step_cap <= 0 selects a cap above any honest walk: two steps per graph
/// edge (never below 2^{m+4}). Explicit positive caps are taken verbatim.
PathResult follow_path(const GeneralFormPoly& inst, std::int64_t step_cap = 0);

struct Validation {
    bool ok = true;
    std::string certificate; // empty when ok
};

/// Checks the per-block degree condition and that the full-monomial
/// pairing is an involution with exactly one leftover over exactly the
/// full-monomial occurrences. Failures are reported, not thrown.
Validation validate_instance(const GeneralFormPoly& inst);

struct DegreeReport {
    std::int64_t leaf_degree = 0;
    std::vector<std::int64_t> vector_degree;    // indexed by vector mask
    std::map<TermTuple, std::int64_t> term_degree;
};

/// Brute-force adjacency oracle (m <= 12, term count capped).
DegreeReport enumerate_graph(const GeneralFormPoly& inst);

/// All term tuples of the instance, in block-major lexicographic order.
std::vector<TermTuple> enumerate_terms(const GeneralFormPoly& inst);

/// All tuples whose monomial is the full monomial, found by pruned search.
std::vector<TermTuple> full_occurrences(const GeneralFormPoly& inst);

/// Fills in the trivial pairing (no pairs, single leftover) when the
/// instance has exactly one full-monomial occurrence and none was given.
void infer_full_pairing(GeneralFormPoly& inst);

/// "w", "(1,0)", "(1,1,2)": leaf, vector bits, 1-based term tuple.
std::string node_str(const PPANode& v, int m);

/// The CLI report for a path: optional TRACE lines (one per edge) followed
/// by the RESULT lines. Byte-stable.
std::string render_ppa_report(const GeneralFormPoly& inst,
                              const PathResult& path, bool trace);

} // namespace nullsolve
