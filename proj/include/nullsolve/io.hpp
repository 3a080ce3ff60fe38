#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "nullsolve/graphs.hpp"
#include "nullsolve/olson.hpp"
#include "nullsolve/ppa.hpp"

namespace nullsolve {

/// A graph plus optional per-vertex forbidden degree values
/// ("forbid v: f1 f2 ..." lines), used by the avoiding-subgraph solvers.
struct GraphFile {
    Graph g;
    std::map<int, std::set<std::int64_t>> forbid;

    bool operator==(const GraphFile&) const = default;
};

/// All formats are ASCII and line-oriented; '#' starts a comment anywhere
/// in a line. Parsers throw ParseError with 1-based line and column.
///
/// graph:   "graph n m", then m lines "u v", then optional "forbid v: ..."
/// olson:   "olson p n m", "d: d_1 .. d_n", n lines "Q: q ..", n matrix rows
/// genpoly: "genpoly m k", then per block "block m_i" followed by m_i
///          polynomial lines ('+'-separated monomials over x<j> and "1";
///          a lone "0" is the empty polynomial), then an optional section
///          "fullpairs:" with "pair: <tuple> <tuple>" lines and one
///          "leftover: <tuple>" line, tuples written 1-based as
///          "i a_1 .. a_{m_i}". Without the section, a unique full-monomial
///          occurrence is designated automatically.
GraphFile parse_graph_file(const std::string& text);
OlsonInstance parse_olson_file(const std::string& text);
GeneralFormPoly parse_genpoly_file(const std::string& text);

/// Canonical serializations; parse(serialize(parse(text))) == parse(text).
std::string serialize_graph_file(const GraphFile& gf);
std::string serialize_olson_file(const OlsonInstance& inst);
std::string serialize_genpoly_file(const GeneralFormPoly& inst);

} // namespace nullsolve
