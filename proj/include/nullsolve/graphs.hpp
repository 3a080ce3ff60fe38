#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "nullsolve/olson.hpp"

namespace nullsolve {

/// Multigraph on vertices 1..n: parallel edges allowed, loops rejected.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const Graph&) const = default;
};

/// Validates vertex range and absence of loops.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

/// Degree of every vertex in the subgraph given by edge indices (0-based).
std::vector<std::int64_t> subgraph_degrees(const Graph& g,
                                           const std::vector<int>& edge_idx);

/// The largest edge count admitting no p^d-divisible subgraph:
/// (2^d - 1) n - 2^{d-1} for p = 2, (p^d - 1) n for odd p.
std::int64_t threshold(std::int64_t n, std::int64_t p, int d);

/// Nonempty edge set whose vertex degrees are all divisible by 2^d.
/// Requires |E| > threshold(n, 2, d); solved through the even-sum
/// reduction of the incidence matrix, then re-verified on the graph.
std::vector<int> divisible_subgraph(const Graph& g, int d, Engine engine);

/// Nonempty edge set whose vertex degrees mod p^d avoid F[v] (0 not in
/// F[v]). Requires sum_v kappa(F[v]) < |E|.
std::vector<int> f_avoiding_mod(const Graph& g, const std::vector<ResidueSet>& F,
                                std::int64_t p, int d);

/// Nonempty edge set whose natural vertex degrees avoid the finite sets
/// F[v] of positive integers. Requires sum_v |F[v]| < |E|; works modulo the
/// smallest prime above the maximum degree, where degrees embed naturally.
std::vector<int> f_avoiding_natural(const Graph& g,
                                    const std::vector<std::set<std::int64_t>>& F);

} // namespace nullsolve
