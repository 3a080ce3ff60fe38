#include "nullsolve/graphs.hpp"

#include <algorithm>
#include <string>

namespace nullsolve {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1)
        throw RangeViolation("graph needs at least one vertex");
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw RangeViolation("edge endpoint outside [1, n]");
        if (u == v)
            throw Error("loops are not supported");
    }
    return Graph{n, std::move(edges)};
}

std::vector<std::int64_t> subgraph_degrees(const Graph& g,
                                           const std::vector<int>& edge_idx) {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(g.n), 0);
    for (int e : edge_idx) {
        if (e < 0 || e >= static_cast<int>(g.edges.size()))
            throw RangeViolation("edge index out of range");
        const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
        ++deg[static_cast<std::size_t>(u - 1)];
        ++deg[static_cast<std::size_t>(v - 1)];
    }
    return deg;
}

std::int64_t threshold(std::int64_t n, std::int64_t p, int d) {
    if (!is_prime_i64(p))
        throw Error("threshold requires a prime p");
    if (n < 1 || d < 1)
        throw RangeViolation("threshold requires n >= 1 and d >= 1");
    const std::int64_t pd = pow_i64(p, d);
    if (p == 2)
        return (pd - 1) * n - pd / 2;
    return (pd - 1) * n;
}

namespace {

// Incidence-matrix instance: one row per vertex, one column per edge,
// target {0} mod p^d at every vertex.
OlsonInstance incidence_instance(const Graph& g, std::int64_t p, int d) {
    const std::size_t n = static_cast<std::size_t>(g.n);
    std::vector<std::vector<std::int64_t>> a(
        n, std::vector<std::int64_t>(g.edges.size(), 0));
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        a[static_cast<std::size_t>(g.edges[j].first - 1)][j] = 1;
        a[static_cast<std::size_t>(g.edges[j].second - 1)][j] = 1;
    }
    std::vector<int> dv(n, d);
    std::vector<ResidueSet> Q(n, ResidueSet(p, d, {0}));
    return OlsonInstance(p, std::move(dv), std::move(a), std::move(Q));
}

} // namespace

std::vector<int> divisible_subgraph(const Graph& g, int d, Engine engine) {
    const std::int64_t mE = static_cast<std::int64_t>(g.edges.size());
    if (mE <= threshold(g.n, 2, d))
        throw PreconditionViolated(
            "edge count " + std::to_string(mE) + " does not exceed the threshold " +
            std::to_string(threshold(g.n, 2, d)));
    OlsonInstance reduced = reduce_even_sum(incidence_instance(g, 2, d));
    std::optional<std::vector<int>> J = solve_olson(reduced, engine);
    if (!J)
        throw Error("no divisible subgraph above the threshold (internal bug)");
    const std::int64_t modulus = pow_i64(2, d);
    for (std::int64_t deg : subgraph_degrees(g, *J))
        if (deg % modulus != 0)
            throw Error("selected subgraph has a bad degree (internal bug)");
    return *J;
}

std::vector<int> f_avoiding_mod(const Graph& g, const std::vector<ResidueSet>& F,
                                std::int64_t p, int d) {
    if (static_cast<int>(F.size()) != g.n)
        throw Error("one forbidden set per vertex is required");
    std::int64_t total = 0;
    for (const ResidueSet& Fv : F) {
        if (Fv.p() != p || Fv.d() != d)
            throw Error("forbidden set modulus mismatch");
        if (Fv.contains(0))
            throw PreconditionViolated("forbidden sets must not contain 0");
        total += kappa(Fv);
    }
    const std::int64_t mE = static_cast<std::int64_t>(g.edges.size());
    if (total >= mE)
        throw PreconditionViolated("need sum of kappa(F(v)) < |E|, got " +
                                   std::to_string(total) +
                                   " >= " + std::to_string(mE));
    std::vector<std::vector<std::int64_t>> a(
        static_cast<std::size_t>(g.n),
        std::vector<std::int64_t>(g.edges.size(), 0));
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        a[static_cast<std::size_t>(g.edges[j].first - 1)][j] = 1;
        a[static_cast<std::size_t>(g.edges[j].second - 1)][j] = 1;
    }
    std::vector<ResidueSet> Q;
    for (const ResidueSet& Fv : F)
        Q.push_back(Fv.complement());
    OlsonInstance inst(p, std::vector<int>(static_cast<std::size_t>(g.n), d),
                       std::move(a), std::move(Q));
    std::optional<std::vector<int>> J = solve_olson(inst, Engine::Brute);
    if (!J)
        throw Error("no avoiding subgraph below the kappa bound (internal bug)");
    const std::int64_t modulus = pow_i64(p, d);
    std::vector<std::int64_t> deg = subgraph_degrees(g, *J);
    for (int v = 0; v < g.n; ++v)
        if (F[static_cast<std::size_t>(v)].contains(
                deg[static_cast<std::size_t>(v)] % modulus))
            throw Error("selected subgraph hits a forbidden degree (internal bug)");
    return *J;
}

std::vector<int> f_avoiding_natural(const Graph& g,
                                    const std::vector<std::set<std::int64_t>>& F) {
    if (static_cast<int>(F.size()) != g.n)
        throw Error("one forbidden set per vertex is required");
    std::int64_t total = 0;
    for (const auto& Fv : F) {
        for (std::int64_t f : Fv)
            if (f < 1)
                throw PreconditionViolated(
                    "natural forbidden values must be positive");
        total += static_cast<std::int64_t>(Fv.size());
    }
    const std::int64_t mE = static_cast<std::int64_t>(g.edges.size());
    if (total >= mE)
        throw PreconditionViolated("need sum of |F(v)| < |E|, got " +
                                   std::to_string(total) +
                                   " >= " + std::to_string(mE));
    std::vector<std::int64_t> full_deg = subgraph_degrees(g, [&] {
        std::vector<int> all(g.edges.size());
        for (std::size_t j = 0; j < g.edges.size(); ++j)
            all[j] = static_cast<int>(j);
        return all;
    }());
    const std::int64_t maxdeg =
        *std::max_element(full_deg.begin(), full_deg.end());
    const std::int64_t p = next_prime_above(maxdeg);
    std::vector<ResidueSet> Fmod;
    for (int v = 0; v < g.n; ++v) {
        std::set<std::int64_t> elems;
        for (std::int64_t f : F[static_cast<std::size_t>(v)])
            if (f <= full_deg[static_cast<std::size_t>(v)])
                elems.insert(f); // degrees at v cannot exceed its full degree
        Fmod.push_back(ResidueSet(p, 1, std::move(elems)));
    }
    std::vector<int> J = f_avoiding_mod(g, Fmod, p, 1);
    std::vector<std::int64_t> deg = subgraph_degrees(g, J);
    for (int v = 0; v < g.n; ++v)
        if (F[static_cast<std::size_t>(v)].count(deg[static_cast<std::size_t>(v)]))
            throw Error("selected subgraph hits a forbidden degree (internal bug)");
    return J;
}

} // namespace nullsolve
