#include "nullsolve/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "nullsolve/covering.hpp"
#include "nullsolve/graphs.hpp"
#include "nullsolve/lift.hpp"
#include "nullsolve/olson.hpp"
#include "nullsolve/ppa.hpp"

namespace nullsolve {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CheckFail {
    std::string msg;
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw CheckFail{msg};
}

std::string fmt_int(std::int64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------- check 1

std::string check_kappa_golden() {
    const ResidueSet B(5, 3,
                       {1, 2, 5, 6, 20, 37, 40, 42, 50, 51, 52, 56, 69, 70,
                        87, 95, 100, 101, 102, 112});
    expect(kappa(B) == 56, "warm-up kappa != 56");
    const auto t0 = Clock::now();
    const std::int64_t k = kappa(B);
    const double ms = ms_since(t0);
    expect(k == 56, "kappa = " + fmt_int(k) + ", expected 56");
    expect(ms < 1.0, "kappa call took " + std::to_string(ms) + " ms");
    std::ostringstream os;
    os << "kappa = 56 in " << std::fixed << std::setprecision(3) << ms << " ms";
    return os.str();
}

// ---------------------------------------------------------------- check 2

std::string check_lift_identity() {
    std::mt19937_64 rng(0x11aa22bb33cc44ddULL);
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const int m = 1 + static_cast<int>(rng() % 10);
        const int nterms = static_cast<int>(rng() % 13);
        UnitSumPoly f{m, {}};
        for (int i = 0; i < nterms; ++i)
            f.terms.push_back(static_cast<Mask>(rng()) & full_mask(m));
        const unsigned hdeg = static_cast<unsigned>(rng() % 6);
        std::vector<Int> alphas(hdeg + 1);
        for (auto& a : alphas)
            a = static_cast<long>(rng() % 19) - 9;
        const IVPoly h(alphas);
        const IntMultiPoly psi = psi_h(f, h);
        const std::vector<Int> vals = psi.values_on_cube();
        const Mask full = full_mask(m);
        for (Mask s = 0;; ++s) {
            const Int want = h.eval(Int(f.value_at(s)));
            expect(vals[s] == want,
                   "trial " + fmt_int(t) + ": psi_h mismatch at s=" +
                       fmt_int(s));
            if (s == full) break;
        }
    }
    return fmt_int(trials) + " random (f,h) pairs match h(f(s)) on the cube";
}

// ---------------------------------------------------------------- check 3

std::string check_cover_patterns() {
    std::int64_t alon_count = 0;
    for (std::int64_t p : {2, 3}) {
        for (int d = 1; d <= 3; ++d) {
            const std::int64_t M = pow_i64(p, d);
            // options per nonzero residue class: one lift or no element
            std::vector<std::vector<std::int64_t>> cls(
                static_cast<std::size_t>(p - 1));
            for (std::int64_t c = 1; c < p; ++c)
                for (std::int64_t x = c; x < M; x += p)
                    cls[static_cast<std::size_t>(c - 1)].push_back(x);
            std::vector<std::size_t> pick(cls.size(), 0); // size() == "absent"
            while (true) {
                std::set<std::int64_t> Qset = {0};
                for (std::size_t c = 0; c < cls.size(); ++c)
                    if (pick[c] < cls[c].size()) Qset.insert(cls[c][pick[c]]);
                const ResidueSet Q(p, d, Qset);
                const FactoredIVP h = alon_cover(Q);
                std::int64_t delta_want = 0;
                for (int r = 0; r < d; ++r) delta_want += pow_i64(p, r) - 1;
                expect(static_cast<std::int64_t>(h.delta()) == delta_want,
                       "alon_cover delta mismatch");
                expect(h.degree() == static_cast<unsigned>(M - Q.size()),
                       "alon_cover degree mismatch");
                expect(is_unit_at_zero(h), "alon_cover not a unit at 0");
                for (std::int64_t T = 0; T < 2 * M; ++T) {
                    const Int v = h.eval(Int(T));
                    const bool divis =
                        mpz_divisible_ui_p(v.get_mpz_t(),
                                           static_cast<unsigned long>(p)) != 0;
                    const bool outside = Qset.count(T % M) == 0;
                    expect(divis == outside,
                           "alon_cover pattern wrong at T=" + fmt_int(T));
                }
                ++alon_count;
                std::size_t c = 0;
                for (; c < pick.size(); ++c) {
                    if (++pick[c] <= cls[c].size()) break;
                    pick[c] = 0;
                }
                if (c == pick.size()) break;
            }
        }
    }

    std::int64_t sys_count = 0;
    for (std::int64_t p : {2, 3}) {
        for (int r = 0; r <= 2; ++r) {
            const std::int64_t nclass = pow_i64(p, r);
            const std::int64_t mod = pow_i64(p, r + 1);
            std::vector<std::vector<std::int64_t>> lifts(
                static_cast<std::size_t>(nclass));
            for (std::int64_t c = 0; c < nclass; ++c)
                for (std::int64_t t = 0; t < p; ++t) {
                    const std::int64_t q = c + t * nclass;
                    if (q % mod != 0)
                        lifts[static_cast<std::size_t>(c)].push_back(q);
                }
            std::vector<std::size_t> pick(lifts.size(), 0);
            while (true) {
                std::vector<std::int64_t> q;
                for (std::size_t c = 0; c < lifts.size(); ++c)
                    q.push_back(lifts[c][pick[c]]);
                const FactoredIVP h = residue_system_cover(q, p, r);
                std::int64_t delta_want = 0;
                for (int j = 0; j < r; ++j) delta_want += pow_i64(p, j);
                expect(static_cast<std::int64_t>(h.delta()) == delta_want,
                       "residue system delta mismatch");
                expect(is_unit_at_zero(h), "residue system not a unit at 0");
                for (std::int64_t T = 0; T < 2 * mod; ++T) {
                    const Int v = h.eval(Int(T));
                    const bool divis =
                        mpz_divisible_ui_p(v.get_mpz_t(),
                                           static_cast<unsigned long>(p)) != 0;
                    bool lifted = false;
                    for (std::int64_t qi : q)
                        if (mod_floor(T - qi, mod) == 0) lifted = true;
                    expect(divis == lifted,
                           "residue system pattern wrong at T=" + fmt_int(T));
                }
                ++sys_count;
                std::size_t c = 0;
                for (; c < pick.size(); ++c) {
                    if (++pick[c] < lifts[c].size()) break;
                    pick[c] = 0;
                }
                if (c == pick.size()) break;
            }
        }
    }
    return fmt_int(alon_count) + " one-shot covers and " + fmt_int(sys_count) +
           " residue systems match their divisibility patterns";
}

// ---------------------------------------------------------------- check 4

std::string check_kappa_covering() {
    std::int64_t count = 0;
    const std::pair<std::int64_t, int> settings[] = {{2, 2}, {2, 3}, {3, 2}};
    for (const auto& [p, d] : settings) {
        const std::int64_t M = pow_i64(p, d);
        for (std::uint32_t bits = 0; bits < (1u << (M - 1)); ++bits) {
            std::set<std::int64_t> elems;
            for (std::int64_t b = 1; b < M; ++b)
                if (bits & (1u << (b - 1))) elems.insert(b);
            const ResidueSet B(p, d, elems);
            const CoveringFamily fam = build_kappa_covering(B);
            expect(covers(fam, B), "family misses an element of B");
            expect(fam.total_degree() == kappa(B),
                   "total degree " + fmt_int(fam.total_degree()) +
                       " != kappa " + fmt_int(kappa(B)));
            ++count;
        }
    }
    return fmt_int(count) + " sets covered at total degree exactly kappa";
}

// ---------------------------------------------------------------- check 5

std::string check_olson_closed_forms() {
    // Olson values p^d - 1 for a single row with target {0}.
    const std::tuple<std::int64_t, int, std::int64_t> named[] = {
        {2, 1, 1}, {3, 1, 2}, {2, 2, 3}};
    for (const auto& [p, d, want] : named) {
        const ResidueSet Q(p, d, {0});
        const std::int64_t got =
            F_exact(p, {d}, {Q}, static_cast<int>(want) + 1);
        expect(got == want, "F_exact(p=" + fmt_int(p) + ",d=" + fmt_int(d) +
                                ") = " + fmt_int(got) + ", expected " +
                                fmt_int(want));
    }

    // Digit-zero targets: F equals sigma(R_1) + ... + sigma(R_n).
    auto subsets_of = [](int d) {
        std::vector<std::set<int>> out;
        for (std::uint32_t b = 0; b < (1u << d); ++b) {
            std::set<int> R;
            for (int r = 0; r < d; ++r)
                if (b & (1u << r)) R.insert(r);
            out.push_back(std::move(R));
        }
        return out;
    };
    std::int64_t rz_count = 0;
    const std::pair<std::int64_t, std::vector<std::vector<int>>> rz_settings[] =
        {{2, {{1}, {2}, {1, 1}, {2, 1}, {2, 2}}}, {3, {{1}, {1, 1}}}};
    for (const auto& [p, dlists] : rz_settings) {
        for (const auto& dl : dlists) {
            std::vector<std::vector<std::set<int>>> choices;
            for (int d : dl) choices.push_back(subsets_of(d));
            std::vector<std::size_t> pick(dl.size(), 0);
            while (true) {
                std::vector<ResidueSet> Q;
                std::int64_t want = 0;
                for (std::size_t i = 0; i < dl.size(); ++i) {
                    const std::set<int>& R = choices[i][pick[i]];
                    Q.push_back(r_zero_set(R, p, dl[i]));
                    want += sigma(R, p);
                }
                const std::int64_t got =
                    F_exact(p, dl, Q, static_cast<int>(want) + 1);
                expect(got == want, "digit-zero F_exact = " + fmt_int(got) +
                                        ", expected " + fmt_int(want));
                ++rz_count;
                std::size_t i = 0;
                for (; i < pick.size(); ++i) {
                    if (++pick[i] < choices[i].size()) break;
                    pick[i] = 0;
                }
                if (i == pick.size()) break;
            }
        }
    }

    // Tight sequences admit no solution.
    std::int64_t ex_count = 0;
    const std::pair<std::int64_t, std::vector<std::vector<int>>> ex_settings[] =
        {{2, {{1}, {2}, {3}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}},
         {3, {{1}, {2}, {1, 1}, {2, 1}, {2, 2}}}};
    for (const auto& [p, dlists] : ex_settings) {
        for (const auto& dl : dlists) {
            std::vector<std::vector<std::set<int>>> choices;
            for (int d : dl) choices.push_back(subsets_of(d));
            std::vector<std::size_t> pick(dl.size(), 0);
            while (true) {
                std::vector<std::set<int>> Rs;
                std::int64_t width = 0;
                for (std::size_t i = 0; i < dl.size(); ++i) {
                    Rs.push_back(choices[i][pick[i]]);
                    width += sigma(Rs.back(), p);
                }
                if (width <= 12) {
                    const OlsonInstance inst = extremal_sequence(Rs, p, dl);
                    const auto J = solve_olson(inst, Engine::Brute);
                    expect(!J.has_value(),
                           "extremal sequence unexpectedly solvable (p=" +
                               fmt_int(p) + ", width=" + fmt_int(width) + ")");
                    ++ex_count;
                }
                std::size_t i = 0;
                for (; i < pick.size(); ++i) {
                    if (++pick[i] < choices[i].size()) break;
                    pick[i] = 0;
                }
                if (i == pick.size()) break;
            }
        }
    }
    return "named values, " + fmt_int(rz_count) +
           " digit-zero thresholds, and " + fmt_int(ex_count) +
           " tight sequences verified";
}

// ---------------------------------------------------------------- check 6

std::string check_olson_upper_bound() {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    const std::pair<std::int64_t, std::vector<std::vector<int>>> settings[] = {
        {2, {{1}, {2}, {3}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}},
        {3, {{1}, {2}, {1, 1}, {2, 1}, {2, 2}}}};
    std::int64_t total = 0;
    for (const auto& [p, dlists] : settings) {
        for (const auto& dl : dlists) {
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<ResidueSet> Q;
                std::int64_t bound = 0;
                for (int d : dl) {
                    const std::int64_t M = pow_i64(p, d);
                    std::set<std::int64_t> elems = {0};
                    for (std::int64_t x = 1; x < M; ++x)
                        if (rng() & 1) elems.insert(x);
                    ResidueSet Qi(p, d, elems);
                    bound += kappa(Qi.complement());
                    Q.push_back(std::move(Qi));
                }
                const int m = static_cast<int>(bound) + 1;
                std::vector<std::vector<std::int64_t>> a;
                for (std::size_t i = 0; i < dl.size(); ++i) {
                    const std::int64_t M = pow_i64(p, dl[i]);
                    std::vector<std::int64_t> row;
                    for (int j = 0; j < m; ++j)
                        row.push_back(
                            static_cast<std::int64_t>(rng() % (3 * M)) - M);
                    a.push_back(std::move(row));
                }
                const OlsonInstance inst(p, dl, a, Q);
                const auto J = solve_olson(inst, Engine::Brute);
                expect(J.has_value(),
                       "no solution found at m = kappa bound + 1 (p=" +
                           fmt_int(p) + ")");
                expect(inst.satisfied_by(*J), "returned J does not satisfy");
                ++total;
            }
        }
    }
    return fmt_int(total) + " random instances at m = bound + 1 all solvable";
}

// ---------------------------------------------------------------- check 7

bool raw_divisible_exists(const Graph& g, std::int64_t q) {
    const int m = static_cast<int>(g.edges.size());
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        std::vector<std::int64_t> deg(static_cast<std::size_t>(g.n) + 1, 0);
        for (int j = 0; j < m; ++j)
            if (s & (1u << j)) {
                ++deg[static_cast<std::size_t>(
                    g.edges[static_cast<std::size_t>(j)].first)];
                ++deg[static_cast<std::size_t>(
                    g.edges[static_cast<std::size_t>(j)].second)];
            }
        bool ok = true;
        for (int v = 1; v <= g.n; ++v)
            if (deg[static_cast<std::size_t>(v)] % q != 0) ok = false;
        if (ok) return true;
    }
    return false;
}

std::string check_graph_thresholds() {
    std::int64_t upper_checked = 0;
    for (int n = 2; n <= 6; ++n) {
        expect(threshold(n, 2, 1) == n - 1, "threshold(n,2,1) != n-1");
        std::vector<std::pair<int, int>> pairs;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
        const int P = static_cast<int>(pairs.size());

        // Some (n-1)-edge graph has no even subgraph (any spanning tree).
        bool found_extremal = false;
        for (std::uint32_t s = 0; s < (1u << P) && !found_extremal; ++s) {
            if (__builtin_popcount(s) != n - 1) continue;
            std::vector<std::pair<int, int>> es;
            for (int j = 0; j < P; ++j)
                if (s & (1u << j)) es.push_back(pairs[static_cast<std::size_t>(j)]);
            const Graph g = make_graph(n, es);
            if (!raw_divisible_exists(g, 2)) found_extremal = true;
        }
        expect(found_extremal,
               "no extremal (n-1)-edge graph found for n=" + fmt_int(n));

        // Every n-edge simple graph contains one; the solver finds it.
        for (std::uint32_t s = 0; s < (1u << P); ++s) {
            if (__builtin_popcount(s) != n) continue;
            std::vector<std::pair<int, int>> es;
            for (int j = 0; j < P; ++j)
                if (s & (1u << j)) es.push_back(pairs[static_cast<std::size_t>(j)]);
            const Graph g = make_graph(n, es);
            expect(raw_divisible_exists(g, 2),
                   "n-edge graph without even subgraph at n=" + fmt_int(n));
            const std::vector<int> F = divisible_subgraph(g, 1, Engine::Brute);
            const std::vector<std::int64_t> deg = subgraph_degrees(g, F);
            expect(!F.empty(), "empty subgraph returned");
            for (int v = 1; v <= n; ++v)
                expect(deg[static_cast<std::size_t>(v - 1)] % 2 == 0,
                       "odd degree in solver output");
            ++upper_checked;
        }
    }

    // The 2^d = 4 gate on two vertices sits exactly at the formula value.
    expect(threshold(2, 2, 2) == 4, "threshold(2,2,2) != 4");
    auto parallel = [](int k) {
        std::vector<std::pair<int, int>> es(static_cast<std::size_t>(k),
                                            {1, 2});
        return make_graph(2, es);
    };
    expect(!raw_divisible_exists(parallel(3), 4),
           "3 parallel edges admit a 4-divisible subgraph");
    bool gated = false;
    try {
        divisible_subgraph(parallel(4), 2, Engine::Brute);
    } catch (const PreconditionViolated&) {
        gated = true;
    }
    expect(gated, "solver accepted |E| = threshold at 2^d = 4");
    const std::vector<int> F5 = divisible_subgraph(parallel(5), 2, Engine::Brute);
    const std::vector<std::int64_t> deg5 = subgraph_degrees(parallel(5), F5);
    expect(!F5.empty() && deg5[0] % 4 == 0 && deg5[1] % 4 == 0,
           "5 parallel edges: invalid 4-divisible subgraph");

    return "f(n,2) = n-1 for n <= 6 (" + fmt_int(upper_checked) +
           " n-edge graphs) and the f(2,4) = 4 gate verified";
}

// ---------------------------------------------------------------- check 8

constexpr const char* kWorkedTrace =
    "TRACE w -> (1,1,1)\n"
    "TRACE (1,1,1) -> (1,1)\n"
    "TRACE (1,1) -> (1,1,2)\n"
    "TRACE (1,1,2) -> (1,0)\n"
    "RESULT s = 10\n"
    "RESULT f(s) = 1\n"
    "RESULT path_length = 4\n";

ExplicitPoly ep(std::initializer_list<Mask> monos) {
    return ExplicitPoly{std::vector<Mask>(monos)};
}

GeneralFormPoly worked_example() {
    GeneralFormPoly g;
    g.m = 2;
    g.blocks = {Block{{ep({0b01}), ep({0b10, 0b00})}}};
    g.leftover = TermTuple{0, {0, 0}};
    return g;
}

std::vector<GeneralFormPoly> handcrafted_corpus() {
    std::vector<GeneralFormPoly> out;
    out.push_back(worked_example());

    {
        GeneralFormPoly g;
        g.m = 2;
        g.blocks = {Block{{ep({0b11})}}, Block{{ep({0b01}), ep({0b10})}},
                    Block{{ep({0b11, 0b00})}}};
        g.full_pairs = {{TermTuple{0, {0}}, TermTuple{1, {0, 0}}}};
        g.leftover = TermTuple{2, {0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 1;
        g.blocks = {Block{{ep({0b1})}}};
        g.leftover = TermTuple{0, {0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 3;
        g.blocks = {Block{{ep({0b001}), ep({0b010}), ep({0b100})}}};
        g.leftover = TermTuple{0, {0, 0, 0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 2;
        g.blocks = {Block{{ep({0b01, 0b10})}}, Block{{ep({0b01}), ep({0b10})}}};
        g.leftover = TermTuple{1, {0, 0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 4;
        g.blocks = {Block{{ep({0b0011}), ep({0b1100})}},
                    Block{{ep({0b0001}), ep({0b0010}), ep({0b1100, 0b0000})}},
                    Block{{ep({0b1111})}}};
        g.full_pairs = {{TermTuple{0, {0, 0}}, TermTuple{1, {0, 0, 0}}}};
        g.leftover = TermTuple{2, {0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 2;
        g.blocks = {Block{{ep({0b11}), ExplicitPoly{}}},
                    Block{{ep({0b01}), ep({0b10})}}};
        g.leftover = TermTuple{1, {0, 0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 5;
        g.blocks = {Block{{ep({0b00011, 0b00100}), ep({0b11000, 0b00000})}},
                    Block{{ep({0b00001}), ep({0b00010}), ep({0b00100}),
                           ep({0b01000}), ep({0b10000})}}};
        g.leftover = TermTuple{1, {0, 0, 0, 0, 0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 2;
        g.blocks = {Block{{ep({0b11})}}, Block{{ep({0b11})}},
                    Block{{ep({0b11})}}, Block{{ep({0b01}), ep({0b10})}},
                    Block{{ep({0b11, 0b00})}}};
        g.full_pairs = {{TermTuple{0, {0}}, TermTuple{1, {0}}},
                        {TermTuple{2, {0}}, TermTuple{3, {0, 0}}}};
        g.leftover = TermTuple{4, {0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 3;
        g.blocks = {Block{{ep({0b111, 0b001})}},
                    Block{{ep({0b001, 0b010}), ep({0b010, 0b100}),
                           ep({0b100, 0b001})}}};
        g.full_pairs = {{TermTuple{1, {0, 0, 0}}, TermTuple{1, {1, 1, 1}}}};
        g.leftover = TermTuple{0, {0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 12;
        g.blocks = {Block{{ep({0xFFF})}}};
        g.leftover = TermTuple{0, {0}};
        out.push_back(g);
    }
    {
        GeneralFormPoly g;
        g.m = 11;
        Block singletons;
        for (int j = 0; j < 11; ++j)
            singletons.polys.push_back(ep({Mask{1} << j}));
        g.blocks = {singletons, Block{{ep({0x7FF, 0b001})}},
                    Block{{ep({0x7FF})}}};
        g.full_pairs = {
            {TermTuple{0, std::vector<int>(11, 0)}, TermTuple{1, {0}}}};
        g.leftover = TermTuple{2, {0}};
        out.push_back(g);
    }
    return out;
}

// Exercises one instance: pairing involution on every incident (node, edge)
// pair, unmatched-iff-odd-degree, even odd-node count, and path termination.
// Returns the edge count.
std::int64_t check_ppa_instance(const GeneralFormPoly& inst) {
    const Validation val = validate_instance(inst);
    expect(val.ok, "instance invalid: " + val.certificate);

    const DegreeReport rep = enumerate_graph(inst);
    const Mask full = full_mask(inst.m);
    const std::size_t points = std::size_t{1} << inst.m;

    std::vector<PPAEdge> edges;
    std::map<TermTuple, std::vector<std::size_t>> term_edges;
    std::vector<std::vector<std::size_t>> vec_edges(points);
    std::vector<std::size_t> leaf_edges;
    for (const TermTuple& t : enumerate_terms(inst)) {
        const Mask mono = term_monomial(inst, t);
        const Mask comp = full & ~mono;
        Mask sub = 0;
        while (true) {
            const Mask s = mono | sub;
            term_edges[t].push_back(edges.size());
            vec_edges[s].push_back(edges.size());
            edges.push_back(PPAEdge{t, false, s});
            if (sub == comp) break;
            sub = (sub - comp) & comp;
        }
        if (mono == full) {
            term_edges[t].push_back(edges.size());
            leaf_edges.push_back(edges.size());
            edges.push_back(PPAEdge{t, true, 0});
        }
    }

    std::int64_t odd_nodes = 0;
    auto check_node = [&](const PPANode& v, const std::vector<std::size_t>& L,
                          std::int64_t want_deg) {
        expect(static_cast<std::int64_t>(L.size()) == want_deg,
               "incident count disagrees with the degree report");
        if (want_deg % 2 != 0) ++odd_nodes;
        int unmatched = 0;
        for (std::size_t ei : L) {
            const PPAEdge& e = edges[ei];
            const std::optional<PPAEdge> mv = mate(inst, v, e);
            if (!mv) {
                ++unmatched;
                continue;
            }
            expect(!(*mv == e), "edge paired with itself");
            switch (v.kind) {
            case PPANode::Kind::Vector:
                expect(!mv->to_leaf && mv->vec == v.vec,
                       "mate left the vector node");
                break;
            case PPANode::Kind::Term:
                expect(mv->term == v.term, "mate left the term node");
                break;
            case PPANode::Kind::Leaf:
                expect(mv->to_leaf, "mate left the leaf");
                break;
            }
            const std::optional<PPAEdge> back = mate(inst, v, *mv);
            expect(back.has_value() && *back == e, "pairing not an involution");
        }
        expect(unmatched <= 1, "more than one unmatched edge at a node");
        expect((unmatched == 1) == (want_deg % 2 != 0),
               "unmatched edge does not match degree parity");
    };

    check_node(PPANode::leaf(), leaf_edges, rep.leaf_degree);
    for (const auto& [t, L] : term_edges)
        check_node(PPANode::term_node(t), L, rep.term_degree.at(t));
    for (std::size_t s = 0; s < points; ++s) {
        check_node(PPANode::vector(static_cast<Mask>(s)), vec_edges[s],
                   rep.vector_degree[s]);
        expect(rep.vector_degree[s] % 2 ==
                   eval_general(inst, static_cast<Mask>(s)),
               "vector degree parity differs from f(s)");
    }
    expect(odd_nodes % 2 == 0, "odd number of odd-degree nodes");

    const PathResult pr = follow_path(inst);
    expect(eval_general(inst, pr.s) == 1, "path terminal has f(s) = 0");
    expect(rep.vector_degree[pr.s] % 2 != 0, "path terminal has even degree");
    return static_cast<std::int64_t>(edges.size());
}

std::string check_ppa_suite() {
    std::vector<GeneralFormPoly> corpus = handcrafted_corpus();

    std::mt19937_64 rng(0xfeedf00ddeadbeefULL);
    int made = 0, guard = 0;
    while (made < 44 && ++guard < 20000) {
        const int n = 1 + static_cast<int>(rng() % 2);
        std::vector<int> dl;
        for (int i = 0; i < n; ++i)
            dl.push_back(1 + static_cast<int>(rng() % (n == 1 ? 3 : 2)));
        std::sort(dl.begin(), dl.end(), std::greater<int>());
        std::vector<ResidueSet> Q;
        std::int64_t bound = 0;
        for (int d : dl) {
            const std::int64_t M = pow_i64(2, d);
            std::set<std::int64_t> elems = {0};
            for (std::int64_t x = 1; x < M; ++x)
                if (rng() & 1) elems.insert(x);
            ResidueSet Qi(2, d, elems);
            bound += kappa(Qi.complement());
            Q.push_back(std::move(Qi));
        }
        const int m = static_cast<int>(bound) + 1;
        if (m > 10) continue;
        std::vector<std::vector<std::int64_t>> a;
        for (std::size_t i = 0; i < dl.size(); ++i) {
            const std::int64_t M = pow_i64(2, dl[i]);
            std::vector<std::int64_t> row;
            for (int j = 0; j < m; ++j)
                row.push_back(static_cast<std::int64_t>(rng() % M));
            a.push_back(std::move(row));
        }
        const OlsonInstance oinst(2, dl, a, Q);
        GeneralFormPoly gp = build_ppa_instance(oinst);

        std::int64_t terms = 0;
        for (const Block& blk : gp.blocks) {
            std::int64_t prod = 1;
            bool empty = false;
            for (const ExplicitPoly& poly : blk.polys) {
                if (poly.monomials.empty()) empty = true;
                prod *= static_cast<std::int64_t>(poly.monomials.size());
                if (prod > 4000) break;
            }
            terms += empty ? 0 : prod;
        }
        if (terms > 4000) continue;
        std::int64_t edge_est = 0;
        for (const TermTuple& t : enumerate_terms(gp))
            edge_est +=
                std::int64_t{1} << (gp.m - mask_degree(term_monomial(gp, t)));
        if (edge_est > 60000) continue;
        corpus.push_back(std::move(gp));
        ++made;
    }
    expect(made == 44, "instance generation stalled");

    std::int64_t total_edges = 0;
    for (const GeneralFormPoly& inst : corpus)
        total_edges += check_ppa_instance(inst);

    const std::string report =
        render_ppa_report(worked_example(), follow_path(worked_example()), true);
    expect(report == kWorkedTrace, "worked-example trace differs:\n" + report);

    return fmt_int(static_cast<std::int64_t>(corpus.size())) +
           " instances, " + fmt_int(total_edges) +
           " edges; involutions, parities, and paths all check";
}

// ---------------------------------------------------------------- check 9

std::string check_explicit_cn() {
    std::mt19937_64 rng(0x0123456789abcdefULL);
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
        const int m = 1 + static_cast<int>(rng() % 16);
        IntMultiPoly f(m);
        const int nterms = static_cast<int>(rng() % 40);
        for (int i = 0; i < nterms; ++i)
            f.add(static_cast<Mask>(rng()) & full_mask(m), 1);
        if (mpz_odd_p(f.coeff(full_mask(m)).get_mpz_t()) == 0)
            f.add(full_mask(m), 1);
        const Mask s = solve_explicit_cn(f, m);
        const Int v = f.value_at(s);
        expect(mpz_odd_p(v.get_mpz_t()) != 0,
               "trial " + fmt_int(t) + ": f(s) is even");
    }
    return fmt_int(trials) + " random polynomials, every output satisfies f";
}

// --------------------------------------------------------------- check 10

std::string check_end_to_end() {
    std::mt19937_64 rng(0x5ca1ab1e0ddba11ULL);
    const int trials = 50;
    for (int t = 0; t < trials; ++t) {
        const int d = 1 + static_cast<int>(rng() % 2);
        const int n = 2 + static_cast<int>(rng() % 3);
        const std::int64_t thr = threshold(n, 2, d);
        const int m = static_cast<int>(thr) + 1 + static_cast<int>(rng() % 2);
        std::vector<std::pair<int, int>> es;
        while (static_cast<int>(es.size()) < m) {
            const int u = 1 + static_cast<int>(rng() % n);
            const int v = 1 + static_cast<int>(rng() % n);
            if (u != v) es.emplace_back(u, v);
        }
        const Graph g = make_graph(n, es);
        const std::int64_t q = pow_i64(2, d);
        for (const Engine eng : {Engine::Ppa, Engine::Brute}) {
            const std::vector<int> F = divisible_subgraph(g, d, eng);
            expect(!F.empty(), "empty subgraph");
            const std::vector<std::int64_t> deg = subgraph_degrees(g, F);
            for (int v = 1; v <= n; ++v)
                expect(deg[static_cast<std::size_t>(v - 1)] % q == 0,
                       "trial " + fmt_int(t) + ": degree not divisible");
        }
    }
    return fmt_int(trials) +
           " random graphs above threshold solved by both engines";
}

} // namespace

std::vector<CheckResult> run_acceptance_suite() {
    struct Entry {
        const char* name;
        double budget_ms;
        std::function<std::string()> body;
    };
    const Entry entries[] = {
        {"kappa-golden", 1000.0, check_kappa_golden},
        {"lift-identity", 30000.0, check_lift_identity},
        {"cover-patterns", 10000.0, check_cover_patterns},
        {"kappa-covering", 60000.0, check_kappa_covering},
        {"olson-closed-forms", 300000.0, check_olson_closed_forms},
        {"olson-upper-bound", 120000.0, check_olson_upper_bound},
        {"graph-thresholds", 120000.0, check_graph_thresholds},
        {"ppa-suite", 300000.0, check_ppa_suite},
        {"explicit-cn", 30000.0, check_explicit_cn},
        {"end-to-end-reduction", 300000.0, check_end_to_end},
    };
    std::vector<CheckResult> out;
    int idx = 0;
    for (const Entry& e : entries) {
        CheckResult r;
        r.index = ++idx;
        r.name = e.name;
        r.budget_ms = e.budget_ms;
        const auto t0 = Clock::now();
        try {
            r.detail = e.body();
            r.pass = true;
        } catch (const CheckFail& f) {
            r.pass = false;
            r.detail = f.msg;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.millis = ms_since(t0);
        if (r.pass && r.millis >= r.budget_ms) {
            r.pass = false;
            r.detail = "over budget: " + std::to_string(r.millis) + " ms";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_check_line(const CheckResult& r) {
    std::ostringstream os;
    os << '[' << std::setw(2) << r.index << "] " << std::left << std::setw(22)
       << r.name << std::right << (r.pass ? "PASS" : "FAIL") << std::fixed
       << std::setprecision(1) << std::setw(10) << r.millis << " ms  "
       << r.detail;
    return os.str();
}

} // namespace nullsolve
