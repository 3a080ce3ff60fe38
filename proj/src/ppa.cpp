#include "nullsolve/ppa.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nullsolve {

int ExplicitPoly::degree() const {
    int d = 0;
    for (Mask mono : monomials)
        d = std::max(d, mask_degree(mono));
    return d;
}

int ExplicitPoly::value_at(Mask s) const {
    int v = 0;
    for (Mask mono : monomials)
        if ((mono & ~s) == 0) v ^= 1;
    return v;
}

namespace {

std::string tuple_str(const TermTuple& t) {
    std::ostringstream os;
    os << '(' << t.block + 1;
    for (int a : t.choice)
        os << ',' << a + 1;
    os << ')';
    return os.str();
}

bool tuple_valid(const GeneralFormPoly& inst, const TermTuple& t) {
    if (t.block < 0 || t.block >= static_cast<int>(inst.blocks.size()))
        return false;
    const Block& blk = inst.blocks[static_cast<std::size_t>(t.block)];
    if (t.choice.size() != blk.polys.size())
        return false;
    for (std::size_t j = 0; j < blk.polys.size(); ++j)
        if (t.choice[j] < 0 ||
            t.choice[j] >= static_cast<int>(blk.polys[j].monomials.size()))
            return false;
    return true;
}

void require_tuple(const GeneralFormPoly& inst, const TermTuple& t) {
    if (!tuple_valid(inst, t))
        throw MalformedNode("term tuple " + tuple_str(t) +
                            " is out of range for the instance");
}

// Indices (ascending) of the monomials of p_{ij} that evaluate to 1 at x.
std::vector<int> ones_list(const Block& blk, std::size_t j, Mask x) {
    std::vector<int> out;
    const auto& monos = blk.polys[j].monomials;
    for (int a = 0; a < static_cast<int>(monos.size()); ++a)
        if ((monos[static_cast<std::size_t>(a)] & ~x) == 0) out.push_back(a);
    return out;
}

int block_value(const Block& blk, Mask x) {
    for (const ExplicitPoly& poly : blk.polys)
        if (poly.value_at(x) == 0) return 0;
    return 1;
}

} // namespace

Mask term_monomial(const GeneralFormPoly& inst, const TermTuple& t) {
    require_tuple(inst, t);
    const Block& blk = inst.blocks[static_cast<std::size_t>(t.block)];
    Mask mono = 0;
    for (std::size_t j = 0; j < blk.polys.size(); ++j)
        mono |= blk.polys[j].monomials[static_cast<std::size_t>(t.choice[j])];
    return mono;
}

int eval_general(const GeneralFormPoly& inst, Mask s) {
    int v = 0;
    for (const Block& blk : inst.blocks)
        v ^= block_value(blk, s);
    return v;
}

bool is_edge(const GeneralFormPoly& inst, const PPANode& u, const PPANode& v) {
    const PPANode* term = nullptr;
    const PPANode* other = nullptr;
    if (u.kind == PPANode::Kind::Term) {
        term = &u;
        other = &v;
    } else if (v.kind == PPANode::Kind::Term) {
        term = &v;
        other = &u;
    } else {
        return false;
    }
    if (other->kind == PPANode::Kind::Term) return false;
    const Mask mono = term_monomial(inst, term->term);
    if (other->kind == PPANode::Kind::Leaf)
        return mono == full_mask(inst.m);
    if (other->vec & ~full_mask(inst.m))
        throw MalformedNode("vector node outside {0,1}^m");
    return (mono & ~other->vec) == 0;
}

std::optional<PPAEdge> mate(const GeneralFormPoly& inst, const PPANode& v,
                            const PPAEdge& e) {
    require_tuple(inst, e.term);
    const Mask full = full_mask(inst.m);
    const Mask mono = term_monomial(inst, e.term);

    // e must be an actual edge of the graph...
    if (e.to_leaf) {
        if (mono != full)
            throw NotIncident("leaf edge requires the full monomial, got term " +
                              tuple_str(e.term));
    } else {
        if (e.vec & ~full)
            throw MalformedNode("vector endpoint outside {0,1}^m");
        if (mono & ~e.vec)
            throw NotIncident("term " + tuple_str(e.term) +
                              " does not evaluate to 1 at the vector endpoint");
    }
    // ...and v must be one of its two endpoints.
    const bool v_is_term =
        v.kind == PPANode::Kind::Term && v.term == e.term;
    const bool v_is_other =
        e.to_leaf ? v.kind == PPANode::Kind::Leaf
                  : (v.kind == PPANode::Kind::Vector && v.vec == e.vec);
    if (!v_is_term && !v_is_other)
        throw NotIncident("edge is not incident to the given node");

    if (v_is_term) {
        if (mono == full) {
            // The full term's two neighbors (all-ones vector, leaf) are mates.
            if (e.to_leaf) return PPAEdge{e.term, false, full};
            return PPAEdge{e.term, true, 0};
        }
        // Flip the smallest variable index absent from the monomial.
        const Mask absent = full & ~mono;
        const Mask bit = absent & (~absent + 1);
        return PPAEdge{e.term, false, e.vec ^ bit};
    }

    if (v.kind == PPANode::Kind::Leaf) {
        if (!inst.leftover)
            throw InvalidInstance("no designated leftover occurrence");
        if (e.term == *inst.leftover) return std::nullopt;
        for (const auto& [a, b] : inst.full_pairs) {
            if (e.term == a) return PPAEdge{b, true, 0};
            if (e.term == b) return PPAEdge{a, true, 0};
        }
        throw InvalidInstance("full-monomial occurrence " + tuple_str(e.term) +
                              " is absent from the pairing");
    }

    // v is the vector x; pair within e.term's block, or across blocks.
    const Mask x = v.vec;
    const int i = e.term.block;
    const Block& blk = inst.blocks[static_cast<std::size_t>(i)];
    const std::size_t mi = blk.polys.size();
    std::vector<std::vector<int>> ones(mi);
    bool block_one = true;
    for (std::size_t j = 0; j < mi; ++j) {
        ones[j] = ones_list(blk, j, x);
        if (ones[j].size() % 2 == 0) block_one = false;
    }

    if (!block_one) {
        // Zero factor with the smallest index; its value-1 monomials pair
        // consecutively (1st-2nd, 3rd-4th, ...), an even count.
        std::size_t jz = 0;
        while (ones[jz].size() % 2 != 0) ++jz;
        const auto& lst = ones[jz];
        const auto it = std::find(lst.begin(), lst.end(), e.term.choice[jz]);
        const std::size_t pos = static_cast<std::size_t>(it - lst.begin());
        TermTuple t = e.term;
        t.choice[jz] = lst[pos ^ 1];
        return PPAEdge{std::move(t), false, x};
    }

    // Block value 1: every factor has an odd count; the leftover of each
    // consecutive pairing is the last value-1 index, omega_{ij}.
    std::vector<int> omega(mi);
    for (std::size_t j = 0; j < mi; ++j)
        omega[j] = ones[j].back();
    if (e.term.choice != omega) {
        std::size_t jd = 0;
        while (e.term.choice[jd] == omega[jd]) ++jd;
        const auto& lst = ones[jd];
        const auto it = std::find(lst.begin(), lst.end(), e.term.choice[jd]);
        const std::size_t pos = static_cast<std::size_t>(it - lst.begin());
        TermTuple t = e.term;
        t.choice[jd] = lst[pos ^ 1];
        return PPAEdge{std::move(t), false, x};
    }

    // The omega-tuple of its block: pair value-1 blocks consecutively; the
    // leftover block (odd count, i.e. f(x) = 1) carries the unmatched edge.
    std::vector<int> live;
    for (int b = 0; b < static_cast<int>(inst.blocks.size()); ++b)
        if (block_value(inst.blocks[static_cast<std::size_t>(b)], x) == 1)
            live.push_back(b);
    const auto it = std::find(live.begin(), live.end(), i);
    const std::size_t pos = static_cast<std::size_t>(it - live.begin());
    if (pos + 1 == live.size() && live.size() % 2 != 0)
        return std::nullopt;
    const int ib = live[pos ^ 1];
    const Block& oblk = inst.blocks[static_cast<std::size_t>(ib)];
    TermTuple t;
    t.block = ib;
    t.choice.resize(oblk.polys.size());
    for (std::size_t j = 0; j < oblk.polys.size(); ++j)
        t.choice[j] = ones_list(oblk, j, x).back();
    return PPAEdge{std::move(t), false, x};
}

std::vector<TermTuple> enumerate_terms(const GeneralFormPoly& inst) {
    std::vector<TermTuple> out;
    for (int i = 0; i < static_cast<int>(inst.blocks.size()); ++i) {
        const Block& blk = inst.blocks[static_cast<std::size_t>(i)];
        TermTuple t;
        t.block = i;
        t.choice.assign(blk.polys.size(), 0);
        bool any_empty = false;
        for (const ExplicitPoly& poly : blk.polys)
            if (poly.monomials.empty()) any_empty = true;
        if (any_empty) continue;
        while (true) {
            out.push_back(t);
            std::size_t j = blk.polys.size();
            while (j > 0) {
                --j;
                if (++t.choice[j] <
                    static_cast<int>(blk.polys[j].monomials.size()))
                    break;
                t.choice[j] = 0;
                if (j == 0) goto next_block;
            }
            if (blk.polys.empty()) break;
        }
    next_block:;
    }
    return out;
}

std::vector<TermTuple> full_occurrences(const GeneralFormPoly& inst) {
    std::vector<TermTuple> out;
    const Mask full = full_mask(inst.m);
    for (int i = 0; i < static_cast<int>(inst.blocks.size()); ++i) {
        const Block& blk = inst.blocks[static_cast<std::size_t>(i)];
        const std::size_t mi = blk.polys.size();
        // suffix degree budget for pruning
        std::vector<int> budget(mi + 1, 0);
        for (std::size_t j = mi; j > 0; --j)
            budget[j - 1] = budget[j] + blk.polys[j - 1].degree();
        TermTuple t;
        t.block = i;
        t.choice.assign(mi, 0);
        auto dfs = [&](auto&& self, std::size_t j, Mask acc) -> void {
            if (mask_degree(full & ~acc) > budget[j]) return;
            if (j == mi) {
                if (acc == full) out.push_back(t);
                return;
            }
            const auto& monos = blk.polys[j].monomials;
            for (int a = 0; a < static_cast<int>(monos.size()); ++a) {
                t.choice[j] = a;
                self(self, j + 1, acc | monos[static_cast<std::size_t>(a)]);
            }
            t.choice[j] = 0;
        };
        dfs(dfs, 0, 0);
    }
    return out;
}

void infer_full_pairing(GeneralFormPoly& inst) {
    if (inst.leftover) return;
    std::vector<TermTuple> occ = full_occurrences(inst);
    if (occ.size() == 1) {
        inst.full_pairs.clear();
        inst.leftover = occ.front();
    }
}

Validation validate_instance(const GeneralFormPoly& inst) {
    if (inst.m < 0 || inst.m > kMaxVars)
        return {false, "variable count out of range"};
    const Mask full = full_mask(inst.m);
    for (std::size_t i = 0; i < inst.blocks.size(); ++i) {
        int total = 0;
        for (const ExplicitPoly& poly : inst.blocks[i].polys) {
            for (Mask mono : poly.monomials)
                if (mono & ~full)
                    return {false, "block " + std::to_string(i + 1) +
                                       ": monomial outside x_1..x_m"};
            total += poly.degree();
        }
        if (total > inst.m)
            return {false, "block " + std::to_string(i + 1) + ": total degree " +
                               std::to_string(total) + " > " +
                               std::to_string(inst.m)};
    }
    std::vector<TermTuple> occ = full_occurrences(inst);
    if (!inst.leftover) {
        if (occ.size() >= 2)
            return {false, "unpaired full-monomial occurrences " +
                               tuple_str(occ[0]) + " and " + tuple_str(occ[1])};
        if (occ.size() == 1)
            return {false, "designated leftover occurrence missing"};
        return {false, "no full-monomial occurrence"};
    }
    std::vector<TermTuple> claimed;
    for (const auto& [a, b] : inst.full_pairs) {
        if (a == b)
            return {false, "occurrence " + tuple_str(a) + " paired with itself"};
        claimed.push_back(a);
        claimed.push_back(b);
    }
    claimed.push_back(*inst.leftover);
    for (const TermTuple& t : claimed) {
        if (!tuple_valid(inst, t))
            return {false, "pairing lists malformed tuple " + tuple_str(t)};
        if (term_monomial(inst, t) != full)
            return {false,
                    "pairing lists non-full occurrence " + tuple_str(t)};
    }
    std::vector<TermTuple> sorted_claimed = claimed;
    std::sort(sorted_claimed.begin(), sorted_claimed.end());
    for (std::size_t idx = 1; idx < sorted_claimed.size(); ++idx)
        if (sorted_claimed[idx] == sorted_claimed[idx - 1])
            return {false, "occurrence " + tuple_str(sorted_claimed[idx]) +
                               " listed twice in the pairing"};
    std::vector<TermTuple> sorted_occ = occ;
    std::sort(sorted_occ.begin(), sorted_occ.end());
    if (sorted_claimed != sorted_occ) {
        for (const TermTuple& t : sorted_occ)
            if (!std::binary_search(sorted_claimed.begin(), sorted_claimed.end(),
                                    t))
                return {false, "occurrence " + tuple_str(t) +
                                   " missing from the pairing"};
        for (const TermTuple& t : sorted_claimed)
            if (!std::binary_search(sorted_occ.begin(), sorted_occ.end(), t))
                return {false, "pairing lists unknown occurrence " +
                                   tuple_str(t)};
    }
    return {};
}

PathResult follow_path(const GeneralFormPoly& inst, std::int64_t step_cap) {
    Validation val = validate_instance(inst);
    if (!val.ok)
        throw InvalidInstance(val.certificate);
    if (step_cap <= 0) {
        // A correct pairing walk never revisits an arrival state, so it takes
        // at most two steps per graph edge; edges number at most
        // (term count) * (2^m + 1). Anything past that bound is a bug.
        const std::int64_t lim = std::int64_t{1} << 62;
        auto mul_clamp = [lim](std::int64_t a, std::int64_t b) {
            return (b != 0 && a > lim / b) ? lim : a * b;
        };
        std::int64_t terms = 0;
        for (const Block& blk : inst.blocks) {
            std::int64_t prod = 1;
            bool empty = false;
            for (const ExplicitPoly& poly : blk.polys) {
                if (poly.monomials.empty()) {
                    empty = true;
                    break;
                }
                prod = mul_clamp(
                    prod, static_cast<std::int64_t>(poly.monomials.size()));
            }
            if (!empty) terms = std::min(lim, terms + prod);
        }
        const std::int64_t points = std::int64_t{1} << inst.m;
        step_cap = mul_clamp(mul_clamp(terms, points + 1), 2);
        step_cap = step_cap > lim - 8 ? lim : step_cap + 8;
        step_cap = std::max(step_cap,
                            std::int64_t{1} << std::min(inst.m + 4, 62));
    }
    PathResult res;
    PPANode cur = PPANode::leaf();
    res.nodes.push_back(cur);
    PPAEdge e{*inst.leftover, true, 0};
    std::set<std::string> seen; // arrival states; a revisit means a broken involution
    while (true) {
        // cross e away from cur
        PPANode tn = PPANode::term_node(e.term);
        if (cur == tn)
            cur = e.to_leaf ? PPANode::leaf() : PPANode::vector(e.vec);
        else
            cur = std::move(tn);
        res.nodes.push_back(cur);
        ++res.length;
        if (res.length > step_cap)
            throw StepCapExceeded("path exceeded the step cap of " +
                                  std::to_string(step_cap));
        if (seen.size() < (std::size_t{1} << 22)) {
            // bounded revisit check; past this size the step cap still guards
            std::string state = node_str(cur, inst.m) + '|' + tuple_str(e.term) +
                                (e.to_leaf ? "|w" : '|' + node_str(PPANode::vector(e.vec), inst.m));
            if (!seen.insert(std::move(state)).second)
                throw Error("path revisited an arrival state (broken involution)");
        }
        std::optional<PPAEdge> next = mate(inst, cur, e);
        if (!next) break;
        e = std::move(*next);
    }
    if (cur.kind != PPANode::Kind::Vector)
        throw Error("path terminated at a non-vector node (internal bug)");
    res.s = cur.vec;
    if (eval_general(inst, res.s) == 0)
        throw Error("terminal vector does not satisfy f(s) != 0 (internal bug)");
    return res;
}

DegreeReport enumerate_graph(const GeneralFormPoly& inst) {
    if (inst.m > 12)
        throw CapExceeded("adjacency enumeration capped at 12 variables");
    const std::size_t points = std::size_t{1} << inst.m;
    std::vector<TermTuple> terms = enumerate_terms(inst);
    if (terms.size() * points > 50'000'000)
        throw CapExceeded("adjacency enumeration too large");
    DegreeReport rep;
    rep.vector_degree.assign(points, 0);
    const Mask full = full_mask(inst.m);
    for (const TermTuple& t : terms) {
        std::int64_t deg = 0;
        const Mask mono = term_monomial(inst, t);
        for (std::size_t s = 0; s < points; ++s) {
            if ((mono & ~static_cast<Mask>(s)) == 0) {
                ++rep.vector_degree[s];
                ++deg;
            }
        }
        if (mono == full) {
            ++rep.leaf_degree;
            ++deg;
        }
        rep.term_degree.emplace(t, deg);
    }
    return rep;
}

std::string node_str(const PPANode& v, int m) {
    switch (v.kind) {
    case PPANode::Kind::Leaf:
        return "w";
    case PPANode::Kind::Term:
        return tuple_str(v.term);
    case PPANode::Kind::Vector: {
        std::ostringstream os;
        os << '(';
        for (int j = 0; j < m; ++j) {
            if (j) os << ',';
            os << ((v.vec >> j) & 1);
        }
        os << ')';
        return os.str();
    }
    }
    return {};
}

std::string render_ppa_report(const GeneralFormPoly& inst,
                              const PathResult& path, bool trace) {
    std::ostringstream os;
    if (trace)
        for (std::size_t i = 1; i < path.nodes.size(); ++i)
            os << "TRACE " << node_str(path.nodes[i - 1], inst.m) << " -> "
               << node_str(path.nodes[i], inst.m) << '\n';
    os << "RESULT s = ";
    for (int j = 0; j < inst.m; ++j)
        os << ((path.s >> j) & 1);
    os << '\n';
    os << "RESULT f(s) = " << eval_general(inst, path.s) << '\n';
    os << "RESULT path_length = " << path.length << '\n';
    return os.str();
}

} // namespace nullsolve
