#include "nullsolve/covering.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace nullsolve {

ResidueSet::ResidueSet(std::int64_t p, int d, std::set<std::int64_t> elems)
    : p_(p), d_(d), elems_(std::move(elems)) {
    if (!is_prime_i64(p_))
        throw Error("residue set modulus base must be prime, got " + std::to_string(p_));
    if (d_ < 0)
        throw RangeViolation("residue set exponent must be nonnegative");
    modulus_ = pow_i64(p_, d_);
    for (std::int64_t e : elems_)
        if (e < 0 || e >= modulus_)
            throw RangeViolation("residue " + std::to_string(e) +
                                 " outside canonical range [0, " +
                                 std::to_string(modulus_) + ")");
}

ResidueSet ResidueSet::complement() const {
    std::set<std::int64_t> out;
    for (std::int64_t x = 0; x < modulus_; ++x)
        if (!elems_.count(x)) out.insert(x);
    return ResidueSet(p_, d_, std::move(out));
}

CoveringFamily::CoveringFamily(std::int64_t p, int d, std::vector<FactoredIVP> polys)
    : p_(p), d_(d), polys_(std::move(polys)) {
    for (const FactoredIVP& h : polys_) {
        if (h.p() != p_)
            throw Error("covering family member has mismatched prime");
        if (!is_unit_at_zero(h))
            throw ZeroUnitViolated("covering family member is not a p-unit at 0");
    }
}

std::int64_t CoveringFamily::total_degree() const {
    std::int64_t total = 0;
    for (const FactoredIVP& h : polys_)
        total += h.degree();
    return total;
}

std::int64_t kappa(const ResidueSet& B) {
    std::int64_t total = 0;
    std::vector<std::int64_t> cur(B.elems().begin(), B.elems().end());
    for (int r = B.d() - 1; r >= 0; --r) {
        const std::int64_t pr = pow_i64(B.p(), r);
        std::int64_t k = 0;
        for (std::int64_t b : cur)
            if (b % pr == 0) ++k;
        total += k * pr;
        if (r == 0) break;
        // residues mod p^r appearing strictly more than k times
        std::map<std::int64_t, std::int64_t> count;
        for (std::int64_t b : cur)
            ++count[b % pr];
        cur.clear();
        for (auto& [residue, n] : count)
            if (n > k) cur.push_back(residue);
    }
    return total;
}

std::int64_t card_p(const ResidueSet& Q) {
    if (Q.empty())
        throw EmptySet("card_p requires a nonempty set");
    std::set<std::int64_t> residues;
    for (std::int64_t q : Q.elems())
        residues.insert(q % Q.p());
    return static_cast<std::int64_t>(residues.size());
}

FactoredIVP residue_system_cover(const std::vector<std::int64_t>& q, std::int64_t p,
                                 int r) {
    const std::int64_t pr = pow_i64(p, r);
    if (static_cast<std::int64_t>(q.size()) != pr)
        throw NotAResidueSystem("expected " + std::to_string(pr) + " lifts, got " +
                                std::to_string(q.size()));
    std::set<std::int64_t> classes;
    for (std::int64_t qi : q)
        classes.insert(mod_floor(qi, pr));
    if (static_cast<std::int64_t>(classes.size()) != pr)
        throw NotAResidueSystem("lifts do not form a complete residue system mod " +
                                std::to_string(pr));
    const std::int64_t period = pr * p;
    for (std::int64_t qi : q)
        if (mod_floor(qi, period) == 0)
            throw CoversZero("lift " + std::to_string(qi) + " is 0 mod " +
                             std::to_string(period));
    unsigned delta = 0;
    for (int j = 0; j < r; ++j)
        delta += static_cast<unsigned>(pow_i64(p, j));
    return FactoredIVP(q, p, delta);
}

FactoredIVP alon_cover(const ResidueSet& Qprime) {
    if (!Qprime.contains(0))
        throw ZeroMissing("Q' must contain 0");
    std::set<std::int64_t> residues;
    for (std::int64_t q : Qprime.elems())
        if (!residues.insert(q % Qprime.p()).second)
            throw NotDistinctModP("elements of Q' must be pairwise distinct mod p");
    std::vector<std::int64_t> roots;
    for (std::int64_t x = 0; x < Qprime.modulus(); ++x)
        if (!Qprime.contains(x)) roots.push_back(x);
    unsigned delta = 0;
    for (int r = 0; r < Qprime.d(); ++r)
        delta += static_cast<unsigned>(pow_i64(Qprime.p(), r) - 1);
    return FactoredIVP(std::move(roots), Qprime.p(), delta);
}

namespace {

// One recursion level of the kappa covering: S is a set of residues
// mod p^level, none of them 0. Emits polynomials into out.
void cover_level(const std::vector<std::int64_t>& S, std::int64_t p, int level,
                 std::vector<FactoredIVP>& out) {
    if (S.empty() || level == 0) return;
    if (level == 1) {
        for (std::int64_t b : S)
            out.push_back(FactoredIVP({b}, p, 0));
        return;
    }
    const std::int64_t prev = pow_i64(p, level - 1);
    std::vector<std::int64_t> designated; // elements divisible by p^{level-1}
    std::map<std::int64_t, std::vector<std::int64_t>> by_class;
    for (std::int64_t b : S) {
        if (b % prev == 0)
            designated.push_back(b);
        else
            by_class[b % prev].push_back(b);
    }
    const std::int64_t k = static_cast<std::int64_t>(designated.size());
    for (std::int64_t t = 0; t < k; ++t) {
        std::vector<std::int64_t> lifts;
        lifts.reserve(static_cast<std::size_t>(prev));
        lifts.push_back(designated[static_cast<std::size_t>(t)]);
        for (std::int64_t c = 1; c < prev; ++c) {
            auto it = by_class.find(c);
            if (it != by_class.end() &&
                static_cast<std::int64_t>(it->second.size()) > t)
                lifts.push_back(it->second[static_cast<std::size_t>(t)]);
            else
                lifts.push_back(c); // smallest lift of the class, nonzero mod p^level
        }
        out.push_back(residue_system_cover(lifts, p, level - 1));
    }
    std::vector<std::int64_t> next;
    for (auto& [cls, members] : by_class)
        if (static_cast<std::int64_t>(members.size()) > k)
            next.push_back(cls);
    cover_level(next, p, level - 1, out);
}

} // namespace

CoveringFamily build_kappa_covering(const ResidueSet& B) {
    if (B.contains(0))
        throw ZeroInSet("0 cannot be covered by p-units at 0");
    std::vector<FactoredIVP> polys;
    std::vector<std::int64_t> elems(B.elems().begin(), B.elems().end());
    cover_level(elems, B.p(), B.d(), polys);
    return CoveringFamily(B.p(), B.d(), std::move(polys));
}

bool covers(const CoveringFamily& H, const ResidueSet& B) {
    if (H.p() != B.p() || H.d() != B.d())
        throw Error("covering family and residue set must share p and d");
    for (std::int64_t b : B.elems()) {
        bool hit = false;
        for (const FactoredIVP& h : H.polys()) {
            if (h.eval(b) % H.p() == 0) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

std::int64_t sigma(const std::set<int>& R, std::int64_t p) {
    std::int64_t total = 0;
    for (int r : R) {
        if (r < 0)
            throw RangeViolation("digit positions must be nonnegative");
        total += (p - 1) * pow_i64(p, r);
    }
    return total;
}

ResidueSet r_zero_set(const std::set<int>& R, std::int64_t p, int d) {
    for (int r : R)
        if (r < 0 || r >= d)
            throw RangeViolation("digit position " + std::to_string(r) +
                                 " outside {0.." + std::to_string(d - 1) + "}");
    const std::int64_t modulus = pow_i64(p, d);
    std::set<std::int64_t> elems;
    for (std::int64_t c = 0; c < modulus; ++c) {
        bool ok = true;
        for (int r : R) {
            if ((c / pow_i64(p, r)) % p != 0) {
                ok = false;
                break;
            }
        }
        if (ok) elems.insert(c);
    }
    return ResidueSet(p, d, std::move(elems));
}

} // namespace nullsolve
