#include "nullsolve/lift.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace nullsolve {

std::int64_t UnitSumPoly::value_at(Mask s) const {
    std::int64_t v = 0;
    for (Mask t : terms)
        if ((t & ~s) == 0) ++v;
    return v;
}

int UnitSumPoly::degree() const {
    int d = 0;
    for (Mask t : terms)
        d = std::max(d, mask_degree(t));
    return d;
}

IntMultiPoly::IntMultiPoly(int m, std::map<Mask, Int> coeffs)
    : m_(m), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

const Int& IntMultiPoly::coeff(Mask mono) const {
    static const Int zero = 0;
    auto it = coeffs_.find(mono);
    return it == coeffs_.end() ? zero : it->second;
}

void IntMultiPoly::add(Mask mono, const Int& c) {
    auto [it, inserted] = coeffs_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    } else if (it->second == 0) {
        coeffs_.erase(it);
    }
}

int IntMultiPoly::degree() const {
    int d = 0;
    for (const auto& [mono, c] : coeffs_)
        d = std::max(d, mask_degree(mono));
    return d;
}

Int IntMultiPoly::value_at(Mask s) const {
    Int v = 0;
    for (const auto& [mono, c] : coeffs_)
        if ((mono & ~s) == 0) v += c;
    return v;
}

std::vector<Int> IntMultiPoly::values_on_cube() const {
    const std::size_t size = std::size_t{1} << m_;
    std::vector<Int> vals(size, Int(0));
    for (const auto& [mono, c] : coeffs_)
        vals[mono] += c;
    // subset-sum (zeta) transform: vals[s] = sum over monomials dividing s
    for (int j = 0; j < m_; ++j) {
        const Mask bit = Mask{1} << j;
        for (Mask s = 0; s < size; ++s)
            if (s & bit) vals[s] += vals[s ^ bit];
    }
    return vals;
}

void IntMultiPoly::reduce_mod(std::int64_t p) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        Int r;
        mpz_mod_ui(r.get_mpz_t(), it->second.get_mpz_t(),
                   static_cast<unsigned long>(p));
        if (r == 0) {
            it = coeffs_.erase(it);
        } else {
            it->second = r;
            ++it;
        }
    }
}

IntMultiPoly operator*(const IntMultiPoly& a, const IntMultiPoly& b) {
    IntMultiPoly out(a.m());
    for (const auto& [ma, ca] : a.coeffs())
        for (const auto& [mb, cb] : b.coeffs())
            out.add(ma | mb, ca * cb);
    return out;
}

UnitSumPoly expand_to_unit_monomials(const std::vector<std::int64_t>& coefs,
                                     std::int64_t modulus) {
    if (modulus < 1)
        throw Error("modulus must be >= 1");
    UnitSumPoly f;
    f.m = static_cast<int>(coefs.size());
    if (f.m > kMaxVars)
        throw CapExceeded("variable count exceeds the mask encoding cap");
    for (int j = 0; j < f.m; ++j) {
        const std::int64_t a = mod_floor(coefs[static_cast<std::size_t>(j)], modulus);
        for (std::int64_t t = 0; t < a; ++t)
            f.terms.push_back(Mask{1} << j);
    }
    return f;
}

namespace {

// Elementary-symmetric DP over the term list: after processing terms
// t_1..t_l, E[r] = sum over r-subsets of their monomial products.
std::vector<IntMultiPoly> elementary_lifts(const UnitSumPoly& f, unsigned rmax) {
    std::vector<IntMultiPoly> E;
    E.reserve(rmax + 1);
    for (unsigned r = 0; r <= rmax; ++r)
        E.emplace_back(f.m);
    E[0].add(0, 1);
    unsigned processed = 0;
    for (Mask t : f.terms) {
        ++processed;
        const unsigned hi = std::min(rmax, processed);
        for (unsigned r = hi; r >= 1; --r)
            for (const auto& [mono, c] : E[r - 1].coeffs())
                E[r].add(mono | t, c);
    }
    return E;
}

} // namespace

IntMultiPoly psi_r(const UnitSumPoly& f, unsigned r) {
    return std::move(elementary_lifts(f, r)[r]);
}

IntMultiPoly psi_h(const UnitSumPoly& f, const IVPoly& h) {
    std::vector<IntMultiPoly> E = elementary_lifts(f, h.degree());
    IntMultiPoly out(f.m);
    for (unsigned r = 0; r <= h.degree(); ++r) {
        const Int& alpha = h.coeff(r);
        if (alpha == 0) continue;
        for (const auto& [mono, c] : E[r].coeffs())
            out.add(mono, alpha * c);
    }
    return out;
}

std::pair<IntMultiPoly, std::int64_t>
build_main_polynomial(int m, const std::vector<UnitSumPoly>& fs,
                      const std::vector<CoveringFamily>& Hs, std::int64_t p) {
    if (fs.size() != Hs.size())
        throw Error("constraint polynomials and covering families must align");
    if (m < 1 || m > kMaxVars)
        throw CapExceeded("variable count out of range");
    std::int64_t bound = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].m != m)
            throw Error("constraint polynomial has mismatched variable count");
        bound += static_cast<std::int64_t>(fs[i].degree()) * Hs[i].total_degree();
    }
    if (m <= bound)
        throw DegreeBoundViolated("need m > " + std::to_string(bound) +
                                  " (total constraint degree), got m = " +
                                  std::to_string(m));
    IntMultiPoly prod(m);
    prod.add(0, 1);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (const FactoredIVP& h : Hs[i].polys()) {
            IntMultiPoly lifted = psi_h(fs[i], to_binomial_basis(h));
            lifted.reduce_mod(p);
            prod = prod * lifted;
            prod.reduce_mod(p);
        }
    }
    const Int& c0 = prod.coeff(0);
    const std::int64_t c = mpz_get_si(c0.get_mpz_t());
    if (c == 0)
        throw ZeroUnitViolated("product part vanishes at 0 mod p");
    // subtract c * prod_j (1 - x_j) = c * sum_S (-1)^{|S|} x_S
    const Mask full = full_mask(m);
    for (Mask S = 0;; ++S) {
        prod.add(S, mask_degree(S) % 2 == 0 ? Int(-c) : Int(c));
        if (S == full) break;
    }
    prod.reduce_mod(p);
    return {std::move(prod), c};
}

Mask solve_explicit_cn(const IntMultiPoly& f, int m) {
    if (m < 0 || m > kMaxVars)
        throw CapExceeded("variable count out of range");
    std::set<Mask> cur;
    for (const auto& [mono, c] : f.coeffs())
        if (mpz_odd_p(c.get_mpz_t())) cur.insert(mono);
    if (!cur.count(full_mask(m)))
        throw FullCoefficientZero("coefficient of x_1...x_m is even");
    Mask s = 0;
    for (int j = 1; j <= m; ++j) {
        const Mask bit = Mask{1} << (j - 1);
        const Mask tail = full_mask(m) & ~((bit << 1) - 1);
        // Exactly one of the substitutions x_j = 0 / x_j = 1 keeps the
        // coefficient of x_{j+1}...x_m odd, because the full coefficient is.
        std::set<Mask> next;
        if (cur.count(tail)) {
            for (Mask mono : cur)
                if (!(mono & bit)) next.insert(mono);
        } else {
            s |= bit;
            for (Mask mono : cur) {
                const Mask reduced = mono & ~bit;
                if (!next.insert(reduced).second) next.erase(reduced);
            }
        }
        cur = std::move(next);
    }
    if (!cur.count(0))
        throw Error("explicit solver lost the constant term (internal bug)");
    return s;
}

bool subset_lex_less(Mask a, Mask b) {
    if (a == b) return false;
    if (a == 0) return true;
    if (b == 0) return false;
    const Mask diff = a ^ b;
    const Mask low = diff & (~diff + 1);
    const Mask above = ~((low << 1) - 1); // bits strictly above the first difference
    if (a & low) return (b & above) != 0;
    return (a & above) == 0;
}

std::optional<Mask> brute_force_cn(int m, const std::vector<UnitSumPoly>& fs,
                                   const std::vector<ResidueSet>& Qs) {
    if (fs.size() != Qs.size())
        throw Error("constraint polynomials and target sets must align");
    if (m < 1 || m > kMaxVars)
        throw CapExceeded("brute-force enumeration capped at 24 variables");
    const std::size_t size = std::size_t{1} << m;
    std::vector<char> ok(size, 1);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].m != m)
            throw Error("constraint polynomial has mismatched variable count");
        const std::int64_t modulus = Qs[i].modulus();
        std::vector<char> inQ(static_cast<std::size_t>(modulus), 0);
        for (std::int64_t q : Qs[i].elems())
            inQ[static_cast<std::size_t>(q)] = 1;
        std::vector<std::int32_t> cnt(size, 0);
        for (Mask t : fs[i].terms)
            ++cnt[t];
        for (int j = 0; j < m; ++j) {
            const Mask bit = Mask{1} << j;
            for (Mask sPt = 0; sPt < size; ++sPt)
                if (sPt & bit) cnt[sPt] += cnt[sPt ^ bit];
        }
        for (std::size_t sPt = 0; sPt < size; ++sPt)
            ok[sPt] &= inQ[static_cast<std::size_t>(cnt[sPt] % modulus)];
    }
    bool found = false;
    Mask best = 0;
    for (std::size_t sPt = 1; sPt < size; ++sPt) {
        if (!ok[sPt]) continue;
        const Mask cand = static_cast<Mask>(sPt);
        if (!found || subset_lex_less(cand, best)) {
            found = true;
            best = cand;
        }
    }
    if (!found) return std::nullopt;
    return best;
}

} // namespace nullsolve
