#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "nullsolve/ivpoly.hpp"

namespace nullsolve {

/// A subset of Z_{p^d}, elements kept in canonical range [0, p^d).
/// d = 0 is allowed (modulus 1, the only residue being 0); it arises from
/// the even-sum reduction and makes constraints vacuous.
class ResidueSet {
public:
    ResidueSet(std::int64_t p, int d, std::set<std::int64_t> elems);

    std::int64_t p() const { return p_; }
    int d() const { return d_; }
    std::int64_t modulus() const { return modulus_; }
    const std::set<std::int64_t>& elems() const { return elems_; }
    bool contains(std::int64_t x) const { return elems_.count(x) != 0; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    /// Z_{p^d} \ this.
    ResidueSet complement() const;

    bool operator==(const ResidueSet&) const = default;

private:
    std::int64_t p_;
    int d_;
    std::int64_t modulus_;
    std::set<std::int64_t> elems_;
};

/// A family of factored integer-valued polynomials, each a p-unit at 0,
/// used to witness an upper bound on the price of a residue set.
class CoveringFamily {
public:
    CoveringFamily(std::int64_t p, int d, std::vector<FactoredIVP> polys);

    std::int64_t p() const { return p_; }
    int d() const { return d_; }
    const std::vector<FactoredIVP>& polys() const { return polys_; }
    std::int64_t total_degree() const;

private:
    std::int64_t p_;
    int d_;
    std::vector<FactoredIVP> polys_;
};

/// The recursive covering bound kappa(B). Defined for any B (including
/// 0 in B); only the covering constructor restricts to 0 not in B.
std::int64_t kappa(const ResidueSet& B);

/// Number of distinct residues of Q modulo p. Q must be nonempty.
std::int64_t card_p(const ResidueSet& Q);

/// Polynomial covering exactly the p^r lifted classes of a complete
/// p^r-residue system q, modulo p^{r+1}: h = prod (T - q_i) / p^delta with
/// delta = sum_{j<r} p^j. Requires no q_i to be 0 mod p^{r+1}.
FactoredIVP residue_system_cover(const std::vector<std::int64_t>& q, std::int64_t p,
                                 int r);

/// The one-polynomial cover of Z_{p^d} \ Qprime where Qprime contains 0 and
/// is distinct mod p: roots are the complement, delta = sum_{r<d} (p^r - 1).
FactoredIVP alon_cover(const ResidueSet& Qprime);

/// Constructive covering of B (0 not in B) with total degree kappa(B),
/// every member a p-unit at 0.
CoveringFamily build_kappa_covering(const ResidueSet& B);

/// True iff every b in B (canonical representative) is covered by some
/// member: p | h(b).
bool covers(const CoveringFamily& H, const ResidueSet& B);

/// sigma(R) = (p-1) * sum_{r in R} p^r, for R a subset of {0..d-1}.
std::int64_t sigma(const std::set<int>& R, std::int64_t p);

/// Residues in [0, p^d) whose base-p digit is 0 at every position in R.
ResidueSet r_zero_set(const std::set<int>& R, std::int64_t p, int d);

} // namespace nullsolve
