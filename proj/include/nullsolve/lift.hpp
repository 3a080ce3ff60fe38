#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nullsolve/covering.hpp"
#include "nullsolve/ivpoly.hpp"

namespace nullsolve {

/// A multilinear monomial over variables x_1..x_m, encoded as a bitmask:
/// bit j-1 set means x_j is present. The empty mask is the constant 1.
using Mask = std::uint32_t;

/// Variable count cap imposed by the Mask encoding and by 2^m enumeration.
constexpr int kMaxVars = 24;

inline Mask full_mask(int m) { return m == 0 ? 0u : (Mask{1} << m) - 1u; }
inline int mask_degree(Mask mono) { return __builtin_popcount(mono); }

/// Sum of coefficient-1 monomials; duplicates encode integer coefficients.
/// Value at x in {0,1}^m equals the number of terms evaluating to 1.
struct UnitSumPoly {
    int m = 0;
    std::vector<Mask> terms;

    /// Number of terms whose monomial divides s (i.e. evaluates to 1 at s).
    std::int64_t value_at(Mask s) const;
    /// Largest monomial degree among the terms (0 for the empty sum).
    int degree() const;

    bool operator==(const UnitSumPoly&) const = default;
};

/// Multilinear polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class IntMultiPoly {
public:
    explicit IntMultiPoly(int m) : m_(m) {}
    IntMultiPoly(int m, std::map<Mask, Int> coeffs);

    int m() const { return m_; }
    const std::map<Mask, Int>& coeffs() const { return coeffs_; }
    const Int& coeff(Mask mono) const;
    /// Adds c to the coefficient of mono, erasing it if it becomes 0.
    void add(Mask mono, const Int& c);
    /// Largest monomial degree with nonzero coefficient (0 if empty).
    int degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    Int value_at(Mask s) const;
    /// Values at all 2^m points, indexed by point mask (subset-sum transform).
    std::vector<Int> values_on_cube() const;

    /// Coefficient-wise reduction into [0, p).
    void reduce_mod(std::int64_t p);

    bool operator==(const IntMultiPoly&) const = default;

private:
    int m_;
    std::map<Mask, Int> coeffs_;
};

IntMultiPoly operator*(const IntMultiPoly& a, const IntMultiPoly& b);

/// Expands the linear form sum_j coefs[j]*x_j into a UnitSumPoly: each
/// coefficient is reduced to canonical [0, modulus) and the monomial {j}
/// repeated that many times.
UnitSumPoly expand_to_unit_monomials(const std::vector<std::int64_t>& coefs,
                                     std::int64_t modulus);

/// Elementary symmetric lift: sum over all r-subsets of term products,
/// multilinear-reduced. Value at s equals C(f(s), r).
IntMultiPoly psi_r(const UnitSumPoly& f, unsigned r);

/// Binomial-basis lift sum_r alpha_r * psi_r(f, r); value at s equals
/// h(f(s)) for every s in {0,1}^m.
IntMultiPoly psi_h(const UnitSumPoly& f, const IVPoly& h);

/// The constraint polynomial over F_p:
///   f = prod_i prod_{h in H_i} Psi^h(f_i)  -  c * prod_j (1 - x_j),
/// with c the value of the product part at 0. Requires the strict degree
/// bound m > sum_i deg(f_i) * total_degree(H_i). The result satisfies
/// f(0) = 0 and has full-monomial coefficient -c*(-1)^m != 0 mod p.
std::pair<IntMultiPoly, std::int64_t>
build_main_polynomial(int m, const std::vector<UnitSumPoly>& fs,
                      const std::vector<CoveringFamily>& Hs, std::int64_t p);

/// Finds s with f(s) != 0 over F_2 by m successive substitutions, each
/// keeping the full-monomial coefficient of the remaining variables odd.
/// Requires an odd coefficient of x_1...x_m.
Mask solve_explicit_cn(const IntMultiPoly& f, int m);

/// The feasible nonzero s whose support {j : s_j = 1} is lexicographically
/// smallest as an ascending index list ({1} < {1,2} < {2}), or nullopt when
/// no s satisfies f_i(s) mod p^{d_i} in Q_i for all i.
std::optional<Mask> brute_force_cn(int m, const std::vector<UnitSumPoly>& fs,
                                   const std::vector<ResidueSet>& Qs);

/// Ascending-index-list lexicographic order on supports; the empty set is
/// a prefix of (hence smaller than) everything.
bool subset_lex_less(Mask a, Mask b);

} // namespace nullsolve
