#pragma once

#include <cstdint>
#include <vector>

#include "nullsolve/numeric.hpp"

namespace nullsolve {

/// Univariate integer-valued polynomial in the binomial-coefficient basis:
/// h(x) = sum_r coeff[r] * C(x, r). Integrality at every integer argument is
/// automatic in this basis. All coefficients are exact integers.
class IVPoly {
public:
    IVPoly() = default;
    explicit IVPoly(std::vector<Int> coeffs);

    /// Largest index with a nonzero coefficient; 0 for the zero polynomial.
    unsigned degree() const;

    /// Binomial-basis coefficient alpha_r (0 beyond the stored range).
    const Int& coeff(unsigned r) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Exact evaluation; C(T, r) uses the falling-factorial extension,
    /// so negative T is fine.
    Int eval(const Int& T) const;

    bool operator==(const IVPoly&) const = default;

private:
    std::vector<Int> coeffs_; // trailing zeros stripped; empty == zero poly
};

/// Integer-valued polynomial in scaled product form:
/// h(T) = prod_i (T - root_i) / p^delta.
/// The constructor proves the divisibility invariant (p^delta divides the
/// product at every integer T) by an exact finite check, so eval() cannot
/// fail on a constructed value.
class FactoredIVP {
public:
    FactoredIVP(std::vector<std::int64_t> roots, std::int64_t p, unsigned delta);

    const std::vector<std::int64_t>& roots() const { return roots_; }
    std::int64_t p() const { return p_; }
    unsigned delta() const { return delta_; }
    unsigned degree() const { return static_cast<unsigned>(roots_.size()); }

    /// prod (T - root_i) / p^delta, exact.
    Int eval(const Int& T) const;

private:
    std::vector<std::int64_t> roots_;
    std::int64_t p_;
    unsigned delta_;
};

/// Gregory-Newton conversion: coefficients are the forward differences of h
/// at 0. The result evaluates identically to h at every integer.
IVPoly to_binomial_basis(const FactoredIVP& h);

/// True iff p does not divide h(0).
bool is_unit_at_zero(const IVPoly& h, std::int64_t p);
bool is_unit_at_zero(const FactoredIVP& h);

} // namespace nullsolve
