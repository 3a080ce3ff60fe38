#include "nullsolve/ivpoly.hpp"

#include <string>
#include <utility>

namespace nullsolve {

IVPoly::IVPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

unsigned IVPoly::degree() const {
    return coeffs_.empty() ? 0u : static_cast<unsigned>(coeffs_.size() - 1);
}

const Int& IVPoly::coeff(unsigned r) const {
    static const Int zero = 0;
    return r < coeffs_.size() ? coeffs_[r] : zero;
}

Int IVPoly::eval(const Int& T) const {
    // Incremental falling factorial: C(T, r) = C(T, r-1) * (T - r + 1) / r.
    Int acc = 0;
    Int binom = 1;
    for (unsigned r = 0; r < coeffs_.size(); ++r) {
        if (r > 0) {
            binom *= T - static_cast<long>(r - 1);
            Int q;
            mpz_divexact_ui(q.get_mpz_t(), binom.get_mpz_t(), r);
            binom = q;
        }
        acc += coeffs_[r] * binom;
    }
    return acc;
}

namespace {

// Exact proof of the divisibility invariant. Capped p-adic valuations are
// periodic with period p^delta, and sum_i min(v_p(T - q_i), delta) >= delta
// is equivalent to p^delta | prod_i (T - q_i), so scanning one period
// settles the invariant for every integer T.
void check_divisibility(const std::vector<std::int64_t>& roots, std::int64_t p,
                        unsigned delta) {
    if (delta == 0) return;
    constexpr std::int64_t kPeriodCap = std::int64_t{1} << 22;
    std::int64_t period = 1;
    for (unsigned i = 0; i < delta; ++i) {
        period *= p;
        if (period > kPeriodCap)
            throw CapExceeded("factored polynomial validation period p^delta too large");
    }
    for (std::int64_t T = 0; T < period; ++T) {
        unsigned total = 0;
        for (std::int64_t q : roots) {
            total += static_cast<unsigned>(
                valuation_capped(T - q, p, static_cast<int>(delta)));
            if (total >= delta) break;
        }
        if (total < delta)
            throw NonIntegralResult(
                "p^delta does not divide the root product at T=" + std::to_string(T) +
                " (p=" + std::to_string(p) + ", delta=" + std::to_string(delta) + ")");
    }
}

} // namespace

FactoredIVP::FactoredIVP(std::vector<std::int64_t> roots, std::int64_t p, unsigned delta)
    : roots_(std::move(roots)), p_(p), delta_(delta) {
    if (!is_prime_i64(p_))
        throw Error("factored polynomial requires a prime p, got " + std::to_string(p_));
    check_divisibility(roots_, p_, delta_);
}

Int FactoredIVP::eval(const Int& T) const {
    Int prod = 1;
    for (std::int64_t q : roots_)
        prod *= T - q;
    if (delta_ == 0) return prod;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p_), delta_);
    if (!mpz_divisible_p(prod.get_mpz_t(), scale.get_mpz_t()))
        throw NonIntegralResult("factored polynomial value is not an integer");
    Int q;
    mpz_divexact(q.get_mpz_t(), prod.get_mpz_t(), scale.get_mpz_t());
    return q;
}

IVPoly to_binomial_basis(const FactoredIVP& h) {
    const unsigned k = h.degree();
    std::vector<Int> diffs(k + 1);
    for (unsigned t = 0; t <= k; ++t)
        diffs[t] = h.eval(static_cast<long>(t));
    std::vector<Int> coeffs;
    coeffs.reserve(k + 1);
    // alpha_r = r-th forward difference at 0
    for (unsigned r = 0; r <= k; ++r) {
        coeffs.push_back(diffs[0]);
        for (unsigned t = 0; t + r < k; ++t)
            diffs[t] = diffs[t + 1] - diffs[t];
    }
    return IVPoly(std::move(coeffs));
}

bool is_unit_at_zero(const IVPoly& h, std::int64_t p) {
    return h.coeff(0) % p != 0;
}

bool is_unit_at_zero(const FactoredIVP& h) {
    return h.eval(0) % h.p() != 0;
}

} // namespace nullsolve
