#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "nullsolve/errors.hpp"

namespace nullsolve {

/// Exact arbitrary-precision integer. All polynomial values and
/// coefficients in this library are Int; no floating point anywhere.
using Int = mpz_class;

/// p^e for small moduli; throws CapExceeded on int64 overflow.
std::int64_t pow_i64(std::int64_t base, int exp);

/// Trial-division primality for desk-scale moduli.
bool is_prime_i64(std::int64_t n);

/// Canonical residue of a in [0, mod); mod >= 1.
std::int64_t mod_floor(std::int64_t a, std::int64_t mod);

/// p-adic valuation of x, capped at `cap`; x == 0 counts as >= cap.
int valuation_capped(std::int64_t x, std::int64_t p, int cap);

/// Binomial coefficient via falling factorial, valid for negative T:
/// C(T, r) = T(T-1)...(T-r+1) / r!.
Int binomial(const Int& T, unsigned r);

/// Smallest prime strictly greater than n.
std::int64_t next_prime_above(std::int64_t n);

} // namespace nullsolve
