#include "nullsolve/numeric.hpp"

#include <limits>

namespace nullsolve {

std::int64_t pow_i64(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base)
            throw CapExceeded("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t mod) {
    std::int64_t r = a % mod;
    return r < 0 ? r + mod : r;
}

int valuation_capped(std::int64_t x, std::int64_t p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

Int binomial(const Int& T, unsigned r) {
    Int num = 1;
    for (unsigned i = 0; i < r; ++i)
        num *= T - static_cast<long>(i);
    Int fact = 1;
    for (unsigned i = 2; i <= r; ++i)
        fact *= static_cast<long>(i);
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return q;
}

std::int64_t next_prime_above(std::int64_t n) {
    std::int64_t c = n + 1;
    if (c < 2) return 2;
    while (!is_prime_i64(c)) ++c;
    return c;
}

} // namespace nullsolve
