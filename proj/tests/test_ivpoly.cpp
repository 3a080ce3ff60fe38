#include <doctest.h>

#include "nullsolve/ivpoly.hpp"

using namespace nullsolve;

TEST_CASE("IVPoly evaluation in the binomial basis") {
    // h(x) = 2*C(x,0) + 3*C(x,1) + C(x,2)
    IVPoly h({Int(2), Int(3), Int(1)});
    CHECK(h.degree() == 2);
    CHECK(h.eval(0) == 2);
    CHECK(h.eval(1) == 5);
    CHECK(h.eval(2) == 9);
    CHECK(h.eval(-1) == 0);  // 2 - 3 + 1
    CHECK(h.eval(5) == 27);  // 2 + 15 + 10
}

TEST_CASE("IVPoly strips trailing zeros") {
    IVPoly h({Int(1), Int(0), Int(0)});
    CHECK(h.degree() == 0);
    CHECK(h.coeffs().size() == 1);
    CHECK(h.coeff(2) == 0);  // beyond the stored range
    CHECK(h == IVPoly({Int(1)}));
}

TEST_CASE("FactoredIVP constructor proves divisibility") {
    // (T-1)(T-2)/2 is integer-valued: consecutive integers
    FactoredIVP h({1, 2}, 2, 1);
    CHECK(h.degree() == 2);
    CHECK(h.delta() == 1);
    CHECK(h.eval(0) == 1);
    CHECK(h.eval(3) == 1);
    CHECK(h.eval(4) == 3);
    CHECK(h.eval(-1) == 3);
}

TEST_CASE("FactoredIVP rejects non-integral scaling") {
    // (T-1)/2 is odd at even T
    CHECK_THROWS_AS(FactoredIVP({1}, 2, 1), NonIntegralResult);
    // (T-1)(T-2)/4 fails at T=0: product 2
    CHECK_THROWS_AS(FactoredIVP({1, 2}, 2, 2), NonIntegralResult);
}

TEST_CASE("FactoredIVP requires a prime p") {
    CHECK_THROWS_AS(FactoredIVP({1, 2, 3, 4}, 4, 1), Error);
}

TEST_CASE("to_binomial_basis matches the factored form everywhere") {
    FactoredIVP h({1, 2, 5, 6}, 2, 2);  // two consecutive pairs, /4
    IVPoly b = to_binomial_basis(h);
    CHECK(b.degree() == 4);
    for (long t = -8; t <= 20; ++t)
        CHECK(b.eval(Int(t)) == h.eval(Int(t)));
}

TEST_CASE("is_unit_at_zero") {
    FactoredIVP h({1, 2}, 2, 1);  // h(0) = 1
    CHECK(is_unit_at_zero(h));
    CHECK(is_unit_at_zero(to_binomial_basis(h), 2));
    FactoredIVP g({1, 2, 3}, 3, 1);  // g(0) = -6/3 = -2, a unit mod 3
    CHECK(is_unit_at_zero(g));
    FactoredIVP e({1, 2}, 3, 0);  // e(0) = 2, a unit mod 3
    CHECK(is_unit_at_zero(e));
    FactoredIVP z({3}, 3, 0);  // z(0) = -3
    CHECK_FALSE(is_unit_at_zero(z));
}
