#include <doctest.h>

#include <vector>

#include "nullsolve/lift.hpp"

using namespace nullsolve;

TEST_CASE("UnitSumPoly counts satisfied terms") {
    // f = x1 + x2 + x1 (coefficient 2 on x1)
    UnitSumPoly f{2, {0b01, 0b10, 0b01}};
    CHECK(f.degree() == 1);
    CHECK(f.value_at(0b00) == 0);
    CHECK(f.value_at(0b01) == 2);
    CHECK(f.value_at(0b10) == 1);
    CHECK(f.value_at(0b11) == 3);
    // the empty monomial contributes at every point
    UnitSumPoly g{1, {0, 0b1}};
    CHECK(g.value_at(0) == 1);
    CHECK(g.value_at(1) == 2);
    CHECK(g.degree() == 1);
}

TEST_CASE("IntMultiPoly coefficient bookkeeping") {
    IntMultiPoly f(2);
    f.add(0b01, 3);
    f.add(0b11, -1);
    f.add(0b01, -3);  // cancels, entry erased
    CHECK(f.coeff(0b01) == 0);
    CHECK(f.coeffs().size() == 1);
    CHECK(f.degree() == 2);
    CHECK(f.value_at(0b11) == -1);
    f.add(0b11, 1);
    CHECK(f.is_zero());
}

TEST_CASE("IntMultiPoly cube transform matches pointwise evaluation") {
    IntMultiPoly f(3, {{0b000, Int(2)}, {0b011, Int(-5)}, {0b111, Int(7)}});
    std::vector<Int> vals = f.values_on_cube();
    REQUIRE(vals.size() == 8);
    for (Mask s = 0; s < 8; ++s)
        CHECK(vals[s] == f.value_at(s));
}

TEST_CASE("multilinear product stays multilinear") {
    // (x1 + x2)^2 = x1 + x2 + 2 x1 x2 after idempotent reduction
    IntMultiPoly f(2, {{0b01, Int(1)}, {0b10, Int(1)}});
    IntMultiPoly sq = f * f;
    CHECK(sq.coeff(0b01) == 1);
    CHECK(sq.coeff(0b10) == 1);
    CHECK(sq.coeff(0b11) == 2);
    for (Mask s = 0; s < 4; ++s)
        CHECK(sq.value_at(s) == f.value_at(s) * f.value_at(s));
}

TEST_CASE("reduce_mod maps into canonical residues") {
    IntMultiPoly f(1, {{0b0, Int(-1)}, {0b1, Int(5)}});
    f.reduce_mod(3);
    CHECK(f.coeff(0) == 2);
    CHECK(f.coeff(1) == 2);
}

TEST_CASE("expand_to_unit_monomials reduces coefficients first") {
    UnitSumPoly f = expand_to_unit_monomials({1, -1, 4}, 4);
    // coefficients become 1, 3, 0
    CHECK(f.m == 3);
    CHECK(f.value_at(0b001) == 1);
    CHECK(f.value_at(0b010) == 3);
    CHECK(f.value_at(0b100) == 0);
    CHECK(f.value_at(0b111) == 4);
}

TEST_CASE("psi_r equals the binomial of the value") {
    UnitSumPoly f{3, {0b001, 0b010, 0b100, 0b011}};
    for (unsigned r = 0; r <= 5; ++r) {
        IntMultiPoly lifted = psi_r(f, r);
        for (Mask s = 0; s < 8; ++s)
            CHECK(lifted.value_at(s) == binomial(Int(f.value_at(s)), r));
    }
}

TEST_CASE("psi_h composes h after f on the cube") {
    UnitSumPoly f{3, {0b001, 0b001, 0b110}};
    IVPoly h({Int(1), Int(-2), Int(3)});
    IntMultiPoly lifted = psi_h(f, h);
    CHECK(lifted.degree() <= f.degree() * static_cast<int>(h.degree()));
    for (Mask s = 0; s < 8; ++s)
        CHECK(lifted.value_at(s) == h.eval(Int(f.value_at(s))));
}

TEST_CASE("build_main_polynomial vanishing and full coefficient") {
    // one constraint: f1 = x1 + x2 + x3 must avoid {1} mod 2
    UnitSumPoly f1{3, {0b001, 0b010, 0b100}};
    CoveringFamily H = build_kappa_covering(ResidueSet(2, 1, {1}));
    auto [F, c] = build_main_polynomial(3, {f1}, {H}, 2);
    CHECK(F.value_at(0) == 0);
    CHECK(c % 2 == 1);
    CHECK(F.coeff(full_mask(3)) % 2 != 0);
    // F(s) != 0 certifies the constraint: the family covers every bad value
    bool witness = false;
    for (Mask s = 1; s < 8; ++s) {
        if (F.value_at(s) % 2 != 0) {
            CHECK(f1.value_at(s) % 2 == 0);
            witness = true;
        }
    }
    CHECK(witness);
}

TEST_CASE("build_main_polynomial with no constraints") {
    auto [F, c] = build_main_polynomial(2, {}, {}, 2);
    CHECK(c == 1);
    CHECK(F.value_at(0) == 0);
    for (Mask s = 1; s < 4; ++s)
        CHECK(F.value_at(s) % 2 != 0);
}

TEST_CASE("build_main_polynomial enforces the strict degree bound") {
    UnitSumPoly f1{2, {0b01, 0b10}};
    CoveringFamily H = build_kappa_covering(ResidueSet(2, 2, {1, 2, 3}));
    // kappa = 3, deg f1 = 1, need m > 3; m = 2 violates
    CHECK_THROWS_AS(build_main_polynomial(2, {f1}, {H}, 2),
                    DegreeBoundViolated);
}

TEST_CASE("solve_explicit_cn finds a nonzero of f") {
    // f = x1 x2 + x2 x3 + x1 x2 x3 has odd full coefficient
    IntMultiPoly f(3, {{0b011, Int(1)}, {0b110, Int(1)}, {0b111, Int(1)}});
    Mask s = solve_explicit_cn(f, 3);
    Int v = f.value_at(s);
    CHECK(mpz_odd_p(v.get_mpz_t()));
    IntMultiPoly g(2, {{0b11, Int(2)}});
    CHECK_THROWS_AS(solve_explicit_cn(g, 2), FullCoefficientZero);
}

TEST_CASE("brute_force_cn prefers the support-lex smallest solution") {
    // no constraints: every nonzero s is feasible; support {1} wins
    auto s = brute_force_cn(2, {}, {});
    REQUIRE(s.has_value());
    CHECK(*s == 0b01);
    // f = x1 x2 + x1 must land in {0} mod 2: feasible are 10 and 11,
    // supports {2} and {1,2}; the tie-break picks {1,2}
    UnitSumPoly f1{2, {0b11, 0b01}};
    auto t = brute_force_cn(2, {f1}, {ResidueSet(2, 1, {0})});
    REQUIRE(t.has_value());
    CHECK(*t == 0b11);
    // conflicting targets on the same form: infeasible
    auto u = brute_force_cn(1, {UnitSumPoly{1, {0b1}}, UnitSumPoly{1, {0b1}}},
                            {ResidueSet(2, 1, {1}), ResidueSet(2, 1, {0})});
    CHECK_FALSE(u.has_value());
}

TEST_CASE("subset_lex_less orders supports as ascending lists") {
    CHECK(subset_lex_less(0b01, 0b11));   // {1} < {1,2}
    CHECK(subset_lex_less(0b11, 0b10));   // {1,2} < {2}
    CHECK(subset_lex_less(0b01, 0b10));   // {1} < {2}
    CHECK(subset_lex_less(0, 0b01));      // {} < {1}
    CHECK_FALSE(subset_lex_less(0b10, 0b11));
    CHECK_FALSE(subset_lex_less(0b01, 0b01));
}
