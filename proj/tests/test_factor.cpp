#include <doctest.h>

#include "idem/errors.hpp"
#include "idem/factor.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;

TEST_CASE("factor: split quadratic over F_5") {
    FieldDesc f5 = FieldDesc::prime(5);
    Rng rng(0xfac);
    Factorization r = factor_fp(Poly::from_ints(f5, {1, 0, 1}), rng);
    REQUIRE(r.factors.size() == 2);
    CHECK(r.unit.is_one());
    CHECK(r.factors[0].base == Poly::from_ints(f5, {2, 1}));  // lambda + 2
    CHECK(r.factors[1].base == Poly::from_ints(f5, {3, 1}));  // lambda + 3
    CHECK(r.factors[0].exponent == 1);
    CHECK(r.factors[1].exponent == 1);
}

TEST_CASE("factor: irreducible quadratic over F_5 stays whole") {
    FieldDesc f5 = FieldDesc::prime(5);
    Rng rng(0xfac);
    Factorization r = factor_fp(Poly::from_ints(f5, {1, 1, 1}), rng);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].base == Poly::from_ints(f5, {1, 1, 1}));
    CHECK(r.factors[0].exponent == 1);
}

TEST_CASE("factor: repeated factors and ordering") {
    FieldDesc f7 = FieldDesc::prime(7);
    Poly lam = Poly::lambda(f7);
    Poly one = Poly::one(f7);
    Rng rng(0x5eed);
    Factorization r = factor_fp(lam.pow(3) * (lam + one).pow(2), rng);
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].base == lam);
    CHECK(r.factors[0].exponent == 3);
    CHECK(r.factors[1].base == lam + one);
    CHECK(r.factors[1].exponent == 2);
}

TEST_CASE("factor: p-th powers exercise the Frobenius root") {
    FieldDesc f5 = FieldDesc::prime(5);
    Poly base = Poly::from_ints(f5, {3, 1});
    Rng rng(0x00f);
    Factorization r = factor_fp(base.pow(5), rng);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].base == base);
    CHECK(r.factors[0].exponent == 5);
}

TEST_CASE("factor: random polynomials re-expand exactly") {
    Rng rng(0xeec5);
    for (std::uint64_t p : {5ull, 7ull, 13ull}) {
        FieldDesc f = FieldDesc::prime(p);
        for (int t = 0; t < 100; ++t) {
            Poly a = random_poly(f, 8, rng);
            if (a.is_zero() || a.is_constant()) continue;
            Factorization r = factor_fp(a, rng);
            CHECK(r.expand() == a);
            for (const FactorPower& fp : r.factors) {
                CHECK(fp.base.is_monic());
                CHECK(*fp.base.degree() >= 1);
            }
        }
    }
}

TEST_CASE("factor: declared factorizations are validated") {
    FieldDesc q = FieldDesc::rationals();
    Poly lam = Poly::lambda(q);
    Poly one = Poly::one(q);

    Poly m = lam * (lam - one);
    Factorization ok = factor_input(m, {{lam, 1}, {lam - one, 1}});
    CHECK(ok.expand() == m);

    // Shared factor between the declared parts.
    CHECK_THROWS_AS(factor_input(lam * lam, {{lam, 1}, {lam, 1}}), NotCoprime);
    // Declared product does not match.
    CHECK_THROWS_AS(factor_input(lam, {{lam - one, 1}}), ProductMismatch);
    // Non-monic base.
    CHECK_THROWS_AS(
        factor_input(lam.scaled(FieldScalar::from_int(q, 2)),
                     {{lam.scaled(FieldScalar::from_int(q, 2)), 1}}),
        InputError);
}

TEST_CASE("factor: minimal polynomial of a scalar action") {
    FieldDesc q = FieldDesc::rationals();
    std::vector<FieldScalar> id = {FieldScalar::one(q), FieldScalar::zero(q),
                                   FieldScalar::zero(q), FieldScalar::one(q)};
    std::vector<FieldScalar> zero(4, FieldScalar::zero(q));

    // Identity operator: minimal polynomial lambda - 1.
    CHECK(minimal_poly_of_scalar_action({id, id}, q) ==
          Poly::from_ints(q, {-1, 1}));
    // Zero operator: minimal polynomial lambda.
    CHECK(minimal_poly_of_scalar_action({id, zero}, q) == Poly::lambda(q));
    // List exhausted without a dependence.
    CHECK_THROWS_AS(minimal_poly_of_scalar_action({id}, q), NoDependence);
}
