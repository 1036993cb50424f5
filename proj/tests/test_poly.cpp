#include <doctest.h>

#include "idem/errors.hpp"
#include "idem/poly.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;

TEST_CASE("poly: construction, degree, trimming") {
    FieldDesc q = FieldDesc::rationals();
    Poly z = Poly::zero(q);
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
    Poly c = Poly::from_ints(q, {1, 0});  // trailing zero trimmed
    CHECK(c.degree() == std::size_t{0});
    CHECK(c.is_one());
    Poly lam = Poly::lambda(q);
    CHECK(lam.degree() == std::size_t{1});
    CHECK(lam.coeff(1).is_one());
    CHECK(lam.coeff(7).is_zero());  // beyond the degree reads as zero
}

TEST_CASE("poly: ring operations") {
    for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::prime(5)}) {
        Poly lam = Poly::lambda(f);
        Poly one = Poly::one(f);
        CHECK((lam + one) * (lam - one) == lam * lam - one);
        CHECK((lam + one).pow(2) == lam * lam + lam.scaled(FieldScalar::from_int(f, 2)) + one);
        CHECK(lam.shifted(2) == lam * lam * lam);
    }
    FieldDesc q = FieldDesc::rationals();
    Poly p = Poly::from_ints(q, {0, 2, 0, 1});  // lambda^3 + 2 lambda
    CHECK(p.derivative() == Poly::from_ints(q, {2, 0, 3}));
    CHECK(p.eval(FieldScalar::from_int(q, 2)) == FieldScalar::from_int(q, 12));
}

TEST_CASE("poly: division with remainder") {
    FieldDesc f7 = FieldDesc::prime(7);
    Rng rng(0xd1f);
    for (int t = 0; t < 500; ++t) {
        Poly a = random_poly(f7, 8, rng);
        Poly b = random_poly(f7, 4, rng);
        if (b.is_zero()) {
            CHECK_THROWS_AS(a.divmod(b), DivisionByZero);
            continue;
        }
        auto [quot, rem] = a.divmod(b);
        CHECK(quot * b + rem == a);
        if (!rem.is_zero()) CHECK(*rem.degree() < *b.degree());
    }
    FieldDesc q = FieldDesc::rationals();
    Rng rng2(0x2b);
    for (int t = 0; t < 200; ++t) {
        Poly a = random_poly(q, 6, rng2);
        Poly b = random_poly(q, 3, rng2);
        if (b.is_zero()) continue;
        auto [quot, rem] = a.divmod(b);
        CHECK(quot * b + rem == a);
    }
}

TEST_CASE("poly: gcd and Bezout coefficients") {
    FieldDesc q = FieldDesc::rationals();
    Poly lam = Poly::lambda(q);
    Poly one = Poly::one(q);
    // (lambda-1)(lambda+1) and (lambda-1)^2 share exactly lambda-1.
    CHECK(poly_gcd(lam * lam - one, (lam - one) * (lam - one)) == lam - one);
    CHECK_THROWS_AS(poly_gcd(Poly::zero(q), Poly::zero(q)), BothZero);

    Rng rng(0xbe2);
    FieldDesc f5 = FieldDesc::prime(5);
    for (int t = 0; t < 300; ++t) {
        Poly a = random_poly(f5, 6, rng);
        Poly b = random_poly(f5, 6, rng);
        if (a.is_zero() && b.is_zero()) continue;
        XgcdResult r = poly_xgcd(a, b);
        CHECK(r.g.is_monic());
        CHECK(r.s * a + r.t * b == r.g);
        if (!a.is_zero()) CHECK((a % r.g).is_zero());
        if (!b.is_zero()) CHECK((b % r.g).is_zero());
    }
}

TEST_CASE("poly: monic normalization and leading coefficient") {
    FieldDesc f5 = FieldDesc::prime(5);
    Poly p = Poly::from_ints(f5, {1, 0, 3});
    CHECK(p.monic().is_monic());
    CHECK(p.monic() == Poly::from_ints(f5, {2, 0, 1}));  // 3^{-1} = 2
    CHECK(Poly::zero(f5).monic().is_zero());
    CHECK(p.leading() == FieldScalar::from_int(f5, 3));
    CHECK_THROWS_AS(Poly::zero(f5).leading(), Error);
}

TEST_CASE("poly: printing") {
    FieldDesc q = FieldDesc::rationals();
    CHECK(Poly::from_ints(q, {-1, 0, 1}).to_string() == "-1 + lambda^2");
    CHECK(Poly::from_ints(q, {0, 1}).to_string() == "lambda");
    CHECK(Poly::zero(q).to_string() == "0");
    FieldDesc f5 = FieldDesc::prime(5);
    CHECK(Poly::from_ints(f5, {-1, 0, 1}).to_string() == "4 + lambda^2");
    CHECK(Poly::from_ints(q, {0, -2}).to_string("t") == "-2*t");
}
