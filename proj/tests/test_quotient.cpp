#include <doctest.h>

#include <vector>

#include "idem/errors.hpp"
#include "idem/quotient.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;

TEST_CASE("quotient: context construction guards") {
    FieldDesc q = FieldDesc::rationals();
    CHECK_THROWS_AS(QuotientCtx{Poly::from_ints(q, {0, 2})}, BadModulus);
    CHECK_THROWS_AS(QuotientCtx{Poly::one(q)}, BadModulus);
    CHECK_THROWS_AS(QuotientCtx{Poly::zero(q)}, BadModulus);
    QuotientCtx ok{Poly::from_ints(q, {0, 0, 1})};
    CHECK(ok.degree() == 2);
}

TEST_CASE("quotient: sigma survives the projection mod lambda") {
    // Reducing mod h = lambda kills all positive powers of sigma but keeps
    // sigma itself: the image of ba is -sigma + a + b - ab, and the image of
    // sigma is nonzero with square zero.
    FieldDesc q = FieldDesc::rationals();
    QuotientCtx ctx{Poly::lambda(q)};
    NFElem a = NFElem::basis(q, GenSym::A);
    NFElem b = NFElem::basis(q, GenSym::B);
    QElem sg = QElem::basis(ctx, GenSym::Sigma);

    QElem ba = reduce(nf_mul(b, a), ctx);
    QElem expected = q_sub(
        q_sub(q_add(QElem::basis(ctx, GenSym::A), QElem::basis(ctx, GenSym::B)),
              QElem::basis(ctx, GenSym::AB)),
        sg);
    CHECK(ba == expected);
    CHECK_FALSE(sg.is_zero());
    CHECK(q_mul(sg, sg).is_zero());
    CHECK(q_pow(sg, 2).is_zero());
}

TEST_CASE("quotient: reduction is a unital ring homomorphism") {
    struct Case {
        FieldDesc f;
        std::vector<std::int64_t> h;
    };
    std::vector<Case> cases = {
        {FieldDesc::rationals(), {0, 1}},       // lambda
        {FieldDesc::rationals(), {-1, 1}},      // lambda - 1
        {FieldDesc::rationals(), {0, 0, 1}},    // lambda^2
        {FieldDesc::prime(5), {1, 1, 1}},       // lambda^2 + lambda + 1
        {FieldDesc::prime(5), {-2, 1}},         // lambda - 2
    };
    Rng rng(0x90b);
    for (const Case& cs : cases) {
        QuotientCtx ctx{Poly::from_ints(cs.f, cs.h)};
        CHECK(reduce(NFElem::unit(cs.f), ctx) ==
              QElem::make(ctx, Poly::one(cs.f), Poly::zero(cs.f),
                          Poly::zero(cs.f), Poly::zero(cs.f),
                          Poly::zero(cs.f)));
        for (int t = 0; t < 300; ++t) {
            NFElem x = random_nf(cs.f, 5, rng);
            NFElem y = random_nf(cs.f, 5, rng);
            CHECK(reduce(nf_mul(x, y), ctx) ==
                  q_mul(reduce(x, ctx), reduce(y, ctx)));
            CHECK(reduce(nf_add(x, y), ctx) ==
                  q_add(reduce(x, ctx), reduce(y, ctx)));
        }
    }
}

TEST_CASE("quotient: internal unit when h(0) is invertible") {
    // h = lambda - 2 over F_5: e-bar = 3 sigma-bar.
    FieldDesc f5 = FieldDesc::prime(5);
    QuotientCtx ctx{Poly::from_ints(f5, {-2, 1})};
    QElem unit = quotient_unit(ctx);
    CHECK(unit == q_scale(Poly::from_ints(f5, {3}),
                          QElem::basis(ctx, GenSym::Sigma)));
    CHECK(q_is_idempotent(unit));

    // h = lambda - 1 over Q: e-bar = sigma-bar.
    FieldDesc q = FieldDesc::rationals();
    QuotientCtx at_one{Poly::from_ints(q, {-1, 1})};
    CHECK(quotient_unit(at_one) == QElem::basis(at_one, GenSym::Sigma));

    Rng rng(0xe1);
    for (const QuotientCtx& c : {ctx, at_one}) {
        QElem e = quotient_unit(c);
        for (int t = 0; t < 100; ++t) {
            QElem x = random_q(c, rng);
            CHECK(q_mul(e, x) == x);
            CHECK(q_mul(x, e) == x);
        }
    }

    // h(0) = 0: the quotient has no internal unit.
    CHECK_THROWS_AS(quotient_unit(QuotientCtx{Poly::lambda(q)}), NotUnital);
}

TEST_CASE("quotient: central inverses") {
    FieldDesc f5 = FieldDesc::prime(5);
    QuotientCtx ctx{Poly::from_ints(f5, {-2, 1})};
    // lambda * 3 = 3 * 2 = 1 mod (lambda - 2).
    CHECK(central_inverse(Poly::lambda(f5), ctx) == Poly::from_ints(f5, {3}));

    FieldDesc q = FieldDesc::rationals();
    QuotientCtx sq{Poly::from_ints(q, {0, 0, 1})};
    CHECK_THROWS_AS(central_inverse(Poly::lambda(q), sq), NotInvertible);
    CHECK_THROWS_AS(central_inverse(Poly::zero(q), sq), NotInvertible);
}

TEST_CASE("quotient: flatten shape and proper elements") {
    FieldDesc f5 = FieldDesc::prime(5);
    QuotientCtx ctx{Poly::from_ints(f5, {1, 1, 1})};
    Rng rng(0xf1a);
    QElem x = random_q(ctx, rng, /*proper=*/true);
    CHECK(x.is_proper());
    CHECK(x.flatten().size() == 5 * ctx.degree());
    QElem hull = random_q(ctx, rng, /*proper=*/false);
    CHECK(hull.flatten().size() == 5 * ctx.degree());
}
