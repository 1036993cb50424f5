#include <doctest.h>

#include "idem/crt.hpp"
#include "idem/errors.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;

TEST_CASE("crt: pairwise split and join") {
    FieldDesc f5 = FieldDesc::prime(5);
    Poly h1 = Poly::from_ints(f5, {-2, 1});
    Poly h2 = Poly::from_ints(f5, {-3, 1});
    CrtPair pair = crt_pair(h1, h2);
    CHECK(pair.whole.modulus() == h1 * h2);
    // The two join coefficients are complementary idempotents mod h1 h2.
    Poly sum = pair.join1 + pair.join2;
    CHECK(pair.whole.reduce_poly(sum).is_one());

    Rng rng(0xc21);
    for (int t = 0; t < 200; ++t) {
        QElem x = random_q(pair.whole, rng, /*proper=*/false);
        auto [x1, x2] = crt_split(x, pair);
        CHECK(x1.ctx().modulus() == h1);
        CHECK(x2.ctx().modulus() == h2);
        CHECK(crt_join(x1, x2, pair) == x);
    }
    CHECK_THROWS_AS(crt_pair(Poly::lambda(f5), Poly::lambda(f5) * Poly::lambda(f5)),
                    NotCoprime);
}

TEST_CASE("crt: multiway basis") {
    FieldDesc f5 = FieldDesc::prime(5);
    std::vector<Poly> moduli = {Poly::from_ints(f5, {0, 1}),
                                Poly::from_ints(f5, {-1, 1}),
                                Poly::from_ints(f5, {1, 1, 1})};
    CrtBasis basis = crt_basis(moduli);
    CHECK(basis.parts.size() == 3);
    CHECK(basis.whole.degree() == 4);

    Rng rng(0xc22);
    for (int t = 0; t < 200; ++t) {
        QElem x = random_q(basis.whole, rng, /*proper=*/false);
        auto parts = crt_split(x, basis);
        REQUIRE(parts.size() == 3);
        CHECK(crt_join(parts, basis) == x);
    }
}

TEST_CASE("crt: projection along a divisor is multiplicative") {
    FieldDesc f5 = FieldDesc::prime(5);
    Poly h1 = Poly::from_ints(f5, {0, 1});
    Poly h2 = Poly::from_ints(f5, {1, 1, 1});
    QuotientCtx whole{h1 * h2};
    QuotientCtx part{h2};
    Rng rng(0xc23);
    for (int t = 0; t < 200; ++t) {
        QElem x = random_q(whole, rng);
        QElem y = random_q(whole, rng);
        CHECK(project(q_mul(x, y), part) ==
              q_mul(project(x, part), project(y, part)));
        CHECK(project(q_add(x, y), part) ==
              q_add(project(x, part), project(y, part)));
    }
}
