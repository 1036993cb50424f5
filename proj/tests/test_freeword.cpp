#include <doctest.h>

#include "idem/freeword.hpp"
#include "idem/nf.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;

TEST_CASE("freeword: word concatenation collapses equal seams") {
    AltWord a = AltWord::of(GenSym::A, 1);
    AltWord ab = AltWord::of(GenSym::A, 2);
    AltWord ba = AltWord::of(GenSym::B, 2);

    CHECK(word_mul(a, a) == a);                            // aa = a
    CHECK(word_mul(ab, ba) == AltWord::of(GenSym::A, 3));  // ab.ba = aba
    CHECK(word_mul(ab, ab) == AltWord::of(GenSym::A, 4));  // ab.ab = abab
    CHECK(word_mul(AltWord::unit(), ba) == ba);
    CHECK(word_mul(ba, AltWord::unit()) == ba);
    CHECK(AltWord::of(GenSym::B, 3).name() == "bab");
    CHECK(AltWord::unit().name() == "e");
}

TEST_CASE("freeword: fixed normalizations") {
    FieldDesc q = FieldDesc::rationals();
    Poly shrink = Poly::one(q) - Poly::lambda(q);

    // aba = (1 - sigma) a
    CHECK(normalize_word(q, AltWord::of(GenSym::A, 3)) ==
          nf_scale(shrink, NFElem::basis(q, GenSym::A)));
    // bab = (1 - sigma) b
    CHECK(normalize_word(q, AltWord::of(GenSym::B, 3)) ==
          nf_scale(shrink, NFElem::basis(q, GenSym::B)));
    // The sigma combination normalizes to the sigma basis vector.
    CHECK(normalize(sigma_free(q)) == NFElem::basis(q, GenSym::Sigma));
    CHECK(normalize(FreeElem::unit(q)) == NFElem::unit(q));
}

TEST_CASE("freeword: linear structure with cancellation") {
    FieldDesc f5 = FieldDesc::prime(5);
    Rng rng(0xf2ee);
    for (int t = 0; t < 200; ++t) {
        FreeElem x = random_free(f5, 6, 4, rng);
        CHECK(free_add(x, free_neg(x)).is_zero());
        CHECK(free_sub(x, x).is_zero());
    }
    FreeElem u = FreeElem::unit(f5);
    CHECK(free_mul(u, u) == u);
    CHECK(free_pow(FreeElem::generator(f5, GenSym::A), 3) ==
          FreeElem::generator(f5, GenSym::A));
}

TEST_CASE("freeword: normalize respects products and sums") {
    Rng rng(0x90a1);
    for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::prime(7)}) {
        for (int t = 0; t < 250; ++t) {
            FreeElem x = random_free(f, 8, 4, rng);
            FreeElem y = random_free(f, 8, 4, rng);
            CHECK(normalize(free_mul(x, y)) ==
                  nf_mul(normalize(x), normalize(y)));
            CHECK(normalize(free_add(x, y)) ==
                  nf_add(normalize(x), normalize(y)));
        }
    }
}

TEST_CASE("freeword: rank checks at reduced size") {
    for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::prime(5)}) {
        CHECK(freeness_rank_check(f, 6));
        CHECK(sigma_transcendence_check(f, 6));
        CHECK(module_basis_rank_check(f, 3));
    }
}

TEST_CASE("freeword: oracle report bookkeeping") {
    Report r = normalize_oracle(FieldDesc::prime(5), 50, 8, 42);
    CHECK(r.ok());
    CHECK(r.trials == 50);
    CHECK(r.seed == 42);
    CHECK(r.suite == "normalize-oracle");
    CHECK(r.field == "F_5");
}
