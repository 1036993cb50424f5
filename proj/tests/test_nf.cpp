#include <doctest.h>

#include <vector>

#include "idem/errors.hpp"
#include "idem/freeword.hpp"
#include "idem/nf.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;

namespace {

// The free-model counterpart of each proper basis symbol. Products of these
// are computed with free words only, which is what makes the table test an
// independent check rather than the table squared against itself.
FreeElem free_of(GenSym g, const FieldDesc& f) {
    switch (g) {
        case GenSym::Sigma: return sigma_free(f);
        case GenSym::A: return FreeElem::word(f, AltWord::of(GenSym::A, 1));
        case GenSym::B: return FreeElem::word(f, AltWord::of(GenSym::B, 1));
        case GenSym::AB: return FreeElem::word(f, AltWord::of(GenSym::A, 2));
        default: throw InputError("unit has no free counterpart here");
    }
}

}  // namespace

TEST_CASE("nf: every basis product agrees with the free model") {
    const GenSym proper[] = {GenSym::Sigma, GenSym::A, GenSym::B, GenSym::AB};
    for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::prime(5)}) {
        for (GenSym s : proper)
            for (GenSym t : proper) {
                NFElem via_table = nf_basis_product(s, t, f);
                NFElem via_words = normalize(free_mul(free_of(s, f), free_of(t, f)));
                CHECK(via_table == via_words);
            }
    }
}

TEST_CASE("nf: unit element and zero behavior") {
    FieldDesc q = FieldDesc::rationals();
    NFElem e = NFElem::unit(q);
    NFElem a = NFElem::basis(q, GenSym::A);
    CHECK(nf_mul(e, a) == a);
    CHECK(nf_mul(a, e) == a);
    CHECK(nf_mul(NFElem::zero(q), a).is_zero());
    CHECK(e.is_zero() == false);
    CHECK(a.is_proper());
    CHECK_FALSE(e.is_proper());
    CHECK_THROWS_AS(a.coord(GenSym::E), InputError);
}

TEST_CASE("nf: polynomial scaling guards the unit coordinate") {
    FieldDesc q = FieldDesc::rationals();
    NFElem e = NFElem::unit(q);
    NFElem a = NFElem::basis(q, GenSym::A);
    Poly lam = Poly::lambda(q);
    // Scaling a proper element by a polynomial is multiplication by p(sigma).
    CHECK(nf_scale(lam, a) == nf_mul(NFElem::basis(q, GenSym::Sigma), a));
    // p(sigma) * e leaves the span of the basis unless p is constant.
    CHECK_THROWS_AS(nf_scale(lam, e), NonConstantScaleOfUnit);
    CHECK(nf_scale(Poly::from_ints(q, {2}), e) ==
          nf_add(e, e));
}

TEST_CASE("nf: involution fixes the generators and reverses products") {
    for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::prime(7)}) {
        NFElem a = NFElem::basis(f, GenSym::A);
        NFElem b = NFElem::basis(f, GenSym::B);
        NFElem ab = NFElem::basis(f, GenSym::AB);
        NFElem sg = NFElem::basis(f, GenSym::Sigma);
        CHECK(star(a) == a);
        CHECK(star(b) == b);
        CHECK(star(sg) == sg);
        CHECK(star(ab) == nf_mul(b, a));
        Rng rng(0x57aa);
        for (int t = 0; t < 300; ++t) {
            NFElem x = random_nf(f, 3, rng);
            NFElem y = random_nf(f, 3, rng);
            CHECK(star(star(x)) == x);
            CHECK(star(nf_mul(x, y)) == nf_mul(star(y), star(x)));
        }
    }
}

TEST_CASE("nf: hermitian projection") {
    FieldDesc q = FieldDesc::rationals();
    Rng rng(0x4e2);
    for (int t = 0; t < 200; ++t) {
        NFElem x = random_nf(q, 3, rng);
        NFElem h = hermitian_project(x);
        CHECK(is_hermitian(h));
        CHECK(hermitian_project(h) == h);
        // x decomposes as hermitian + skew part.
        NFElem skew = nf_sub(x, h);
        CHECK(star(skew) == nf_neg(skew));
    }
}

TEST_CASE("nf: Jordan product in characteristic 2 is refused") {
    FieldDesc f2 = FieldDesc::prime(2);
    NFElem a = NFElem::basis(f2, GenSym::A);
    NFElem b = NFElem::basis(f2, GenSym::B);
    CHECK_THROWS_AS(jordan_mul(a, b), CharTwo);
    CHECK_THROWS_AS(hermitian_project(a), CharTwo);
}

TEST_CASE("nf: flatten width guard") {
    FieldDesc q = FieldDesc::rationals();
    NFElem x = nf_scale(Poly::from_ints(q, {0, 0, 1}),
                        NFElem::basis(q, GenSym::A));
    CHECK(x.max_coord_degree() == 2);
    CHECK(x.flatten(3).size() == 1 + 4 * 3);
    CHECK_THROWS_AS(x.flatten(2), InputError);
}
