#include <doctest.h>

#include "idem/errors.hpp"
#include "idem/random.hpp"
#include "idem/rep.hpp"
#include "idem/rng.hpp"

using namespace idem;

TEST_CASE("rep: input validation") {
    FieldDesc q = FieldDesc::rationals();
    FMatrix not_idem = FMatrix::from_ints(q, {{1, 1}, {0, 1}});
    FMatrix idem = FMatrix::from_ints(q, {{1, 0}, {0, 0}});
    CHECK_THROWS_AS(Rep::checked(not_idem, idem), NotIdempotent);
    CHECK_THROWS_AS(Rep::checked(idem, FMatrix::identity(q, 3)), InputError);
}

TEST_CASE("rep: minimal polynomial of sigma in a pinned example") {
    // A = diag(1,0), B = [[0,0],[1,1]]: S = (A-B)^2 is the identity, so the
    // minimal polynomial is lambda - 1 and AB = 0 while BA != 0.
    FieldDesc q = FieldDesc::rationals();
    Rep rep = Rep::checked(FMatrix::from_ints(q, {{1, 0}, {0, 0}}),
                           FMatrix::from_ints(q, {{0, 0}, {1, 1}}));
    CHECK(rep.sigma() == FMatrix::identity(q, 2));
    CHECK(rep_minpoly(rep) == Poly::from_ints(q, {-1, 1}));
    CHECK((rep.a * rep.b).is_zero());
    CHECK_FALSE((rep.b * rep.a).is_zero());
}

TEST_CASE("rep: evaluation is a unital homomorphism") {
    FieldDesc f7 = FieldDesc::prime(7);
    Rng rng(0x3e9);
    Rep rep = Rep::checked(random_idempotent(f7, 3, rng),
                           random_idempotent(f7, 3, rng));
    CHECK(rep_eval(rep, NFElem::unit(f7)) == FMatrix::identity(f7, 3));
    for (int t = 0; t < 200; ++t) {
        NFElem x = random_nf(f7, 3, rng);
        NFElem y = random_nf(f7, 3, rng);
        CHECK(rep_eval(rep, nf_mul(x, y)) ==
              rep_eval(rep, x) * rep_eval(rep, y));
        CHECK(rep_eval(rep, nf_add(x, y)) ==
              rep_eval(rep, x) + rep_eval(rep, y));
    }
    // The minimal polynomial annihilates S and has degree at most n.
    Poly m = rep_minpoly(rep);
    CHECK(poly_of_matrix(m, rep.sigma()).is_zero());
    CHECK(*m.degree() <= 3);
    CHECK(spanning_check(rep));
}

TEST_CASE("rep: generated dimension for pinned pairs") {
    FieldDesc q = FieldDesc::rationals();
    // Commuting pair: projections onto nested subspaces generate dim 2.
    Rep flat = Rep::checked(FMatrix::from_ints(q, {{1, 0}, {0, 0}}),
                            FMatrix::identity(q, 2));
    CHECK(generated_basis(flat).dim() == 2);

    // Overlapping diagonal projections in 3x3 generate dim 3.
    Rep diag = Rep::checked(
        FMatrix::from_ints(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
        FMatrix::from_ints(q, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(generated_basis(diag).dim() == 3);

    // A generic pair generates the full 4-dimensional module.
    FieldDesc f7 = FieldDesc::prime(7);
    Rep generic = Rep::checked(FMatrix::from_ints(f7, {{1, 0}, {0, 0}}),
                               FMatrix::from_ints(f7, {{4, 4}, {4, 4}}));
    CHECK(generated_basis(generic).dim() == 4);
    // Every basis matrix carries its witness word.
    SpanBasis basis = generated_basis(generic);
    REQUIRE(basis.words.size() == basis.mats.size());
    for (const std::string& w : basis.words) CHECK_FALSE(w.empty());
}

TEST_CASE("rep: commutation condition with certificate") {
    FieldDesc q = FieldDesc::rationals();
    Rep bad = Rep::checked(FMatrix::from_ints(q, {{1, 0}, {0, 0}}),
                           FMatrix::from_ints(q, {{0, 0}, {1, 1}}));
    ConditionIResult r = condition_i_check(bad);
    CHECK_FALSE(r.holds);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->is_monic());
    // The certificate really does move alpha(S)AB out of line.
    FMatrix alpha_s = poly_of_matrix(*r.certificate, bad.sigma());
    CHECK_FALSE((alpha_s * (bad.b * bad.a - bad.a * bad.b)).is_zero());

    FieldDesc f7 = FieldDesc::prime(7);
    Rep good = Rep::checked(FMatrix::from_ints(f7, {{1, 0}, {0, 0}}),
                            FMatrix::from_ints(f7, {{4, 4}, {4, 4}}));
    CHECK(condition_i_check(good).holds);
}

TEST_CASE("rep: commutative pair analysis") {
    FieldDesc q = FieldDesc::rationals();
    Rep flat = Rep::checked(FMatrix::from_ints(q, {{1, 0}, {0, 0}}),
                            FMatrix::identity(q, 2));
    CHECK(commutative_checks(flat));
    Rep bad = Rep::checked(FMatrix::from_ints(q, {{1, 0}, {0, 0}}),
                           FMatrix::from_ints(q, {{0, 0}, {1, 1}}));
    CHECK_THROWS_AS(commutative_checks(bad), NotCommutative);
}

TEST_CASE("rep: random idempotents square to themselves") {
    Rng rng(0x1de);
    FieldDesc f7 = FieldDesc::prime(7);
    for (int t = 0; t < 50; ++t) {
        FMatrix p = random_idempotent(f7, 3, rng);
        CHECK(p * p == p);
    }
    FieldDesc q = FieldDesc::rationals();
    for (int t = 0; t < 20; ++t) {
        FMatrix p = random_idempotent(q, 2, rng);
        CHECK(p * p == p);
    }
}

TEST_CASE("rep: differential suite smoke run") {
    Report r = differential_test(20, 2, FieldDesc::prime(5), 0xabc);
    CHECK(r.ok());
    CHECK(r.trials == 20);
    CHECK_THROWS_AS(differential_test(1, 2, FieldDesc::rationals(), 1),
                    WrongField);
}
