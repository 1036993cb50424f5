#include <doctest.h>

#include "idem/decompose.hpp"
#include "idem/errors.hpp"
#include "idem/linalg.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;

TEST_CASE("decompose: the two degenerate factors over Q") {
    FieldDesc q = FieldDesc::rationals();
    Poly lam = Poly::lambda(q);
    Poly one = Poly::one(q);
    Decomposition dec =
        decompose(factor_input(lam * (lam - one), {{lam, 1}, {lam - one, 1}}));

    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.blocks[0].kind == BlockKind::SigmaNilpotent);
    CHECK(dec.blocks[1].kind == BlockKind::SigmaMinusOneNilpotent);
    CHECK(dec.blocks[0].witness.has_value());
    CHECK(dec.blocks[1].witness.has_value());

    Rng rng(0xd3c);
    for (int t = 0; t < 100; ++t) {
        QElem x = reduce(random_nf(q, 4, rng), dec.whole);
        CHECK(dec.join(dec.split(x)) == x);
    }
}

TEST_CASE("decompose: a single trusted factor over Q keeps zero blocks") {
    FieldDesc q = FieldDesc::rationals();
    Poly h = Poly::from_ints(q, {-2, 0, 1});  // lambda^2 - 2, irreducible in Q
    Decomposition dec = decompose(factor_input(h, {{h, 1}}));

    REQUIRE(dec.blocks.size() == 3);
    CHECK(dec.blocks[0].kind == BlockKind::Zero);
    CHECK(dec.blocks[1].kind == BlockKind::Zero);
    CHECK(dec.blocks[2].kind == BlockKind::MatrixBlock);
    CHECK(dec.blocks[2].trusted);  // irreducibility taken on faith over Q
    CHECK(dec.blocks[2].units.has_value());
}

TEST_CASE("decompose: claimed irreducibles are re-checked over F_p") {
    FieldDesc f5 = FieldDesc::prime(5);
    Poly h = Poly::from_ints(f5, {1, 0, 1});  // splits as (l+2)(l+3) over F_5
    CHECK_THROWS_AS(decompose(factor_input(h, {{h, 1}})), InputError);
}

TEST_CASE("decompose: ideal closure reaches the whole matrix quotient") {
    FieldDesc f5 = FieldDesc::prime(5);
    QuotientCtx ctx{Poly::from_ints(f5, {-2, 1})};
    auto closure = ideal_closure(ctx, {QElem::basis(ctx, GenSym::A)});
    std::vector<std::vector<FieldScalar>> vecs;
    for (const QElem& e : closure) vecs.push_back(e.flatten());
    CHECK(rank_of(vecs, f5) == 4);
}

TEST_CASE("decompose: witness kind must match the modulus") {
    FieldDesc q = FieldDesc::rationals();
    QuotientCtx at_zero{Poly::lambda(q)};
    CHECK_THROWS_AS(
        nilpotent_ideal_witness(at_zero, BlockKind::SigmaMinusOneNilpotent, 1),
        BadModulus);
    CHECK_THROWS_AS(nilpotent_ideal_witness(at_zero, BlockKind::MatrixBlock, 1),
                    InputError);
}

TEST_CASE("decompose: witness contents at sigma = e") {
    FieldDesc q = FieldDesc::rationals();
    QuotientCtx ctx{Poly::lambda(q) - Poly::one(q)};
    IdealWitness w =
        nilpotent_ideal_witness(ctx, BlockKind::SigmaMinusOneNilpotent, 1);
    CHECK(w.nilpotency_index == 2);
    CHECK(w.quotient_commutative);
    // The seeds ab and ba are both in the closed module basis span.
    LinearSpan span(q);
    for (const QElem& e : w.module_basis) {
        CHECK(e.is_proper());
        span.insert(e.flatten());
    }
    CHECK(span.rank() == w.module_basis.size());
    NFElem a = NFElem::basis(q, GenSym::A);
    NFElem b = NFElem::basis(q, GenSym::B);
    CHECK_FALSE(span.insert(reduce(nf_mul(a, b), ctx).flatten()));
    CHECK_FALSE(span.insert(reduce(nf_mul(b, a), ctx).flatten()));
}

TEST_CASE("decompose: simplicity check rejects degenerate moduli") {
    FieldDesc q = FieldDesc::rationals();
    Rng rng(0x51);
    CHECK_THROWS_AS(simplicity_spot_check(QuotientCtx{Poly::lambda(q)}, 3, rng),
                    BadModulus);
}

TEST_CASE("decompose: block kind names are stable") {
    CHECK(block_kind_name(BlockKind::Zero) == "zero");
    CHECK(block_kind_name(BlockKind::SigmaNilpotent) == "sigma_nilpotent");
    CHECK(block_kind_name(BlockKind::SigmaMinusOneNilpotent) ==
          "sigma_minus_one_nilpotent");
    CHECK(block_kind_name(BlockKind::MatrixBlock) == "matrix_block");
}
