#include <doctest.h>

#include "idem/errors.hpp"
#include "idem/matrix_units.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;

TEST_CASE("units: construction requires h coprime to lambda(lambda-1)") {
    FieldDesc q = FieldDesc::rationals();
    Poly lam = Poly::lambda(q);
    Poly one = Poly::one(q);
    CHECK_THROWS_AS(matrix_units(QuotientCtx{lam}), BadModulus);
    CHECK_THROWS_AS(matrix_units(QuotientCtx{lam - one}), BadModulus);
    CHECK_THROWS_AS(matrix_units(QuotientCtx{lam * (lam + one)}), BadModulus);
    CHECK_NOTHROW(matrix_units(QuotientCtx{lam - one - one}));
}

TEST_CASE("units: corner placement and the identity") {
    FieldDesc f5 = FieldDesc::prime(5);
    QuotientCtx ctx{Poly::from_ints(f5, {-2, 1})};
    MatrixUnits units = matrix_units(ctx);

    CHECK(units.e11 == QElem::basis(ctx, GenSym::A));
    CHECK(q_add(units.e11, units.e22) == quotient_unit(ctx));

    // a-bar maps to the (1,1) matrix unit.
    Mat2 m = to_matrix(QElem::basis(ctx, GenSym::A), units);
    CHECK(m.at(0, 0).is_one());
    CHECK(m.at(0, 1).is_zero());
    CHECK(m.at(1, 0).is_zero());
    CHECK(m.at(1, 1).is_zero());
    // The internal unit maps to the identity matrix.
    CHECK(to_matrix(quotient_unit(ctx), units) == Mat2::identity(ctx));
}

TEST_CASE("units: coordinates multiply like 2x2 matrices") {
    struct Case {
        FieldDesc f;
        std::vector<std::int64_t> h;
    };
    std::vector<Case> cases = {
        {FieldDesc::prime(5), {-2, 1}},
        {FieldDesc::rationals(), {-2, 0, 1}},
    };
    for (const Case& cs : cases) {
        QuotientCtx ctx{Poly::from_ints(cs.f, cs.h)};
        MatrixUnits units = matrix_units(ctx);
        Rng rng(0x2b2);
        for (int t = 0; t < 200; ++t) {
            QElem x = random_q(ctx, rng);
            QElem y = random_q(ctx, rng);
            Mat2 mx = to_matrix(x, units);
            Mat2 my = to_matrix(y, units);
            CHECK(to_matrix(q_mul(x, y), units) == mx * my);
            CHECK(to_matrix(q_add(x, y), units) == mx + my);
            CHECK(from_matrix(mx, units) == x);
        }
    }
}

TEST_CASE("units: matrix units behave as a basis of M2") {
    FieldDesc f5 = FieldDesc::prime(5);
    QuotientCtx ctx{Poly::from_ints(f5, {1, 1, 1})};
    MatrixUnits units = matrix_units(ctx);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    QElem prod = q_mul(units.at(i, j), units.at(k, l));
                    if (j == k)
                        CHECK(prod == units.at(i, l));
                    else
                        CHECK(prod.is_zero());
                }
}
