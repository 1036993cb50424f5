#include <doctest.h>

#include <nlohmann/json.hpp>

#include "idem/decompose.hpp"
#include "idem/json_io.hpp"
#include "idem/random.hpp"
#include "idem/rng.hpp"

using namespace idem;
using nlohmann::json;

TEST_CASE("json: field descriptors round trip") {
    for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::prime(7)}) {
        CHECK(field_from_json(field_to_json(f)) == f);
    }
}

TEST_CASE("json: polynomials and normal forms round trip") {
    Rng rng(0x15a);
    for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::prime(5)}) {
        for (int t = 0; t < 100; ++t) {
            Poly p = random_poly(f, 6, rng);
            CHECK(poly_from_json(f, poly_to_json(p)) == p);
            NFElem x = random_nf(f, 4, rng);
            CHECK(nf_from_json(f, nf_to_json(x)) == x);
        }
    }
}

TEST_CASE("json: rational coefficients stay exact") {
    FieldDesc q = FieldDesc::rationals();
    NFElem x = nf_scale(FieldScalar::from_ratio(q, 22, 7),
                        NFElem::basis(q, GenSym::A));
    json j = nf_to_json(x);
    CHECK(j["a"][0] == "22/7");
    CHECK(nf_from_json(q, j) == x);
}

TEST_CASE("json: decomposition document structure") {
    FieldDesc f5 = FieldDesc::prime(5);
    Poly lam = Poly::lambda(f5);
    Poly one = Poly::one(f5);
    std::vector<FactorPower> parts = {
        {lam, 1}, {lam - one, 1}, {Poly::from_ints(f5, {1, 1, 1}), 1}};
    Poly m = lam * (lam - one) * Poly::from_ints(f5, {1, 1, 1});
    Decomposition dec = decompose(factor_input(m, parts));

    json j = decomposition_to_json(dec);
    CHECK(j["field"] == "5");
    REQUIRE(j["blocks"].size() == 3);
    CHECK(j["blocks"][0]["kind"] == "sigma_nilpotent");
    CHECK(j["blocks"][1]["kind"] == "sigma_minus_one_nilpotent");
    CHECK(j["blocks"][2]["kind"] == "matrix_block");
    CHECK(j["blocks"][2].contains("units"));
    CHECK(j["blocks"][0].contains("witness"));
    CHECK(j["blocks"][0]["witness"]["nilpotency_index"] == 3);
    CHECK(j["factorization"]["factors"].size() == 3);
}

TEST_CASE("json: reports serialize their verdict") {
    Report r;
    r.suite = "demo";
    r.field = "Q";
    r.trials = 3;
    json j = report_to_json(r);
    CHECK(j["ok"] == true);
    r.mismatches.push_back({1, "kind", "detail"});
    CHECK(report_to_json(r)["ok"] == false);
    CHECK(report_to_json(r)["mismatches"][0]["kind"] == "kind");
}
