#include "idem/selftest.hpp"

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "idem/crt.hpp"
#include "idem/decompose.hpp"
#include "idem/errors.hpp"
#include "idem/factor.hpp"
#include "idem/freeword.hpp"
#include "idem/linalg.hpp"
#include "idem/matrix_units.hpp"
#include "idem/nf.hpp"
#include "idem/poly.hpp"
#include "idem/quotient.hpp"
#include "idem/random.hpp"
#include "idem/rep.hpp"
#include "idem/rng.hpp"

namespace idem {

namespace {

// Small accumulator so a criterion can report every violated subcondition,
// not just the first.
struct Checker {
    bool ok = true;
    std::ostringstream bad;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (!ok) bad << "; ";
        bad << what;
        ok = false;
    }

    CheckResult result(std::string name, const std::string& pass_detail) {
        return {std::move(name), ok, ok ? pass_detail : bad.str()};
    }
};

const std::vector<FieldDesc>& both_fields() {
    static const std::vector<FieldDesc> fs = {FieldDesc::rationals(),
                                              FieldDesc::prime(5)};
    return fs;
}

// ---- 1: the word oracle agrees with the closed-form product ------------

CheckResult check_normalize_oracle() {
    Checker c;
    std::size_t total = 0;
    for (const FieldDesc& f : both_fields()) {
        Report r = normalize_oracle(f, 1000, 12, 0xace11au);
        total += r.trials;
        c.require(r.ok(), "normalize disagreed with the free model over " +
                              f.to_string() + " (" +
                              std::to_string(r.mismatches.size()) +
                              " mismatches)");
    }
    return c.result("normal-form product matches the free word oracle",
                    std::to_string(total) +
                        " random pairs, words up to length 12, over Q and F_5");
}

// ---- 2: central sigma and the defining identities ----------------------

CheckResult check_identities() {
    Checker c;
    for (const FieldDesc& f : both_fields()) {
        std::string tag = " over " + f.to_string();
        NFElem e = NFElem::unit(f);
        NFElem a = NFElem::basis(f, GenSym::A);
        NFElem b = NFElem::basis(f, GenSym::B);
        NFElem ab = NFElem::basis(f, GenSym::AB);
        NFElem sg = NFElem::basis(f, GenSym::Sigma);
        Poly shrink = Poly::one(f) - Poly::lambda(f);  // 1 - lambda

        c.require(verify_sigma_identity(f), "sigma != (a-b)^2" + tag);
        c.require(nf_mul(b, a) ==
                      NFElem::make(FieldScalar::zero(f),
                                   Poly::from_ints(f, {-1}),
                                   Poly::one(f), Poly::one(f),
                                   Poly::from_ints(f, {-1})),
                  "ba != -sigma + a + b - ab" + tag);
        c.require(nf_mul(nf_mul(a, b), a) == nf_scale(shrink, a),
                  "aba != (1-sigma)a" + tag);
        c.require(nf_mul(nf_mul(b, a), b) == nf_scale(shrink, b),
                  "bab != (1-sigma)b" + tag);
        NFElem ea = nf_sub(e, a);
        NFElem eb = nf_sub(e, b);
        c.require(nf_mul(nf_mul(ea, eb), ea) == nf_mul(nf_sub(e, sg), ea),
                  "(e-a)(e-b)(e-a) != (e-sigma)(e-a)" + tag);
        c.require(is_idempotent(a) && is_idempotent(b) &&
                      is_idempotent(ea) && is_idempotent(eb),
                  "generator idempotence" + tag);
        c.require(nf_mul(sg, ab) == nf_scale(Poly::lambda(f), ab),
                  "sigma acts as the scalar lambda" + tag);

        Rng rng(0x51d3f);
        for (std::size_t t = 0; t < 500; ++t) {
            NFElem x = random_nf(f, 4, rng);
            if (nf_mul(sg, x) != nf_mul(x, sg)) {
                c.require(false, "sigma not central" + tag);
                break;
            }
        }
        Rng rng2(0xa550c);
        for (std::size_t t = 0; t < 500; ++t) {
            NFElem x = random_nf(f, 4, rng2);
            NFElem y = random_nf(f, 4, rng2);
            NFElem z = random_nf(f, 4, rng2);
            if (nf_mul(nf_mul(x, y), z) != nf_mul(x, nf_mul(y, z))) {
                c.require(false, "associativity failed" + tag);
                break;
            }
        }
    }
    return c.result(
        "sigma is central and the rewrite identities hold",
        "fixed identities plus 1000 random centrality/associativity "
        "checks per field");
}

// ---- 3: freeness of the basis and transcendence of sigma ---------------

CheckResult check_freeness() {
    Checker c;
    for (const FieldDesc& f : both_fields()) {
        c.require(module_basis_rank_check(f, 6),
                  "sigma^i*w for w in {sigma,a,b,ab}, i <= 6 are dependent "
                  "in word coordinates over " +
                      f.to_string());
        c.require(freeness_rank_check(f, 14),
                  "alternating words up to length 14 are dependent over " +
                      f.to_string());
        c.require(sigma_transcendence_check(f, 12),
                  "sigma powers up to 12 are dependent over " + f.to_string());
    }
    return c.result("basis freeness and sigma transcendence",
                    "28 vectors sigma^i*w of rank 28 in word coordinates; "
                    "sigma^1..sigma^12 independent; over Q and F_5");
}

// ---- 4: matrix units identify the quotient with M2(R) ------------------

std::vector<FieldScalar> mat2_flat(const Mat2& m, std::size_t width) {
    std::vector<FieldScalar> out;
    out.reserve(4 * width);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < width; ++k)
                out.push_back(m.at(i, j).coeff(k));
    return out;
}

CheckResult check_matrix_units() {
    Checker c;
    struct Case {
        FieldDesc f;
        std::vector<std::int64_t> h;
    };
    std::vector<Case> cases = {
        {FieldDesc::prime(5), {1, 1, 1}},   // lambda^2+lambda+1, F_25 block
        {FieldDesc::prime(5), {-2, 1}},     // lambda-2, F_5 block
        {FieldDesc::rationals(), {-2, 0, 1}},  // lambda^2-2, field extension
    };
    for (const Case& cs : cases) {
        QuotientCtx ctx{Poly::from_ints(cs.f, cs.h)};
        std::string tag = " for h=" + ctx.modulus().to_string() + " over " +
                          cs.f.to_string();
        MatrixUnits units = matrix_units(ctx);  // relations machine-checked

        // Bijectivity: the images of the 4*deg(h) module basis vectors span
        // a space of that exact dimension.
        std::size_t d = ctx.degree();
        std::vector<std::vector<FieldScalar>> images;
        for (GenSym g : {GenSym::Sigma, GenSym::A, GenSym::B, GenSym::AB})
            for (std::size_t j = 0; j < d; ++j) {
                QElem x = q_scale(Poly::monomial(FieldScalar::one(cs.f), j),
                                  QElem::basis(ctx, g));
                images.push_back(mat2_flat(to_matrix(x, units), d));
            }
        c.require(rank_of(images, cs.f) == 4 * d,
                  "unit map is not bijective" + tag);

        Rng rng(0xb1ec7);
        for (std::size_t t = 0; t < 500; ++t) {
            QElem x = random_q(ctx, rng);
            QElem y = random_q(ctx, rng);
            Mat2 mx = to_matrix(x, units);
            Mat2 my = to_matrix(y, units);
            if (to_matrix(q_mul(x, y), units) != mx * my) {
                c.require(false, "unit map is not multiplicative" + tag);
                break;
            }
            if (from_matrix(mx, units) != x) {
                c.require(false, "from_matrix does not invert" + tag);
                break;
            }
        }
    }
    return c.result("matrix units give an isomorphism with M2(R)",
                    "3 moduli; relations, bijectivity, 500 product and "
                    "round-trip samples each");
}

// ---- 5: nilpotent ideal witnesses for the degenerate moduli ------------

CheckResult check_witnesses() {
    Checker c;
    FieldDesc q = FieldDesc::rationals();
    Poly lam = Poly::lambda(q);

    QuotientCtx at_one{lam - Poly::one(q)};  // sigma = e
    IdealWitness w1 =
        nilpotent_ideal_witness(at_one, BlockKind::SigmaMinusOneNilpotent, 1);
    c.require(w1.nilpotency_index == 2, "index at sigma=e is not 2");
    c.require(w1.quotient_commutative, "quotient at sigma=e not commutative");
    c.require(!w1.module_basis.empty(), "empty ideal at sigma=e");

    QuotientCtx at_zero{lam};  // sigma = 0
    IdealWitness w0 =
        nilpotent_ideal_witness(at_zero, BlockKind::SigmaNilpotent, 1);
    c.require(w0.nilpotency_index == 3, "index at sigma=0 is not 3");
    c.require(w0.quotient_commutative, "quotient at sigma=0 not commutative");

    FieldDesc f5 = FieldDesc::prime(5);
    QuotientCtx sq{Poly::from_ints(f5, {0, 0, 1})};  // lambda^2, sigma^2 = 0
    IdealWitness w2 =
        nilpotent_ideal_witness(sq, BlockKind::SigmaNilpotent, 2);
    c.require(w2.nilpotency_index >= 2 && w2.nilpotency_index <= 9,
              "index for lambda^2 outside [2,9]");
    c.require(w2.quotient_commutative,
              "quotient for lambda^2 not commutative");
    return c.result("nilpotent ideals with commutative quotients",
                    "index 2 at sigma=e, 3 at sigma=0, bounded for sigma^2=0");
}

// ---- 6: full decomposition with CRT round trips -------------------------

CheckResult check_decompose() {
    Checker c;
    FieldDesc f = FieldDesc::prime(5);
    Poly lam = Poly::lambda(f);
    Poly one = Poly::one(f);
    std::vector<FactorPower> parts = {
        {lam, 1}, {lam - one, 2}, {Poly::from_ints(f, {1, 1, 1}), 1}};
    Poly m = one;
    for (const FactorPower& fp : parts) m = m * fp.base.pow(fp.exponent);
    Decomposition dec = decompose(factor_input(m, parts));

    c.require(dec.blocks.size() == 3, "expected three blocks");
    if (dec.blocks.size() == 3) {
        c.require(dec.blocks[0].kind == BlockKind::SigmaNilpotent &&
                      dec.blocks[0].k == 1,
                  "block 0 is not the sigma-nilpotent part");
        c.require(dec.blocks[1].kind == BlockKind::SigmaMinusOneNilpotent &&
                      dec.blocks[1].k == 2,
                  "block 1 is not the (sigma-e)-nilpotent part");
        c.require(dec.blocks[2].kind == BlockKind::MatrixBlock &&
                      dec.blocks[2].units.has_value(),
                  "block 2 is not a matrix block with units");
        c.require(dec.blocks[0].witness && dec.blocks[1].witness,
                  "nilpotent blocks carry no witness");
    }

    Rng rng(0xc47);
    for (std::size_t t = 0; t < 500; ++t) {
        QElem x = reduce(random_nf(f, 6, rng), dec.whole);
        if (dec.join(dec.split(x)) != x) {
            c.require(false, "split/join round trip failed");
            break;
        }
    }
    Rng rng2(0xd09);
    for (std::size_t t = 0; t < 250; ++t) {
        QElem x = reduce(random_nf(f, 6, rng2), dec.whole);
        QElem y = reduce(random_nf(f, 6, rng2), dec.whole);
        auto xs = dec.split(x);
        auto ys = dec.split(y);
        std::vector<QElem> prod;
        for (std::size_t j = 0; j < xs.size(); ++j)
            prod.push_back(q_mul(xs[j], ys[j]));
        if (dec.join(prod) != q_mul(x, y)) {
            c.require(false, "blockwise product disagrees with the whole");
            break;
        }
    }
    return c.result(
        "decomposition of lambda(lambda-1)^2(lambda^2+lambda+1) over F_5",
        "3 blocks of the expected kinds; 500 round trips, 250 blockwise "
        "products");
}

// ---- 7: the Jordan layer ------------------------------------------------

CheckResult check_jordan() {
    Checker c;
    for (FieldDesc f : {FieldDesc::rationals(), FieldDesc::prime(7)}) {
        std::string tag = " over " + f.to_string();
        NFElem a = NFElem::basis(f, GenSym::A);
        NFElem b = NFElem::basis(f, GenSym::B);
        NFElem sg = NFElem::basis(f, GenSym::Sigma);
        FieldScalar half = FieldScalar::from_ratio(f, 1, 2);
        c.require(jordan_mul(a, b) ==
                      NFElem::make(FieldScalar::zero(f),
                                   Poly::constant(-half),
                                   Poly::constant(half), Poly::constant(half),
                                   Poly::zero(f)),
                  "a o b != (a + b - sigma)/2" + tag);
        c.require(jordan_central_check(sg), "sigma not Jordan-central" + tag);
        c.require(!jordan_central_check(a),
                  "a unexpectedly Jordan-central" + tag);

        Rng rng(0x10da);
        for (std::size_t t = 0; t < 500; ++t) {
            NFElem x = random_nf(f, 4, rng);
            NFElem y = random_nf(f, 4, rng);
            NFElem xx = jordan_mul(x, x);
            if (jordan_mul(x, y) != jordan_mul(y, x)) {
                c.require(false, "Jordan product not commutative" + tag);
                break;
            }
            if (jordan_mul(jordan_mul(x, y), xx) !=
                jordan_mul(x, jordan_mul(y, xx))) {
                c.require(false, "Jordan identity failed" + tag);
                break;
            }
            NFElem hx = hermitian_project(x);
            NFElem hy = hermitian_project(y);
            if (!is_hermitian(hx) || !is_hermitian(jordan_mul(hx, hy))) {
                c.require(false, "hermitian part not closed" + tag);
                break;
            }
        }
    }
    bool refused = false;
    try {
        FieldDesc f2 = FieldDesc::prime(2);
        jordan_mul(NFElem::basis(f2, GenSym::A), NFElem::basis(f2, GenSym::B));
    } catch (const CharTwo&) {
        refused = true;
    }
    c.require(refused, "characteristic 2 was not rejected");
    return c.result("Jordan product: identity, hermitian closure, "
                    "central sigma, char-2 rejection",
                    "500 random pairs each over Q and F_7");
}

// ---- 8: the involution and the commutation condition --------------------

CheckResult check_star_and_condition() {
    Checker c;
    for (const FieldDesc& f : both_fields()) {
        std::string tag = " over " + f.to_string();
        NFElem a = NFElem::basis(f, GenSym::A);
        NFElem b = NFElem::basis(f, GenSym::B);
        NFElem ab = NFElem::basis(f, GenSym::AB);
        c.require(star(a) == a && star(b) == b, "a,b not star-fixed" + tag);
        c.require(star(ab) == nf_mul(b, a), "(ab)* != ba" + tag);

        Rng rng(0x57a7);
        for (std::size_t t = 0; t < 500; ++t) {
            NFElem x = random_nf(f, 4, rng);
            NFElem y = random_nf(f, 4, rng);
            if (star(star(x)) != x) {
                c.require(false, "star not involutive" + tag);
                break;
            }
            if (star(nf_mul(x, y)) != nf_mul(star(y), star(x))) {
                c.require(false, "star not an antihomomorphism" + tag);
                break;
            }
            if (star(nf_add(x, y)) != nf_add(star(x), star(y))) {
                c.require(false, "star not additive" + tag);
                break;
            }
        }
    }

    // A pair with AB = 0 but BA != 0 violates the commutation condition and
    // must produce a certificate.
    FieldDesc q = FieldDesc::rationals();
    Rep bad = Rep::checked(FMatrix::from_ints(q, {{1, 0}, {0, 0}}),
                           FMatrix::from_ints(q, {{0, 0}, {1, 1}}));
    ConditionIResult r_bad = condition_i_check(bad);
    c.require(!r_bad.holds && r_bad.certificate.has_value(),
              "degenerate pair not refuted with a certificate");
    if (r_bad.certificate) {
        FMatrix alpha_s =
            poly_of_matrix(*r_bad.certificate, bad.sigma());
        FMatrix comm = bad.b * bad.a - bad.a * bad.b;
        c.require(!(alpha_s * comm).is_zero(),
                  "certificate does not witness the violation");
    }

    FieldDesc f7 = FieldDesc::prime(7);
    Rep good = Rep::checked(FMatrix::from_ints(f7, {{1, 0}, {0, 0}}),
                            FMatrix::from_ints(f7, {{4, 4}, {4, 4}}));
    c.require(condition_i_check(good).holds,
              "generic pair over F_7 unexpectedly refuted");
    return c.result("star involution and the commutation condition",
                    "500 random star checks per field; certificate found "
                    "for the degenerate pair, none for the generic one");
}

// ---- 9: the matrix differential suite ------------------------------------

CheckResult check_differential() {
    Checker c;
    std::size_t total = 0;
    for (std::uint64_t p : {5ull, 7ull}) {
        for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
            Report r = differential_test(200, n, FieldDesc::prime(p),
                                         0xd1ff00 + 16 * p + n);
            total += r.trials;
            if (!r.ok()) {
                std::ostringstream what;
                what << r.mismatches.size() << " mismatches at n=" << n
                     << " over F_" << p << " (first: "
                     << r.mismatches.front().kind << ")";
                c.require(false, what.str());
            }
        }
    }
    return c.result("random idempotent pairs match their decompositions",
                    std::to_string(total) +
                        " trials across n=2,3 over F_5 and F_7");
}

// ---- 10: the commutative case ------------------------------------------

CheckResult check_commutative() {
    Checker c;
    FieldDesc q = FieldDesc::rationals();
    Rep flat = Rep::checked(FMatrix::from_ints(q, {{1, 0}, {0, 0}}),
                            FMatrix::identity(q, 2));
    c.require(commutative_checks(flat), "2x2 commuting pair failed");
    c.require(generated_basis(flat).dim() == 2,
              "2x2 commuting pair generates dimension != 2");

    Rep diag = Rep::checked(
        FMatrix::from_ints(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
        FMatrix::from_ints(q, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    c.require(commutative_checks(diag), "3x3 commuting pair failed");
    c.require(generated_basis(diag).dim() == 3,
              "3x3 commuting pair generates dimension != 3");

    bool refused = false;
    try {
        Rep bad = Rep::checked(FMatrix::from_ints(q, {{1, 0}, {0, 0}}),
                               FMatrix::from_ints(q, {{0, 0}, {1, 1}}));
        commutative_checks(bad);
    } catch (const NotCommutative&) {
        refused = true;
    }
    c.require(refused, "non-commuting pair was accepted");
    return c.result("commuting pairs split into scalar lines",
                    "2x2 and 3x3 diagonal pairs; non-commuting pair rejected");
}

// ---- 11: simplicity of the matrix quotients ------------------------------

CheckResult check_simplicity() {
    Checker c;
    FieldDesc f5 = FieldDesc::prime(5);
    QuotientCtx m2_f5{Poly::from_ints(f5, {-2, 1})};
    QuotientCtx m2_f25{Poly::from_ints(f5, {1, 1, 1})};
    Rng rng(0x51f1e);
    c.require(simplicity_spot_check(m2_f5, 50, rng),
              "proper ideal found in the M2(F_5) quotient");
    c.require(simplicity_spot_check(m2_f25, 50, rng),
              "proper ideal found in the M2(F_25) quotient");
    return c.result("matrix quotients have no proper ideals",
                    "50 random generators each in M2(F_5) and M2(F_25)");
}

}  // namespace

std::vector<CheckResult> run_acceptance() {
    using Fn = CheckResult (*)();
    struct Entry {
        const char* fallback_name;
        Fn fn;
    };
    const Entry entries[] = {
        {"normal-form product matches the free word oracle",
         check_normalize_oracle},
        {"sigma is central and the rewrite identities hold", check_identities},
        {"basis freeness and sigma transcendence", check_freeness},
        {"matrix units give an isomorphism with M2(R)", check_matrix_units},
        {"nilpotent ideals with commutative quotients", check_witnesses},
        {"decomposition of lambda(lambda-1)^2(lambda^2+lambda+1) over F_5",
         check_decompose},
        {"Jordan product: identity, hermitian closure, central sigma, "
         "char-2 rejection",
         check_jordan},
        {"star involution and the commutation condition",
         check_star_and_condition},
        {"random idempotent pairs match their decompositions",
         check_differential},
        {"commuting pairs split into scalar lines", check_commutative},
        {"matrix quotients have no proper ideals", check_simplicity},
    };

    std::vector<CheckResult> out;
    out.reserve(std::size(entries));
    for (const Entry& e : entries) {
        try {
            out.push_back(e.fn());
        } catch (const std::exception& ex) {
            out.push_back({e.fallback_name, false,
                           std::string("exception: ") + ex.what()});
        }
    }
    return out;
}

}  // namespace idem
