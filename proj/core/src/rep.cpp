#include "idem/rep.hpp"

#include <deque>

#include "idem/decompose.hpp"
#include "idem/random.hpp"

namespace idem {

Rep Rep::checked(FMatrix a, FMatrix b) {
    if (!(a.field() == b.field())) throw FieldMismatch();
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw InputError("generators must be square matrices of equal size");
    if (a * a != a || b * b != b) throw NotIdempotent();
    return Rep{std::move(a), std::move(b)};
}

FMatrix poly_of_matrix(const Poly& f, const FMatrix& m) {
    const FieldDesc& fd = m.field();
    std::size_t n = m.rows();
    FMatrix acc(fd, n, n);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * m;
        const FieldScalar& c = f.coeff(i);
        if (c.is_zero()) continue;
        for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += c;
    }
    return acc;
}

FMatrix rep_eval(const Rep& rep, const NFElem& x) {
    if (!(rep.field() == x.field())) throw FieldMismatch();
    std::size_t n = rep.n();
    FMatrix s = rep.sigma();
    FMatrix out(rep.field(), n, n);
    if (!x.unit_coeff().is_zero()) {
        for (std::size_t d = 0; d < n; ++d) out.at(d, d) = x.unit_coeff();
    }
    out = out + poly_of_matrix(x.c_sigma(), s) * s;
    out = out + poly_of_matrix(x.c_a(), s) * rep.a;
    out = out + poly_of_matrix(x.c_b(), s) * rep.b;
    out = out + poly_of_matrix(x.c_ab(), s) * (rep.a * rep.b);
    return out;
}

Poly rep_minpoly(const Rep& rep) {
    const FieldDesc& f = rep.field();
    FMatrix s = rep.sigma();
    std::vector<std::vector<FieldScalar>> powers;
    FMatrix acc = FMatrix::identity(f, rep.n());
    for (std::size_t i = 0; i <= rep.n(); ++i) {
        powers.push_back(acc.flatten());
        acc = acc * s;
    }
    // Cayley-Hamilton bounds the degree by n, so the dependence exists.
    return minimal_poly_of_scalar_action(powers, f);
}

SpanBasis generated_basis(const Rep& rep) {
    const FieldDesc& f = rep.field();
    LinearSpan span(f);
    SpanBasis out;
    std::deque<std::size_t> work;
    auto push = [&](const FMatrix& m, const std::string& word) {
        if (!span.insert(m.flatten())) return;
        out.mats.push_back(m);
        out.words.push_back(word);
        work.push_back(out.mats.size() - 1);
    };
    push(rep.a, "a");
    push(rep.b, "b");
    while (!work.empty()) {
        std::size_t i = work.front();
        work.pop_front();
        FMatrix m = out.mats[i];
        std::string w = out.words[i];
        push(m * rep.a, w + "a");
        push(rep.a * m, "a" + w);
        push(m * rep.b, w + "b");
        push(rep.b * m, "b" + w);
    }
    return out;
}

namespace {

// F[S]-module spanning set of the algebra: S^(i+1), S^i A, S^i B, S^i AB for
// i below the minimal polynomial degree (higher powers reduce into these).
std::vector<FMatrix> module_spanning_set(const Rep& rep, std::size_t deg) {
    FMatrix s = rep.sigma();
    FMatrix ab = rep.a * rep.b;
    std::vector<FMatrix> out;
    FMatrix spow = FMatrix::identity(rep.field(), rep.n());
    for (std::size_t i = 0; i < deg; ++i) {
        out.push_back(spow * s);
        out.push_back(spow * rep.a);
        out.push_back(spow * rep.b);
        out.push_back(spow * ab);
        spow = spow * s;
    }
    return out;
}

}  // namespace

bool spanning_check(const Rep& rep) {
    std::size_t deg = *rep_minpoly(rep).degree();
    LinearSpan span(rep.field());
    for (const FMatrix& m : module_spanning_set(rep, deg))
        span.insert(m.flatten());
    for (const FMatrix& m : generated_basis(rep).mats)
        if (!span.contains(m.flatten())) return false;
    return true;
}

ConditionIResult condition_i_check(const Rep& rep) {
    const FieldDesc& f = rep.field();
    std::size_t n = rep.n();
    Poly minpoly = rep_minpoly(rep);
    std::size_t deg = *minpoly.degree();
    FMatrix s = rep.sigma();
    FMatrix ab = rep.a * rep.b;
    FMatrix ba = rep.b * rep.a;

    // Unknowns: alpha_0..alpha_{deg-1}, then the J-coordinates for
    // S^(i+1), S^i A, S^i B. Equation: alpha(S) AB - j = 0.
    std::vector<FMatrix> alpha_cols, j_cols;
    FMatrix spow = FMatrix::identity(f, n);
    for (std::size_t i = 0; i < deg; ++i) {
        alpha_cols.push_back(spow * ab);
        j_cols.push_back(spow * s);
        j_cols.push_back(spow * rep.a);
        j_cols.push_back(spow * rep.b);
        spow = spow * s;
    }

    std::size_t cols = alpha_cols.size() + j_cols.size();
    FMatrix system(f, n * n, cols);
    for (std::size_t c = 0; c < alpha_cols.size(); ++c) {
        auto v = alpha_cols[c].flatten();
        for (std::size_t r = 0; r < v.size(); ++r) system.at(r, c) = v[r];
    }
    for (std::size_t c = 0; c < j_cols.size(); ++c) {
        auto v = j_cols[c].flatten();
        for (std::size_t r = 0; r < v.size(); ++r)
            system.at(r, alpha_cols.size() + c) = -v[r];
    }

    FMatrix commutator = ba - ab;
    for (const auto& sol : nullspace(system)) {
        std::vector<FieldScalar> alpha_coeffs(sol.begin(),
                                              sol.begin() + static_cast<std::ptrdiff_t>(deg));
        Poly alpha = Poly::from_coeffs(f, std::move(alpha_coeffs));
        if (alpha.is_zero()) continue;  // relation among the J spanning set
        if (!(poly_of_matrix(alpha, s) * commutator).is_zero())
            return {false, alpha.monic()};
    }
    return {true, std::nullopt};
}

bool commutative_checks(const Rep& rep) {
    const FieldDesc& f = rep.field();
    FMatrix ab = rep.a * rep.b;
    if (ab != rep.b * rep.a) throw NotCommutative();
    FMatrix s = rep.sigma();
    FMatrix d = rep.a - rep.b;

    if (s * d != d) return false;
    if (s * s != s) return false;
    if (s * ab != FMatrix(f, rep.n(), rep.n())) return false;

    // Direct sum F*sA + F*sB + F*AB (zero lines allowed) equal to the whole
    // generated algebra.
    std::vector<FMatrix> lines = {s * rep.a, s * rep.b, ab};
    std::vector<std::vector<FieldScalar>> nonzero;
    for (const FMatrix& m : lines)
        if (!m.is_zero()) nonzero.push_back(m.flatten());
    if (rank_of(nonzero, f) != nonzero.size()) return false;

    LinearSpan span(f);
    for (const FMatrix& m : lines) span.insert(m.flatten());
    for (const FMatrix& m : generated_basis(rep).mats)
        if (!span.contains(m.flatten())) return false;
    return true;
}

FMatrix random_idempotent(const FieldDesc& f, std::size_t n, Rng& rng) {
    FMatrix diag(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.coin()) diag.at(i, i) = FieldScalar::one(f);
    for (int attempt = 0; attempt < 100; ++attempt) {
        FMatrix p(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                p.at(i, j) = random_scalar(f, rng);
        auto inv = try_inverse(p);
        if (!inv) continue;
        return p * diag * *inv;
    }
    throw SingularSample();
}

Report differential_test(std::size_t trials, std::size_t n,
                         const FieldDesc& f, std::uint64_t seed) {
    if (!f.is_prime_field())
        throw WrongField("the differential suite factors over a prime field");
    Report report;
    report.suite = "rep-differential";
    report.field = f.to_string();
    report.seed = seed;
    report.trials = trials;
    report.params["n"] = n;

    Rng root(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = root.split(t);
        Rep rep = Rep::checked(random_idempotent(f, n, rng),
                               random_idempotent(f, n, rng));
        FMatrix s = rep.sigma();
        FMatrix id = FMatrix::identity(f, n);

        auto fail = [&](const std::string& kind, const std::string& detail) {
            report.mismatches.push_back({t, kind, detail});
        };

        // Evaluation is a ring homomorphism.
        for (int i = 0; i < 2; ++i) {
            NFElem x = random_nf(f, 2, rng);
            NFElem y = random_nf(f, 2, rng);
            if (rep_eval(rep, nf_mul(x, y)) !=
                rep_eval(rep, x) * rep_eval(rep, y)) {
                fail("hom", "rep_eval(x*y) != rep_eval(x)rep_eval(y)");
                break;
            }
        }

        // (1-a)(1-b)(1-a) = (1-sigma)(1-a) on the matrices themselves.
        FMatrix ca = id - rep.a, cb = id - rep.b;
        if (ca * cb * ca != (id - s) * ca)
            fail("idempotent-identity", "(e-a)(e-b)(e-a) != (e-sigma)(e-a)");

        if (!spanning_check(rep))
            fail("spanning", "generated algebra escapes the F[sigma] module span");

        Poly m = rep_minpoly(rep);
        if (!poly_of_matrix(m, s).is_zero()) {
            fail("minpoly", "claimed minimal polynomial does not annihilate");
            continue;
        }
        Factorization fact = factor_fp(m, rng);
        Decomposition dec = decompose(fact);

        SpanBasis gen = generated_basis(rep);
        for (const Block& block : dec.blocks) {
            if (block.kind == BlockKind::Zero) continue;
            FMatrix proj = poly_of_matrix(block.join_coeff, s);
            std::string where =
                block_kind_name(block.kind) + " block " +
                block.modulus().to_string();
            if (block.kind == BlockKind::MatrixBlock) {
                std::vector<std::vector<FieldScalar>> img;
                img.reserve(gen.mats.size());
                for (const FMatrix& g : gen.mats)
                    img.push_back((g * proj).flatten());
                std::size_t want = 4 * *block.g.degree() * block.k;
                if (rank_of(img, f) != want)
                    fail("block-dim", where + ": image rank != " +
                                          std::to_string(want));
            } else {
                FMatrix nil = block.kind == BlockKind::SigmaNilpotent
                                  ? s
                                  : s - id;
                if (!(nil.pow(block.k) * proj).is_zero())
                    fail("nilpotent-order", where + ": (S-c)^k pi != 0");
                if (block.k > 0 && (nil.pow(block.k - 1) * proj).is_zero())
                    fail("nilpotent-order",
                         where + ": (S-c)^(k-1) pi vanished early");
            }
        }
    }
    return report;
}

}  // namespace idem
