#include "idem/decompose.hpp"

#include <array>

#include "idem/linalg.hpp"

namespace idem {

std::string block_kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::Zero: return "zero";
        case BlockKind::SigmaNilpotent: return "sigma_nilpotent";
        case BlockKind::SigmaMinusOneNilpotent: return "sigma_minus_one_nilpotent";
        case BlockKind::MatrixBlock: return "matrix_block";
    }
    throw Error("unreachable");
}

namespace {

constexpr std::array<GenSym, 4> kModule = {GenSym::Sigma, GenSym::A, GenSym::B,
                                           GenSym::AB};

// Smallest n with I^n = 0, where basis spans I. Power spans are built from
// products of basis representatives, which is exact because multiplication
// is bilinear over F.
std::size_t nilpotency_index(const std::vector<QElem>& basis,
                             const QuotientCtx& ctx, std::size_t cap) {
    std::vector<QElem> cur = basis;
    std::size_t n = 1;
    while (!cur.empty()) {
        if (n >= cap)
            throw ClosureBoundExceeded(
                "ideal power I^" + std::to_string(cap) + " is still nonzero");
        LinearSpan span(ctx.field());
        std::vector<QElem> next;
        for (const QElem& x : basis)
            for (const QElem& y : cur) {
                QElem p = q_mul(x, y);
                if (span.insert(p.flatten())) next.push_back(p);
            }
        cur = std::move(next);
        ++n;
    }
    return n;
}

bool commutative_mod_ideal(const QuotientCtx& ctx,
                           const std::vector<QElem>& ideal_basis) {
    LinearSpan span(ctx.field());
    for (const QElem& x : ideal_basis) span.insert(x.flatten());
    for (GenSym s : kModule) {
        QElem x = QElem::basis(ctx, s);
        for (GenSym t : kModule) {
            QElem y = QElem::basis(ctx, t);
            QElem comm = q_sub(q_mul(x, y), q_mul(y, x));
            if (!span.contains(comm.flatten())) return false;
        }
    }
    return true;
}

NFElem ba_elem(const FieldDesc& f) {
    // b*a = a + b - ab - sigma in normal form.
    Poly one = Poly::one(f);
    return NFElem::make(FieldScalar::zero(f), -one, one, one, -one);
}

NFElem ab_minus_ba(const FieldDesc& f) {
    // ab - ba = sigma - a - b + 2ab.
    Poly one = Poly::one(f);
    return NFElem::make(FieldScalar::zero(f), one, -one, -one,
                        one + one);
}

}  // namespace

std::vector<QElem> ideal_closure(const QuotientCtx& ctx,
                                 const std::vector<QElem>& seeds) {
    LinearSpan span(ctx.field());
    std::vector<QElem> basis;
    std::vector<QElem> work;
    auto push = [&](const QElem& x) {
        if (x.ctx() != ctx) throw CtxMismatch();
        if (!x.is_proper())
            throw InputError("ideal seeds must lie in the algebra itself");
        if (span.insert(x.flatten())) {
            basis.push_back(x);
            work.push_back(x);
        }
    };
    for (const QElem& s : seeds) push(s);
    while (!work.empty()) {
        QElem w = work.back();
        work.pop_back();
        for (GenSym g : kModule) {
            QElem gen = QElem::basis(ctx, g);
            push(q_mul(gen, w));
            push(q_mul(w, gen));
        }
    }
    return basis;
}

IdealWitness nilpotent_ideal_witness(const QuotientCtx& ctx, BlockKind kind,
                                     std::size_t k) {
    const FieldDesc& f = ctx.field();
    if (k == 0) throw BadModulus("nilpotent witness needs k >= 1");
    Poly lam = Poly::lambda(f);
    Poly expected =
        kind == BlockKind::SigmaNilpotent
            ? lam.pow(k)
            : (lam - Poly::one(f)).pow(k);
    if (kind != BlockKind::SigmaNilpotent &&
        kind != BlockKind::SigmaMinusOneNilpotent)
        throw InputError("witness applies to the nilpotent block kinds only");
    if (ctx.modulus() != expected)
        throw BadModulus("quotient modulus does not match the block kind");

    IdealWitness w;
    if (kind == BlockKind::SigmaNilpotent) {
        // sigma-bar itself and the commutator ab - ba seed the radical.
        w.generators.push_back(QElem::basis(ctx, GenSym::Sigma));
        w.generators.push_back(reduce(ab_minus_ba(f), ctx));
        if (k > 1)
            for (GenSym g : {GenSym::A, GenSym::B, GenSym::AB})
                w.generators.push_back(q_scale(lam, QElem::basis(ctx, g)));
    } else {
        w.generators.push_back(reduce(nf_mul(NFElem::basis(f, GenSym::A),
                                             NFElem::basis(f, GenSym::B)),
                               ctx));
        w.generators.push_back(reduce(ba_elem(f), ctx));
        if (k > 1) {
            w.generators.push_back(
                q_sub(QElem::basis(ctx, GenSym::Sigma), quotient_unit(ctx)));
            for (GenSym g : {GenSym::A, GenSym::B, GenSym::AB})
                w.generators.push_back(
                    q_scale(lam - Poly::one(f), QElem::basis(ctx, g)));
        }
    }

    w.module_basis = ideal_closure(ctx, w.generators);
    if (w.module_basis.empty())
        throw InternalError("nilpotent witness ideal is unexpectedly zero");

    std::size_t cap;
    if (k == 1)
        cap = kind == BlockKind::SigmaMinusOneNilpotent ? 2 : 3;
    else
        cap = 3 * (k + 1);
    w.nilpotency_index = nilpotency_index(w.module_basis, ctx, cap);
    w.quotient_commutative = commutative_mod_ideal(ctx, w.module_basis);
    return w;
}

namespace {

bool is_lambda(const Poly& g) {
    return g.degree() == 1 && g.coeff(0).is_zero() && g.is_monic();
}

bool is_lambda_minus_one(const Poly& g) {
    const FieldDesc& f = g.field();
    return g == Poly::lambda(f) - Poly::one(f);
}

Block make_zero_block(const Poly& g) {
    Block b;
    b.kind = BlockKind::Zero;
    b.g = g;
    b.k = 0;
    b.join_coeff = Poly::zero(g.field());
    return b;
}

// Sample elements exercised by the construction-time round-trip check.
std::vector<NFElem> sample_elements(const FieldDesc& f) {
    std::vector<NFElem> xs;
    for (GenSym g : {GenSym::Sigma, GenSym::A, GenSym::B, GenSym::AB})
        xs.push_back(NFElem::basis(f, g));
    Poly lam = Poly::lambda(f);
    Poly one = Poly::one(f);
    xs.push_back(NFElem::make(FieldScalar::from_int(f, 2), lam,
                              one - lam, Poly::zero(f), lam * lam + one));
    xs.push_back(NFElem::make(FieldScalar::from_int(f, -1), one + lam,
                              Poly::from_ints(f, {3}), lam, one - lam - lam));
    return xs;
}

}  // namespace

Decomposition decompose(const Factorization& fact) {
    if (fact.factors.empty())
        throw BadModulus("decompose needs a factored modulus of positive degree");
    if (!fact.unit.is_one())
        throw BadModulus("the minimal polynomial must be monic");
    const FieldDesc& f = fact.unit.field();

    Poly m = fact.expand();
    QuotientCtx whole(m);
    std::vector<Block> blocks;

    // Locate the two special factors; everything else becomes a matrix block.
    std::optional<FactorPower> lam_part, lam1_part;
    std::vector<FactorPower> others;
    for (const FactorPower& fp : fact.factors) {
        if (is_lambda(fp.base)) lam_part = fp;
        else if (is_lambda_minus_one(fp.base)) lam1_part = fp;
        else others.push_back(fp);
    }

    // Over a prime field, re-verify claimed irreducibility; Q is recorded as
    // trusted instead.
    if (f.is_prime_field()) {
        Rng rng(0x1de4b10c5ULL);
        for (const FactorPower& fp : others) {
            Factorization check = factor_fp(fp.base, rng);
            if (check.factors.size() != 1 || check.factors[0].exponent != 1)
                throw InputError("claimed irreducible factor splits over F_p");
        }
    }

    std::vector<Poly> crt_moduli;
    auto add_block = [&](BlockKind kind, const FactorPower& fp) {
        Block b;
        b.kind = kind;
        b.g = fp.base;
        b.k = fp.exponent;
        b.trusted = f.is_rationals() && *fp.base.degree() > 1;
        b.ctx = QuotientCtx(b.modulus());
        crt_moduli.push_back(b.modulus());
        if (kind == BlockKind::MatrixBlock)
            b.units = matrix_units(*b.ctx);
        else
            b.witness = nilpotent_ideal_witness(*b.ctx, kind, b.k);
        blocks.push_back(std::move(b));
    };

    if (lam_part) add_block(BlockKind::SigmaNilpotent, *lam_part);
    else blocks.push_back(make_zero_block(Poly::lambda(f)));
    if (lam1_part) add_block(BlockKind::SigmaMinusOneNilpotent, *lam1_part);
    else blocks.push_back(make_zero_block(Poly::lambda(f) - Poly::one(f)));
    for (const FactorPower& fp : others) add_block(BlockKind::MatrixBlock, fp);

    // Thread the CRT coefficients back onto the non-zero blocks.
    CrtBasis basis = crt_basis(crt_moduli);
    std::size_t part = 0;
    for (Block& b : blocks) {
        if (b.kind == BlockKind::Zero) continue;
        b.join_coeff = basis.join_coeff[part];
        ++part;
    }

    Decomposition dec(f, m, fact, whole, std::move(basis), std::move(blocks));

    // Round trip and blockwise multiplication on fixed samples; failure here
    // is a bug, never a property of the input.
    std::vector<NFElem> samples = sample_elements(f);
    auto split_of = [&](const NFElem& x) {
        return dec.split(reduce(x, dec.whole));
    };
    for (const NFElem& x : samples) {
        auto parts = split_of(x);
        if (dec.join(parts) != reduce(x, dec.whole))
            throw InternalError("crt round trip failed on a sample element");
    }
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const NFElem& x = samples[i];
        const NFElem& y = samples[i + 1];
        auto xs = split_of(x);
        auto ys = split_of(y);
        std::vector<QElem> prod;
        prod.reserve(xs.size());
        for (std::size_t j = 0; j < xs.size(); ++j)
            prod.push_back(q_mul(xs[j], ys[j]));
        if (dec.join(prod) != reduce(nf_mul(x, y), dec.whole))
            throw InternalError("blockwise product disagrees with the whole");
    }
    return dec;
}

bool simplicity_spot_check(const QuotientCtx& ctx, std::size_t samples,
                           Rng& rng) {
    const FieldDesc& f = ctx.field();
    Poly lam = Poly::lambda(f);
    if (!poly_gcd(ctx.modulus(), lam * (lam - Poly::one(f))).is_one())
        throw BadModulus("simplicity check needs a full matrix quotient");
    std::size_t want = 4 * ctx.degree();
    for (std::size_t i = 0; i < samples; ++i) {
        QElem x = random_q(ctx, rng, /*proper=*/true);
        while (x.is_zero()) x = random_q(ctx, rng, /*proper=*/true);
        auto closure = ideal_closure(ctx, {x});
        std::vector<std::vector<FieldScalar>> vecs;
        vecs.reserve(closure.size());
        for (const QElem& e : closure) vecs.push_back(e.flatten());
        if (rank_of(vecs, f) != want) return false;
    }
    return true;
}

}  // namespace idem
