#include "idem/quotient.hpp"

#include <array>

#include "idem/random.hpp"

namespace idem {

QuotientCtx::QuotientCtx(Poly h) : h_(std::move(h)) {
    if (h_.is_zero() || h_.is_constant())
        throw BadModulus("quotient modulus must have positive degree");
    if (!h_.is_monic()) throw BadModulus("quotient modulus must be monic");
}

QElem QElem::basis(const QuotientCtx& ctx, GenSym g) {
    return reduce(NFElem::basis(ctx.field(), g), ctx);
}

QElem QElem::make(const QuotientCtx& ctx, Poly unit, Poly c_sigma, Poly c_a,
                  Poly c_b, Poly c_ab) {
    QElem x(ctx);
    x.unit_ = ctx.reduce_poly(unit);
    x.sigma_ = ctx.reduce_poly(c_sigma);
    x.a_ = ctx.reduce_poly(c_a);
    x.b_ = ctx.reduce_poly(c_b);
    x.ab_ = ctx.reduce_poly(c_ab);
    return x;
}

const Poly& QElem::coord(GenSym g) const {
    switch (g) {
        case GenSym::Sigma: return sigma_;
        case GenSym::A: return a_;
        case GenSym::B: return b_;
        case GenSym::AB: return ab_;
        default: throw InputError("coord() takes a module basis symbol, not e");
    }
}

bool QElem::is_zero() const {
    return unit_.is_zero() && sigma_.is_zero() && a_.is_zero() &&
           b_.is_zero() && ab_.is_zero();
}

std::vector<FieldScalar> QElem::flatten() const {
    std::size_t width = ctx_.degree();
    std::vector<FieldScalar> out;
    out.reserve(5 * width);
    for (const Poly* p : {&unit_, &sigma_, &a_, &b_, &ab_})
        for (std::size_t i = 0; i < width; ++i) out.push_back(p->coeff(i));
    return out;
}

bool QElem::operator==(const QElem& o) const {
    return ctx_ == o.ctx_ && unit_ == o.unit_ && sigma_ == o.sigma_ &&
           a_ == o.a_ && b_ == o.b_ && ab_ == o.ab_;
}

QElem reduce(const NFElem& x, const QuotientCtx& ctx) {
    return QElem::make(ctx, Poly::constant(x.unit_coeff()), x.c_sigma(),
                       x.c_a(), x.c_b(), x.c_ab());
}

namespace {

void require_same_ctx(const QElem& x, const QElem& y) {
    if (x.ctx() != y.ctx()) throw CtxMismatch();
}

}  // namespace

QElem q_add(const QElem& x, const QElem& y) {
    require_same_ctx(x, y);
    return QElem::make(x.ctx(), x.unit_coeff() + y.unit_coeff(),
                       x.c_sigma() + y.c_sigma(), x.c_a() + y.c_a(),
                       x.c_b() + y.c_b(), x.c_ab() + y.c_ab());
}

QElem q_neg(const QElem& x) {
    return QElem::make(x.ctx(), -x.unit_coeff(), -x.c_sigma(), -x.c_a(),
                       -x.c_b(), -x.c_ab());
}

QElem q_sub(const QElem& x, const QElem& y) { return q_add(x, q_neg(y)); }

QElem q_scale(const Poly& f, const QElem& x) {
    return QElem::make(x.ctx(), f * x.unit_coeff(), f * x.c_sigma(),
                       f * x.c_a(), f * x.c_b(), f * x.c_ab());
}

QElem q_mul(const QElem& x, const QElem& y) {
    require_same_ctx(x, y);
    const QuotientCtx& ctx = x.ctx();
    const FieldDesc& f = ctx.field();
    static constexpr std::array<GenSym, 4> kModule = {
        GenSym::Sigma, GenSym::A, GenSym::B, GenSym::AB};

    // Same bilinear table as nf_mul, with coefficients multiplied in R and
    // the unit coordinate now a full member of R.
    QElem acc = QElem::make(
        ctx, x.unit_coeff() * y.unit_coeff(),
        x.unit_coeff() * y.c_sigma() + y.unit_coeff() * x.c_sigma(),
        x.unit_coeff() * y.c_a() + y.unit_coeff() * x.c_a(),
        x.unit_coeff() * y.c_b() + y.unit_coeff() * x.c_b(),
        x.unit_coeff() * y.c_ab() + y.unit_coeff() * x.c_ab());

    for (GenSym s : kModule) {
        const Poly& xs = x.coord(s);
        if (xs.is_zero()) continue;
        for (GenSym t : kModule) {
            const Poly& yt = y.coord(t);
            if (yt.is_zero()) continue;
            NFElem prod = nf_basis_product(s, t, f);
            Poly c = ctx.reduce_poly(xs * yt);
            acc = q_add(acc, q_scale(c, reduce(prod, ctx)));
        }
    }
    return acc;
}

QElem q_pow(const QElem& x, std::size_t e) {
    QElem acc = QElem::basis(x.ctx(), GenSym::E);
    QElem base = x;
    while (e > 0) {
        if (e & 1) acc = q_mul(acc, base);
        base = q_mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool q_is_idempotent(const QElem& x) { return q_mul(x, x) == x; }

QElem quotient_unit(const QuotientCtx& ctx) {
    const Poly& h = ctx.modulus();
    FieldScalar alpha = h.constant_term();
    if (alpha.is_zero()) throw NotUnital();
    // h = alpha + lambda*q(lambda); strip the constant term and shift down.
    std::vector<FieldScalar> qc(h.coeffs().begin() + 1, h.coeffs().end());
    Poly q = Poly::from_coeffs(ctx.field(), std::move(qc));
    Poly coeff = ctx.reduce_poly(q.scaled(-alpha.inverse()));
    return q_scale(coeff, QElem::basis(ctx, GenSym::Sigma));
}

Poly central_inverse(const Poly& f, const QuotientCtx& ctx) {
    Poly r = ctx.reduce_poly(f);
    if (r.is_zero()) throw NotInvertible("zero is not invertible in R");
    auto [g, s, t] = poly_xgcd(r, ctx.modulus());
    if (!g.is_one())
        throw NotInvertible("coefficient shares a factor with the modulus");
    return ctx.reduce_poly(s);
}

QElem random_q(const QuotientCtx& ctx, Rng& rng, bool proper) {
    std::size_t deg = ctx.degree() - 1;
    const FieldDesc& f = ctx.field();
    Poly unit = proper ? Poly::zero(f) : random_poly(f, deg, rng);
    return QElem::make(ctx, std::move(unit), random_poly(f, deg, rng),
                       random_poly(f, deg, rng), random_poly(f, deg, rng),
                       random_poly(f, deg, rng));
}

}  // namespace idem
