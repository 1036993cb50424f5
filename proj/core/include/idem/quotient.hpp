#pragma once

#include <cstddef>
#include <vector>

#include "idem/nf.hpp"
#include "idem/rng.hpp"

namespace idem {

// Quotient of the hull by the ideal generated by h(sigma): coefficients live
// in R = F[lambda]/(h). Requires h monic of positive degree (BadModulus).
class QuotientCtx {
public:
    explicit QuotientCtx(Poly h);

    const Poly& modulus() const { return h_; }
    const FieldDesc& field() const { return h_.field(); }
    std::size_t degree() const { return *h_.degree(); }

    Poly reduce_poly(const Poly& f) const { return f % h_; }

    bool operator==(const QuotientCtx& o) const { return h_ == o.h_; }
    bool operator!=(const QuotientCtx& o) const { return !(*this == o); }

private:
    Poly h_;
};

// Element of the quotient in the same five-coordinate shape as NFElem, but
// with every coordinate (including the unit one) a polynomial reduced mod h.
// Elements of the algebra itself (as opposed to its formal hull) have zero
// unit coordinate; see is_proper().
class QElem {
public:
    explicit QElem(const QuotientCtx& ctx)
        : ctx_(ctx), unit_(ctx.field()), sigma_(ctx.field()), a_(ctx.field()),
          b_(ctx.field()), ab_(ctx.field()) {}

    static QElem zero(const QuotientCtx& ctx) { return QElem(ctx); }
    static QElem basis(const QuotientCtx& ctx, GenSym g);
    static QElem make(const QuotientCtx& ctx, Poly unit, Poly c_sigma,
                      Poly c_a, Poly c_b, Poly c_ab);

    const QuotientCtx& ctx() const { return ctx_; }
    const FieldDesc& field() const { return ctx_.field(); }
    const Poly& unit_coeff() const { return unit_; }
    const Poly& c_sigma() const { return sigma_; }
    const Poly& c_a() const { return a_; }
    const Poly& c_b() const { return b_; }
    const Poly& c_ab() const { return ab_; }
    const Poly& coord(GenSym g) const;

    bool is_zero() const;
    bool is_proper() const { return unit_.is_zero(); }

    // All five coordinates padded to deg(h) entries each.
    std::vector<FieldScalar> flatten() const;

    bool operator==(const QElem& o) const;
    bool operator!=(const QElem& o) const { return !(*this == o); }

private:
    QuotientCtx ctx_;
    Poly unit_, sigma_, a_, b_, ab_;
};

// Canonical projection; a unital ring homomorphism onto the quotient. The
// scalar unit coordinate becomes a constant polynomial, everything else is
// reduced coordinatewise mod h. Note sigma-bar survives with its constant
// part: reduce never drops a coordinate, it only shortens polynomials.
QElem reduce(const NFElem& x, const QuotientCtx& ctx);

QElem q_add(const QElem& x, const QElem& y);
QElem q_sub(const QElem& x, const QElem& y);
QElem q_neg(const QElem& x);
QElem q_scale(const Poly& f, const QElem& x);  // f acts through R
QElem q_mul(const QElem& x, const QElem& y);
QElem q_pow(const QElem& x, std::size_t e);
bool q_is_idempotent(const QElem& x);

// Unit of the quotient algebra itself (not the formal hull unit): with
// h = alpha + lambda*q(lambda) and alpha = h(0) invertible, the element
// (-alpha^{-1} q(sigma)) * sigma-bar is a two-sided identity on the image of
// A. NotUnital when alpha = 0.
QElem quotient_unit(const QuotientCtx& ctx);

// Inverse of a central coefficient f in R; NotInvertible when gcd(f,h) != 1.
Poly central_inverse(const Poly& f, const QuotientCtx& ctx);

// Uniform random element with reduced coordinates; proper = zero unit coord.
QElem random_q(const QuotientCtx& ctx, Rng& rng, bool proper = true);

}  // namespace idem
