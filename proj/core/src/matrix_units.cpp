#include "idem/matrix_units.hpp"

namespace idem {

Mat2 Mat2::identity(const QuotientCtx& ctx) {
    Mat2 m(ctx);
    m.set(0, 0, Poly::one(ctx.field()));
    m.set(1, 1, Poly::one(ctx.field()));
    return m;
}

Mat2 Mat2::operator+(const Mat2& o) const {
    if (ctx_ != o.ctx_) throw CtxMismatch();
    Mat2 r(ctx_);
    for (std::size_t k = 0; k < 4; ++k) r.e_[k] = ctx_.reduce_poly(e_[k] + o.e_[k]);
    return r;
}

Mat2 Mat2::operator-(const Mat2& o) const {
    if (ctx_ != o.ctx_) throw CtxMismatch();
    Mat2 r(ctx_);
    for (std::size_t k = 0; k < 4; ++k) r.e_[k] = ctx_.reduce_poly(e_[k] - o.e_[k]);
    return r;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    if (ctx_ != o.ctx_) throw CtxMismatch();
    Mat2 r(ctx_);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Poly acc(ctx_.field());
            for (std::size_t k = 0; k < 2; ++k)
                acc += at(i, k) * o.at(k, j);
            r.set(i, j, acc);
        }
    return r;
}

Mat2 Mat2::scaled(const Poly& c) const {
    Mat2 r(ctx_);
    for (std::size_t k = 0; k < 4; ++k) r.e_[k] = ctx_.reduce_poly(e_[k] * c);
    return r;
}

const QElem& MatrixUnits::at(std::size_t i, std::size_t j) const {
    if (i == 0) return j == 0 ? e11 : e12;
    return j == 0 ? e21 : e22;
}

MatrixUnits matrix_units(const QuotientCtx& ctx) {
    const FieldDesc& f = ctx.field();
    Poly lam = Poly::lambda(f);
    Poly sigma_complement = lam - lam * lam;  // lambda(1 - lambda)
    if (!poly_gcd(ctx.modulus(), lam * (lam - Poly::one(f))).is_one())
        throw BadModulus(
            "matrix units need a modulus coprime to lambda(lambda-1)");

    QElem ebar = quotient_unit(ctx);
    QElem a = QElem::basis(ctx, GenSym::A);
    QElem b = QElem::basis(ctx, GenSym::B);
    QElem comp = q_sub(ebar, a);  // e-bar - a-bar

    MatrixUnits u{
        /*e11=*/a,
        /*e12=*/q_mul(q_mul(a, b), comp),
        /*e21=*/q_scale(central_inverse(sigma_complement, ctx),
                        q_mul(q_mul(comp, b), a)),
        /*e22=*/comp,
    };

    // sigma - sigma^2 invertible makes these genuine matrix units; verify
    // rather than trust.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    QElem prod = q_mul(u.at(i, j), u.at(k, l));
                    QElem expect = j == k ? u.at(i, l) : QElem::zero(ctx);
                    if (prod != expect)
                        throw InternalError("matrix unit relation failed");
                }
    if (q_add(u.e11, u.e22) != ebar)
        throw InternalError("matrix units do not sum to the quotient unit");
    return u;
}

Mat2 to_matrix(const QElem& x, const MatrixUnits& units) {
    if (x.ctx() != units.ctx()) throw CtxMismatch();
    const QElem& abar = units.e11;
    Mat2 m(x.ctx());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            QElem z = q_mul(q_mul(units.at(0, i), x), units.at(j, 0));
            Poly r = z.c_a();
            if (z != q_scale(r, abar))
                throw ExtractionFailure(
                    "coordinate extraction left the line R*e11");
            m.set(i, j, r);
        }
    return m;
}

QElem from_matrix(const Mat2& m, const MatrixUnits& units) {
    if (m.ctx() != units.ctx()) throw CtxMismatch();
    QElem acc = QElem::zero(m.ctx());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            acc = q_add(acc, q_scale(m.at(i, j), units.at(i, j)));
    return acc;
}

}  // namespace idem
