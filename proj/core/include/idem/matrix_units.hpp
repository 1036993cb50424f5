#pragma once

#include <array>

#include "idem/quotient.hpp"

namespace idem {

// 2x2 matrix over R = F[lambda]/(h); the target of the isomorphism carried
// by a MatrixUnits system.
class Mat2 {
public:
    explicit Mat2(const QuotientCtx& ctx)
        : ctx_(ctx), e_{Poly(ctx.field()), Poly(ctx.field()),
                        Poly(ctx.field()), Poly(ctx.field())} {}

    static Mat2 identity(const QuotientCtx& ctx);

    const QuotientCtx& ctx() const { return ctx_; }
    const Poly& at(std::size_t i, std::size_t j) const { return e_[2 * i + j]; }
    void set(std::size_t i, std::size_t j, const Poly& v) {
        e_[2 * i + j] = ctx_.reduce_poly(v);
    }

    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 scaled(const Poly& c) const;

    bool operator==(const Mat2& o) const {
        return ctx_ == o.ctx_ && e_ == o.e_;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

private:
    QuotientCtx ctx_;
    std::array<Poly, 4> e_;
};

// The four matrix units realizing A/Ah(sigma) as M2(R): e11 = a-bar,
// e12 = a-bar b-bar (e-bar - a-bar), e21 = (sigma - sigma^2)^{-1} acting on
// (e-bar - a-bar) b-bar a-bar, e22 = e-bar - a-bar. Requires h coprime to
// lambda(lambda-1) (BadModulus otherwise); the constructor machine-checks all
// sixteen unit relations and e11 + e22 = e-bar before returning.
struct MatrixUnits {
    QElem e11, e12, e21, e22;

    const QuotientCtx& ctx() const { return e11.ctx(); }
    const QElem& at(std::size_t i, std::size_t j) const;
};

MatrixUnits matrix_units(const QuotientCtx& ctx);

// Coordinates of x in the matrix-unit basis: e_{1i} x e_{j1} must land on
// the line R*e11; the coefficient is entry (i,j). A vector off that line
// raises ExtractionFailure (which would disprove the isomorphism).
Mat2 to_matrix(const QElem& x, const MatrixUnits& units);

// Inverse direction: sum of m[i][j] * e_ij.
QElem from_matrix(const Mat2& m, const MatrixUnits& units);

}  // namespace idem
