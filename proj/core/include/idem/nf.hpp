#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idem/poly.hpp"

namespace idem {

// Basis symbols of the normal form. E is the formal unit of the hull; the
// other four span the algebra generated by the idempotents a and b as a free
// module over F[sigma], where sigma = (a-b)^2 is central. The product b*a is
// not a basis element: it rewrites to a + b - ab - sigma.
enum class GenSym { E, Sigma, A, B, AB };

std::string gensym_name(GenSym g);

// Normal form of an element of the unital hull:
//
//   u*e + q(sigma)*sigma + f_a(sigma)*a + f_b(sigma)*b + f_ab(sigma)*ab
//
// with u a scalar and the coefficients polynomials in the central element
// sigma. The sigma coordinate stores q, so the full sigma-part as a plain
// polynomial is lambda*q(lambda). Equality of normal forms is equality in
// the algebra (the four symbols are a free F[sigma]-basis).
class NFElem {
public:
    explicit NFElem(const FieldDesc& f)
        : unit_(FieldScalar::zero(f)), sigma_(f), a_(f), b_(f), ab_(f) {}

    static NFElem zero(const FieldDesc& f) { return NFElem(f); }
    static NFElem basis(const FieldDesc& f, GenSym g);
    static NFElem unit(const FieldDesc& f) { return basis(f, GenSym::E); }
    static NFElem make(FieldScalar u, Poly c_sigma, Poly c_a, Poly c_b,
                       Poly c_ab);

    const FieldDesc& field() const { return unit_.field(); }
    const FieldScalar& unit_coeff() const { return unit_; }
    const Poly& c_sigma() const { return sigma_; }
    const Poly& c_a() const { return a_; }
    const Poly& c_b() const { return b_; }
    const Poly& c_ab() const { return ab_; }
    const Poly& coord(GenSym g) const;

    bool is_zero() const;
    // True when the element lies in the non-unital algebra A itself.
    bool is_proper() const { return unit_.is_zero(); }

    // Largest degree among the four coordinate polynomials; 0 for scalars.
    std::size_t max_coord_degree() const;

    // Coordinates as one flat vector: unit, then each coordinate padded to
    // coeffs_per_coord entries. Throws if a coordinate does not fit.
    std::vector<FieldScalar> flatten(std::size_t coeffs_per_coord) const;

    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

private:
    FieldScalar unit_;
    Poly sigma_, a_, b_, ab_;
};

NFElem nf_add(const NFElem& x, const NFElem& y);
NFElem nf_sub(const NFElem& x, const NFElem& y);
NFElem nf_neg(const NFElem& x);
NFElem nf_scale(const FieldScalar& c, const NFElem& x);

// Action of f(sigma) as a coefficient: multiplies the four module
// coordinates. A non-constant f on an element with a unit component has no
// normal form under this signature and raises NonConstantScaleOfUnit.
NFElem nf_scale(const Poly& f, const NFElem& x);

// Exact product in the hull. Implemented from the basis product table; the
// free-algebra oracle in freeword.hpp re-derives that table independently.
NFElem nf_mul(const NFElem& x, const NFElem& y);

// Product of two pure basis symbols from {sigma,a,b,ab} in normal form.
// Exposed so the quotient model can reuse the identical table.
NFElem nf_basis_product(GenSym s, GenSym t, const FieldDesc& f);

// The unique linear involution fixing a, b and reversing products; it sends
// ab to ba = a + b - ab - sigma.
NFElem star(const NFElem& x);

bool is_idempotent(const NFElem& x);

// Jordan structure (characteristic != 2, else CharTwo).
NFElem jordan_mul(const NFElem& x, const NFElem& y);
NFElem hermitian_project(const NFElem& x);
bool is_hermitian(const NFElem& x);
// x operator-commutes with every basis multiplication: x o (y o z) equals
// y o (x o z) for all basis pairs, which by bilinearity over F[sigma] means
// x is in the center of the Jordan algebra.
bool jordan_central_check(const NFElem& x);

// Recomputes sigma three ways from products of the generators and compares
// against the basis element: (a-b)^2, the rewrite a+b-ab-(b*a), and
// ((e-a)-(e-b))^2 must all agree.
bool verify_sigma_identity(const FieldDesc& f);

}  // namespace idem
