#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idem/linalg.hpp"
#include "idem/nf.hpp"
#include "idem/report.hpp"
#include "idem/rng.hpp"

namespace idem {

// A concrete pair of idempotent matrices over an exact field. checked()
// validates shape and idempotency; everything downstream may then assume
// both.
struct Rep {
    FMatrix a, b;

    static Rep checked(FMatrix a, FMatrix b);

    std::size_t n() const { return a.rows(); }
    const FieldDesc& field() const { return a.field(); }
    FMatrix sigma() const {
        FMatrix d = a - b;
        return d * d;
    }
};

// Evaluation of a normal form on the representation: polynomials in sigma
// become polynomials in S = (A-B)^2, the unit becomes the identity matrix.
FMatrix rep_eval(const Rep& rep, const NFElem& x);
FMatrix poly_of_matrix(const Poly& f, const FMatrix& m);

// Minimal polynomial of S, found as the first linear dependence among its
// flattened powers.
Poly rep_minpoly(const Rep& rep);

// Basis of the unital-free subalgebra generated by A and B, closed under
// products, with a witness word for each basis matrix.
struct SpanBasis {
    std::vector<FMatrix> mats;
    std::vector<std::string> words;

    std::size_t dim() const { return mats.size(); }
};

SpanBasis generated_basis(const Rep& rep);

// The generated algebra lies in F[S]S + F[S]A + F[S]B + F[S]AB with
// coefficient degrees below deg(minpoly): the rank-checked spanning claim.
bool spanning_check(const Rep& rep);

// Universal commutation test for alpha(S)AB against the module
// J = F[S]S + F[S]A + F[S]B: every alpha whose product lands in J must also
// commute the two orders of the product. The full alpha solution space is
// computed exactly; a violating alpha (certificate) disproves the condition.
struct ConditionIResult {
    bool holds = true;
    std::optional<Poly> certificate;
};

ConditionIResult condition_i_check(const Rep& rep);

// For a commuting pair (NotCommutative otherwise): verifies sigma(A-B)=A-B,
// sigma idempotent, sigma*AB = 0, and that the generated algebra decomposes
// as the direct sum of the lines through sigma*A, sigma*B, AB (zero summands
// permitted).
bool commutative_checks(const Rep& rep);

// Random idempotent as P D P^{-1} with D a random 0/1 diagonal; P is sampled
// until invertible (bounded internally; SingularSample on exhaustion).
FMatrix random_idempotent(const FieldDesc& f, std::size_t n, Rng& rng);

// Differential oracle: random idempotent pairs, exact minimal polynomial,
// factorization over F_p, decompose; then per block the predicted structure
// is confronted with the matrices themselves. Nilpotent blocks must satisfy
// (S - c)^k pi = 0 but not at k-1; matrix blocks must contribute exactly
// 4*deg(g)*k dimensions to the image of the generated algebra under the
// block projector. Also re-checks the evaluation homomorphism and spanning
// claim per trial. Prime fields only.
Report differential_test(std::size_t trials, std::size_t n,
                         const FieldDesc& f, std::uint64_t seed);

}  // namespace idem
