#pragma once

#include <cstddef>
#include <vector>

#include "idem/poly.hpp"
#include "idem/rng.hpp"

namespace idem {

struct FactorPower {
    Poly base;  // monic, positive degree
    std::size_t exponent = 1;
};

// Canonical factored form: unit * prod base^exponent with bases monic and
// sorted (degree, then coefficients). Whether the bases are irreducible
// depends on the producer: factor_fp proves it, factor_input records the
// caller's claim.
struct Factorization {
    FieldScalar unit;
    std::vector<FactorPower> factors;

    Poly expand() const;
};

// Complete factorization into monic irreducibles over a prime field:
// squarefree decomposition (with p-th root descent), distinct-degree
// splitting, then randomized equal-degree splitting. Deterministic given the
// rng state; the equal-degree stage retries at most 64 times per split.
Factorization factor_fp(const Poly& f, Rng& rng);

// Packages caller-supplied factors after checking what is checkable exactly:
// the product must reproduce the input (ProductMismatch) and the bases must
// be pairwise coprime (NotCoprime). Irreducibility of the bases over Q is a
// trust boundary, not a theorem this library certifies.
Factorization factor_input(const Poly& input,
                           const std::vector<FactorPower>& factors);

// powers[i] is the flattened i-th power of a linear operator (powers[0] the
// identity). Returns the monic minimal polynomial, i.e. the first power that
// depends linearly on its predecessors. NoDependence when the supplied list
// is exhausted without finding one.
Poly minimal_poly_of_scalar_action(
    const std::vector<std::vector<FieldScalar>>& powers, const FieldDesc& f);

}  // namespace idem
