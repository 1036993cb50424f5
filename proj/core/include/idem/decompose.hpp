#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idem/crt.hpp"
#include "idem/factor.hpp"
#include "idem/matrix_units.hpp"
#include "idem/quotient.hpp"
#include "idem/rng.hpp"

namespace idem {

enum class BlockKind {
    Zero,                     // exponent 0: the factor is absent
    SigmaNilpotent,           // modulus lambda^k: sigma-bar nilpotent
    SigmaMinusOneNilpotent,   // modulus (lambda-1)^k: sigma-bar - e-bar nilpotent
    MatrixBlock,              // modulus g^k coprime to lambda(lambda-1): M2(R)
};

std::string block_kind_name(BlockKind k);

// Certificate that the block quotient has the predicted radical: seed
// generators, a basis of the two-sided ideal they generate (computed by
// exact closure, not trusted), the exact nilpotency index, and whether the
// quotient by the ideal is commutative.
struct IdealWitness {
    std::vector<QElem> generators;
    std::vector<QElem> module_basis;
    std::size_t nilpotency_index = 0;
    bool quotient_commutative = false;
};

struct Block {
    BlockKind kind = BlockKind::Zero;
    Poly g;              // base factor (lambda, lambda-1, or other irreducible)
    std::size_t k = 0;   // exponent; 0 exactly for Zero blocks
    bool trusted = false;  // irreducibility of g taken from the caller's claim
    std::optional<QuotientCtx> ctx;        // absent for Zero blocks
    Poly join_coeff;     // CRT coefficient in the whole quotient (0 for Zero)
    std::optional<MatrixUnits> units;      // MatrixBlock only
    std::optional<IdealWitness> witness;   // nilpotent kinds only

    Poly modulus() const { return k == 0 ? Poly::one(g.field()) : g.pow(k); }
};

// Structure of A(1)/A m(sigma) along the factorization of m: block 0 is the
// lambda part, block 1 the lambda-1 part (explicit Zero blocks when those
// factors are absent), then one MatrixBlock per remaining factor. Construction
// cross-checks the CRT round trip and blockwise multiplication on sample
// elements and refuses to return an unverified object.
struct Decomposition {
    FieldDesc field = FieldDesc::rationals();
    Poly minpoly;              // monic expanded modulus
    Factorization factorization;
    QuotientCtx whole;         // over minpoly
    CrtBasis crt;              // parts align with the non-Zero blocks in order
    std::vector<Block> blocks;

    Decomposition(FieldDesc f, Poly m, Factorization fact, QuotientCtx w,
                  CrtBasis c, std::vector<Block> bs)
        : field(f), minpoly(std::move(m)), factorization(std::move(fact)),
          whole(std::move(w)), crt(std::move(c)), blocks(std::move(bs)) {}

    std::vector<QElem> split(const QElem& x) const { return crt_split(x, crt); }
    QElem join(const std::vector<QElem>& parts) const {
        return crt_join(parts, crt);
    }
};

// The factorization must be monic (unit 1). Over a prime field, claimed
// irreducible bases of degree > 1 are re-verified by factoring; over Q their
// irreducibility is recorded as trusted instead (no rational factorization
// here, by design).
Decomposition decompose(const Factorization& fact);

// Two-sided ideal generated by the seeds inside the quotient, as an explicit
// echelon basis. Closure under multiplication by the four module generators
// on both sides; terminates because the rank is bounded by 5*deg(h).
std::vector<QElem> ideal_closure(const QuotientCtx& ctx,
                                 const std::vector<QElem>& seeds);

// Builds and verifies the radical witness for a nilpotent block kind. The
// modulus of ctx must be lambda^k or (lambda-1)^k to match the kind. The
// nilpotency index is verified against the proven bound (2 for sigma=e with
// k=1, 3 for sigma=0 with k=1, 3(k+1) in general); blowing through the bound
// raises ClosureBoundExceeded.
IdealWitness nilpotent_ideal_witness(const QuotientCtx& ctx, BlockKind kind,
                                     std::size_t k);

// Every nonzero element of the quotient generates the whole algebra as a
// two-sided ideal (rank 4*deg h over F); sampled `samples` times. Requires a
// modulus coprime to lambda(lambda-1), i.e. a full matrix quotient.
bool simplicity_spot_check(const QuotientCtx& ctx, std::size_t samples,
                           Rng& rng);

}  // namespace idem
