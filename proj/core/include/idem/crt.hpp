#pragma once

#include <utility>
#include <vector>

#include "idem/quotient.hpp"

namespace idem {

// Coordinatewise projection onto a coarser quotient; meaningful when the
// target modulus divides the source one (split direction of the CRT).
QElem project(const QElem& x, const QuotientCtx& to);

// Two-modulus Chinese remainder data: u1*h1 + u2*h2 = 1, whole = mod h1*h2.
// join1/join2 are the orthogonal central idempotent coefficients derived
// from the Bezout pair (join_i = 1 mod h_i, = 0 mod the other).
struct CrtPair {
    QuotientCtx whole;
    QuotientCtx part1, part2;
    Poly u1, u2;
    Poly join1, join2;
};

CrtPair crt_pair(const Poly& h1, const Poly& h2);  // NotCoprime when shared factor

std::pair<QElem, QElem> crt_split(const QElem& x, const CrtPair& pair);
QElem crt_join(const QElem& x1, const QElem& x2, const CrtPair& pair);

// Multiway variant over a pairwise coprime modulus list; the per-part join
// coefficient J_i is t_i*c_i mod m with c_i = m/h_i and t_i its inverse in
// R_i. The coefficients sum to 1 mod m (checked at construction).
struct CrtBasis {
    QuotientCtx whole;
    std::vector<QuotientCtx> parts;
    std::vector<Poly> join_coeff;
};

CrtBasis crt_basis(const std::vector<Poly>& moduli);
std::vector<QElem> crt_split(const QElem& x, const CrtBasis& basis);
QElem crt_join(const std::vector<QElem>& parts, const CrtBasis& basis);

}  // namespace idem
