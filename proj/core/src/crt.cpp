#include "idem/crt.hpp"

namespace idem {

QElem project(const QElem& x, const QuotientCtx& to) {
    return QElem::make(to, x.unit_coeff(), x.c_sigma(), x.c_a(), x.c_b(),
                       x.c_ab());
}

CrtPair crt_pair(const Poly& h1, const Poly& h2) {
    auto [g, s, t] = poly_xgcd(h1, h2);
    if (!g.is_one()) throw NotCoprime();
    QuotientCtx whole(h1 * h2);
    CrtPair pair{whole, QuotientCtx(h1), QuotientCtx(h2), s, t,
                 whole.reduce_poly(t * h2), whole.reduce_poly(s * h1)};
    return pair;
}

std::pair<QElem, QElem> crt_split(const QElem& x, const CrtPair& pair) {
    if (x.ctx() != pair.whole) throw CtxMismatch();
    return {project(x, pair.part1), project(x, pair.part2)};
}

QElem crt_join(const QElem& x1, const QElem& x2, const CrtPair& pair) {
    if (x1.ctx() != pair.part1 || x2.ctx() != pair.part2) throw CtxMismatch();
    QElem lift1 = project(x1, pair.whole);
    QElem lift2 = project(x2, pair.whole);
    return q_add(q_scale(pair.join1, lift1), q_scale(pair.join2, lift2));
}

CrtBasis crt_basis(const std::vector<Poly>& moduli) {
    if (moduli.empty()) throw InputError("crt needs at least one modulus");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (!poly_gcd(moduli[i], moduli[j]).is_one()) throw NotCoprime();

    Poly m = Poly::one(moduli.front().field());
    for (const Poly& h : moduli) m *= h;
    QuotientCtx whole(m);

    CrtBasis basis{whole, {}, {}};
    Poly total(m.field());
    for (const Poly& h : moduli) {
        QuotientCtx part(h);
        Poly c = m / h;
        Poly t = central_inverse(c, part);
        Poly join = whole.reduce_poly(t * c);
        total += join;
        basis.parts.push_back(std::move(part));
        basis.join_coeff.push_back(std::move(join));
    }
    if (!whole.reduce_poly(total).is_one())
        throw InternalError("crt join coefficients do not sum to 1");
    return basis;
}

std::vector<QElem> crt_split(const QElem& x, const CrtBasis& basis) {
    if (x.ctx() != basis.whole) throw CtxMismatch();
    std::vector<QElem> parts;
    parts.reserve(basis.parts.size());
    for (const QuotientCtx& ctx : basis.parts) parts.push_back(project(x, ctx));
    return parts;
}

QElem crt_join(const std::vector<QElem>& parts, const CrtBasis& basis) {
    if (parts.size() != basis.parts.size())
        throw InputError("crt_join arity mismatch");
    QElem acc = QElem::zero(basis.whole);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].ctx() != basis.parts[i]) throw CtxMismatch();
        acc = q_add(acc, q_scale(basis.join_coeff[i],
                                 project(parts[i], basis.whole)));
    }
    return acc;
}

}  // namespace idem
