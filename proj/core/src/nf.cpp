#include "idem/nf.hpp"

#include <array>

namespace idem {

std::string gensym_name(GenSym g) {
    switch (g) {
        case GenSym::E: return "e";
        case GenSym::Sigma: return "sigma";
        case GenSym::A: return "a";
        case GenSym::B: return "b";
        case GenSym::AB: return "ab";
    }
    throw Error("unreachable");
}

NFElem NFElem::basis(const FieldDesc& f, GenSym g) {
    NFElem x(f);
    if (g == GenSym::E) {
        x.unit_ = FieldScalar::one(f);
        return x;
    }
    Poly one = Poly::one(f);
    switch (g) {
        case GenSym::Sigma: x.sigma_ = one; break;
        case GenSym::A: x.a_ = one; break;
        case GenSym::B: x.b_ = one; break;
        case GenSym::AB: x.ab_ = one; break;
        default: break;
    }
    return x;
}

NFElem NFElem::make(FieldScalar u, Poly c_sigma, Poly c_a, Poly c_b,
                    Poly c_ab) {
    const FieldDesc& f = u.field();
    if (!(c_sigma.field() == f) || !(c_a.field() == f) || !(c_b.field() == f) ||
        !(c_ab.field() == f))
        throw FieldMismatch();
    NFElem x(f);
    x.unit_ = std::move(u);
    x.sigma_ = std::move(c_sigma);
    x.a_ = std::move(c_a);
    x.b_ = std::move(c_b);
    x.ab_ = std::move(c_ab);
    return x;
}

const Poly& NFElem::coord(GenSym g) const {
    switch (g) {
        case GenSym::Sigma: return sigma_;
        case GenSym::A: return a_;
        case GenSym::B: return b_;
        case GenSym::AB: return ab_;
        default: throw InputError("coord() takes a module basis symbol, not e");
    }
}

bool NFElem::is_zero() const {
    return unit_.is_zero() && sigma_.is_zero() && a_.is_zero() &&
           b_.is_zero() && ab_.is_zero();
}

std::size_t NFElem::max_coord_degree() const {
    std::size_t d = 0;
    for (const Poly* p : {&sigma_, &a_, &b_, &ab_})
        if (auto deg = p->degree()) d = std::max(d, *deg);
    return d;
}

std::vector<FieldScalar> NFElem::flatten(std::size_t coeffs_per_coord) const {
    std::vector<FieldScalar> out;
    out.reserve(1 + 4 * coeffs_per_coord);
    out.push_back(unit_);
    for (const Poly* p : {&sigma_, &a_, &b_, &ab_}) {
        if (auto deg = p->degree(); deg && *deg + 1 > coeffs_per_coord)
            throw InputError("flatten: coordinate degree exceeds the requested width");
        for (std::size_t i = 0; i < coeffs_per_coord; ++i)
            out.push_back(p->coeff(i));
    }
    return out;
}

bool NFElem::operator==(const NFElem& o) const {
    return unit_ == o.unit_ && sigma_ == o.sigma_ && a_ == o.a_ &&
           b_ == o.b_ && ab_ == o.ab_;
}

NFElem nf_add(const NFElem& x, const NFElem& y) {
    return NFElem::make(x.unit_coeff() + y.unit_coeff(),
                        x.c_sigma() + y.c_sigma(), x.c_a() + y.c_a(),
                        x.c_b() + y.c_b(), x.c_ab() + y.c_ab());
}

NFElem nf_neg(const NFElem& x) {
    return NFElem::make(-x.unit_coeff(), -x.c_sigma(), -x.c_a(), -x.c_b(),
                        -x.c_ab());
}

NFElem nf_sub(const NFElem& x, const NFElem& y) { return nf_add(x, nf_neg(y)); }

NFElem nf_scale(const FieldScalar& c, const NFElem& x) {
    return NFElem::make(c * x.unit_coeff(), x.c_sigma().scaled(c),
                        x.c_a().scaled(c), x.c_b().scaled(c),
                        x.c_ab().scaled(c));
}

NFElem nf_scale(const Poly& f, const NFElem& x) {
    if (!f.is_constant() && !x.unit_coeff().is_zero())
        throw NonConstantScaleOfUnit();
    FieldScalar u = f.is_zero() ? FieldScalar::zero(f.field())
                                : f.coeff(0) * x.unit_coeff();
    return NFElem::make(u, f * x.c_sigma(), f * x.c_a(), f * x.c_b(),
                        f * x.c_ab());
}

NFElem nf_basis_product(GenSym s, GenSym t, const FieldDesc& f) {
    // sigma is central and acts as the coefficient lambda; products never
    // grow a unit component. The one rewrite is b*a = a + b - ab - sigma;
    // everything else follows from a^2=a, b^2=b and aba=(e-sigma)a,
    // bab=(e-sigma)b.
    Poly one = Poly::one(f);
    Poly lam = Poly::lambda(f);
    Poly one_minus_lam = one - lam;
    Poly zero = Poly::zero(f);
    auto make = [&](Poly cs, Poly ca, Poly cb, Poly cab) {
        return NFElem::make(FieldScalar::zero(f), std::move(cs), std::move(ca),
                            std::move(cb), std::move(cab));
    };
    if (s == GenSym::Sigma || t == GenSym::Sigma) {
        GenSym other = s == GenSym::Sigma ? t : s;
        switch (other) {
            case GenSym::Sigma: return make(lam, zero, zero, zero);
            case GenSym::A: return make(zero, lam, zero, zero);
            case GenSym::B: return make(zero, zero, lam, zero);
            case GenSym::AB: return make(zero, zero, zero, lam);
            default: break;
        }
    }
    if (s == GenSym::A) {
        switch (t) {
            case GenSym::A: return make(zero, one, zero, zero);
            case GenSym::B: return make(zero, zero, zero, one);
            case GenSym::AB: return make(zero, zero, zero, one);
            default: break;
        }
    }
    if (s == GenSym::B) {
        switch (t) {
            case GenSym::A: return make(-one, one, one, -one);
            case GenSym::B: return make(zero, zero, one, zero);
            case GenSym::AB: return make(zero, zero, one_minus_lam, zero);
            default: break;
        }
    }
    if (s == GenSym::AB) {
        switch (t) {
            case GenSym::A: return make(zero, one_minus_lam, zero, zero);
            case GenSym::B: return make(zero, zero, zero, one);
            case GenSym::AB: return make(zero, zero, zero, one_minus_lam);
            default: break;
        }
    }
    throw InputError("nf_basis_product takes module basis symbols");
}

NFElem nf_mul(const NFElem& x, const NFElem& y) {
    if (!(x.field() == y.field())) throw FieldMismatch();
    const FieldDesc& f = x.field();
    static constexpr std::array<GenSym, 4> kModule = {
        GenSym::Sigma, GenSym::A, GenSym::B, GenSym::AB};

    // x = u*e + X, y = v*e + Y gives xy = uv*e + u*Y + v*X + X*Y.
    NFElem acc = NFElem::make(
        x.unit_coeff() * y.unit_coeff(),
        y.c_sigma().scaled(x.unit_coeff()) + x.c_sigma().scaled(y.unit_coeff()),
        y.c_a().scaled(x.unit_coeff()) + x.c_a().scaled(y.unit_coeff()),
        y.c_b().scaled(x.unit_coeff()) + x.c_b().scaled(y.unit_coeff()),
        y.c_ab().scaled(x.unit_coeff()) + x.c_ab().scaled(y.unit_coeff()));

    for (GenSym s : kModule) {
        const Poly& xs = x.coord(s);
        if (xs.is_zero()) continue;
        for (GenSym t : kModule) {
            const Poly& yt = y.coord(t);
            if (yt.is_zero()) continue;
            acc = nf_add(acc, nf_scale(xs * yt, nf_basis_product(s, t, f)));
        }
    }
    return acc;
}

NFElem star(const NFElem& x) {
    const Poly& f = x.c_ab();
    return NFElem::make(x.unit_coeff(), x.c_sigma() - f, x.c_a() + f,
                        x.c_b() + f, -f);
}

bool is_idempotent(const NFElem& x) { return nf_mul(x, x) == x; }

namespace {

void require_odd_characteristic(const FieldDesc& f) {
    if (f.characteristic() == 2) throw CharTwo();
}

FieldScalar one_half(const FieldDesc& f) {
    return FieldScalar::from_ratio(f, 1, 2);
}

}  // namespace

NFElem jordan_mul(const NFElem& x, const NFElem& y) {
    require_odd_characteristic(x.field());
    return nf_scale(one_half(x.field()), nf_add(nf_mul(x, y), nf_mul(y, x)));
}

NFElem hermitian_project(const NFElem& x) {
    require_odd_characteristic(x.field());
    return nf_scale(one_half(x.field()), nf_add(x, star(x)));
}

bool is_hermitian(const NFElem& x) {
    require_odd_characteristic(x.field());
    return star(x) == x;
}

bool jordan_central_check(const NFElem& x) {
    require_odd_characteristic(x.field());
    const FieldDesc& f = x.field();
    static constexpr std::array<GenSym, 5> kAll = {
        GenSym::E, GenSym::Sigma, GenSym::A, GenSym::B, GenSym::AB};
    for (GenSym ys : kAll) {
        NFElem y = NFElem::basis(f, ys);
        for (GenSym zs : kAll) {
            NFElem z = NFElem::basis(f, zs);
            if (jordan_mul(x, jordan_mul(y, z)) !=
                jordan_mul(y, jordan_mul(x, z)))
                return false;
        }
    }
    return true;
}

bool verify_sigma_identity(const FieldDesc& f) {
    NFElem e = NFElem::unit(f);
    NFElem a = NFElem::basis(f, GenSym::A);
    NFElem b = NFElem::basis(f, GenSym::B);
    NFElem sigma = NFElem::basis(f, GenSym::Sigma);

    NFElem d = nf_sub(a, b);
    if (nf_mul(d, d) != sigma) return false;

    NFElem ab = nf_mul(a, b);
    NFElem ba = nf_mul(b, a);
    if (nf_sub(nf_sub(nf_add(a, b), ab), ba) != sigma) return false;

    // The complements e-a, e-b are idempotent with the same difference
    // squared.
    NFElem dc = nf_sub(nf_sub(e, a), nf_sub(e, b));
    return nf_mul(dc, dc) == sigma;
}

}  // namespace idem
