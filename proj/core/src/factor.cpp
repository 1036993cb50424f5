#include "idem/factor.hpp"

#include <algorithm>

#include "idem/linalg.hpp"

namespace idem {

namespace {

Poly poly_mulmod(const Poly& x, const Poly& y, const Poly& mod) {
    return (x * y) % mod;
}

Poly poly_powmod(Poly base, mpz_class exp, const Poly& mod) {
    Poly acc = Poly::one(mod.field()) % mod;
    base = base % mod;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) acc = poly_mulmod(acc, base, mod);
        base = poly_mulmod(base, base, mod);
        exp >>= 1;
    }
    return acc;
}

// f must be a p-th power; over F_p that means f(x) = g(x^p) with the same
// coefficients (Frobenius fixes the prime field).
Poly pth_root(const Poly& f, std::uint64_t p) {
    std::vector<FieldScalar> out;
    const auto& cs = f.coeffs();
    for (std::size_t i = 0; i < cs.size(); i += static_cast<std::size_t>(p))
        out.push_back(cs[i]);
    return Poly::from_coeffs(f.field(), std::move(out));
}

// Squarefree decomposition over F_p: returns (g, multiplicity) pairs with the
// g monic, squarefree, pairwise coprime, and prod g^mult == f (f monic).
std::vector<std::pair<Poly, std::size_t>> squarefree_fp(const Poly& f,
                                                        std::uint64_t p) {
    std::vector<std::pair<Poly, std::size_t>> out;
    if (f.is_constant()) return out;
    Poly d = f.derivative();
    Poly c = d.is_zero() ? f : poly_gcd(f, d);
    Poly w = f / c;
    std::size_t i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly part = w / y;
        if (!part.is_one()) out.emplace_back(part, i);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) {
        // Leftover factors all have multiplicity divisible by p.
        for (auto& [g, m] : squarefree_fp(pth_root(c, p), p))
            out.emplace_back(g, m * static_cast<std::size_t>(p));
    }
    return out;
}

// Distinct-degree: splits squarefree monic g into (product, d) pairs where
// each product collects the irreducible factors of degree exactly d.
std::vector<std::pair<Poly, std::size_t>> ddf_fp(const Poly& g,
                                                 std::uint64_t p) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const FieldDesc& f = g.field();
    Poly rest = g;
    Poly lam = Poly::lambda(f);
    Poly h = lam % rest;  // lambda^(p^0)
    std::size_t d = 0;
    while (!rest.is_one() && 2 * (d + 1) <= *rest.degree()) {
        ++d;
        h = poly_powmod(h, mpz_class(static_cast<unsigned long>(p)), rest);
        Poly u = poly_gcd(h - lam, rest);
        if (!u.is_one()) {
            out.emplace_back(u, d);
            rest = rest / u;
            if (rest.is_one()) break;
            h = h % rest;
        }
    }
    if (!rest.is_one()) out.emplace_back(rest, *rest.degree());
    return out;
}

Poly random_poly_below(const FieldDesc& f, std::size_t deg_bound, Rng& rng) {
    std::vector<FieldScalar> cs;
    cs.reserve(deg_bound);
    for (std::size_t i = 0; i < deg_bound; ++i)
        cs.push_back(FieldScalar::from_int(
            f, static_cast<std::int64_t>(rng.below(f.p()))));
    return Poly::from_coeffs(f, std::move(cs));
}

// Equal-degree splitting (Cantor-Zassenhaus): g is a product of r >= 1 monic
// irreducibles, all of degree d.
void edf_fp(const Poly& g, std::size_t d, std::uint64_t p, Rng& rng,
            std::vector<Poly>& out) {
    if (*g.degree() == d) {
        out.push_back(g);
        return;
    }
    const FieldDesc& f = g.field();
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(d));
    for (int attempt = 0; attempt < 64; ++attempt) {
        Poly t = random_poly_below(f, *g.degree(), rng);
        if (t.is_constant()) continue;
        Poly s(f);
        if (p == 2) {
            // Trace map sum t^(2^i), i < d.
            Poly acc = t % g;
            s = acc;
            for (std::size_t i = 1; i < d; ++i) {
                acc = poly_mulmod(acc, acc, g);
                s = s + acc;
            }
        } else {
            s = poly_powmod(t, (pd - 1) / 2, g) - Poly::one(f);
        }
        Poly u = s.is_zero() ? g : poly_gcd(s, g);
        if (u.is_one() || *u.degree() == *g.degree()) continue;
        edf_fp(u, d, p, rng, out);
        edf_fp(g / u, d, p, rng, out);
        return;
    }
    throw Error("equal-degree splitting exceeded the retry bound");
}

void sort_factors(std::vector<FactorPower>& fs) {
    std::sort(fs.begin(), fs.end(), [](const FactorPower& x, const FactorPower& y) {
        return Poly::cmp(x.base, y.base) < 0;
    });
}

}  // namespace

Poly Factorization::expand() const {
    Poly acc = Poly::constant(unit);
    for (const auto& fp : factors) acc *= fp.base.pow(fp.exponent);
    return acc;
}

Factorization factor_fp(const Poly& f, Rng& rng) {
    if (!f.field().is_prime_field())
        throw WrongField("factor_fp requires a prime field");
    if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
    std::uint64_t p = f.field().p();

    Factorization result{f.leading(), {}};
    Poly work = f.monic();
    for (const auto& [sq, mult] : squarefree_fp(work, p))
        for (const auto& [prod, d] : ddf_fp(sq, p)) {
            std::vector<Poly> irreducibles;
            edf_fp(prod, d, p, rng, irreducibles);
            for (Poly& irr : irreducibles)
                result.factors.push_back({std::move(irr), mult});
        }
    sort_factors(result.factors);

    if (result.expand() != f)
        throw InternalError("factorization failed to reproduce its input");
    return result;
}

Factorization factor_input(const Poly& input,
                           const std::vector<FactorPower>& factors) {
    if (input.is_zero()) throw InputError("cannot factor the zero polynomial");
    for (const auto& fp : factors) {
        if (fp.base.is_zero() || fp.base.is_constant() || !fp.base.is_monic())
            throw InputError("factor bases must be monic of positive degree");
        if (fp.exponent == 0) throw InputError("factor exponents must be positive");
        if (!(fp.base.field() == input.field())) throw FieldMismatch();
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!poly_gcd(factors[i].base, factors[j].base).is_one())
                throw NotCoprime();

    Factorization result{input.leading(), factors};
    sort_factors(result.factors);
    if (result.expand() != input) throw ProductMismatch();
    return result;
}

Poly minimal_poly_of_scalar_action(
    const std::vector<std::vector<FieldScalar>>& powers, const FieldDesc& f) {
    if (powers.empty()) throw NoDependence();
    std::vector<std::vector<FieldScalar>> prefix;
    for (std::size_t k = 1; k < powers.size(); ++k) {
        prefix.push_back(powers[k - 1]);
        auto combo = solve_combination(prefix, powers[k], f);
        if (!combo) continue;
        std::vector<FieldScalar> cs;
        cs.reserve(k + 1);
        for (auto& c : *combo) cs.push_back(-c);
        cs.push_back(FieldScalar::one(f));
        return Poly::from_coeffs(f, std::move(cs));
    }
    throw NoDependence();
}

}  // namespace idem
