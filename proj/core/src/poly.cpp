#include "idem/poly.hpp"

#include <algorithm>

namespace idem {

Poly Poly::constant(const FieldScalar& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

Poly Poly::monomial(const FieldScalar& c, std::size_t k) {
    Poly p(c.field());
    if (c.is_zero()) return p;
    p.coeffs_.assign(k, FieldScalar::zero(c.field()));
    p.coeffs_.push_back(c);
    return p;
}

Poly Poly::from_coeffs(const FieldDesc& f, std::vector<FieldScalar> cs) {
    Poly p(f);
    for (const auto& c : cs)
        if (!(c.field() == f)) throw FieldMismatch();
    p.coeffs_ = std::move(cs);
    p.trim();
    return p;
}

Poly Poly::from_ints(const FieldDesc& f, const std::vector<std::int64_t>& cs) {
    std::vector<FieldScalar> v;
    v.reserve(cs.size());
    for (std::int64_t c : cs) v.push_back(FieldScalar::from_int(f, c));
    return from_coeffs(f, std::move(v));
}

FieldScalar Poly::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return FieldScalar::zero(field_);
}

FieldScalar Poly::leading() const {
    if (coeffs_.empty())
        throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FieldScalar Poly::eval(const FieldScalar& x) const {
    FieldScalar acc = FieldScalar::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(o);
    Poly r(field_);
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.coeffs_.push_back(coeff(i) + o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_field(o);
    Poly r(field_);
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1,
                     FieldScalar::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const FieldScalar& c) const {
    if (!(c.field() == field_)) throw FieldMismatch();
    Poly r(field_);
    if (c.is_zero()) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& x : coeffs_) r.coeffs_.push_back(x * c);
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    Poly r(field_);
    r.coeffs_.assign(k, FieldScalar::zero(field_));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

Poly Poly::pow(std::size_t e) const {
    Poly acc = Poly::one(field_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::derivative() const {
    Poly r(field_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * FieldScalar::from_int(field_, static_cast<std::int64_t>(i)));
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    require_same_field(d);
    if (d.is_zero()) throw DivisionByZero();
    Poly q(field_);
    Poly r = *this;
    std::size_t dd = *d.degree();
    FieldScalar lead_inv = d.leading().inverse();
    if (!r.is_zero() && *r.degree() >= dd)
        q.coeffs_.assign(*r.degree() - dd + 1, FieldScalar::zero(field_));
    while (!r.is_zero() && *r.degree() >= dd) {
        std::size_t k = *r.degree() - dd;
        FieldScalar c = r.leading() * lead_inv;
        q.coeffs_[k] = c;
        // r -= c * lambda^k * d, done in place.
        for (std::size_t i = 0; i < d.coeffs_.size(); ++i)
            r.coeffs_[k + i] -= c * d.coeffs_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

int Poly::cmp(const Poly& x, const Poly& y) {
    std::size_t dx = x.coeffs_.size(), dy = y.coeffs_.size();
    if (dx != dy) return dx < dy ? -1 : 1;
    for (std::size_t i = 0; i < dx; ++i) {
        int c = FieldScalar::cmp(x.coeffs_[i], y.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const FieldScalar& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool negative = c.field().is_rationals() && c.rational() < 0;
        FieldScalar mag = negative ? -c : c;
        std::string term;
        if (k == 0) {
            term = mag.to_string();
        } else {
            std::string power = k == 1 ? var : var + "^" + std::to_string(k);
            term = mag.is_one() ? power : mag.to_string() + "*" + power;
        }
        if (first) {
            out = negative ? "-" + term : term;
            first = false;
        } else {
            out += negative ? " - " + term : " + " + term;
        }
    }
    return out;
}

Poly poly_gcd(const Poly& x, const Poly& y) {
    if (x.is_zero() && y.is_zero()) throw BothZero();
    Poly a = x, b = y;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

XgcdResult poly_xgcd(const Poly& x, const Poly& y) {
    if (x.is_zero() && y.is_zero()) throw BothZero();
    const FieldDesc& f = x.field();
    Poly r0 = x, r1 = y;
    Poly s0 = Poly::one(f), s1 = Poly::zero(f);
    Poly t0 = Poly::zero(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    FieldScalar lead_inv = r0.leading().inverse();
    return {r0.scaled(lead_inv), s0.scaled(lead_inv), t0.scaled(lead_inv)};
}

}  // namespace idem
