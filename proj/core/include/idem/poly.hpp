#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idem/field.hpp"

namespace idem {

// Univariate polynomial over a FieldDesc, coefficients stored ascending and
// always trimmed (no trailing zeros), so equal values compare equal
// coefficient-by-coefficient. The zero polynomial has an empty coefficient
// vector and degree() == nullopt.
class Poly {
public:
    // Default: the zero polynomial over Q, mirroring FieldScalar's default.
    Poly() : field_(FieldDesc::rationals()) {}
    explicit Poly(const FieldDesc& f) : field_(f) {}

    static Poly zero(const FieldDesc& f) { return Poly(f); }
    static Poly one(const FieldDesc& f) { return constant(FieldScalar::one(f)); }
    static Poly lambda(const FieldDesc& f) {
        return monomial(FieldScalar::one(f), 1);
    }
    static Poly constant(const FieldScalar& c);
    static Poly monomial(const FieldScalar& c, std::size_t k);
    static Poly from_coeffs(const FieldDesc& f, std::vector<FieldScalar> cs);
    static Poly from_ints(const FieldDesc& f, const std::vector<std::int64_t>& cs);

    const FieldDesc& field() const { return field_; }
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    const std::vector<FieldScalar>& coeffs() const { return coeffs_; }
    // Coefficient of lambda^k; zero beyond the degree.
    FieldScalar coeff(std::size_t k) const;
    FieldScalar leading() const;  // DivisionByZero-free: requires nonzero
    FieldScalar constant_term() const { return coeff(0); }

    FieldScalar eval(const FieldScalar& x) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const FieldScalar& c) const;
    Poly shifted(std::size_t k) const;  // multiply by lambda^k
    Poly pow(std::size_t e) const;
    Poly monic() const;       // divide by leading coefficient; 0 stays 0
    Poly derivative() const;

    // Euclidean division: returns (q, r) with *this == q*d + r and
    // deg r < deg d. Division by the zero polynomial raises DivisionByZero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    bool operator==(const Poly& o) const {
        return field_ == o.field_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Canonical order: degree first, then coefficients from the constant term
    // up. Used to sort factor lists deterministically.
    static int cmp(const Poly& x, const Poly& y);

    std::string to_string(const std::string& var = "lambda") const;

private:
    void trim();
    void require_same_field(const Poly& o) const {
        if (!(field_ == o.field_)) throw FieldMismatch();
    }

    FieldDesc field_;
    std::vector<FieldScalar> coeffs_;
};

struct XgcdResult {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // s*x + t*y == g
};

// Monic gcd; both inputs zero raises BothZero.
Poly poly_gcd(const Poly& x, const Poly& y);
XgcdResult poly_xgcd(const Poly& x, const Poly& y);

}  // namespace idem
