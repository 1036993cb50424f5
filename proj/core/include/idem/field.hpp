#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "idem/errors.hpp"

namespace idem {

// Modular arithmetic on raw residues. p need not be prime here; the callers
// that require primality check it themselves.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);  // requires gcd(a,p)=1

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

enum class FieldKind { Rationals, Prime };

// Description of the coefficient field: Q, or F_p for a machine-word prime.
// Construction validates primality, so a FieldDesc in hand is always sound.
class FieldDesc {
public:
    static FieldDesc rationals() { return FieldDesc(FieldKind::Rationals, 0); }
    static FieldDesc prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::Prime; }
    std::uint64_t p() const { return p_; }
    std::uint64_t characteristic() const { return p_; }

    bool operator==(const FieldDesc&) const = default;

    std::string to_string() const;

private:
    FieldDesc(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

// One exact field element. Rationals ride on GMP (always canonicalized);
// prime-field values are residues in [0, p). Value semantics throughout;
// mixing operands from different fields raises FieldMismatch.
class FieldScalar {
public:
    FieldScalar() : FieldScalar(zero(FieldDesc::rationals())) {}

    static FieldScalar zero(const FieldDesc& f);
    static FieldScalar one(const FieldDesc& f);
    static FieldScalar from_int(const FieldDesc& f, std::int64_t v);
    static FieldScalar from_ratio(const FieldDesc& f, std::int64_t num, std::int64_t den);

    // Accepts "-12" and "num/den" forms; prime fields reduce mod p and allow
    // num/den with invertible denominator. Malformed text raises BadScalar.
    static FieldScalar parse(const FieldDesc& f, std::string_view text);

    const FieldDesc& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator-() const;
    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const;  // DivisionByZero
    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    FieldScalar inverse() const;  // DivisionByZero on 0

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    // Total order used only for canonical sorting of factor lists; for F_p it
    // is the residue order, with no arithmetic meaning.
    static int cmp(const FieldScalar& x, const FieldScalar& y);

    // "num/den" (den omitted when 1) for Q, decimal residue for F_p.
    std::string to_string() const;

    // Residue access, prime fields only.
    std::uint64_t residue() const;
    // Rational access, Q only.
    const mpq_class& rational() const;

private:
    FieldScalar(const FieldDesc& f, std::uint64_t res, mpq_class rat)
        : field_(f), res_(res), rat_(std::move(rat)) {}

    void require_same_field(const FieldScalar& o) const {
        if (!(field_ == o.field_)) throw FieldMismatch();
    }

    FieldDesc field_ = FieldDesc::rationals();
    std::uint64_t res_ = 0;
    mpq_class rat_ = 0;
};

}  // namespace idem
