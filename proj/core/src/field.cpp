#include "idem/field.hpp"

#include <array>

namespace idem {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on signed 128-bit accumulators; p < 2^63 keeps every
    // intermediate in range.
    __int128 r0 = static_cast<__int128>(p), r1 = static_cast<__int128>(a % p);
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        __int128 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw DivisionByZero();
    if (t0 < 0) t0 += p;
    return static_cast<std::uint64_t>(t0);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set decides primality for all n < 2^64.
    for (std::uint64_t w : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldDesc FieldDesc::prime(std::uint64_t p) {
    if (p >= (1ULL << 63))
        throw NotPrime("p must be below 2^63");
    if (!is_prime_u64(p))
        throw NotPrime("p = " + std::to_string(p) + " is not prime");
    return FieldDesc(FieldKind::Prime, p);
}

std::string FieldDesc::to_string() const {
    return is_rationals() ? "Q" : "F_" + std::to_string(p_);
}

FieldScalar FieldScalar::zero(const FieldDesc& f) {
    return FieldScalar(f, 0, mpq_class(0));
}

FieldScalar FieldScalar::one(const FieldDesc& f) {
    return FieldScalar(f, f.is_prime_field() ? 1 % f.p() : 0, mpq_class(1));
}

FieldScalar FieldScalar::from_int(const FieldDesc& f, std::int64_t v) {
    if (f.is_rationals())
        return FieldScalar(f, 0, mpq_class(static_cast<long>(v)));
    std::uint64_t p = f.p();
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return FieldScalar(f, static_cast<std::uint64_t>(r), mpq_class(0));
}

FieldScalar FieldScalar::from_ratio(const FieldDesc& f, std::int64_t num,
                                    std::int64_t den) {
    if (den == 0) throw DivisionByZero();
    return from_int(f, num) / from_int(f, den);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

FieldScalar FieldScalar::parse(const FieldDesc& f, std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body, den;
    bool has_den = false;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num) || (has_den && !all_digits(den)))
        throw BadScalar("malformed scalar '" + std::string(text) + "'");

    auto from_decimal = [&](std::string_view digits) {
        mpz_class z(std::string(digits), 10);
        if (f.is_rationals()) {
            FieldScalar v(f, 0, mpq_class(z));
            return v;
        }
        mpz_class r = z % mpz_class(static_cast<unsigned long>(f.p()));
        return FieldScalar(f, r.get_ui(), mpq_class(0));
    };

    FieldScalar value = from_decimal(num);
    if (has_den) {
        FieldScalar d = from_decimal(den);
        if (d.is_zero()) throw BadScalar("zero denominator in '" + std::string(text) + "'");
        value = value / d;
    }
    return negative ? -value : value;
}

bool FieldScalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool FieldScalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1 % field_.p();
}

FieldScalar FieldScalar::operator-() const {
    if (field_.is_rationals()) return FieldScalar(field_, 0, -rat_);
    return FieldScalar(field_, res_ == 0 ? 0 : field_.p() - res_, mpq_class(0));
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return FieldScalar(field_, 0, rat_ + o.rat_);
    std::uint64_t s = res_ + o.res_;  // p < 2^63, no overflow
    if (s >= field_.p()) s -= field_.p();
    return FieldScalar(field_, s, mpq_class(0));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    return *this + (-o);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return FieldScalar(field_, 0, rat_ * o.rat_);
    return FieldScalar(field_, mulmod(res_, o.res_, field_.p()), mpq_class(0));
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    return *this * o.inverse();
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (field_.is_rationals()) return FieldScalar(field_, 0, 1 / rat_);
    return FieldScalar(field_, invmod(res_, field_.p()), mpq_class(0));
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

int FieldScalar::cmp(const FieldScalar& x, const FieldScalar& y) {
    x.require_same_field(y);
    if (x.field_.is_rationals()) {
        int c = ::cmp(x.rat_, y.rat_);
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    return x.res_ < y.res_ ? -1 : x.res_ > y.res_ ? 1 : 0;
}

std::string FieldScalar::to_string() const {
    if (field_.is_rationals()) return rat_.get_str();
    return std::to_string(res_);
}

std::uint64_t FieldScalar::residue() const {
    if (!field_.is_prime_field())
        throw WrongField("residue() requires a prime field");
    return res_;
}

const mpq_class& FieldScalar::rational() const {
    if (!field_.is_rationals())
        throw WrongField("rational() requires the rational field");
    return rat_;
}

}  // namespace idem
