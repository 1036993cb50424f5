#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "idem/nf.hpp"
#include "idem/report.hpp"
#include "idem/rng.hpp"

namespace idem {

// Word in the free product of F[a]/(a^2-a) and F[b]/(b^2-b): the letters
// alternate, so a word is determined by its first letter and length. Length
// zero is the empty word (the unit), canonicalized with first == A.
struct AltWord {
    GenSym first = GenSym::A;  // A or B for nonempty words
    std::size_t len = 0;

    static AltWord unit() { return {}; }
    static AltWord of(GenSym first, std::size_t len);

    GenSym letter(std::size_t i) const;  // i < len
    GenSym last() const { return letter(len - 1); }
    bool is_unit() const { return len == 0; }

    std::string name() const;  // "e", "a", "ab", "aba", ...

    auto operator<=>(const AltWord&) const = default;
};

// Product of two alternating words: concatenation, collapsing the seam when
// the adjacent letters coincide (x*x = x). Always again a single word.
AltWord word_mul(const AltWord& x, const AltWord& y);

// Element of the free product: finite linear combination of alternating
// words. This model never consults the normal-form table, which makes it an
// independent oracle for nf_mul.
class FreeElem {
public:
    explicit FreeElem(const FieldDesc& f) : field_(f) {}

    static FreeElem zero(const FieldDesc& f) { return FreeElem(f); }
    static FreeElem unit(const FieldDesc& f) {
        return word(f, AltWord::unit());
    }
    static FreeElem word(const FieldDesc& f, const AltWord& w);
    static FreeElem generator(const FieldDesc& f, GenSym g);  // A or B

    const FieldDesc& field() const { return field_; }
    const std::map<AltWord, FieldScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const AltWord& w, const FieldScalar& c);

    bool operator==(const FreeElem& o) const {
        return field_ == o.field_ && terms_ == o.terms_;
    }
    bool operator!=(const FreeElem& o) const { return !(*this == o); }

private:
    FieldDesc field_;
    std::map<AltWord, FieldScalar> terms_;  // nonzero coefficients only
};

FreeElem free_add(const FreeElem& x, const FreeElem& y);
FreeElem free_sub(const FreeElem& x, const FreeElem& y);
FreeElem free_neg(const FreeElem& x);
FreeElem free_scale(const FieldScalar& c, const FreeElem& x);
FreeElem free_mul(const FreeElem& x, const FreeElem& y);
FreeElem free_pow(const FreeElem& x, std::size_t e);

// sigma as a free element: a + b - ab - ba.
FreeElem sigma_free(const FieldDesc& f);

// Letter-by-letter fold of each word through nf_mul, extended linearly.
NFElem normalize(const FreeElem& x);
NFElem normalize_word(const FieldDesc& f, const AltWord& w);

// Rank of the normalized images of all 2*max_len nonempty alternating words
// of length <= max_len equals 2*max_len exactly when the normal form is a
// faithful model of the free product.
bool freeness_rank_check(const FieldDesc& f, std::size_t max_len);

// The 4*(max_pow+1) elements sigma^i * w for w in {sigma, a, b, ab} and
// 0 <= i <= max_pow are linearly independent in word coordinates of the free
// model: {sigma, a, b, ab} generates a free F[sigma]-module.
bool module_basis_rank_check(const FieldDesc& f, std::size_t max_pow);

// normalize(sigma^i) for 1 <= i <= n are linearly independent: sigma is
// transcendental over F.
bool sigma_transcendence_check(const FieldDesc& f, std::size_t n);

// Differential harness: random FreeElem pairs, checking that normalize is a
// ring homomorphism against free_mul/free_add. Deterministic in seed.
Report normalize_oracle(const FieldDesc& f, std::size_t trials,
                        std::size_t max_len, std::uint64_t seed);

}  // namespace idem
