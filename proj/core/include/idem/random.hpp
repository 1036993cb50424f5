#pragma once

#include "idem/freeword.hpp"
#include "idem/nf.hpp"
#include "idem/poly.hpp"
#include "idem/rng.hpp"

namespace idem {

// Sampling helpers for the differential suites and tests. Over Q the values
// are small integers (and occasional small ratios) so products of a few
// factors stay readable; over F_p residues are uniform.
inline FieldScalar random_scalar(const FieldDesc& f, Rng& rng,
                                 bool nonzero = false) {
    for (;;) {
        FieldScalar v = FieldScalar::zero(f);
        if (f.is_rationals()) {
            std::int64_t num = rng.int_in(-9, 9);
            if (rng.below(4) == 0) {
                std::int64_t den = rng.int_in(1, 4);
                v = FieldScalar::from_ratio(f, num, den);
            } else {
                v = FieldScalar::from_int(f, num);
            }
        } else {
            v = FieldScalar::from_int(
                f, static_cast<std::int64_t>(rng.below(f.p())));
        }
        if (!nonzero || !v.is_zero()) return v;
    }
}

inline Poly random_poly(const FieldDesc& f, std::size_t max_deg, Rng& rng) {
    std::vector<FieldScalar> cs;
    std::size_t deg = rng.below(max_deg + 1);
    cs.reserve(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) cs.push_back(random_scalar(f, rng));
    return Poly::from_coeffs(f, std::move(cs));
}

inline NFElem random_nf(const FieldDesc& f, std::size_t max_deg, Rng& rng,
                        bool with_unit = true) {
    FieldScalar u = with_unit ? random_scalar(f, rng) : FieldScalar::zero(f);
    return NFElem::make(u, random_poly(f, max_deg, rng),
                        random_poly(f, max_deg, rng),
                        random_poly(f, max_deg, rng),
                        random_poly(f, max_deg, rng));
}

inline FreeElem random_free(const FieldDesc& f, std::size_t max_len,
                            std::size_t max_terms, Rng& rng) {
    FreeElem x(f);
    std::size_t terms = 1 + rng.below(max_terms);
    for (std::size_t i = 0; i < terms; ++i) {
        std::size_t len = rng.below(max_len + 1);
        AltWord w = len == 0 ? AltWord::unit()
                             : AltWord::of(rng.coin() ? GenSym::A : GenSym::B,
                                           len);
        x.add_term(w, random_scalar(f, rng, /*nonzero=*/true));
    }
    return x;
}

}  // namespace idem
