#include "idem/freeword.hpp"

#include "idem/linalg.hpp"
#include "idem/random.hpp"

namespace idem {

AltWord AltWord::of(GenSym first, std::size_t len) {
    if (len == 0) return unit();
    if (first != GenSym::A && first != GenSym::B)
        throw Error("alternating words start with a or b");
    return {first, len};
}

GenSym AltWord::letter(std::size_t i) const {
    if (i >= len) throw Error("letter index out of range");
    bool even = i % 2 == 0;
    if (first == GenSym::A) return even ? GenSym::A : GenSym::B;
    return even ? GenSym::B : GenSym::A;
}

std::string AltWord::name() const {
    if (len == 0) return "e";
    std::string s;
    for (std::size_t i = 0; i < len; ++i)
        s += letter(i) == GenSym::A ? 'a' : 'b';
    return s;
}

AltWord word_mul(const AltWord& x, const AltWord& y) {
    if (x.is_unit()) return y;
    if (y.is_unit()) return x;
    // Idempotent seam: ...x | x... collapses one letter; alternation inside
    // each word guarantees no cascade.
    std::size_t len = x.len + y.len - (x.last() == y.first ? 1 : 0);
    return AltWord::of(x.first, len);
}

FreeElem FreeElem::word(const FieldDesc& f, const AltWord& w) {
    FreeElem x(f);
    x.add_term(w, FieldScalar::one(f));
    return x;
}

FreeElem FreeElem::generator(const FieldDesc& f, GenSym g) {
    if (g != GenSym::A && g != GenSym::B)
        throw Error("generator() takes a or b");
    return word(f, AltWord::of(g, 1));
}

void FreeElem::add_term(const AltWord& w, const FieldScalar& c) {
    if (!(c.field() == field_)) throw FieldMismatch();
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeElem free_add(const FreeElem& x, const FreeElem& y) {
    if (!(x.field() == y.field())) throw FieldMismatch();
    FreeElem r = x;
    for (const auto& [w, c] : y.terms()) r.add_term(w, c);
    return r;
}

FreeElem free_neg(const FreeElem& x) {
    FreeElem r(x.field());
    for (const auto& [w, c] : x.terms()) r.add_term(w, -c);
    return r;
}

FreeElem free_sub(const FreeElem& x, const FreeElem& y) {
    return free_add(x, free_neg(y));
}

FreeElem free_scale(const FieldScalar& c, const FreeElem& x) {
    FreeElem r(x.field());
    for (const auto& [w, k] : x.terms()) r.add_term(w, c * k);
    return r;
}

FreeElem free_mul(const FreeElem& x, const FreeElem& y) {
    if (!(x.field() == y.field())) throw FieldMismatch();
    FreeElem r(x.field());
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms())
            r.add_term(word_mul(wx, wy), cx * cy);
    return r;
}

FreeElem free_pow(const FreeElem& x, std::size_t e) {
    FreeElem acc = FreeElem::unit(x.field());
    FreeElem base = x;
    while (e > 0) {
        if (e & 1) acc = free_mul(acc, base);
        base = free_mul(base, base);
        e >>= 1;
    }
    return acc;
}

FreeElem sigma_free(const FieldDesc& f) {
    FreeElem s(f);
    FieldScalar one = FieldScalar::one(f);
    s.add_term(AltWord::of(GenSym::A, 1), one);
    s.add_term(AltWord::of(GenSym::B, 1), one);
    s.add_term(AltWord::of(GenSym::A, 2), -one);
    s.add_term(AltWord::of(GenSym::B, 2), -one);
    return s;
}

NFElem normalize_word(const FieldDesc& f, const AltWord& w) {
    if (w.is_unit()) return NFElem::unit(f);
    NFElem acc = NFElem::basis(f, w.letter(0));
    for (std::size_t i = 1; i < w.len; ++i)
        acc = nf_mul(acc, NFElem::basis(f, w.letter(i)));
    return acc;
}

NFElem normalize(const FreeElem& x) {
    NFElem acc(x.field());
    for (const auto& [w, c] : x.terms())
        acc = nf_add(acc, nf_scale(c, normalize_word(x.field(), w)));
    return acc;
}

bool freeness_rank_check(const FieldDesc& f, std::size_t max_len) {
    // Coordinate degree of a length-l word is at most l/2.
    std::size_t width = max_len / 2 + 1;
    std::vector<std::vector<FieldScalar>> vecs;
    for (std::size_t len = 1; len <= max_len; ++len)
        for (GenSym g : {GenSym::A, GenSym::B})
            vecs.push_back(
                normalize_word(f, AltWord::of(g, len)).flatten(width));
    return rank_of(vecs, f) == 2 * max_len;
}

bool module_basis_rank_check(const FieldDesc& f, std::size_t max_pow) {
    FreeElem s = sigma_free(f);
    std::vector<FreeElem> gens = {
        s,
        FreeElem::generator(f, GenSym::A),
        FreeElem::generator(f, GenSym::B),
        FreeElem::word(f, AltWord::of(GenSym::A, 2)),
    };
    std::vector<FreeElem> elems;
    FreeElem power = FreeElem::unit(f);
    for (std::size_t i = 0; i <= max_pow; ++i) {
        for (const FreeElem& g : gens) elems.push_back(free_mul(power, g));
        power = free_mul(power, s);
    }
    // Coordinates over the union of words appearing in any of the elements.
    std::map<AltWord, std::size_t> index;
    for (const FreeElem& x : elems)
        for (const auto& [w, c] : x.terms()) index.emplace(w, 0);
    std::size_t k = 0;
    for (auto& [w, i] : index) i = k++;
    std::vector<std::vector<FieldScalar>> vecs;
    for (const FreeElem& x : elems) {
        std::vector<FieldScalar> row(k, FieldScalar::zero(f));
        for (const auto& [w, c] : x.terms()) row[index.at(w)] = c;
        vecs.push_back(std::move(row));
    }
    return rank_of(vecs, f) == elems.size();
}

bool sigma_transcendence_check(const FieldDesc& f, std::size_t n) {
    FreeElem s = sigma_free(f);
    std::vector<std::vector<FieldScalar>> vecs;
    FreeElem power = FreeElem::unit(f);
    for (std::size_t i = 1; i <= n; ++i) {
        power = free_mul(power, s);
        vecs.push_back(normalize(power).flatten(n + 1));
    }
    return rank_of(vecs, f) == n;
}

Report normalize_oracle(const FieldDesc& f, std::size_t trials,
                        std::size_t max_len, std::uint64_t seed) {
    Report report;
    report.suite = "normalize-oracle";
    report.field = f.to_string();
    report.seed = seed;
    report.trials = trials;
    report.params["max_len"] = max_len;

    Rng root(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = root.split(t);
        FreeElem x = random_free(f, max_len, 4, rng);
        FreeElem y = random_free(f, max_len, 4, rng);
        auto dump = [&](const char* what) {
            std::string s = what;
            s += ": x =";
            for (const auto& [w, c] : x.terms())
                s += " " + c.to_string() + "*" + w.name();
            s += ", y =";
            for (const auto& [w, c] : y.terms())
                s += " " + c.to_string() + "*" + w.name();
            return s;
        };
        if (normalize(free_mul(x, y)) != nf_mul(normalize(x), normalize(y)))
            report.mismatches.push_back({t, "mul", dump("normalize(x*y) != normalize(x)*normalize(y)")});
        if (normalize(free_add(x, y)) != nf_add(normalize(x), normalize(y)))
            report.mismatches.push_back({t, "add", dump("normalize(x+y) != normalize(x)+normalize(y)")});
    }
    return report;
}

}  // namespace idem
