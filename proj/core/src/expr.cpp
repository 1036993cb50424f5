#include "idem/expr.hpp"

#include <cctype>
#include <vector>

namespace idem {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Number, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'",
                                  start);
        }
        out.push_back({kind, s.substr(start, 1), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const FieldDesc& f)
        : toks_(std::move(toks)), field_(f) {}

    NFElem run() {
        NFElem e = expr();
        expect(Tok::End, "trailing input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw SyntaxError(what, peek().offset);
    }

    NFElem expr() {
        NFElem x = term();
        for (;;) {
            if (accept(Tok::Plus)) x = nf_add(x, term());
            else if (accept(Tok::Minus)) x = nf_sub(x, term());
            else return x;
        }
    }

    NFElem term() {
        NFElem x = factor();
        for (;;) {
            if (accept(Tok::Star)) x = nf_mul(x, factor());
            else if (peek().kind == Tok::LParen) x = nf_mul(x, factor());
            else if (peek().kind == Tok::Slash) x = divide(x);
            else return x;
        }
    }

    // Division is restricted to scalar divisors; anything else has no
    // quotient in the algebra.
    NFElem divide(const NFElem& x) {
        std::size_t off = take().offset;
        NFElem d = factor();
        if (!d.c_sigma().is_zero() || !d.c_a().is_zero() ||
            !d.c_b().is_zero() || !d.c_ab().is_zero())
            throw SyntaxError("division by a non-scalar", off);
        if (d.unit_coeff().is_zero()) throw DivisionByZero();
        return nf_scale(d.unit_coeff().inverse(), x);
    }

    NFElem factor() {
        if (accept(Tok::Minus)) return nf_neg(factor());
        return power();
    }

    NFElem power() {
        NFElem base = primary();
        if (!accept(Tok::Caret)) return base;
        std::size_t caret_off = toks_[pos_ - 1].offset;
        std::int64_t e = exponent();
        if (e >= 0) return positive_pow(base, static_cast<std::size_t>(e));
        // Negative powers only make sense for invertible scalars.
        if (!base.c_sigma().is_zero() || !base.c_a().is_zero() ||
            !base.c_b().is_zero() || !base.c_ab().is_zero())
            throw SyntaxError("negative exponent on a non-scalar", caret_off);
        if (base.unit_coeff().is_zero()) throw DivisionByZero();
        FieldScalar inv = base.unit_coeff().inverse();
        NFElem acc = NFElem::unit(field_);
        for (std::int64_t i = 0; i < -e; ++i) acc = nf_scale(inv, acc);
        return acc;
    }

    std::int64_t exponent() {
        bool paren = accept(Tok::LParen);
        bool neg = accept(Tok::Minus);
        if (peek().kind != Tok::Number)
            throw SyntaxError("expected an integer exponent", peek().offset);
        Token t = take();
        if (t.text.size() > 4)
            throw SyntaxError("exponent too large", t.offset);
        std::int64_t v = std::stoll(t.text);
        if (paren) expect(Tok::RParen, "expected ')'");
        return neg ? -v : v;
    }

    NFElem positive_pow(const NFElem& base, std::size_t e) {
        NFElem acc = NFElem::unit(field_);
        NFElem b = base;
        while (e > 0) {
            if (e & 1) acc = nf_mul(acc, b);
            b = nf_mul(b, b);
            e >>= 1;
        }
        return acc;
    }

    NFElem primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                Token num = take();
                std::string text = num.text;
                if (peek().kind == Tok::Slash) {
                    take();
                    if (peek().kind != Tok::Number)
                        throw SyntaxError("expected a denominator", peek().offset);
                    text += "/" + take().text;
                }
                return nf_scale(FieldScalar::parse(field_, text),
                                NFElem::unit(field_));
            }
            case Tok::Ident: {
                Token id = take();
                if (id.text == "a") return NFElem::basis(field_, GenSym::A);
                if (id.text == "b") return NFElem::basis(field_, GenSym::B);
                if (id.text == "e") return NFElem::basis(field_, GenSym::E);
                if (id.text == "sigma")
                    return NFElem::basis(field_, GenSym::Sigma);
                if (id.text == "ab") return NFElem::basis(field_, GenSym::AB);
                throw UnknownSymbol(id.text);
            }
            case Tok::LParen: {
                take();
                NFElem e = expr();
                expect(Tok::RParen, "expected ')'");
                return e;
            }
            default:
                throw SyntaxError("unexpected token", t.offset);
        }
    }

    std::vector<Token> toks_;
    FieldDesc field_;
    std::size_t pos_ = 0;
};

// Accumulates signed terms into "x + y - z" form.
class TermWriter {
public:
    void add(bool negative, const std::string& text) {
        if (out_.empty()) {
            out_ = negative ? "-" + text : text;
        } else {
            out_ += negative ? " - " + text : " + " + text;
        }
    }
    std::string str() const { return out_.empty() ? "0" : out_; }

private:
    std::string out_;
};

bool scalar_negative(const FieldScalar& c) {
    return c.field().is_rationals() && c.rational() < 0;
}

void write_sigma_poly(TermWriter& w, const Poly& merged) {
    for (std::size_t k = 0; k < merged.coeffs().size(); ++k) {
        const FieldScalar& c = merged.coeff(k);
        if (c.is_zero()) continue;
        bool neg = scalar_negative(c);
        FieldScalar mag = neg ? -c : c;
        std::string text;
        if (k == 0) {
            text = mag.to_string();
        } else {
            text = k == 1 ? "sigma" : "sigma^" + std::to_string(k);
            if (!mag.is_one()) text = mag.to_string() + "*" + text;
        }
        w.add(neg, text);
    }
}

void write_coord(TermWriter& w, const Poly& coeff, const char* name) {
    if (coeff.is_zero()) return;
    if (coeff.is_constant()) {
        FieldScalar c = coeff.coeff(0);
        bool neg = scalar_negative(c);
        FieldScalar mag = neg ? -c : c;
        std::string text = name;
        if (!mag.is_one()) text = mag.to_string() + "*" + text;
        w.add(neg, text);
        return;
    }
    w.add(false, "(" + coeff.to_string("sigma") + ")*" + name);
}

}  // namespace

NFElem parse_expr(const std::string& text, const FieldDesc& f) {
    return Parser(lex(text), f).run();
}

std::string to_string(const NFElem& x) {
    // The unit and sigma coordinates merge into one polynomial in sigma:
    // u + sigma*q(sigma).
    Poly merged =
        Poly::constant(x.unit_coeff()) + x.c_sigma().shifted(1);
    TermWriter w;
    write_sigma_poly(w, merged);
    write_coord(w, x.c_a(), "a");
    write_coord(w, x.c_b(), "b");
    write_coord(w, x.c_ab(), "ab");
    return w.str();
}

}  // namespace idem
