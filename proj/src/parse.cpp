#include "hopf/parse.hpp"

#include <cctype>

namespace hopf {

namespace {

struct Token {
    enum class Kind { ident, number, plus, minus, star, caret, slash, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    bool at(Token::Kind k) const { return cur_.kind == k; }
    Token expect(Token::Kind k, const std::string& what) {
        if (!at(k)) throw ParseError("expected " + what, cur_.pos);
        return take();
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= src_.size()) {
            cur_ = {Token::Kind::end, "", start};
            return;
        }
        const char c = src_[i_];
        auto single = [&](Token::Kind k) {
            ++i_;
            cur_ = {k, std::string(1, c), start};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            cur_ = {Token::Kind::number, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            cur_ = {Token::Kind::ident, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        switch (c) {
            case '+': single(Token::Kind::plus); return;
            case '-': single(Token::Kind::minus); return;
            case '*': single(Token::Kind::star); return;
            case '^': single(Token::Kind::caret); return;
            case '/': single(Token::Kind::slash); return;
            case '(': single(Token::Kind::lparen); return;
            case ')': single(Token::Kind::rparen); return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token cur_{Token::Kind::end, "", 0};
};

long parse_long(const Token& t) {
    try {
        return std::stol(t.text);
    } catch (...) {
        throw ParseError("integer out of range", t.pos);
    }
}

class ElementParser {
public:
    ElementParser(const std::string& src, const HopfPresentation& H)
        : lex_(src), H_(&H) {}

    NcPoly parse() {
        NcPoly p = expr();
        if (!lex_.at(Token::Kind::end))
            throw ParseError("trailing input", lex_.peek().pos);
        return H_->nf(p);
    }

private:
    // signed integer at factor/coefficient position
    long signed_int() {
        bool neg = false;
        if (lex_.at(Token::Kind::minus)) {
            lex_.take();
            neg = true;
        }
        const Token t = lex_.expect(Token::Kind::number, "integer");
        const long v = parse_long(t);
        return neg ? -v : v;
    }

    NcPoly expr() {
        bool neg = false;
        if (lex_.at(Token::Kind::minus)) {
            lex_.take();
            neg = true;
        } else if (lex_.at(Token::Kind::plus)) {
            lex_.take();
        }
        NcPoly acc = term();
        if (neg) acc = -acc;
        while (lex_.at(Token::Kind::plus) || lex_.at(Token::Kind::minus)) {
            const bool sub = lex_.take().kind == Token::Kind::minus;
            NcPoly t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    NcPoly term() {
        NcPoly acc = coeff_or_factor();
        while (lex_.at(Token::Kind::star)) {
            lex_.take();
            NcPoly f = coeff_or_factor();
            acc = mul_raw(acc, f);
        }
        return acc;
    }

    // leading rational coefficient or a factor
    NcPoly coeff_or_factor() {
        if (lex_.at(Token::Kind::number)) {
            const Token t = lex_.take();
            Rational r(parse_long(t));
            if (lex_.at(Token::Kind::slash)) {
                lex_.take();
                const Token d = lex_.expect(Token::Kind::number, "denominator");
                const long dv = parse_long(d);
                if (dv == 0) throw ParseError("zero denominator", d.pos);
                r = r / Rational(dv);
            }
            return NcPoly(Scalar(r), Word::one());
        }
        return factor();
    }

    NcPoly factor() {
        if (lex_.at(Token::Kind::lparen)) {
            lex_.take();
            NcPoly inner = expr();
            lex_.expect(Token::Kind::rparen, "')'");
            return inner;
        }
        const Token t = lex_.expect(Token::Kind::ident, "generator name");
        if (t.text == "sqrt") {
            lex_.expect(Token::Kind::lparen, "'('");
            const long d = signed_int();
            lex_.expect(Token::Kind::rparen, "')'");
            if (H_->field().is_rational() || d != H_->field().quad_d)
                throw ParseError("sqrt(" + std::to_string(d) + ") outside the session field " +
                                     H_->field().str(),
                                 t.pos);
            return NcPoly(Scalar::quad(d, Rational(0), Rational(1)), Word::one());
        }
        const auto gi = H_->gen_index(t.text);
        if (!gi) throw UnknownGenerator("unknown generator '" + t.text + "'");
        long e = 1;
        if (lex_.at(Token::Kind::caret)) {
            lex_.take();
            e = signed_int();
        }
        if (e < 0 && !H_->gen(*gi).invertible)
            throw NegativePower("generator '" + t.text + "' is not invertible");
        return NcPoly(Scalar(1), Word::power(*gi, e));
    }

    // free product of two polynomials, no normalization yet
    static NcPoly mul_raw(const NcPoly& a, const NcPoly& b) {
        NcPoly r;
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms()) r.add_term(word_mul(u, v), cu * cv);
        return r;
    }

    Lexer lex_;
    const HopfPresentation* H_;
};

}  // namespace

NcPoly parse_element(const std::string& src, const HopfPresentation& H) {
    if (src.empty()) throw ParseError("empty input", 0);
    NcPoly p = ElementParser(src, H).parse();
    for (const auto& [w, c] : p.terms()) {
        (void)w;
        if (!H.field().admits(c))
            throw FieldMismatch("coefficient outside the session field " + H.field().str());
    }
    return p;
}

Word parse_word(const std::string& src, const HopfPresentation& H) {
    const NcPoly p = parse_element(src, H);
    const auto mono = p.as_unit_monomial();
    if (!mono)
        throw ParseError("expected a single monomial with coefficient 1", 0);
    return *mono;
}

Scalar parse_scalar(const std::string& src, const FieldDesc& field) {
    // run the element grammar against an empty alphabet
    const HopfPresentation empty("scalars", {}, RewriteSystem({}, WordOrder::default_for(0)),
                                 field);
    const NcPoly p = ElementParser(src, empty).parse();
    Scalar s(0);
    for (const auto& [w, c] : p.terms()) {
        if (!w.is_unit()) throw ParseError("expected a scalar", 0);
        s += c;
    }
    if (!field.admits(s)) throw FieldMismatch("scalar outside the field " + field.str());
    return s;
}

}  // namespace hopf
