#include "pclie/expr.hpp"

#include <cctype>

#include <json.hpp>

namespace pclie {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    LieExpr parse() {
        LieExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    LieExpr parse_expr() {
        std::vector<LieExpr> terms;
        terms.push_back(parse_term());
        for (;;) {
            skip_ws();
            if (eat('+')) {
                terms.push_back(parse_term());
            } else if (eat('-')) {
                LieExpr t = parse_term();
                LieExpr neg{LieExpr::Kind::Neg};
                neg.children.push_back(std::move(t));
                terms.push_back(std::move(neg));
            } else {
                break;
            }
        }
        if (terms.size() == 1)
            return std::move(terms.front());
        LieExpr sum{LieExpr::Kind::Sum};
        sum.children = std::move(terms);
        return sum;
    }

    LieExpr parse_term() {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            Rational r = parse_rational();
            if (!eat('*')) {
                // "0" denotes the zero polynomial (the printer emits it);
                // any other bare constant is not a Lie element.
                if (sgn(r) == 0)
                    return LieExpr{LieExpr::Kind::Sum};
                fail("expected '*' after coefficient");
            }
            LieExpr scale{LieExpr::Kind::Scale};
            scale.scalar = std::move(r);
            scale.children.push_back(parse_factor());
            return scale;
        }
        return parse_factor();
    }

    LieExpr parse_factor() {
        skip_ws();
        if (eat('-')) {
            LieExpr neg{LieExpr::Kind::Neg};
            neg.children.push_back(parse_factor());
            return neg;
        }
        if (eat('(')) {
            LieExpr br{LieExpr::Kind::Bracket};
            br.children.push_back(parse_expr());
            if (!eat(','))
                fail("expected ',' in bracket");
            br.children.push_back(parse_expr());
            if (!eat(')'))
                fail("expected ')'");
            return br;
        }
        return parse_ident();
    }

    LieExpr parse_ident() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() &&
            (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        if (pos_ == start)
            fail("expected identifier");
        const std::string name(text_.substr(start, pos_ - start));
        auto letter = alphabet_.find(name);
        if (!letter)
            throw ParseError("unknown identifier '" + name + "'", start);
        LieExpr id{LieExpr::Kind::Ident};
        id.letter = *letter;
        id.name = name;
        return id;
    }

    Rational parse_rational() {
        skip_ws();
        mpz_class num = parse_integer(true);
        if (eat('/')) {
            const std::size_t den_pos = pos_;
            skip_ws();
            mpz_class den = parse_integer(false);
            if (den == 0)
                throw ParseError("zero denominator", den_pos);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    mpz_class parse_integer(bool allow_sign) {
        skip_ws();
        std::string digits;
        if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
            digits += '-';
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (pos_ == start)
            fail("expected integer");
        return mpz_class(digits);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

LieExpr parse_expression(std::string_view text, const Alphabet& alphabet) {
    return ExprParser(text, alphabet).parse();
}

LiePolynomial to_polynomial(const LieExpr& expr) {
    switch (expr.kind) {
        case LieExpr::Kind::Ident:
            return LiePolynomial::basis_term(NWord::leaf(expr.letter));
        case LieExpr::Kind::Bracket:
            return bracket(to_polynomial(expr.children[0]), to_polynomial(expr.children[1]));
        case LieExpr::Kind::Sum: {
            LiePolynomial out;
            for (const LieExpr& child : expr.children)
                out += to_polynomial(child);
            return out;
        }
        case LieExpr::Kind::Scale:
            return expr.scalar * to_polynomial(expr.children[0]);
        case LieExpr::Kind::Neg:
            return -to_polynomial(expr.children[0]);
    }
    throw std::logic_error("to_polynomial: bad AST node");
}

std::string to_string(const NWord& t, const Alphabet& alphabet) {
    if (t.is_leaf())
        return alphabet.name(t.letter());
    return "(" + to_string(t.left(), alphabet) + "," + to_string(t.right(), alphabet) + ")";
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
    std::string out;
    for (Letter x : w.letters())
        out += alphabet.name(x);
    return out;
}

std::string to_string(const LiePolynomial& p, const Alphabet& alphabet) {
    if (p.is_zero())
        return "0";
    std::string out;
    // Leading (deglex-greatest) term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rational& c = it->second;
        const bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative)
                out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(c);
        if (mag != 1)
            out += mag.get_str() + "*";
        out += to_string(it->first, alphabet);
    }
    return out;
}

namespace {

nlohmann::json nword_json(const NWord& t, const Alphabet& alphabet) {
    if (t.is_leaf())
        return alphabet.name(t.letter());
    return nlohmann::json::array({nword_json(t.left(), alphabet), nword_json(t.right(), alphabet)});
}

}  // namespace

std::string to_json(const NWord& t, const Alphabet& alphabet) {
    return nword_json(t, alphabet).dump();
}

}  // namespace pclie
