#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "notemap/errors.hpp"
#include "notemap/polynomial.hpp"
#include "notemap/rational.hpp"

namespace notemap {

namespace detail {

// expr  := ['+'|'-'] term (('+'|'-') term)*
// term  := coef? '*'? var ('^' uint)? ('/' uint)? | coef
// coef  := '-'? (uint | uint '/' uint | decimal | '(' coef ')')
// var   := 'n' | 'x'
// The trailing ('/' uint) after the variable is a convenience for inputs
// like "n/2"; it divides the coefficient.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    RationalPolynomial parse() {
        skip_ws();
        if (at_end()) fail(ErrorCode::SyntaxError, "empty function expression");
        std::map<std::size_t, Rational> terms;
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
        parse_term(terms, sign);
        skip_ws();
        while (!at_end()) {
            char op = take();
            if (op != '+' && op != '-')
                fail(ErrorCode::SyntaxError, unexpected(op));
            parse_term(terms, op == '-' ? -1 : 1);
            skip_ws();
        }
        std::size_t top = 0;
        for (const auto& [e, c] : terms) top = std::max(top, e);
        std::vector<Rational> coeffs(terms.empty() ? 0 : top + 1);
        for (const auto& [e, c] : terms) coeffs[e] = c;
        return RationalPolynomial(std::move(coeffs));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() {
        skip_ws();
        return text_[pos_++];
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    static std::string unexpected(char c) {
        return std::string("unexpected '") + c + "' in function expression";
    }

    bool at_var() {
        char c = peek();
        return c == 'n' || c == 'x';
    }

    void check_irrational_ident() {
        std::size_t save = pos_;
        std::string ident;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ident += text_[pos_++];
        pos_ = save;
        if (ident == "pi" || ident == "e" || ident == "sqrt")
            fail(ErrorCode::IrrationalLiteral,
                 "'" + ident + "' is irrational; coefficients must be rational");
    }

    // digits, optionally digits '.' digits; returns raw text
    std::string lex_number() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        if (pos_ < text_.size() && text_[pos_] == '.') {
            out += text_[pos_++];
            std::size_t before = out.size();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
            if (out.size() == before) fail(ErrorCode::SyntaxError, "digits required after decimal point");
        }
        return out;
    }

    Rational parse_coef() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            take();
            neg = true;
        }
        skip_ws();
        Rational value;
        if (peek() == '(') {
            take();
            value = parse_coef();
            if (peek() != ')') fail(ErrorCode::SyntaxError, "missing ')' in coefficient");
            take();
        } else {
            check_irrational_ident();
            std::string num = lex_number();
            if (num.empty()) fail(ErrorCode::SyntaxError, unexpected(peek()));
            if (peek() == '/' && num.find('.') == std::string::npos) {
                take();
                std::string den = lex_number();
                if (den.empty() || den.find('.') != std::string::npos)
                    fail(ErrorCode::SyntaxError, "malformed fraction denominator");
                auto r = Rational::try_parse(num + "/" + den);
                if (!r) fail(ErrorCode::SyntaxError, "zero denominator in coefficient");
                value = *r;
            } else {
                auto r = Rational::try_parse(num);
                if (!r) fail(ErrorCode::SyntaxError, "malformed number '" + num + "'");
                value = *r;
            }
        }
        return neg ? -value : value;
    }

    std::size_t parse_exponent() {
        skip_ws();
        if (peek() == '-')
            fail(ErrorCode::NonPolynomial, "negative exponents are not polynomial");
        std::string num = lex_number();
        if (num.empty()) fail(ErrorCode::SyntaxError, "exponent expected after '^'");
        if (num.find('.') != std::string::npos)
            fail(ErrorCode::NonPolynomial, "fractional exponents are not polynomial");
        return static_cast<std::size_t>(std::stoul(num));
    }

    void parse_term(std::map<std::size_t, Rational>& terms, int sign) {
        skip_ws();
        check_irrational_ident();
        Rational coef(1);
        bool have_coef = false;
        if (!at_var()) {
            coef = parse_coef();
            have_coef = true;
        }
        skip_ws();
        bool starred = false;
        if (have_coef && peek() == '*') {
            take();
            starred = true;
        }
        if (starred && !at_var())
            fail(ErrorCode::SyntaxError, "variable expected after '*'");
        std::size_t exponent = 0;
        if (at_var()) {
            take();
            exponent = 1;
            if (peek() == '^') {
                take();
                exponent = parse_exponent();
            }
            if (peek() == '/') {  // n/2 style
                take();
                std::string den = lex_number();
                if (den.empty() || den.find('.') != std::string::npos)
                    fail(ErrorCode::SyntaxError, "malformed divisor after variable");
                auto r = Rational::try_parse(den);
                if (!r || r->is_zero()) fail(ErrorCode::SyntaxError, "bad divisor after variable");
                coef = coef / *r;
            }
        } else if (!have_coef) {
            fail(ErrorCode::SyntaxError, unexpected(peek()));
        }
        Rational signed_coef = sign < 0 ? -coef : coef;
        auto [it, inserted] = terms.emplace(exponent, signed_coef);
        if (!inserted) it->second += signed_coef;
    }
};

}  // namespace detail

/// Parse "n - 5", "(13/30)x^2 - (119/30)x + 11", "2.5n", ... into a
/// canonical polynomial (like terms combined, ascending coefficients).
inline RationalPolynomial parse_function_expr(std::string_view text) {
    return detail::ExprParser(text).parse();
}

/// Canonical rendering, highest power first; reparses to an equal
/// polynomial. Fractional coefficients attached to the variable are
/// parenthesized ("(1/450)n^3"), bare constants are not ("- 239/225").
inline std::string format_polynomial(const RationalPolynomial& p, char var = 'n') {
    RationalPolynomial t = p.trimmed();
    if (t.is_zero()) return "0";
    std::string out;
    const auto& c = t.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        bool first = out.empty();
        bool negative = c[i].sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        Rational mag = c[i].abs();
        std::string mag_text = mag.to_string();
        if (i == 0) {
            out += mag_text;
        } else {
            if (mag != Rational(1)) {
                if (!mag.is_integer()) mag_text = "(" + mag_text + ")";
                out += mag_text;
            }
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace notemap
