#pragma once

#include "bombieri/polynomial.hpp"
#include "bombieri/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bombieri {

// Text format for polynomials:
//
//   expr    := [+|-] term { (+|-) term }
//   term    := power { [*] power }
//   power   := primary [ ^ INT ]
//   primary := INT [ / INT ] | VAR | ( expr )
//   VAR     := x1 | x2 | ...   or the aliases x, y, z for x1, x2, x3
//
// Whitespace is ignored. Aliases and indexed names cannot be mixed in one
// expression. Products and powers of parenthesised sums are expanded while
// parsing, so the result is always canonical.

struct ParseDiagnostic {
    std::size_t position; ///< byte offset into the input
    std::string message;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(ParseDiagnostic d)
        : std::runtime_error("parse error at " + std::to_string(d.position) + ": " + d.message),
          diagnostic_(std::move(d)) {}

    const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

private:
    ParseDiagnostic diagnostic_;
};

struct ExpressionSource {
    std::string text;
    /// When absent, the dimension is the highest variable index used (at least 1).
    std::optional<std::size_t> declared_dimension;
};

struct ParseOptions {
    /// Largest exponent allowed on any single variable, literal or expanded.
    std::uint64_t exponent_cap = 64;
};

namespace detail {

enum class TokenKind { number, variable, plus, minus, star, slash, caret, lparen, rparen, end, invalid };

struct Token {
    TokenKind kind;
    std::size_t position;
    std::string digits;     // number; message for invalid
    std::size_t index = 0;  // variable, 1-based
    bool alias = false;     // variable spelled x/y/z
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t k = 0;
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (k < text.size()) {
        const char c = text[k];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++k;
            continue;
        }
        const std::size_t start = k;
        if (is_digit(c)) {
            while (k < text.size() && is_digit(text[k])) ++k;
            out.push_back({TokenKind::number, start, std::string(text.substr(start, k - start))});
            continue;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++k;
            if (c == 'x' && k < text.size() && is_digit(text[k])) {
                const std::size_t digits_at = k;
                while (k < text.size() && is_digit(text[k])) ++k;
                auto digits = text.substr(digits_at, k - digits_at);
                if (digits.size() > 9) {
                    out.push_back({TokenKind::invalid, start, "variable index too large"});
                    return out;
                }
                const auto index = std::stoul(std::string(digits));
                if (index == 0) {
                    out.push_back({TokenKind::invalid, start, "variables are numbered from x1"});
                    return out;
                }
                out.push_back({TokenKind::variable, start, {}, index, false});
            } else {
                out.push_back({TokenKind::variable, start, {}, std::size_t(c - 'x') + 1, true});
            }
            continue;
        }
        TokenKind kind = TokenKind::invalid;
        switch (c) {
        case '+': kind = TokenKind::plus; break;
        case '-': kind = TokenKind::minus; break;
        case '*': kind = TokenKind::star; break;
        case '/': kind = TokenKind::slash; break;
        case '^': kind = TokenKind::caret; break;
        case '(': kind = TokenKind::lparen; break;
        case ')': kind = TokenKind::rparen; break;
        default: break;
        }
        if (kind == TokenKind::invalid) {
            out.push_back({kind, start, std::string("unexpected character '") + c + "'"});
            return out;
        }
        out.push_back({kind, start, {}});
        ++k;
    }
    out.push_back({TokenKind::end, text.size(), {}});
    return out;
}

inline std::vector<std::uint64_t> max_exponents(const Polynomial& p) {
    std::vector<std::uint64_t> m(p.dimension(), 0);
    for (const auto& [e, c] : p)
        for (std::size_t t = 0; t < e.size(); ++t) m[t] = std::max<std::uint64_t>(m[t], e[t]);
    return m;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t dimension, const ParseOptions& options)
        : tokens_(std::move(tokens)), dimension_(dimension), options_(options) {}

    Polynomial parse() {
        Polynomial p = expression();
        if (peek().kind != TokenKind::end) fail(peek().position, "unexpected " + describe(peek()));
        return p;
    }

private:
    // Lexical errors surface only when the parser reaches them, so the
    // reported position is always the first offending one.
    const Token& peek() const {
        const Token& t = tokens_[pos_];
        if (t.kind == TokenKind::invalid) fail(t.position, t.digits);
        return t;
    }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] static void fail(std::size_t position, std::string message) {
        throw ParseError({position, std::move(message)});
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
        case TokenKind::number: return "number";
        case TokenKind::variable: return "variable";
        case TokenKind::plus: return "'+'";
        case TokenKind::minus: return "'-'";
        case TokenKind::star: return "'*'";
        case TokenKind::slash: return "'/'";
        case TokenKind::caret: return "'^'";
        case TokenKind::lparen: return "'('";
        case TokenKind::rparen: return "')'";
        case TokenKind::end: return "end of input";
        case TokenKind::invalid: return "invalid input";
        }
        return "token";
    }

    Polynomial expression() {
        bool negate = false;
        if (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus)
            negate = advance().kind == TokenKind::minus;
        Polynomial p = term();
        if (negate) p = -p;
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            const bool minus = advance().kind == TokenKind::minus;
            Polynomial t = term();
            p = minus ? subtract(p, t) : add(p, t);
        }
        return p;
    }

    static bool starts_primary(TokenKind k) {
        return k == TokenKind::number || k == TokenKind::variable || k == TokenKind::lparen;
    }

    Polynomial term() {
        Polynomial p = power();
        for (;;) {
            const std::size_t at = peek().position;
            if (peek().kind == TokenKind::star) {
                advance();
            } else if (!starts_primary(peek().kind)) {
                break;
            }
            Polynomial q = power();
            p = checked_product(p, q, at);
        }
        return p;
    }

    Polynomial checked_product(const Polynomial& p, const Polynomial& q, std::size_t at) const {
        if (!p.is_zero() && !q.is_zero()) {
            const auto mp = max_exponents(p);
            const auto mq = max_exponents(q);
            for (std::size_t t = 0; t < dimension_; ++t)
                if (mp[t] + mq[t] > options_.exponent_cap) fail(at, "exponent exceeds cap");
        }
        return multiply(p, q);
    }

    Polynomial power() {
        Polynomial base = primary();
        if (peek().kind != TokenKind::caret) return base;
        const std::size_t caret_at = advance().position;
        const Token& exp = peek();
        if (exp.kind != TokenKind::number) fail(exp.position, "expected a nonnegative integer exponent");
        advance();
        if (exp.digits.size() > 18 || std::stoull(exp.digits) > options_.exponent_cap)
            fail(exp.position, "exponent exceeds cap of " + std::to_string(options_.exponent_cap));
        const auto k = std::stoull(exp.digits);
        if (!base.is_zero()) {
            for (auto m : max_exponents(base))
                if (m * k > options_.exponent_cap) fail(caret_at, "exponent exceeds cap");
        }
        Polynomial out = Polynomial::constant(dimension_, 1);
        for (std::uint64_t j = 0; j < k; ++j) out = multiply(out, base);
        return out;
    }

    Polynomial primary() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::number: {
            advance();
            Rational value{Integer(t.digits)};
            if (peek().kind == TokenKind::slash) {
                advance();
                const Token& den = peek();
                if (den.kind != TokenKind::number) fail(den.position, "expected an integer denominator");
                advance();
                Integer d(den.digits);
                if (d == 0) fail(den.position, "division by zero");
                value = make_rational(Integer(t.digits), d);
            }
            return Polynomial::constant(dimension_, value);
        }
        case TokenKind::variable:
            if (aliases_ && *aliases_ != t.alias)
                fail(t.position, "cannot mix x/y/z aliases with indexed variables");
            aliases_ = t.alias;
            if (t.index > dimension_)
                fail(t.position, "variable index exceeds declared dimension " + std::to_string(dimension_));
            advance();
            return Polynomial::variable(dimension_, t.index);
        case TokenKind::lparen: {
            advance();
            Polynomial inner = expression();
            if (peek().kind != TokenKind::rparen) fail(peek().position, "expected ')'");
            advance();
            return inner;
        }
        default:
            fail(t.position, "expected a number, variable or '(' but found " + describe(t));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::optional<bool> aliases_;
    std::size_t dimension_;
    ParseOptions options_;
};

} // namespace detail

/// Text to canonical polynomial. Throws ParseError carrying the offset of
/// the first offending character.
inline Polynomial parse_polynomial(const ExpressionSource& src, const ParseOptions& options = {}) {
    auto tokens = detail::tokenize(src.text);

    std::size_t highest = 0;
    for (const auto& t : tokens)
        if (t.kind == detail::TokenKind::variable) highest = std::max(highest, t.index);
    if (src.declared_dimension && *src.declared_dimension == 0)
        throw ParseError({0, "declared dimension must be positive"});
    const std::size_t dimension = src.declared_dimension.value_or(std::max<std::size_t>(highest, 1));

    return detail::Parser(std::move(tokens), dimension, options).parse();
}

inline Polynomial parse_polynomial(std::string_view text,
                                   std::optional<std::size_t> declared_dimension = std::nullopt,
                                   const ParseOptions& options = {}) {
    return parse_polynomial(ExpressionSource{std::string(text), declared_dimension}, options);
}

inline std::string format_monomial(const MultiIndex& e) {
    std::string s;
    for (std::size_t t = 0; t < e.size(); ++t) {
        if (e[t] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(t + 1);
        if (e[t] > 1) s += "^" + std::to_string(e[t]);
    }
    return s;
}

/// Canonical text, e.g. "x1^2 + 2*x1*x2 + x2^2" or "- 1/2*x1 + 3". Signs are
/// written outside the coefficient. Parsing the result gives back P when the
/// dimension is supplied.
inline std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p) {
        const bool negative = c < 0;
        if (out.empty())
            out += negative ? "- " : "";
        else
            out += negative ? " - " : " + ";
        const Rational magnitude = abs(c);
        const std::string mono = format_monomial(e);
        if (mono.empty()) {
            out += to_display_string(magnitude);
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += to_display_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

} // namespace bombieri
