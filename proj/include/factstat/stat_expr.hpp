#pragma once

#include <factstat/class_function.hpp>

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace factstat {

/// Syntax error in a statistic expression; position() is a 0-based byte offset.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// AST of a character polynomial:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | factor
///   factor := INT | 'x' INT | '(' expr ')'
///           | ('binom' | 'multichoose') '(' expr ',' INT ')'
///
/// Evaluation at a partition substitutes x_k -> m_k.
struct StatExpr {
    enum class Kind { literal, variable, add, sub, mul, neg, binom, multichoose };

    Kind kind = Kind::literal;
    Integer value = 0;   // literal
    unsigned index = 0;  // variable subscript, or the integer argument of binom/multichoose
    std::vector<StatExpr> args;

    Rational eval(const Partition& lambda) const {
        switch (kind) {
            case Kind::literal: return Rational(value);
            case Kind::variable: return Rational(lambda.multiplicity(index));
            case Kind::add: return args[0].eval(lambda) + args[1].eval(lambda);
            case Kind::sub: return args[0].eval(lambda) - args[1].eval(lambda);
            case Kind::mul: return args[0].eval(lambda) * args[1].eval(lambda);
            case Kind::neg: return -args[0].eval(lambda);
            case Kind::binom:
            case Kind::multichoose: {
                const Rational x = args[0].eval(lambda);
                Rational out = 1;
                for (unsigned i = 0; i < index; ++i) out *= kind == Kind::binom ? Rational(x - i) : Rational(x + i);
                return out / Rational(factorial(index));
            }
        }
        return 0;
    }

    friend bool operator==(const StatExpr&, const StatExpr&) = default;
};

/// Canonical, fully parenthesized rendering.
inline std::string to_string(const StatExpr& e) {
    using K = StatExpr::Kind;
    switch (e.kind) {
        case K::literal: return e.value.get_str();
        case K::variable: return "x" + std::to_string(e.index);
        case K::add: return "(" + to_string(e.args[0]) + " + " + to_string(e.args[1]) + ")";
        case K::sub: return "(" + to_string(e.args[0]) + " - " + to_string(e.args[1]) + ")";
        case K::mul: return "(" + to_string(e.args[0]) + " * " + to_string(e.args[1]) + ")";
        case K::neg: return "-" + to_string(e.args[0]);
        case K::binom: return "binom(" + to_string(e.args[0]) + ", " + std::to_string(e.index) + ")";
        case K::multichoose: return "multichoose(" + to_string(e.args[0]) + ", " + std::to_string(e.index) + ")";
    }
    return {};
}

namespace detail {

class StatParser {
public:
    explicit StatParser(std::string_view src) : src_(src) {}

    StatExpr parse() {
        StatExpr e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw parse_error("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
        return e;
    }

private:
    static StatExpr node(StatExpr::Kind k, std::vector<StatExpr> args, unsigned index = 0) {
        StatExpr e;
        e.kind = k;
        e.index = index;
        e.args = std::move(args);
        return e;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= src_.size()) throw parse_error(std::string("expected '") + c + "' but input ended", pos_);
            throw parse_error(std::string("expected '") + c + "'", pos_);
        }
    }

    StatExpr expr() {
        StatExpr lhs = term();
        for (;;) {
            if (accept('+')) lhs = node(StatExpr::Kind::add, {std::move(lhs), term()});
            else if (accept('-')) lhs = node(StatExpr::Kind::sub, {std::move(lhs), term()});
            else return lhs;
        }
    }

    StatExpr term() {
        StatExpr lhs = unary();
        while (accept('*')) lhs = node(StatExpr::Kind::mul, {std::move(lhs), unary()});
        return lhs;
    }

    StatExpr unary() {
        if (accept('-')) return node(StatExpr::Kind::neg, {unary()});
        return factor();
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    unsigned small_int(std::string_view what) {
        skip_ws();
        const std::size_t start = pos_;
        std::string d = digits();
        if (d.empty()) throw parse_error("expected integer " + std::string(what), start);
        if (d.size() > 6) throw parse_error(std::string(what) + " too large", start);
        return static_cast<unsigned>(std::stoul(d));
    }

    StatExpr factor() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) throw parse_error("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            StatExpr e;
            e.value = Integer(digits());
            return e;
        }
        if (c == '(') {
            ++pos_;
            StatExpr e = expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
            const std::string_view ident = src_.substr(start, pos_ - start);
            if (ident == "binom" || ident == "multichoose") {
                expect('(');
                StatExpr arg = expr();
                expect(',');
                const unsigned n = small_int("argument");
                expect(')');
                return node(ident == "binom" ? StatExpr::Kind::binom : StatExpr::Kind::multichoose, {std::move(arg)}, n);
            }
            if (ident.size() >= 2 && ident[0] == 'x' &&
                ident.find_first_not_of("0123456789", 1) == std::string_view::npos) {
                if (ident.size() > 7) throw parse_error("variable subscript too large", start);
                const auto k = static_cast<unsigned>(std::stoul(std::string(ident.substr(1))));
                if (k == 0) throw parse_error("variable subscripts start at x1", start);
                StatExpr e;
                e.kind = StatExpr::Kind::variable;
                e.index = k;
                return e;
            }
            throw parse_error("unknown identifier '" + std::string(ident) + "'", start);
        }
        throw parse_error("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline StatExpr parse_stat(std::string_view src) { return detail::StatParser(src).parse(); }

inline ClassFunction eval_stat(const StatExpr& e, unsigned d) {
    return ClassFunction(d, [&e](const Partition& lambda) { return e.eval(lambda); });
}

// ---------------------------------------------------------------------------
// Named statistics

/// A factorization statistic resolved from a CLI string: either a built-in
/// name or a character-polynomial expression.
struct Statistic {
    std::string name;
    /// Character-polynomial form, absent for sgn and even_type.
    std::optional<StatExpr> expr;
    std::function<ClassFunction(unsigned)> at_degree;

    ClassFunction operator()(unsigned d) const { return at_degree(d); }
};

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"trivial", "sgn", "num_roots", "quad_excess", "even_type"};
    return names;
}

/// Built-in statistic by name: trivial, sgn, num_roots, quad_excess,
/// even_type, or x_k / xk for a part-count variable.
inline Statistic builtin(std::string_view name) {
    const std::string n(name);
    if (n == "trivial") return {n, parse_stat("1"), trivial_function};
    if (n == "sgn") return {n, std::nullopt, sign_function};
    if (n == "num_roots") return {n, parse_stat("x1"), [](unsigned d) { return part_count_function(d, 1); }};
    if (n == "quad_excess") return {n, parse_stat("binom(x1,2) - x2"), quad_excess_function};
    if (n == "even_type") return {n, std::nullopt, even_type_function};
    if (n.size() >= 2 && n[0] == 'x') {
        std::string digits = n.substr(n[1] == '_' ? 2 : 1);
        if (!digits.empty() && digits.size() < 7 && digits.find_first_not_of("0123456789") == std::string::npos) {
            const auto k = static_cast<unsigned>(std::stoul(digits));
            if (k >= 1) return {n, parse_stat("x" + digits), [k](unsigned d) { return part_count_function(d, k); }};
        }
    }
    throw std::invalid_argument("unknown statistic: " + n);
}

/// Resolves a built-in name first, then falls back to parsing an expression.
inline Statistic resolve_statistic(std::string_view text) {
    try {
        return builtin(text);
    } catch (const std::invalid_argument&) {
    }
    StatExpr e = parse_stat(text);
    return {std::string(text), e, [e](unsigned d) { return eval_stat(e, d); }};
}

}  // namespace factstat
