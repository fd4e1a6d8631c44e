#pragma once

/**
 * @file expr.hpp
 * @brief A one-variable arithmetic expression language for h(t) and g(y).
 *
 * Grammar (whitespace is insignificant):
 *
 *     expr    = term { ("+" | "-") term } ;
 *     term    = unary { ("*" | "/") unary } ;
 *     unary   = "-" unary | power ;
 *     power   = primary [ "^" unary ] ;              (* right-associative *)
 *     primary = number | constant | variable
 *             | function "(" expr ")" | "(" expr ")" ;
 *     number  = digits [ "." digits ] [ ("e" | "E") [ "+" | "-" ] digits ] ;
 *     constant = "pi" | "e" ;
 *     function = "exp" | "ln" | "sqrt" | "sin" | "cos" | "sec" | "abs" ;
 *
 * `^` binds tighter than unary minus, so -2^2 == -4 and 2^-1 == 0.5.
 * Exactly one variable name is legal per expression.
 */

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracbvp/errors.hpp"

namespace fracbvp {

enum class ExprKind { Number, Variable, Constant, Negate, Add, Sub, Mul, Div, Pow, Call };

struct ExprNode {
    ExprKind kind;
    double value = 0.0;  // Number literal, or the constant's value
    std::string name;    // variable, constant or function name
    std::shared_ptr<const ExprNode> lhs;
    std::shared_ptr<const ExprNode> rhs;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

/// A parsed, immutable expression in one free variable.
class Expr {
public:
    Expr(ExprPtr root, std::string var) : root_(std::move(root)), var_(std::move(var)) {}

    const ExprNode& root() const noexcept { return *root_; }
    const std::string& variable() const noexcept { return var_; }

    double operator()(double x) const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    ExprPtr root_;
    std::string var_;
};

namespace detail {

inline constexpr std::array<std::string_view, 7> kFunctions = {"exp", "ln",  "sqrt", "sin",
                                                               "cos", "sec", "abs"};

inline bool is_function(std::string_view s) {
    for (auto f : kFunctions)
        if (f == s) return true;
    return false;
}

inline std::string format_number(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

inline void print_node(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case ExprKind::Number: out += format_number(n.value); return;
        case ExprKind::Variable:
        case ExprKind::Constant: out += n.name; return;
        case ExprKind::Call:
            out += n.name;
            out += '(';
            print_node(*n.lhs, out);
            out += ')';
            return;
        case ExprKind::Negate:
            out += "(-";
            print_node(*n.lhs, out);
            out += ')';
            return;
        default: break;
    }
    static constexpr std::array<char, 10> ops = {0, 0, 0, 0, '+', '-', '*', '/', '^', 0};
    out += '(';
    print_node(*n.lhs, out);
    out += ' ';
    out += ops[static_cast<int>(n.kind)];
    out += ' ';
    print_node(*n.rhs, out);
    out += ')';
}

inline bool same_tree(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind || a.name != b.name) return false;
    if (a.kind == ExprKind::Number && std::memcmp(&a.value, &b.value, sizeof(double)) != 0)
        return false;
    if ((a.lhs == nullptr) != (b.lhs == nullptr) || (a.rhs == nullptr) != (b.rhs == nullptr))
        return false;
    if (a.lhs && !same_tree(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !same_tree(*a.rhs, *b.rhs)) return false;
    return true;
}

class Parser {
public:
    Parser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

    ExprPtr parse() {
        skip_ws();
        if (pos_ == text_.size()) throw SyntaxError("empty expression", pos_);
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    static ExprPtr node(ExprKind k, ExprPtr l = nullptr, ExprPtr r = nullptr) {
        return std::make_shared<const ExprNode>(ExprNode{k, 0.0, {}, std::move(l), std::move(r)});
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size())
                throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
        }
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            if (accept('+')) lhs = node(ExprKind::Add, lhs, parse_term());
            else if (accept('-')) lhs = node(ExprKind::Sub, lhs, parse_term());
            else return lhs;
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            if (accept('*')) lhs = node(ExprKind::Mul, lhs, parse_unary());
            else if (accept('/')) lhs = node(ExprKind::Div, lhs, parse_unary());
            else return lhs;
        }
    }

    ExprPtr parse_unary() {
        if (accept('-')) return node(ExprKind::Negate, parse_unary());
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (accept('^')) return node(ExprKind::Pow, base, parse_unary());
        return base;
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    ExprPtr parse_number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t nd = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            nd += digits();
        }
        if (nd == 0) throw SyntaxError("malformed number", start);
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                digits();
            }
        }
        double value = 0.0;
        const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc() || res.ptr != text_.data() + pos_)
            throw SyntaxError("malformed number", start);
        return std::make_shared<const ExprNode>(ExprNode{ExprKind::Number, value, {}, nullptr, nullptr});
    }

    ExprPtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        if (is_function(name)) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '(')
                throw SyntaxError("expected '(' after function '" + name + "'", pos_);
            ++pos_;
            std::vector<ExprPtr> args;
            if (!accept(')')) {
                args.push_back(parse_expr());
                while (accept(',')) args.push_back(parse_expr());
                expect(')');
            }
            if (args.size() != 1)
                throw ArityError("function '" + name + "' takes 1 argument, got " +
                                 std::to_string(args.size()));
            return std::make_shared<const ExprNode>(
                ExprNode{ExprKind::Call, 0.0, name, std::move(args.front()), nullptr});
        }
        if (name == var_)
            return std::make_shared<const ExprNode>(ExprNode{ExprKind::Variable, 0.0, name, nullptr, nullptr});
        if (name == "pi")
            return std::make_shared<const ExprNode>(
                ExprNode{ExprKind::Constant, std::numbers::pi, name, nullptr, nullptr});
        if (name == "e")
            return std::make_shared<const ExprNode>(
                ExprNode{ExprKind::Constant, std::numbers::e, name, nullptr, nullptr});
        throw UnknownIdentifier("unknown identifier '" + name + "' at offset " +
                                std::to_string(start) + " (the variable is '" +
                                std::string(var_) + "')");
    }

    std::string_view text_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

[[noreturn]] inline void pole(const ExprNode& n, const char* why) {
    std::string s;
    print_node(n, s);
    throw EvalPole(std::string(why) + " in " + s);
}

inline double eval_node(const ExprNode& n, double x) {
    double r = 0.0;
    switch (n.kind) {
        case ExprKind::Number:
        case ExprKind::Constant: return n.value;
        case ExprKind::Variable: return x;
        case ExprKind::Negate: return -eval_node(*n.lhs, x);
        case ExprKind::Add: r = eval_node(*n.lhs, x) + eval_node(*n.rhs, x); break;
        case ExprKind::Sub: r = eval_node(*n.lhs, x) - eval_node(*n.rhs, x); break;
        case ExprKind::Mul: r = eval_node(*n.lhs, x) * eval_node(*n.rhs, x); break;
        case ExprKind::Div: {
            const double num = eval_node(*n.lhs, x);
            const double den = eval_node(*n.rhs, x);
            if (std::fabs(den) < 1e-300) pole(n, "division by zero");
            r = num / den;
            break;
        }
        case ExprKind::Pow: {
            const double base = eval_node(*n.lhs, x);
            const double ex = eval_node(*n.rhs, x);
            if (base < 0.0 && ex != std::floor(ex)) pole(n, "negative base with non-integer exponent");
            if (base == 0.0 && ex < 0.0) pole(n, "zero to a negative power");
            r = std::pow(base, ex);
            break;
        }
        case ExprKind::Call: {
            const double a = eval_node(*n.lhs, x);
            if (n.name == "exp") r = std::exp(a);
            else if (n.name == "ln") {
                if (!(a > 0.0)) pole(n, "logarithm of a nonpositive value");
                r = std::log(a);
            } else if (n.name == "sqrt") {
                if (a < 0.0) pole(n, "square root of a negative value");
                r = std::sqrt(a);
            } else if (n.name == "sin") r = std::sin(a);
            else if (n.name == "cos") r = std::cos(a);
            else if (n.name == "sec") {
                // cos(a) within rounding of zero: a is an odd multiple of pi/2.
                const double c = std::cos(a);
                const double eps = 4.0 * std::numeric_limits<double>::epsilon();
                if (std::fabs(c) <= eps * std::fmax(1.0, std::fabs(a))) pole(n, "pole of sec");
                r = 1.0 / c;
            } else r = std::fabs(a);
            break;
        }
    }
    if (!std::isfinite(r)) pole(n, "non-finite result");
    return r;
}

}  // namespace detail

/// Parse `text` as an expression in the single variable `var_name`.
inline Expr parse_expr(std::string_view text, std::string_view var_name) {
    if (var_name.empty()) throw InvalidArgument("parse_expr: variable name must be nonempty");
    if (detail::is_function(var_name) || var_name == "pi" || var_name == "e")
        throw InvalidArgument("parse_expr: variable name clashes with a reserved identifier");
    return Expr(detail::Parser(text, var_name).parse(), std::string(var_name));
}

inline double eval(const Expr& e, double value) {
    if (!std::isfinite(value)) throw InvalidArgument("eval: value must be finite");
    return detail::eval_node(e.root(), value);
}

inline double Expr::operator()(double x) const { return eval(*this, x); }

/// Fully parenthesized form; reparses to an identical tree.
inline std::string to_string(const Expr& e) {
    std::string s;
    detail::print_node(e.root(), s);
    return s;
}

inline bool operator==(const Expr& a, const Expr& b) {
    return a.var_ == b.var_ && detail::same_tree(*a.root_, *b.root_);
}

}  // namespace fracbvp
