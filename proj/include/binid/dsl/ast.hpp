#ifndef BINID_DSL_AST_HPP
#define BINID_DSL_AST_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <binid/dsl/lexer.hpp>
#include <binid/rational.hpp>

namespace binid::dsl
{

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression node. `name` is used by Var (the identifier) and Sum
// (the index); `value` by Int. Children:
//   Neg: [operand]   Add/Sub/Mul/Div/Pow: [left, right]
//   Binom: [upper, lower]   Sum: [from, to, body]
struct Expr {
    enum class Kind { Int, Var, Neg, Add, Sub, Mul, Div, Pow, Binom, Sum };

    Kind kind;
    Rational value;
    std::string name;
    std::vector<ExprPtr> args;
    Position pos;

    static ExprPtr integer(Rational v, Position p)
    {
        return std::make_shared<const Expr>(Expr{Kind::Int, std::move(v), {}, {}, p});
    }
    static ExprPtr var(std::string n, Position p)
    {
        return std::make_shared<const Expr>(Expr{Kind::Var, {}, std::move(n), {}, p});
    }
    static ExprPtr unary(Kind k, ExprPtr a, Position p)
    {
        return std::make_shared<const Expr>(Expr{k, {}, {}, {std::move(a)}, p});
    }
    static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b, Position p)
    {
        return std::make_shared<const Expr>(Expr{k, {}, {}, {std::move(a), std::move(b)}, p});
    }
    static ExprPtr sum(std::string index, ExprPtr from, ExprPtr to, ExprPtr body, Position p)
    {
        return std::make_shared<const Expr>(
            Expr{Kind::Sum, {}, std::move(index), {std::move(from), std::move(to), std::move(body)}, p});
    }
};

// Structural equality; source positions are ignored.
inline bool same_structure(const Expr &a, const Expr &b)
{
    if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.args.size() != b.args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!same_structure(*a.args[i], *b.args[i])) {
            return false;
        }
    }
    return true;
}

struct IdentityAst {
    std::string param;
    ExprPtr lhs;
    ExprPtr rhs;
    // Free variables in order of first appearance (x, y, z included only if used).
    std::vector<std::string> free_vars;
};

inline bool same_structure(const IdentityAst &a, const IdentityAst &b)
{
    return a.param == b.param && same_structure(*a.lhs, *b.lhs) && same_structure(*a.rhs, *b.rhs);
}

namespace detail
{

inline int precedence(Expr::Kind k)
{
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
            return 2;
        case Expr::Kind::Pow:
            return 3;
        case Expr::Kind::Neg:
            return 4;
        default:
            return 5;
    }
}

inline std::string render(const Expr &e, int min_prec)
{
    std::string out;
    switch (e.kind) {
        case Expr::Kind::Int:
            out = e.value.to_string();
            break;
        case Expr::Kind::Var:
            out = e.name;
            break;
        case Expr::Kind::Neg:
            out = "-" + render(*e.args[0], 4);
            break;
        case Expr::Kind::Add:
            out = render(*e.args[0], 1) + " + " + render(*e.args[1], 2);
            break;
        case Expr::Kind::Sub:
            out = render(*e.args[0], 1) + " - " + render(*e.args[1], 2);
            break;
        case Expr::Kind::Mul:
            out = render(*e.args[0], 2) + "*" + render(*e.args[1], 3);
            break;
        case Expr::Kind::Div:
            out = render(*e.args[0], 2) + "/" + render(*e.args[1], 3);
            break;
        case Expr::Kind::Pow:
            out = render(*e.args[0], 4) + "^" + render(*e.args[1], 3);
            break;
        case Expr::Kind::Binom:
            out = "binom(" + render(*e.args[0], 0) + ", " + render(*e.args[1], 0) + ")";
            break;
        case Expr::Kind::Sum:
            out = "sum(" + e.name + ", " + render(*e.args[0], 0) + ", " + render(*e.args[1], 0) + ", " +
                  render(*e.args[2], 0) + ")";
            break;
    }
    if (precedence(e.kind) < min_prec) {
        return "(" + out + ")";
    }
    return out;
}

} // namespace detail

// Source text for an expression, with only the parentheses the grammar needs.
inline std::string render(const Expr &e)
{
    return detail::render(e, 0);
}

inline std::string render(const IdentityAst &ast)
{
    return "param " + ast.param + ";\nassert " + render(*ast.lhs) + " == " + render(*ast.rhs) + ";\n";
}

// Fully parenthesized prefix dump used by the parser corpus goldens.
inline std::string sexpr(const Expr &e)
{
    auto bin = [&](const char *op) { return std::string("(") + op + " " + sexpr(*e.args[0]) + " " + sexpr(*e.args[1]) + ")"; };
    switch (e.kind) {
        case Expr::Kind::Int:
            return e.value.to_string();
        case Expr::Kind::Var:
            return e.name;
        case Expr::Kind::Neg:
            return "(neg " + sexpr(*e.args[0]) + ")";
        case Expr::Kind::Add:
            return bin("+");
        case Expr::Kind::Sub:
            return bin("-");
        case Expr::Kind::Mul:
            return bin("*");
        case Expr::Kind::Div:
            return bin("/");
        case Expr::Kind::Pow:
            return bin("^");
        case Expr::Kind::Binom:
            return bin("binom");
        case Expr::Kind::Sum:
            return "(sum " + e.name + " " + sexpr(*e.args[0]) + " " + sexpr(*e.args[1]) + " " + sexpr(*e.args[2]) + ")";
    }
    return "?";
}

inline std::string sexpr(const IdentityAst &ast)
{
    std::string vars;
    for (const auto &v : ast.free_vars) {
        vars += " " + v;
    }
    return "(param " + ast.param + ")\n(free" + vars + ")\n(== " + sexpr(*ast.lhs) + " " + sexpr(*ast.rhs) + ")\n";
}

} // namespace binid::dsl

#endif
