#ifndef BINID_DSL_PARSER_HPP
#define BINID_DSL_PARSER_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <binid/dsl/ast.hpp>
#include <binid/dsl/lexer.hpp>
#include <binid/rational.hpp>

namespace binid::dsl
{

// Recursive descent over the token stream.
//
//   file    := 'param' IDENT ';' 'assert' expr '==' expr ';'
//   expr    := term (('+' | '-') term)*
//   term    := power (('*' | '/') power)*
//   power   := unary ('^' power)?              right associative
//   unary   := '-' unary | primary             binds tighter than '^'
//   primary := INT | IDENT | '(' expr ')'
//            | 'binom' '(' expr ',' expr ')'
//            | 'sum' '(' IDENT ',' expr ',' expr ',' expr ')'
class Parser
{
public:
    explicit Parser(std::span<const Token> tokens) : m_tokens(tokens) {}

    IdentityAst parse_file()
    {
        IdentityAst ast;
        expect(TokenKind::KwParam);
        ast.param = expect(TokenKind::Ident).lexeme;
        expect(TokenKind::Semi);
        expect(TokenKind::KwAssert);
        ast.lhs = parse_expr();
        expect(TokenKind::EqEq);
        ast.rhs = parse_expr();
        expect(TokenKind::Semi);
        expect_end();
        return ast;
    }

    ExprPtr parse_standalone()
    {
        auto e = parse_expr();
        expect_end();
        return e;
    }

private:
    const Token *peek() const { return m_at < m_tokens.size() ? &m_tokens[m_at] : nullptr; }

    bool at(TokenKind k) const
    {
        auto t = peek();
        return t && t->kind == k;
    }

    Position here() const
    {
        if (auto t = peek()) {
            return t->pos;
        }
        if (m_tokens.empty()) {
            return {1, 1};
        }
        const auto &last = m_tokens.back();
        return {last.pos.line, last.pos.column + static_cast<int>(last.lexeme.size())};
    }

    [[noreturn]] void fail(std::initializer_list<TokenKind> expected) const
    {
        std::string msg = "expected ";
        if (expected.size() > 1) {
            msg += "one of ";
        }
        bool first = true;
        for (auto k : expected) {
            if (!first) {
                msg += ", ";
            }
            msg += token_kind_display(k);
            first = false;
        }
        auto t = peek();
        msg += t ? " but found '" + t->lexeme + "'" : " but reached end of input";
        throw DslError(DslError::Kind::Syntax, here(), msg);
    }

    const Token &expect(TokenKind k)
    {
        if (!at(k)) {
            fail({k});
        }
        return m_tokens[m_at++];
    }

    void expect_end() const
    {
        if (auto t = peek()) {
            throw DslError(DslError::Kind::Syntax, t->pos, "expected end of input but found '" + t->lexeme + "'");
        }
    }

    ExprPtr parse_expr()
    {
        auto lhs = parse_term();
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            const Token &op = m_tokens[m_at++];
            auto rhs = parse_term();
            lhs = Expr::binary(op.kind == TokenKind::Plus ? Expr::Kind::Add : Expr::Kind::Sub, lhs, rhs, op.pos);
        }
        return lhs;
    }

    ExprPtr parse_term()
    {
        auto lhs = parse_power();
        while (at(TokenKind::Star) || at(TokenKind::Slash)) {
            const Token &op = m_tokens[m_at++];
            auto rhs = parse_power();
            lhs = Expr::binary(op.kind == TokenKind::Star ? Expr::Kind::Mul : Expr::Kind::Div, lhs, rhs, op.pos);
        }
        return lhs;
    }

    ExprPtr parse_power()
    {
        auto base = parse_unary();
        if (at(TokenKind::Caret)) {
            const Token &op = m_tokens[m_at++];
            auto exponent = parse_power();
            return Expr::binary(Expr::Kind::Pow, base, exponent, op.pos);
        }
        return base;
    }

    ExprPtr parse_unary()
    {
        if (at(TokenKind::Minus)) {
            const Token &op = m_tokens[m_at++];
            return Expr::unary(Expr::Kind::Neg, parse_unary(), op.pos);
        }
        return parse_primary();
    }

    ExprPtr parse_primary()
    {
        auto t = peek();
        if (!t) {
            fail({TokenKind::Int, TokenKind::Ident, TokenKind::LParen, TokenKind::Minus, TokenKind::KwBinom,
                  TokenKind::KwSum});
        }
        switch (t->kind) {
            case TokenKind::Int:
                ++m_at;
                return Expr::integer(Rational::parse(t->lexeme), t->pos);
            case TokenKind::Ident:
                ++m_at;
                return Expr::var(t->lexeme, t->pos);
            case TokenKind::LParen: {
                ++m_at;
                auto e = parse_expr();
                expect(TokenKind::RParen);
                return e;
            }
            case TokenKind::KwBinom: {
                ++m_at;
                expect(TokenKind::LParen);
                auto upper = parse_expr();
                expect(TokenKind::Comma);
                auto lower = parse_expr();
                expect(TokenKind::RParen);
                return Expr::binary(Expr::Kind::Binom, upper, lower, t->pos);
            }
            case TokenKind::KwSum: {
                ++m_at;
                expect(TokenKind::LParen);
                auto index = expect(TokenKind::Ident).lexeme;
                expect(TokenKind::Comma);
                auto from = parse_expr();
                expect(TokenKind::Comma);
                auto to = parse_expr();
                expect(TokenKind::Comma);
                auto body = parse_expr();
                expect(TokenKind::RParen);
                return Expr::sum(index, from, to, body, t->pos);
            }
            default:
                fail({TokenKind::Int, TokenKind::Ident, TokenKind::LParen, TokenKind::Minus, TokenKind::KwBinom,
                      TokenKind::KwSum});
        }
    }

    std::span<const Token> m_tokens;
    std::size_t m_at = 0;
};

namespace detail
{

// Resolves names: sum indices and the parameter are bound, anything else is
// a free variable. A sum index may not reuse the parameter, an enclosing
// index, or the name of a free variable.
class Resolver
{
public:
    explicit Resolver(std::optional<std::string> param) : m_param(std::move(param)) {}

    void walk(const Expr &e)
    {
        switch (e.kind) {
            case Expr::Kind::Var:
                if (!is_bound(e.name) && std::find(m_free.begin(), m_free.end(), e.name) == m_free.end()) {
                    m_free.push_back(e.name);
                }
                return;
            case Expr::Kind::Sum: {
                if (m_param && e.name == *m_param) {
                    throw DslError(DslError::Kind::Scope, e.pos, "sum index '" + e.name + "' reuses the parameter name");
                }
                if (std::find(m_scope.begin(), m_scope.end(), e.name) != m_scope.end()) {
                    throw DslError(DslError::Kind::Scope, e.pos,
                                   "sum index '" + e.name + "' is already bound by an enclosing sum");
                }
                m_indices.push_back({e.name, e.pos});
                walk(*e.args[0]);
                walk(*e.args[1]);
                m_scope.push_back(e.name);
                walk(*e.args[2]);
                m_scope.pop_back();
                return;
            }
            default:
                for (const auto &a : e.args) {
                    walk(*a);
                }
        }
    }

    std::vector<std::string> finish() const
    {
        for (const auto &[name, pos] : m_indices) {
            if (std::find(m_free.begin(), m_free.end(), name) != m_free.end() || name == "x" || name == "y" ||
                name == "z") {
                throw DslError(DslError::Kind::Scope, pos, "sum index '" + name + "' shadows a free variable");
            }
        }
        return m_free;
    }

private:
    bool is_bound(const std::string &name) const
    {
        return (m_param && name == *m_param) || std::find(m_scope.begin(), m_scope.end(), name) != m_scope.end();
    }

    std::optional<std::string> m_param;
    std::vector<std::string> m_scope;
    std::vector<std::pair<std::string, Position>> m_indices;
    std::vector<std::string> m_free;
};

} // namespace detail

inline IdentityAst parse(std::span<const Token> tokens)
{
    Parser p(tokens);
    auto ast = p.parse_file();
    detail::Resolver r(ast.param);
    r.walk(*ast.lhs);
    r.walk(*ast.rhs);
    ast.free_vars = r.finish();
    return ast;
}

inline IdentityAst parse(std::string_view source)
{
    auto tokens = tokenize(source);
    return parse(std::span<const Token>(tokens));
}

// A lone expression (no param/assert frame); every identifier not bound by a
// sum is a free variable.
struct StandaloneExpr {
    ExprPtr expr;
    std::vector<std::string> free_vars;
};

inline StandaloneExpr parse_expression(std::string_view source)
{
    auto tokens = tokenize(source);
    Parser p{std::span<const Token>(tokens)};
    auto e = p.parse_standalone();
    detail::Resolver r(std::nullopt);
    r.walk(*e);
    return {e, r.finish()};
}

} // namespace binid::dsl

#endif
