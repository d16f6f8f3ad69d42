#ifndef BINID_DSL_LEXER_HPP
#define BINID_DSL_LEXER_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binid::dsl
{

struct Position {
    int line = 1;
    int column = 1;

    friend bool operator==(const Position &, const Position &) = default;
};

inline std::string to_string(const Position &p)
{
    return std::to_string(p.line) + ":" + std::to_string(p.column);
}

// Every diagnostic the identity language can produce.
class DslError : public std::runtime_error
{
public:
    enum class Kind { Lexical, Syntax, Scope, Expansion };

    DslError(Kind kind, Position pos, const std::string &message)
        : std::runtime_error(label(kind) + " at " + binid::dsl::to_string(pos) + ": " + message), m_kind(kind),
          m_pos(pos), m_detail(message)
    {
    }

    Kind kind() const { return m_kind; }
    Position position() const { return m_pos; }
    const std::string &detail() const { return m_detail; }

    static std::string label(Kind kind)
    {
        switch (kind) {
            case Kind::Lexical:
                return "lexical error";
            case Kind::Syntax:
                return "syntax error";
            case Kind::Scope:
                return "scope error";
            case Kind::Expansion:
                return "expansion error";
        }
        return "error";
    }

private:
    Kind m_kind;
    Position m_pos;
    std::string m_detail;
};

enum class TokenKind {
    Int,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    EqEq,
    KwSum,
    KwBinom,
    KwParam,
    KwAssert,
    Semi,
};

inline const char *token_kind_name(TokenKind k)
{
    switch (k) {
        case TokenKind::Int:
            return "INT";
        case TokenKind::Ident:
            return "IDENT";
        case TokenKind::Plus:
            return "PLUS";
        case TokenKind::Minus:
            return "MINUS";
        case TokenKind::Star:
            return "STAR";
        case TokenKind::Slash:
            return "SLASH";
        case TokenKind::Caret:
            return "CARET";
        case TokenKind::LParen:
            return "LPAREN";
        case TokenKind::RParen:
            return "RPAREN";
        case TokenKind::Comma:
            return "COMMA";
        case TokenKind::EqEq:
            return "EQEQ";
        case TokenKind::KwSum:
            return "KW_SUM";
        case TokenKind::KwBinom:
            return "KW_BINOM";
        case TokenKind::KwParam:
            return "KW_PARAM";
        case TokenKind::KwAssert:
            return "KW_ASSERT";
        case TokenKind::Semi:
            return "SEMI";
    }
    return "?";
}

// How a token kind is spelled in "expected ..." diagnostics.
inline std::string token_kind_display(TokenKind k)
{
    switch (k) {
        case TokenKind::Int:
            return "integer";
        case TokenKind::Ident:
            return "identifier";
        case TokenKind::Plus:
            return "'+'";
        case TokenKind::Minus:
            return "'-'";
        case TokenKind::Star:
            return "'*'";
        case TokenKind::Slash:
            return "'/'";
        case TokenKind::Caret:
            return "'^'";
        case TokenKind::LParen:
            return "'('";
        case TokenKind::RParen:
            return "')'";
        case TokenKind::Comma:
            return "','";
        case TokenKind::EqEq:
            return "'=='";
        case TokenKind::KwSum:
            return "'sum'";
        case TokenKind::KwBinom:
            return "'binom'";
        case TokenKind::KwParam:
            return "'param'";
        case TokenKind::KwAssert:
            return "'assert'";
        case TokenKind::Semi:
            return "';'";
    }
    return "?";
}

struct Token {
    TokenKind kind;
    std::string lexeme;
    Position pos;
};

// Splits source text into tokens. Whitespace and '#' line comments are
// skipped; anything outside the alphabet is a lexical error.
inline std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        const Position pos{line, col};
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') {
                advance(1);
            }
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({TokenKind::Int, std::string(src.substr(i, j - i)), pos});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            std::string word(src.substr(i, j - i));
            TokenKind kind = TokenKind::Ident;
            if (word == "sum") {
                kind = TokenKind::KwSum;
            } else if (word == "binom") {
                kind = TokenKind::KwBinom;
            } else if (word == "param") {
                kind = TokenKind::KwParam;
            } else if (word == "assert") {
                kind = TokenKind::KwAssert;
            }
            out.push_back({kind, std::move(word), pos});
            advance(j - i);
            continue;
        }
        TokenKind kind;
        std::size_t len = 1;
        switch (c) {
            case '+':
                kind = TokenKind::Plus;
                break;
            case '-':
                kind = TokenKind::Minus;
                break;
            case '*':
                kind = TokenKind::Star;
                break;
            case '/':
                kind = TokenKind::Slash;
                break;
            case '^':
                kind = TokenKind::Caret;
                break;
            case '(':
                kind = TokenKind::LParen;
                break;
            case ')':
                kind = TokenKind::RParen;
                break;
            case ',':
                kind = TokenKind::Comma;
                break;
            case ';':
                kind = TokenKind::Semi;
                break;
            case '=':
                if (i + 1 < src.size() && src[i + 1] == '=') {
                    kind = TokenKind::EqEq;
                    len = 2;
                    break;
                }
                throw DslError(DslError::Kind::Lexical, pos, "lone '=' (did you mean '=='?)");
            default: {
                std::string shown = (static_cast<unsigned char>(c) < 0x80 && std::isprint(static_cast<unsigned char>(c)))
                                        ? std::string("'") + c + "'"
                                        : "byte 0x" + [&] {
                                              const char *hex = "0123456789abcdef";
                                              auto u = static_cast<unsigned char>(c);
                                              return std::string{hex[u >> 4], hex[u & 15]};
                                          }();
                throw DslError(DslError::Kind::Lexical, pos, "unexpected character " + shown);
            }
        }
        out.push_back({kind, std::string(src.substr(i, len)), pos});
        advance(len);
    }
    return out;
}

} // namespace binid::dsl

#endif
