#ifndef BINID_DSL_EXPAND_HPP
#define BINID_DSL_EXPAND_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <binid/algebra.hpp>
#include <binid/dsl/ast.hpp>
#include <binid/dsl/parser.hpp>
#include <binid/multipoly.hpp>
#include <binid/rational.hpp>

namespace binid::dsl
{

// Upper limit on the number of terms in one sum and on '^' exponents.
inline constexpr std::int64_t max_expansion_count = 100000;

namespace detail
{

struct FreeInIntegerContext {
    std::string name;
};

enum class IntegerRule { Any, NonNegative, NonZero };

} // namespace detail

// Evaluates an expression tree in an algebra R. The parameter and sum
// indices are integers; free variables are looked up through `resolve`.
// Sum bounds, binom depths, exponents and divisors are evaluated separately
// over the rationals with only integer bindings visible, so whether they are
// integers never depends on the point a side is evaluated at.
template <Algebra R>
class Expander
{
public:
    using Resolve = std::function<R(const std::string &)>;

    Expander(R prototype, std::optional<std::pair<std::string, std::int64_t>> param, Resolve resolve)
        : m_proto(std::move(prototype)), m_resolve(std::move(resolve))
    {
        if (param) {
            m_bound.push_back(*param);
        }
    }

    R eval(const Expr &e)
    {
        switch (e.kind) {
            case Expr::Kind::Int:
                return lift(m_proto, e.value);
            case Expr::Kind::Var:
                if (auto v = lookup(e.name)) {
                    return lift(m_proto, Rational(*v));
                }
                return m_resolve(e.name);
            case Expr::Kind::Neg:
                return -eval(*e.args[0]);
            case Expr::Kind::Add:
                return eval(*e.args[0]) + eval(*e.args[1]);
            case Expr::Kind::Sub:
                return eval(*e.args[0]) - eval(*e.args[1]);
            case Expr::Kind::Mul:
                return eval(*e.args[0]) * eval(*e.args[1]);
            case Expr::Kind::Div: {
                auto d = integer_of(*e.args[1], "divisor", detail::IntegerRule::NonZero);
                return eval(*e.args[0]) * (Rational(1) / Rational(d));
            }
            case Expr::Kind::Pow: {
                auto k = integer_of(*e.args[1], "exponent", detail::IntegerRule::NonNegative);
                if (k > max_expansion_count) {
                    throw error(e, "exponent too large");
                }
                return ipow(eval(*e.args[0]), static_cast<unsigned>(k));
            }
            case Expr::Kind::Binom: {
                auto k = integer_of(*e.args[1], "binom depth", detail::IntegerRule::NonNegative);
                if (k > max_expansion_count) {
                    throw error(e, "binom depth too large");
                }
                return binom(eval(*e.args[0]), static_cast<unsigned>(k));
            }
            case Expr::Kind::Sum:
                return eval_sum(e);
        }
        throw error(e, "unknown node");
    }

    const std::vector<std::string> &warnings() const { return m_warnings; }

    // Integer value of an index expression under the current bindings.
    std::int64_t integer_value(const Expr &e) { return integer_of(e, "sum bound", detail::IntegerRule::Any); }

private:
    std::optional<std::int64_t> lookup(const std::string &name) const
    {
        for (auto it = m_bound.rbegin(); it != m_bound.rend(); ++it) {
            if (it->first == name) {
                return it->second;
            }
        }
        return std::nullopt;
    }

    std::string bindings_text() const
    {
        if (m_bound.empty()) {
            return "no bindings";
        }
        std::string out;
        for (const auto &[name, value] : m_bound) {
            if (!out.empty()) {
                out += ", ";
            }
            out += name + "=" + std::to_string(value);
        }
        return out;
    }

    DslError error(const Expr &e, const std::string &what) const
    {
        return DslError(DslError::Kind::Expansion, e.pos, what + " in '" + render(e) + "' (" + bindings_text() + ")");
    }

    std::int64_t integer_of(const Expr &e, const std::string &role, detail::IntegerRule rule)
    {
        Expander<Rational> inner(Rational(0), std::nullopt, [](const std::string &name) -> Rational {
            throw detail::FreeInIntegerContext{name};
        });
        inner.m_bound = m_bound;
        Rational v;
        try {
            v = inner.eval(e);
        } catch (const detail::FreeInIntegerContext &f) {
            throw error(e, "non-integer " + role + " (free variable '" + f.name + "')");
        }
        auto iv = v.to_int64();
        if (!v.is_integer()) {
            throw error(e, "non-integer " + role + " " + v.to_string());
        }
        if (!iv) {
            throw error(e, role + " out of range");
        }
        if (rule == detail::IntegerRule::NonNegative && *iv < 0) {
            throw error(e, "negative " + role + " " + std::to_string(*iv));
        }
        if (rule == detail::IntegerRule::NonZero && *iv == 0) {
            throw error(e, "zero " + role);
        }
        return *iv;
    }

    R eval_sum(const Expr &e)
    {
        const auto from = integer_of(*e.args[0], "sum bound", detail::IntegerRule::Any);
        const auto to = integer_of(*e.args[1], "sum bound", detail::IntegerRule::Any);
        R acc = zero_like(m_proto);
        if (from > to) {
            if (from > to + 1) {
                m_warnings.push_back("sum over '" + e.name + "' at " + to_string(e.pos) + " has lower bound " +
                                     std::to_string(from) + " exceeding upper bound " + std::to_string(to) +
                                     " by more than one; treated as empty");
            }
            return acc;
        }
        if (to - from >= max_expansion_count) {
            throw error(e, "sum range too large");
        }
        m_bound.emplace_back(e.name, from);
        for (auto k = from; k <= to; ++k) {
            m_bound.back().second = k;
            acc = acc + eval(*e.args[2]);
        }
        m_bound.pop_back();
        return acc;
    }

    template <Algebra>
    friend class Expander;

    R m_proto;
    Resolve m_resolve;
    std::vector<std::pair<std::string, std::int64_t>> m_bound;
    std::vector<std::string> m_warnings;
};

// x, y, z followed by the file's other free variables in order of first use.
inline RingPtr ring_for(const std::vector<std::string> &free_vars)
{
    std::vector<std::string> names{"x", "y", "z"};
    for (const auto &v : free_vars) {
        if (v != "x" && v != "y" && v != "z") {
            names.push_back(v);
        }
    }
    if (names.size() == 3) {
        return Ring::xyz();
    }
    return std::make_shared<const Ring>(std::move(names));
}

inline RingPtr ring_for(const IdentityAst &ast)
{
    return ring_for(ast.free_vars);
}

template <Algebra R>
struct Sides {
    R lhs;
    R rhs;
    std::vector<std::string> warnings;
};

// Both sides at parameter value m, free variables taken from `point`.
template <Algebra R>
Sides<R> expand_sides(const IdentityAst &ast, std::int64_t m, const R &prototype,
                      const std::map<std::string, R> &point)
{
    Expander<R> ex(prototype, std::make_pair(ast.param, m), [&](const std::string &name) -> R {
        auto it = point.find(name);
        if (it == point.end()) {
            throw std::invalid_argument("no value for free variable '" + name + "'");
        }
        return it->second;
    });
    R lhs = ex.eval(*ast.lhs);
    R rhs = ex.eval(*ast.rhs);
    return {std::move(lhs), std::move(rhs), ex.warnings()};
}

inline std::map<std::string, MultiPoly> ring_generators(const RingPtr &ring)
{
    std::map<std::string, MultiPoly> out;
    for (const auto &name : ring->names()) {
        out.emplace(name, MultiPoly::variable(ring, name));
    }
    return out;
}

// Symbolic expansion of both sides at parameter value m.
inline Sides<MultiPoly> expand(const IdentityAst &ast, std::int64_t m, RingPtr ring = nullptr)
{
    if (!ring) {
        ring = ring_for(ast);
    }
    return expand_sides(ast, m, MultiPoly(ring), ring_generators(ring));
}

inline MultiPoly expand_expression(const StandaloneExpr &e, RingPtr ring = nullptr)
{
    if (!ring) {
        ring = ring_for(e.free_vars);
    }
    auto gens = ring_generators(ring);
    Expander<MultiPoly> ex(MultiPoly(ring), std::nullopt, [&](const std::string &name) { return gens.at(name); });
    return ex.eval(*e.expr);
}

} // namespace binid::dsl

#endif
