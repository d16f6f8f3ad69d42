#ifndef BINID_MULTIPOLY_HPP
#define BINID_MULTIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <binid/algebra.hpp>
#include <binid/rational.hpp>

namespace binid
{

// Ordered variable alphabet. The order is fixed at construction; the first
// variable is the most significant one in the term order.
class Ring
{
public:
    explicit Ring(std::vector<std::string> names) : m_names(std::move(names))
    {
        for (std::size_t i = 0; i < m_names.size(); ++i) {
            for (std::size_t j = i + 1; j < m_names.size(); ++j) {
                if (m_names[i] == m_names[j]) {
                    throw std::invalid_argument("duplicate ring variable '" + m_names[i] + "'");
                }
            }
        }
    }

    // The x < y < z ring every built-in identity lives in.
    static std::shared_ptr<const Ring> xyz()
    {
        static const auto ring = std::make_shared<const Ring>(std::vector<std::string>{"x", "y", "z"});
        return ring;
    }

    std::size_t size() const { return m_names.size(); }
    const std::string &name(std::size_t i) const { return m_names.at(i); }
    const std::vector<std::string> &names() const { return m_names; }

    std::optional<std::size_t> index_of(const std::string &name) const
    {
        auto it = std::find(m_names.begin(), m_names.end(), name);
        if (it == m_names.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - m_names.begin());
    }

    friend bool operator==(const Ring &a, const Ring &b) { return a.m_names == b.m_names; }

private:
    std::vector<std::string> m_names;
};

using RingPtr = std::shared_ptr<const Ring>;
using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

inline std::uint64_t total_degree(const Monomial &m)
{
    std::uint64_t d = 0;
    for (auto e : m) {
        d += e;
    }
    return d;
}

// Graded lexicographic order, strongest term first: higher total degree
// wins, ties broken lexicographically with the first ring variable most
// significant.
struct GrlexFirst {
    bool operator()(const Monomial &a, const Monomial &b) const
    {
        auto da = total_degree(a);
        auto db = total_degree(b);
        if (da != db) {
            return da > db;
        }
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

class MultiPoly
{
public:
    using TermMap = std::map<Monomial, Rational, GrlexFirst>;

    MultiPoly() : m_ring(Ring::xyz()) {}
    explicit MultiPoly(RingPtr ring) : m_ring(std::move(ring)) {}

    static MultiPoly constant(RingPtr ring, const Rational &c)
    {
        MultiPoly p(std::move(ring));
        if (!c.is_zero()) {
            p.m_terms.emplace(Monomial(p.m_ring->size(), 0), c);
        }
        return p;
    }

    static MultiPoly variable(RingPtr ring, const std::string &name)
    {
        auto idx = ring->index_of(name);
        if (!idx) {
            throw std::invalid_argument("variable '" + name + "' is not in the ring");
        }
        MultiPoly p(std::move(ring));
        Monomial m(p.m_ring->size(), 0);
        m[*idx] = 1;
        p.m_terms.emplace(std::move(m), Rational(1));
        return p;
    }

    // Builds from raw terms; zero coefficients are dropped, duplicates summed.
    static MultiPoly from_terms(RingPtr ring, const std::vector<std::pair<Monomial, Rational>> &terms)
    {
        MultiPoly p(std::move(ring));
        for (const auto &[mono, c] : terms) {
            if (mono.size() != p.m_ring->size()) {
                throw std::invalid_argument("monomial arity does not match ring");
            }
            p.accumulate(mono, c);
        }
        return p;
    }

    const RingPtr &ring() const { return m_ring; }
    const TermMap &terms() const { return m_terms; }
    std::size_t term_count() const { return m_terms.size(); }
    bool is_zero() const { return m_terms.empty(); }

    std::optional<Rational> constant_value() const
    {
        if (m_terms.empty()) {
            return Rational(0);
        }
        if (m_terms.size() == 1 && total_degree(m_terms.begin()->first) == 0) {
            return m_terms.begin()->second;
        }
        return std::nullopt;
    }

    // Total degree; the zero polynomial has degree 0 here.
    std::uint64_t degree() const { return m_terms.empty() ? 0 : total_degree(m_terms.begin()->first); }

    Exponent degree_in(std::size_t var) const
    {
        Exponent d = 0;
        for (const auto &[mono, c] : m_terms) {
            d = std::max(d, mono.at(var));
        }
        return d;
    }

    // First nonzero term in graded lexicographic order.
    std::optional<std::pair<Monomial, Rational>> leading_term() const
    {
        if (m_terms.empty()) {
            return std::nullopt;
        }
        return *m_terms.begin();
    }

    MultiPoly operator-() const
    {
        MultiPoly r(m_ring);
        for (const auto &[mono, c] : m_terms) {
            r.m_terms.emplace_hint(r.m_terms.end(), mono, -c);
        }
        return r;
    }

    MultiPoly &operator+=(const MultiPoly &o)
    {
        check_ring(o);
        for (const auto &[mono, c] : o.m_terms) {
            accumulate(mono, c);
        }
        return *this;
    }

    MultiPoly &operator-=(const MultiPoly &o)
    {
        check_ring(o);
        for (const auto &[mono, c] : o.m_terms) {
            accumulate(mono, -c);
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
    {
        a.check_ring(b);
        MultiPoly r(a.m_ring);
        if (a.is_zero() || b.is_zero()) {
            return r;
        }
        const std::size_t n = a.m_ring->size();
        Monomial prod(n);
        for (const auto &[ma, ca] : a.m_terms) {
            for (const auto &[mb, cb] : b.m_terms) {
                for (std::size_t i = 0; i < n; ++i) {
                    prod[i] = checked_add(ma[i], mb[i]);
                }
                r.accumulate(prod, ca * cb);
            }
        }
        return r;
    }

    friend MultiPoly operator*(const MultiPoly &a, const Rational &q)
    {
        MultiPoly r(a.m_ring);
        if (q.is_zero()) {
            return r;
        }
        for (const auto &[mono, c] : a.m_terms) {
            r.m_terms.emplace_hint(r.m_terms.end(), mono, c * q);
        }
        return r;
    }

    friend MultiPoly operator*(const Rational &q, const MultiPoly &a) { return a * q; }

    MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly &a, const MultiPoly &b)
    {
        return (a.m_ring == b.m_ring || *a.m_ring == *b.m_ring) && a.m_terms == b.m_terms;
    }

    // Replaces the ring by a larger one that keeps the existing variables as
    // a prefix in the same order.
    MultiPoly extend_ring(RingPtr wider) const
    {
        if (wider->size() < m_ring->size()) {
            throw std::invalid_argument("ring extension must not drop variables");
        }
        for (std::size_t i = 0; i < m_ring->size(); ++i) {
            if (wider->name(i) != m_ring->name(i)) {
                throw std::invalid_argument("ring extension must keep the variable prefix");
            }
        }
        MultiPoly r(std::move(wider));
        for (const auto &[mono, c] : m_terms) {
            Monomial m = mono;
            m.resize(r.m_ring->size(), 0);
            r.m_terms.emplace(std::move(m), c);
        }
        return r;
    }

    void check_ring(const MultiPoly &o) const
    {
        if (m_ring != o.m_ring && !(*m_ring == *o.m_ring)) {
            throw std::invalid_argument("ring mismatch");
        }
    }

private:
    static Exponent checked_add(Exponent a, Exponent b)
    {
        if (a > std::numeric_limits<Exponent>::max() - b) {
            throw std::overflow_error("monomial exponent overflow");
        }
        return a + b;
    }

    void accumulate(const Monomial &mono, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    RingPtr m_ring;
    TermMap m_terms;
};

inline MultiPoly lift(const MultiPoly &like, const Rational &q)
{
    return MultiPoly::constant(like.ring(), q);
}

inline std::optional<Rational> as_constant(const MultiPoly &p)
{
    return p.constant_value();
}

inline MultiPoly poly_add(const MultiPoly &a, const MultiPoly &b)
{
    return a + b;
}

inline MultiPoly poly_mul(const MultiPoly &a, const MultiPoly &b)
{
    return a * b;
}

inline MultiPoly binom_poly(const MultiPoly &alpha, unsigned n)
{
    return binom(alpha, n);
}

// Exact value at a point. Only variables that actually occur must be bound.
template <typename Point>
Rational poly_eval(const MultiPoly &a, const Point &point)
{
    const auto &ring = *a.ring();
    std::vector<std::optional<Rational>> values(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
        auto it = point.find(ring.name(i));
        if (it != point.end()) {
            values[i] = it->second;
        }
    }
    std::vector<std::vector<Rational>> powers(ring.size());
    auto power = [&](std::size_t var, Exponent e) -> const Rational & {
        auto &cache = powers[var];
        if (cache.empty()) {
            cache.push_back(Rational(1));
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * *values[var]);
        }
        return cache[e];
    };
    Rational acc(0);
    for (const auto &[mono, c] : a.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) {
                continue;
            }
            if (!values[i]) {
                throw std::invalid_argument("unbound variable '" + ring.name(i) + "' in evaluation");
            }
            term *= power(i, mono[i]);
        }
        acc += term;
    }
    return acc;
}

// Simultaneous substitution var -> polynomial. Unbound variables pass through.
template <typename Bindings>
MultiPoly poly_substitute(const MultiPoly &a, const Bindings &bindings)
{
    const auto &ring = a.ring();
    const std::size_t n = ring->size();
    std::vector<std::optional<MultiPoly>> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = bindings.find(ring->name(i));
        if (it != bindings.end()) {
            it->second.check_ring(a);
            images[i] = it->second;
        }
    }
    std::vector<std::vector<MultiPoly>> powers(n);
    auto power = [&](std::size_t var, Exponent e) -> const MultiPoly & {
        auto &cache = powers[var];
        if (cache.empty()) {
            cache.push_back(MultiPoly::constant(ring, Rational(1)));
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * *images[var]);
        }
        return cache[e];
    };
    MultiPoly result(ring);
    for (const auto &[mono, c] : a.terms()) {
        Monomial kept = mono;
        MultiPoly factor = MultiPoly::constant(ring, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (images[i] && mono[i] != 0) {
                factor = factor * power(i, mono[i]);
                kept[i] = 0;
            }
        }
        result += factor * MultiPoly::from_terms(ring, {{kept, Rational(1)}});
    }
    return result;
}

inline std::string render_monomial(const Ring &ring, const Monomial &mono)
{
    std::string out;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += ring.name(i);
        if (mono[i] != 1) {
            out += '^' + std::to_string(mono[i]);
        }
    }
    return out;
}

// Text form in the identity-file expression grammar, e.g.
// "(1/2)*x^2 + (-1/2)*x". Positive integers print bare, other coefficients
// parenthesized, unit coefficients are omitted.
inline std::string to_string(const MultiPoly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[mono, c] : p.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string m = render_monomial(*p.ring(), mono);
        std::string coeff = (c.is_integer() && c.sign() > 0) ? c.to_string() : "(" + c.to_string() + ")";
        if (m.empty()) {
            out += coeff;
        } else if (c.is_one()) {
            out += m;
        } else {
            out += coeff + "*" + m;
        }
    }
    return out;
}

inline std::ostream &operator<<(std::ostream &os, const MultiPoly &p)
{
    return os << to_string(p);
}

// x, y, z generators of a ring whose first three variables are x, y, z.
struct XyzVars {
    MultiPoly x, y, z;

    static XyzVars of(const RingPtr &ring)
    {
        return {MultiPoly::variable(ring, "x"), MultiPoly::variable(ring, "y"), MultiPoly::variable(ring, "z")};
    }
};

} // namespace binid

#endif
