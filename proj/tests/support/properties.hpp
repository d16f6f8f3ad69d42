#ifndef BINID_TESTS_PROPERTIES_HPP
#define BINID_TESTS_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <binid/multipoly.hpp>
#include <binid/series.hpp>

#include "generators.hpp"

// Randomized algebraic law checks shared by the unit suites and the
// acceptance runner. Each returns how many of `cases` generated instances
// violated the law.

namespace binid::testing
{

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && cases > 0; }
};

namespace detail
{

inline PropertyResult run_property(const std::string &name, std::size_t cases, std::uint64_t seed,
                                   const std::function<std::string(Gen &)> &one)
{
    PropertyResult r{name, cases, 0, {}};
    Gen gen(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        auto msg = one(gen);
        if (!msg.empty()) {
            if (r.failures == 0) {
                r.first_failure = "case " + std::to_string(i) + ": " + msg;
            }
            ++r.failures;
        }
    }
    return r;
}

inline RingPtr ring() { return Ring::xyz(); }

// C(k, n) for integers 0 <= n, k from a Pascal triangle; no factorials and
// no generalized binomial machinery involved.
inline mpz_class pascal_binomial(unsigned k, unsigned n)
{
    if (n > k) {
        return 0;
    }
    std::vector<mpz_class> row(n + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = std::min(i, n); j >= 1; --j) {
            row[j] += row[j - 1];
        }
    }
    return row[n];
}

} // namespace detail

inline PropertyResult ring_laws(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("ring laws (assoc/comm/distrib)", cases, seed, [](Gen &g) -> std::string {
        auto r = detail::ring();
        auto a = g.poly(r), b = g.poly(r), c = g.poly(r);
        if (!((a + b) + c == a + (b + c))) {
            return "additive associativity";
        }
        if (!((a * b) * c == a * (b * c))) {
            return "multiplicative associativity";
        }
        if (!(a + b == b + a) || !(a * b == b * a)) {
            return "commutativity";
        }
        if (!(a * (b + c) == a * b + a * c)) {
            return "distributivity";
        }
        return {};
    });
}

inline PropertyResult canonical_cancellation(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("a - a is the empty term map", cases, seed, [](Gen &g) -> std::string {
        auto a = g.poly(detail::ring(), 8, 5);
        auto d = a - a;
        return d.terms().empty() ? std::string{} : "nonempty difference " + to_string(d);
    });
}

inline PropertyResult pascal_rule(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("Pascal rule for binom_poly", cases, seed, [](Gen &g) -> std::string {
        auto r = detail::ring();
        auto alpha = g.poly(r, 3, 2);
        auto n = static_cast<unsigned>(g.integer(1, 5));
        auto one = MultiPoly::constant(r, 1);
        auto lhs = binom_poly(alpha, n);
        auto rhs = binom_poly(alpha - one, n) + binom_poly(alpha - one, n - 1);
        return lhs == rhs ? std::string{} : "alpha=" + to_string(alpha) + " n=" + std::to_string(n);
    });
}

inline PropertyResult evaluation_homomorphism(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("evaluation is multiplicative", cases, seed, [](Gen &g) -> std::string {
        auto r = detail::ring();
        auto a = g.poly(r), b = g.poly(r);
        std::map<std::string, Rational> p{{"x", g.rational()}, {"y", g.rational()}, {"z", g.rational()}};
        bool ok = poly_eval(a * b, p) == poly_eval(a, p) * poly_eval(b, p) &&
                  poly_eval(a + b, p) == poly_eval(a, p) + poly_eval(b, p);
        return ok ? std::string{} : "a=" + to_string(a) + " b=" + to_string(b);
    });
}

inline PropertyResult binomial_at_integers(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("binom_poly(x,n) at x=k matches Pascal triangle", cases, seed,
                                [](Gen &g) -> std::string {
                                    auto r = detail::ring();
                                    auto n = static_cast<unsigned>(g.integer(0, 12));
                                    auto k = static_cast<unsigned>(g.integer(0, 30));
                                    auto p = binom_poly(MultiPoly::variable(r, "x"), n);
                                    std::map<std::string, Rational> at{{"x", Rational(k)}};
                                    auto got = poly_eval(p, at);
                                    auto want = Rational(detail::pascal_binomial(k, n), mpz_class(1));
                                    return got == want ? std::string{}
                                                       : "C(" + std::to_string(k) + "," + std::to_string(n) + ")";
                                });
}

inline PropertyResult series_ring_laws(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("truncated series ring laws", cases, seed, [](Gen &g) -> std::string {
        auto r = detail::ring();
        auto f = g.series(r, g.order(0, 5));
        auto h = g.series(r, g.order(0, 5));
        auto k = g.series(r, g.order(0, 5));
        if (!(series_mul(series_mul(f, h), k) == series_mul(f, series_mul(h, k)))) {
            return "associativity";
        }
        if (!(series_mul(f, series_add(h, k)) == series_add(series_mul(f, h), series_mul(f, k)))) {
            return "distributivity";
        }
        if (!(series_mul(f, h) == series_mul(h, f))) {
            return "commutativity";
        }
        return {};
    });
}

inline PropertyResult leibniz_rule(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("Leibniz rule", cases, seed, [](Gen &g) -> std::string {
        auto r = detail::ring();
        auto order = g.order(1, 6);
        auto f = g.series(r, order);
        auto h = g.series(r, order);
        auto lhs = series_derivative(series_mul(f, h));
        auto rhs = series_add(series_mul(series_derivative(f), h), series_mul(f, series_derivative(h)));
        return lhs == rhs ? std::string{} : "order " + std::to_string(order);
    });
}

inline PropertyResult reciprocal_contract(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("f * recip(f) = 1", cases, seed, [](Gen &g) -> std::string {
        auto r = detail::ring();
        auto order = g.order(0, 6);
        auto f = g.unit_series(r, order);
        auto one = TruncSeries<MultiPoly>::constant(MultiPoly::constant(r, 1), order);
        return series_mul(f, series_recip(f)) == one ? std::string{} : "order " + std::to_string(order);
    });
}

inline PropertyResult vandermonde_additivity(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("(1+t)^a (1+t)^b = (1+t)^(a+b)", cases, seed, [](Gen &g) -> std::string {
        auto r = detail::ring();
        auto order = g.order(0, 6);
        auto a = g.poly(r, 3, 1);
        auto b = g.poly(r, 3, 1);
        auto lhs = series_mul(binomial_power(a, order), binomial_power(b, order));
        return lhs == binomial_power(a + b, order) ? std::string{}
                                                   : "a=" + to_string(a) + " b=" + to_string(b);
    });
}

inline PropertyResult extraction_derivative_law(std::size_t cases, std::uint64_t seed)
{
    return detail::run_property("m [t^m] f = [t^(m-1)] f'", cases, seed, [](Gen &g) -> std::string {
        auto r = detail::ring();
        auto order = g.order(1, 7);
        auto f = g.series(r, order);
        auto m = g.order(1, order);
        auto lhs = extract_coeff(f, m) * Rational(m);
        auto rhs = extract_coeff(series_derivative(f), m - 1);
        return lhs == rhs ? std::string{} : "m=" + std::to_string(m);
    });
}

inline std::vector<PropertyResult> all_properties(std::size_t cases, std::uint64_t seed)
{
    return {ring_laws(cases, seed),
            canonical_cancellation(cases, seed + 1),
            pascal_rule(cases, seed + 2),
            evaluation_homomorphism(cases, seed + 3),
            binomial_at_integers(cases, seed + 4),
            series_ring_laws(cases, seed + 5),
            leibniz_rule(cases, seed + 6),
            reciprocal_contract(cases, seed + 7),
            vandermonde_additivity(cases, seed + 8),
            extraction_derivative_law(cases, seed + 9)};
}

} // namespace binid::testing

#endif
