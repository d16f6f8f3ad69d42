#ifndef BINID_ALGEBRA_HPP
#define BINID_ALGEBRA_HPP

#include <concepts>
#include <optional>

#include <binid/rational.hpp>

namespace binid
{

// A commutative coefficient algebra over the rationals. Both MultiPoly
// (symbolic expansion) and Rational (evaluation at a point) model it, so
// every builder in this library can run either way.
//
// Models provide, findable by ADL:
//   R lift(const R &like, const Rational &q)       constant q in like's ring
//   std::optional<Rational> as_constant(const R &) value if constant
template <typename R>
concept Algebra = requires(const R &a, const R &b, const Rational &q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a * q } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { lift(a, q) } -> std::convertible_to<R>;
    { as_constant(a) } -> std::convertible_to<std::optional<Rational>>;
    { a == b } -> std::convertible_to<bool>;
};

inline Rational lift(const Rational &, const Rational &q)
{
    return q;
}

inline std::optional<Rational> as_constant(const Rational &q)
{
    return q;
}

template <Algebra R>
R zero_like(const R &like)
{
    return lift(like, Rational(0));
}

template <Algebra R>
R one_like(const R &like)
{
    return lift(like, Rational(1));
}

template <Algebra R>
bool is_zero_element(const R &a)
{
    auto c = as_constant(a);
    return c && c->is_zero();
}

template <Algebra R>
R ipow(const R &base, unsigned exponent)
{
    R result = one_like(base);
    R square = base;
    while (exponent != 0) {
        if (exponent & 1u) {
            result = result * square;
        }
        exponent >>= 1;
        if (exponent != 0) {
            square = square * square;
        }
    }
    return result;
}

// Generalized binomial coefficient alpha(alpha-1)...(alpha-n+1)/n!.
// The falling factorial is accumulated first and divided by n! once.
template <Algebra R>
R binom(const R &alpha, unsigned n)
{
    if (n == 0) {
        return one_like(alpha);
    }
    R acc = alpha;
    for (unsigned k = 1; k < n; ++k) {
        acc = acc * (alpha - lift(alpha, Rational(static_cast<long>(k))));
    }
    return acc * (Rational(1) / factorial(n));
}

// (-1)^n as a scalar.
inline Rational sign_power(unsigned n)
{
    return (n % 2 == 0) ? Rational(1) : Rational(-1);
}

} // namespace binid

#endif
