#ifndef BINID_IDENTITIES_HPP
#define BINID_IDENTITIES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <binid/algebra.hpp>
#include <binid/multipoly.hpp>
#include <binid/rational.hpp>
#include <binid/series.hpp>

// Builders for the generalized curious binomial identity
//
//   (x + (m+1)z) sum_n (-1)^n C(x+y+nz, m-n) C(y+n(z+1), n)
//     = z sum_{l<=n<=m} (-1)^n C(n,l) C(x+l, m-n) (1+z)^(n+l) (1-z)^(n-l)
//       + (x-m) C(x,m)
//
// its shifted twin, its z = 1 specializations, the x = -(m+1)z reflection,
// and every intermediate coefficient-extraction step of its generating
// function proof. Each builder is generic over the coefficient algebra:
// with MultiPoly it expands symbolically, with Rational it evaluates at a
// point.
//
// A "chain" is a list of expressions that must all be equal; element 0 is
// the left-hand side of the claim and the last element the right-hand side.

namespace binid
{

template <Algebra R>
struct Vars {
    R x, y, z;
};

inline Vars<MultiPoly> symbolic_vars(const RingPtr &ring = Ring::xyz())
{
    auto v = XyzVars::of(ring);
    return {v.x, v.y, v.z};
}

template <Algebra R>
using Chain = std::vector<R>;

namespace detail
{

template <Algebra R>
R scalar(const R &like, long v)
{
    return lift(like, Rational(v));
}

template <Algebra R>
std::vector<R> powers(const R &base, std::size_t count)
{
    std::vector<R> out;
    out.reserve(count + 1);
    out.push_back(one_like(base));
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(out.back() * base);
    }
    return out;
}

// 1 + (z+1)t
template <Algebra R>
TruncSeries<R> denominator(const Vars<R> &v, std::size_t order)
{
    return TruncSeries<R>::linear(one_like(v.z), v.z + one_like(v.z), order);
}

} // namespace detail

// sum_{n=0}^{m} (-1)^n C(x+y+nz, m-n) C(y+n(z+1), n)
template <Algebra R>
R alternating_sum(unsigned m, const Vars<R> &v)
{
    const R one = one_like(v.x);
    R acc = zero_like(v.x);
    for (unsigned n = 0; n <= m; ++n) {
        const R nr = detail::scalar(v.x, n);
        R term = binom(v.x + v.y + nr * v.z, m - n) * binom(v.y + nr * (v.z + one), n);
        acc = acc + term * sign_power(n);
    }
    return acc;
}

// sum_{0<=l<=n<=m} (-1)^n C(n,l) C(x+shift+l, m-n) (1+z)^(n+l) (1-z)^(n-l)
template <Algebra R>
R double_sum(unsigned m, const Vars<R> &v, long shift = 0)
{
    const R one = one_like(v.x);
    const auto plus = detail::powers(one + v.z, 2 * static_cast<std::size_t>(m));
    const auto minus = detail::powers(one - v.z, m);
    R acc = zero_like(v.x);
    for (unsigned n = 0; n <= m; ++n) {
        R inner = zero_like(v.x);
        for (unsigned l = 0; l <= n; ++l) {
            R upper = v.x + detail::scalar(v.x, shift + static_cast<long>(l));
            R term = binom(upper, m - n) * plus[n + l] * minus[n - l];
            inner = inner + term * binom(Rational(n), l);
        }
        acc = acc + inner * sign_power(n);
    }
    return acc;
}

// (x - m) C(x, m)
template <Algebra R>
R boundary_term(unsigned m, const Vars<R> &v)
{
    return (v.x - detail::scalar(v.x, m)) * binom(v.x, m);
}

template <Algebra R>
R theorem_lhs(unsigned m, const Vars<R> &v)
{
    return (v.x + detail::scalar(v.x, m + 1) * v.z) * alternating_sum(m, v);
}

template <Algebra R>
R theorem_rhs(unsigned m, const Vars<R> &v)
{
    return v.z * double_sum(m, v) + boundary_term(m, v);
}

template <Algebra R>
R shifted_lhs(unsigned m, const Vars<R> &v)
{
    return (v.x + detail::scalar(v.x, m + 1) * v.z + one_like(v.x)) * alternating_sum(m, v);
}

template <Algebra R>
R shifted_rhs(unsigned m, const Vars<R> &v)
{
    return (v.z + one_like(v.z)) * double_sum(m, v, 1) + boundary_term(m, v);
}

// The z = 1 identities written out literally, with (-4)^n in place of the
// inner sum over l.

template <Algebra R>
R classic_alternating_sum(unsigned m, const Vars<R> &v)
{
    R acc = zero_like(v.x);
    for (unsigned n = 0; n <= m; ++n) {
        R term = binom(v.x + v.y + detail::scalar(v.x, n), m - n) * binom(v.y + detail::scalar(v.x, 2 * n), n);
        acc = acc + term * sign_power(n);
    }
    return acc;
}

// sum_{n=0}^{m} C(x+shift+n, m-n) (-4)^n
template <Algebra R>
R classic_power_sum(unsigned m, const Vars<R> &v, long shift)
{
    R acc = zero_like(v.x);
    Rational weight(1);
    for (unsigned n = 0; n <= m; ++n) {
        acc = acc + binom(v.x + detail::scalar(v.x, shift + static_cast<long>(n)), m - n) * weight;
        weight *= Rational(-4);
    }
    return acc;
}

template <Algebra R>
R classic_lhs(unsigned m, const Vars<R> &v)
{
    return (v.x + detail::scalar(v.x, m + 1)) * classic_alternating_sum(m, v);
}

template <Algebra R>
R classic_rhs(unsigned m, const Vars<R> &v)
{
    return classic_power_sum(m, v, 0) + boundary_term(m, v);
}

template <Algebra R>
R classic_shifted_lhs(unsigned m, const Vars<R> &v)
{
    return (v.x + detail::scalar(v.x, m + 2)) * classic_alternating_sum(m, v);
}

template <Algebra R>
R classic_shifted_rhs(unsigned m, const Vars<R> &v)
{
    return classic_power_sum(m, v, 1) * Rational(2) + boundary_term(m, v);
}

// sum_{l<=n<=m} (-1)^n C(n,l) C(l+(m+1)z, m-n) (1+z)^(n-l) (1-z)^(n+l)
template <Algebra R>
R reflected_lhs(unsigned m, const Vars<R> &v)
{
    const R one = one_like(v.z);
    const R scaled = detail::scalar(v.z, m + 1) * v.z;
    const auto plus = detail::powers(one + v.z, m);
    const auto minus = detail::powers(one - v.z, 2 * static_cast<std::size_t>(m));
    R acc = zero_like(v.z);
    for (unsigned n = 0; n <= m; ++n) {
        for (unsigned l = 0; l <= n; ++l) {
            R term = binom(scaled + detail::scalar(v.z, l), m - n) * plus[n - l] * minus[n + l];
            acc = acc + term * (binom(Rational(n), l) * sign_power(n));
        }
    }
    return acc;
}

// (m+1) C((m+1)z - 1, m)
template <Algebra R>
R reflected_rhs(unsigned m, const Vars<R> &v)
{
    const R scaled = detail::scalar(v.z, m + 1) * v.z;
    return binom(scaled - one_like(v.z), m) * Rational(m + 1);
}

// Substitution z -> 1 applied to an expression built from v. Symbolically
// this goes through poly_substitute on the finished polynomial; for point
// evaluation the builder is rerun with z = 1.
template <Algebra R, typename Builder>
R at_z_one(unsigned m, const Vars<R> &v, Builder build)
{
    if constexpr (std::is_same_v<R, MultiPoly>) {
        std::map<std::string, MultiPoly> bindings{{"z", one_like(v.z)}};
        return poly_substitute(build(m, v), bindings);
    } else {
        return build(m, Vars<R>{v.x, v.y, one_like(v.z)});
    }
}

template <Algebra R>
Chain<R> classic_chain(unsigned m, const Vars<R> &v)
{
    return {classic_lhs(m, v), at_z_one(m, v, [](unsigned k, const Vars<R> &w) { return theorem_lhs(k, w); }),
            at_z_one(m, v, [](unsigned k, const Vars<R> &w) { return theorem_rhs(k, w); }), classic_rhs(m, v)};
}

template <Algebra R>
Chain<R> classic_shifted_chain(unsigned m, const Vars<R> &v)
{
    return {classic_shifted_lhs(m, v),
            at_z_one(m, v, [](unsigned k, const Vars<R> &w) { return shifted_lhs(k, w); }),
            at_z_one(m, v, [](unsigned k, const Vars<R> &w) { return shifted_rhs(k, w); }),
            classic_shifted_rhs(m, v)};
}

// ---------------------------------------------------------------------------
// Generating-function side.

// (1+t)^(x+shift) / (1+(z+1)t)
template <Algebra R>
TruncSeries<R> single_denominator_series(std::size_t order, const Vars<R> &v, long shift = 0)
{
    return series_mul(binomial_power(v.x + detail::scalar(v.x, shift), order),
                      series_recip(detail::denominator(v, order)));
}

// (1+t)^(x+shift) / (1+(z+1)t)^2
template <Algebra R>
TruncSeries<R> squared_denominator_series(std::size_t order, const Vars<R> &v, long shift = 0)
{
    const auto d = detail::denominator(v, order);
    return series_mul(binomial_power(v.x + detail::scalar(v.x, shift), order), series_recip(series_mul(d, d)));
}

// x (1+t)^(x-1) / (1+(z+1)t)
template <Algebra R>
TruncSeries<R> lowered_series(std::size_t order, const Vars<R> &v)
{
    return series_scale(single_denominator_series(order, v, -1), v.x);
}

// [t^m] (1+t)^x/(1+(z+1)t) equals the alternating sum (which therefore does
// not depend on y).
template <Algebra R>
Chain<R> single_extraction_chain(unsigned m, const Vars<R> &v)
{
    return {extract_coeff(single_denominator_series(m, v), m), alternating_sum(m, v)};
}

// [t^m] (1+t)^x/(1+(z+1)t)^2 equals the double sum. The middle links follow
// the rewriting through the geometric expansion of the squared denominator.
template <Algebra R>
Chain<R> squared_extraction_chain(unsigned m, const Vars<R> &v)
{
    const R one = one_like(v.x);
    const R zp1 = v.z + one;
    const auto x_power = binomial_power(v.x, m);

    // sum_n (-1)^n (z+1)^n [t^(m-n)] (1+t)^x (t(z+1)+2)^n
    R via_geometric = zero_like(v.x);
    auto inner = TruncSeries<R>::linear(detail::scalar(v.x, 2), zp1, m);
    auto inner_power = TruncSeries<R>::constant(one, m);
    for (unsigned n = 0; n <= m; ++n) {
        R c = extract_coeff(series_mul(x_power, inner_power), m - n);
        via_geometric = via_geometric + ipow(zp1, n) * c * sign_power(n);
        inner_power = series_mul(inner_power, inner);
    }

    // same, after the binomial expansion of ((z+1)(1+t) + 1 - z)^n
    R via_binomial = zero_like(v.x);
    for (unsigned n = 0; n <= m; ++n) {
        R inner_sum = zero_like(v.x);
        for (unsigned l = 0; l <= n; ++l) {
            R c = extract_coeff(binomial_power(v.x + detail::scalar(v.x, l), m), m - n);
            inner_sum = inner_sum + c * ipow(zp1, l) * ipow(one - v.z, n - l) * binom(Rational(n), l);
        }
        via_binomial = via_binomial + ipow(zp1, n) * inner_sum * sign_power(n);
    }

    return {extract_coeff(squared_denominator_series(m, v), m), via_geometric, via_binomial, double_sum(m, v)};
}

// [t^m] A(x) = (z+1) [t^m] B(x+1) - z [t^m] B(x), from
// 1/(1+(z+1)t) = ((1+t)(z+1) - z)/(1+(z+1)t)^2.
template <Algebra R>
Chain<R> denominator_split_chain(unsigned m, const Vars<R> &v)
{
    const R zp1 = v.z + one_like(v.z);
    const R a = extract_coeff(single_denominator_series(m, v), m);
    const R b_shifted = extract_coeff(squared_denominator_series(m, v, 1), m);
    const R b = extract_coeff(squared_denominator_series(m, v), m);
    // Sum form of the same split, in terms of the double sums.
    const R sums = zp1 * double_sum(m, v, 1) - v.z * double_sum(m, v);
    return {a, zp1 * b_shifted - v.z * b, sums, alternating_sum(m, v)};
}

// (m+1)[t^m]A - [t^m]B = [t^m] x t (1+t)^(x-1)/(1+(z+1)t), every term read
// off directly from its own series.
template <Algebra R>
Chain<R> derivative_relation_direct(unsigned m, const Vars<R> &v)
{
    const R a = extract_coeff(single_denominator_series(m, v), m);
    const R b = extract_coeff(squared_denominator_series(m, v), m);
    const R rhs = extract_coeff(series_mul_by_t(lowered_series(m, v)), m);
    return {a * Rational(m + 1) - b, rhs};
}

// The same relation reached through the derivative: m [t^m] A is read as
// [t^(m-1)] dA/dt, the quotient rule is applied, and the result is moved
// back to [t^m] with a factor of t. Requires m >= 1.
template <Algebra R>
Chain<R> derivative_relation_route(unsigned m, const Vars<R> &v)
{
    if (m == 0) {
        throw std::domain_error("derivative route needs m >= 1");
    }
    const R zp1 = v.z + one_like(v.z);
    const auto a_series = single_denominator_series(m, v);
    const auto b_series = squared_denominator_series(m, v);
    const auto lowered = lowered_series(m, v);

    const R a = extract_coeff(a_series, m);
    const R b = extract_coeff(b_series, m);

    // dA/dt at order m-1, straight from the truncated series.
    const auto da = series_derivative(a_series);
    // Quotient rule: -(z+1)(1+t)^x/D^2 + x(1+t)^(x-1)/D.
    const auto quotient = series_sub(lowered, series_scale(b_series, zp1));

    const R from_derivative = extract_coeff(da, m - 1);
    const R from_quotient = extract_coeff(quotient, m - 1);
    const R shifted = extract_coeff(series_mul_by_t(quotient), m);
    // -t(z+1)B + t x(1+t)^(x-1)/D regrouped as B + (x t (1+t)^(x-1) - (1+t)^x)/D
    const auto regrouped = series_add(b_series, series_sub(series_mul_by_t(lowered), a_series));
    const R from_regrouped = extract_coeff(regrouped, m);

    // Every link stands for (m+1)[t^m]A - [t^m]B with m[t^m]A obtained a
    // different way; the last two are the direct extraction and the target.
    return {from_derivative + a - b,
            from_quotient + a - b,
            shifted + a - b,
            from_regrouped + a - b,
            a * Rational(m + 1) - b,
            extract_coeff(series_mul_by_t(lowered), m)};
}

// (x+(m+1)z)[t^m]A - z[t^m]B = (x-m) C(x,m), through
// x[t^m]A + z[t^m] x t(1+t)^(x-1)/D = x[t^m](1+t)^(x-1) = x C(x-1,m).
template <Algebra R>
Chain<R> final_combination_chain(unsigned m, const Vars<R> &v)
{
    const R a = extract_coeff(single_denominator_series(m, v), m);
    const R b = extract_coeff(squared_denominator_series(m, v), m);
    const R lowered_t = extract_coeff(series_mul_by_t(lowered_series(m, v)), m);
    const R x_minus_one = v.x - one_like(v.x);
    return {(v.x + detail::scalar(v.x, m + 1) * v.z) * a - v.z * b, v.x * a + v.z * lowered_t,
            v.x * extract_coeff(binomial_power(x_minus_one, m), m), v.x * binom(x_minus_one, m),
            boundary_term(m, v)};
}

// Lambert/Gould series after the substitution alpha = y, beta = z+1,
// x = 1/(1+t):
//   sum_n C(alpha + n(z+1), n) (-t(1+t)^z)^n = (1+t)^(-alpha) / (1+(z+1)t)
template <Algebra R>
struct GouldParams {
    R alpha_exponent;
    R z_poly;
    std::size_t order;
};

template <Algebra R>
TruncSeries<R> gould_lhs(const GouldParams<R> &p)
{
    const R one = one_like(p.z_poly);
    const R beta = p.z_poly + one;
    auto acc = TruncSeries<R>::constant(zero_like(one), p.order);
    for (std::size_t n = 0; n <= p.order; ++n) {
        const R nr = lift(one, Rational(n));
        auto term = series_scale(binomial_power(nr * p.z_poly, p.order),
                                 binom(p.alpha_exponent + nr * beta, static_cast<unsigned>(n)) * sign_power(n));
        for (std::size_t k = 0; k < n; ++k) {
            term = series_mul_by_t(term);
        }
        acc = series_add(acc, term);
    }
    return acc;
}

template <Algebra R>
TruncSeries<R> gould_rhs(const GouldParams<R> &p)
{
    const R one = one_like(p.z_poly);
    const auto d = TruncSeries<R>::linear(one, p.z_poly + one, p.order);
    return series_mul(binomial_power(-p.alpha_exponent, p.order), series_recip(d));
}

// Per-coefficient differences lhs - rhs for t^0..t^order.
template <Algebra R>
std::vector<R> check_gould(const GouldParams<R> &p)
{
    const auto lhs = gould_lhs(p);
    const auto rhs = gould_rhs(p);
    std::vector<R> out;
    out.reserve(p.order + 1);
    for (std::size_t k = 0; k <= p.order; ++k) {
        out.push_back(lhs[k] - rhs[k]);
    }
    return out;
}

template <Algebra R>
Chain<R> gould_chain(unsigned m, const Vars<R> &v)
{
    GouldParams<R> p{v.y, v.z, m};
    return {extract_coeff(gould_lhs(p), m), extract_coeff(gould_rhs(p), m)};
}

// ---------------------------------------------------------------------------
// Symbolic differences; each is the zero polynomial when the identity holds.

inline MultiPoly chain_gap(const Chain<MultiPoly> &chain)
{
    return chain.front() - chain.back();
}

inline MultiPoly theorem_difference(unsigned m)
{
    auto v = symbolic_vars();
    return theorem_lhs(m, v) - theorem_rhs(m, v);
}

inline MultiPoly shifted_difference(unsigned m)
{
    auto v = symbolic_vars();
    return shifted_lhs(m, v) - shifted_rhs(m, v);
}

inline MultiPoly classic_difference(unsigned m)
{
    auto v = symbolic_vars();
    return classic_lhs(m, v) - classic_rhs(m, v);
}

inline MultiPoly classic_shifted_difference(unsigned m)
{
    auto v = symbolic_vars();
    return classic_shifted_lhs(m, v) - classic_shifted_rhs(m, v);
}

inline MultiPoly reflected_difference(unsigned m)
{
    auto v = symbolic_vars();
    return reflected_lhs(m, v) - reflected_rhs(m, v);
}

// Applies x -> -(m+1)z and then z -> -z to a polynomial in x, y, z.
inline MultiPoly reflect(unsigned m, const MultiPoly &p)
{
    auto v = symbolic_vars(p.ring());
    std::map<std::string, MultiPoly> to_z{{"x", v.z * Rational(-static_cast<long>(m) - 1)}};
    std::map<std::string, MultiPoly> flip{{"z", -v.z}};
    return poly_substitute(poly_substitute(p, to_z), flip);
}

} // namespace binid

#endif
