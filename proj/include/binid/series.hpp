#ifndef BINID_SERIES_HPP
#define BINID_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <binid/algebra.hpp>
#include <binid/rational.hpp>

namespace binid
{

// Power series in t truncated at a fixed order: coefficients of t^0..t^order
// are stored densely, nothing beyond the order is known. Binary operations
// return the smaller of the two operand orders.
template <Algebra R>
class TruncSeries
{
public:
    explicit TruncSeries(std::vector<R> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw std::invalid_argument("a truncated series needs at least one coefficient");
        }
    }

    static TruncSeries constant(const R &c, std::size_t order)
    {
        std::vector<R> coeffs(order + 1, zero_like(c));
        coeffs[0] = c;
        return TruncSeries(std::move(coeffs));
    }

    // c0 + c1*t at the given order.
    static TruncSeries linear(const R &c0, const R &c1, std::size_t order)
    {
        auto s = constant(c0, order);
        if (order >= 1) {
            s.m_coeffs[1] = c1;
        }
        return s;
    }

    std::size_t order() const { return m_coeffs.size() - 1; }
    const std::vector<R> &coeffs() const { return m_coeffs; }
    const R &operator[](std::size_t k) const { return m_coeffs.at(k); }

    TruncSeries truncate(std::size_t order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("cannot raise the truncation order");
        }
        return TruncSeries(std::vector<R>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    friend bool operator==(const TruncSeries &a, const TruncSeries &b) { return a.m_coeffs == b.m_coeffs; }

private:
    std::vector<R> m_coeffs;
};

template <Algebra R>
TruncSeries<R> series_add(const TruncSeries<R> &f, const TruncSeries<R> &g)
{
    const auto order = std::min(f.order(), g.order());
    std::vector<R> out;
    out.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        out.push_back(f[k] + g[k]);
    }
    return TruncSeries<R>(std::move(out));
}

template <Algebra R>
TruncSeries<R> series_sub(const TruncSeries<R> &f, const TruncSeries<R> &g)
{
    const auto order = std::min(f.order(), g.order());
    std::vector<R> out;
    out.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        out.push_back(f[k] - g[k]);
    }
    return TruncSeries<R>(std::move(out));
}

// Truncated Cauchy product.
template <Algebra R>
TruncSeries<R> series_mul(const TruncSeries<R> &f, const TruncSeries<R> &g)
{
    const auto order = std::min(f.order(), g.order());
    std::vector<R> out;
    out.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        R acc = f[0] * g[k];
        for (std::size_t i = 1; i <= k; ++i) {
            acc = acc + f[i] * g[k - i];
        }
        out.push_back(std::move(acc));
    }
    return TruncSeries<R>(std::move(out));
}

// Multiplicative inverse. The constant term must be a nonzero rational.
template <Algebra R>
TruncSeries<R> series_recip(const TruncSeries<R> &f)
{
    auto c0 = as_constant(f[0]);
    if (!c0 || c0->is_zero()) {
        throw std::domain_error("non-invertible leading coefficient");
    }
    const Rational inv = Rational(1) / *c0;
    std::vector<R> out;
    out.reserve(f.order() + 1);
    out.push_back(lift(f[0], inv));
    for (std::size_t k = 1; k <= f.order(); ++k) {
        R acc = f[1] * out[k - 1];
        for (std::size_t j = 2; j <= k; ++j) {
            acc = acc + f[j] * out[k - j];
        }
        out.push_back(acc * (-inv));
    }
    return TruncSeries<R>(std::move(out));
}

// (1+t)^exponent, coefficient k being binom(exponent, k).
template <Algebra R>
TruncSeries<R> binomial_power(const R &exponent, std::size_t order)
{
    std::vector<R> out;
    out.reserve(order + 1);
    out.push_back(one_like(exponent));
    for (std::size_t k = 0; k < order; ++k) {
        // C(a, k+1) = C(a, k) * (a - k) / (k + 1)
        out.push_back(out.back() * (exponent - lift(exponent, Rational(k))) * (Rational(1) / Rational(k + 1)));
    }
    return TruncSeries<R>(std::move(out));
}

template <Algebra R>
TruncSeries<R> series_derivative(const TruncSeries<R> &f)
{
    if (f.order() == 0) {
        throw std::domain_error("cannot differentiate order-0 truncation");
    }
    std::vector<R> out;
    out.reserve(f.order());
    for (std::size_t k = 0; k < f.order(); ++k) {
        out.push_back(f[k + 1] * Rational(k + 1));
    }
    return TruncSeries<R>(std::move(out));
}

// [t^m] f
template <Algebra R>
R extract_coeff(const TruncSeries<R> &f, std::size_t m)
{
    if (m > f.order()) {
        throw std::out_of_range("coefficient beyond truncation order");
    }
    return f[m];
}

template <Algebra R>
TruncSeries<R> series_scale(const TruncSeries<R> &f, const R &p)
{
    std::vector<R> out;
    out.reserve(f.order() + 1);
    for (const auto &c : f.coeffs()) {
        out.push_back(p * c);
    }
    return TruncSeries<R>(std::move(out));
}

// t * f at the same order; the top coefficient of f falls off.
template <Algebra R>
TruncSeries<R> series_mul_by_t(const TruncSeries<R> &f)
{
    std::vector<R> out;
    out.reserve(f.order() + 1);
    out.push_back(zero_like(f[0]));
    for (std::size_t k = 0; k < f.order(); ++k) {
        out.push_back(f[k]);
    }
    return TruncSeries<R>(std::move(out));
}

} // namespace binid

#endif
