#ifndef BINID_TESTS_GENERATORS_HPP
#define BINID_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <binid/multipoly.hpp>
#include <binid/rational.hpp>
#include <binid/series.hpp>

namespace binid::testing
{

// Seeded generator of small random algebraic objects.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : m_rng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(m_rng); }

    Rational rational(long num_bound = 20, long den_bound = 6)
    {
        return Rational(mpz_class(integer(-num_bound, num_bound)), mpz_class(integer(1, den_bound)));
    }

    Rational nonzero_rational()
    {
        Rational q;
        do {
            q = rational();
        } while (q.is_zero());
        return q;
    }

    MultiPoly poly(const RingPtr &ring, int max_terms = 5, int max_degree = 3)
    {
        std::vector<std::pair<Monomial, Rational>> terms;
        const int count = static_cast<int>(integer(0, max_terms));
        for (int i = 0; i < count; ++i) {
            Monomial m(ring->size(), 0);
            for (auto &e : m) {
                e = static_cast<Exponent>(integer(0, max_degree));
            }
            terms.emplace_back(std::move(m), rational());
        }
        return MultiPoly::from_terms(ring, terms);
    }

    TruncSeries<MultiPoly> series(const RingPtr &ring, std::size_t order, int max_terms = 3, int max_degree = 2)
    {
        std::vector<MultiPoly> coeffs;
        for (std::size_t k = 0; k <= order; ++k) {
            coeffs.push_back(poly(ring, max_terms, max_degree));
        }
        return TruncSeries<MultiPoly>(std::move(coeffs));
    }

    // Series whose constant term is a nonzero rational.
    TruncSeries<MultiPoly> unit_series(const RingPtr &ring, std::size_t order)
    {
        auto s = series(ring, order);
        auto coeffs = s.coeffs();
        coeffs[0] = MultiPoly::constant(ring, nonzero_rational());
        return TruncSeries<MultiPoly>(std::move(coeffs));
    }

    std::size_t order(std::size_t lo, std::size_t hi)
    {
        return static_cast<std::size_t>(integer(static_cast<long>(lo), static_cast<long>(hi)));
    }

private:
    std::mt19937_64 m_rng;
};

} // namespace binid::testing

#endif
