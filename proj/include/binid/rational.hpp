#ifndef BINID_RATIONAL_HPP
#define BINID_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

namespace binid
{

// Exact fraction backed by GMP. Always kept canonical: gcd(|num|, den) == 1,
// den > 0, and zero is 0/1, so equality is structural.
class Rational
{
public:
    Rational() = default;
    template <std::integral T>
    Rational(T v)
    {
        if constexpr (std::is_signed_v<T>) {
            m_value = static_cast<long>(v);
        } else {
            m_value = static_cast<unsigned long>(v);
        }
    }

    Rational(const mpz_class &num, const mpz_class &den)
    {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        m_value = mpq_class(num, den);
        m_value.canonicalize();
    }

    explicit Rational(mpq_class v) : m_value(std::move(v))
    {
        m_value.canonicalize();
    }

    // Accepts "p" or "p/q" with optional leading sign on p.
    static Rational parse(std::string_view text)
    {
        auto slash = text.find('/');
        auto parse_int = [](std::string_view s) {
            if (s.empty()) {
                throw std::invalid_argument("malformed rational literal");
            }
            mpz_class z;
            std::string buf(s);
            if (buf[0] == '+') {
                buf.erase(0, 1);
            }
            if (z.set_str(buf, 10) != 0) {
                throw std::invalid_argument("malformed rational literal: " + std::string(s));
            }
            return z;
        };
        if (slash == std::string_view::npos) {
            return Rational(parse_int(text), mpz_class(1));
        }
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    mpz_class numerator() const { return m_value.get_num(); }
    mpz_class denominator() const { return m_value.get_den(); }
    const mpq_class &raw() const { return m_value; }

    bool is_zero() const { return sgn(m_value) == 0; }
    bool is_one() const { return m_value == 1; }
    bool is_integer() const { return m_value.get_den() == 1; }
    int sign() const { return sgn(m_value); }

    // Integer value if it fits in a signed 64-bit word.
    std::optional<std::int64_t> to_int64() const
    {
        if (!is_integer() || !m_value.get_num().fits_slong_p()) {
            return std::nullopt;
        }
        return static_cast<std::int64_t>(m_value.get_num().get_si());
    }

    std::string to_string() const { return m_value.get_str(10); }

    Rational operator-() const { return Rational(mpq_class(-m_value), raw_tag{}); }

    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("rational division by zero");
        }
        m_value /= o.m_value;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.to_string(); }

private:
    struct raw_tag {
    };
    // GMP arithmetic on canonical operands yields canonical results.
    Rational(mpq_class v, raw_tag) : m_value(std::move(v)) {}

    mpq_class m_value;
};

inline Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f, mpz_class(1));
}

} // namespace binid

#endif
