#include <limits>
#include <map>
#include <numeric>
#include <string>

#include <gtest/gtest.h>

#include <binid/multipoly.hpp>
#include <binid/rational.hpp>

#include "support/generators.hpp"
#include "support/properties.hpp"

using namespace binid;
using binid::testing::Gen;

namespace
{

RingPtr xyz()
{
    return Ring::xyz();
}

MultiPoly X()
{
    return MultiPoly::variable(xyz(), "x");
}
MultiPoly Y()
{
    return MultiPoly::variable(xyz(), "y");
}
MultiPoly Z()
{
    return MultiPoly::variable(xyz(), "z");
}
MultiPoly K(long v)
{
    return MultiPoly::constant(xyz(), Rational(v));
}
MultiPoly Q(long p, long q)
{
    return MultiPoly::constant(xyz(), Rational(mpz_class(p), mpz_class(q)));
}

MultiPoly from_golden(const std::vector<std::pair<Monomial, std::string>> &terms)
{
    std::vector<std::pair<Monomial, Rational>> t;
    for (const auto &[m, c] : terms) {
        t.emplace_back(m, Rational::parse(c));
    }
    return MultiPoly::from_terms(xyz(), t);
}

} // namespace

// --- Rational ---------------------------------------------------------------

TEST(Rational, NormalizesOnConstruction)
{
    Rational q(mpz_class(6), mpz_class(-4));
    EXPECT_EQ(q.numerator(), -3);
    EXPECT_EQ(q.denominator(), 2);
    EXPECT_EQ(Rational(mpz_class(0), mpz_class(-7)).denominator(), 1);
    EXPECT_EQ(Rational::parse("10/-4").to_string(), "-5/2");
    EXPECT_EQ(Rational::parse("+3").to_string(), "3");
}

TEST(Rational, RejectsZeroDenominatorAndMalformedText)
{
    EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, CanonicalFormMatchesMachineIntegerOracle)
{
    Gen g(7);
    for (int i = 0; i < 2000; ++i) {
        long a = g.integer(-1000, 1000), b = g.integer(1, 1000);
        long c = g.integer(-1000, 1000), d = g.integer(1, 1000);
        Rational s = Rational(mpz_class(a), mpz_class(b)) + Rational(mpz_class(c), mpz_class(d));
        long num = a * d + c * b;
        long den = b * d;
        long gcd = std::gcd(num, den);
        ASSERT_EQ(s.numerator(), num / gcd);
        ASSERT_EQ(s.denominator(), den / gcd);
        ASSERT_GT(s.denominator(), 0);
    }
}

TEST(Rational, Int64Conversion)
{
    EXPECT_EQ(Rational(-12).to_int64(), -12);
    EXPECT_FALSE(Rational::parse("1/2").to_int64());
    EXPECT_FALSE(Rational::parse("100000000000000000000000").to_int64());
}

// --- poly_add / poly_mul ------------------------------------------------------

TEST(PolyAdd, WorkedExamples)
{
    EXPECT_TRUE(poly_add(X(), -X()).is_zero());
    EXPECT_EQ(poly_add(X() + Y(), Y()), X() + K(2) * Y());
    // (x^2 - x)/2 + (x^2 + x)/2 = x^2
    auto a = (X() * X() - X()) * Rational(mpz_class(1), mpz_class(2));
    auto b = (X() * X() + X()) * Rational(mpz_class(1), mpz_class(2));
    EXPECT_EQ(poly_add(a, b), from_golden({{{2, 0, 0}, "1"}}));
}

TEST(PolyMul, WorkedExamples)
{
    EXPECT_EQ(poly_mul(X() + K(1), X() - K(1)), X() * X() - K(1));
    EXPECT_TRUE(poly_mul(X() + Y() * Z(), MultiPoly(xyz())).is_zero());
    auto got = poly_mul(poly_mul(K(1) + Z(), K(1) - Z()), K(1) + Z());
    EXPECT_EQ(got, from_golden({{{0, 0, 0}, "1"}, {{0, 0, 1}, "1"}, {{0, 0, 2}, "-1"}, {{0, 0, 3}, "-1"}}));
}

TEST(PolyMul, DegreesAdd)
{
    Gen g(11);
    for (int i = 0; i < 200; ++i) {
        auto a = g.poly(xyz()), b = g.poly(xyz());
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        ASSERT_EQ((a * b).degree(), a.degree() + b.degree());
        ASSERT_LE((a + b).degree(), std::max(a.degree(), b.degree()));
    }
}

TEST(PolyRing, MismatchIsAnError)
{
    auto other = std::make_shared<const Ring>(std::vector<std::string>{"x", "y", "w"});
    auto w = MultiPoly::variable(other, "w");
    EXPECT_THROW(X() + w, std::invalid_argument);
    EXPECT_THROW(X() * w, std::invalid_argument);
    // Same alphabet under a different pointer is the same ring.
    auto same = std::make_shared<const Ring>(std::vector<std::string>{"x", "y", "z"});
    EXPECT_EQ(MultiPoly::variable(same, "x") + Y(), X() + Y());
}

TEST(PolyRing, DuplicateVariablesRejected)
{
    EXPECT_THROW(Ring({"x", "x"}), std::invalid_argument);
    EXPECT_THROW(MultiPoly::variable(xyz(), "q"), std::invalid_argument);
}

TEST(PolyRing, ExponentOverflowIsAnError)
{
    Monomial big{std::numeric_limits<Exponent>::max() - 1, 0, 0};
    auto p = MultiPoly::from_terms(xyz(), {{big, Rational(1)}});
    EXPECT_THROW(p * X() * X(), std::overflow_error);
}

TEST(PolyRing, ExtendRingKeepsPrefix)
{
    auto wide = std::make_shared<const Ring>(std::vector<std::string>{"x", "y", "z", "w"});
    auto p = (X() + Z()).extend_ring(wide);
    EXPECT_EQ(p, MultiPoly::variable(wide, "x") + MultiPoly::variable(wide, "z"));
    auto bad = std::make_shared<const Ring>(std::vector<std::string>{"y", "x", "z", "w"});
    EXPECT_THROW((X() + Z()).extend_ring(bad), std::invalid_argument);
}

// --- poly_eval ----------------------------------------------------------------

TEST(PolyEval, WorkedExamples)
{
    std::map<std::string, Rational> p1{{"x", Rational(1)}};
    EXPECT_EQ(poly_eval(X() * X() - K(1), p1), Rational(0));
    std::map<std::string, Rational> p2{{"x", Rational::parse("1/2")}, {"z", Rational::parse("1/3")}};
    EXPECT_EQ(poly_eval(X() + K(2) * Z(), p2), Rational::parse("7/6"));
    EXPECT_EQ(poly_eval(K(5), std::map<std::string, Rational>{}), Rational(5));
}

TEST(PolyEval, UnboundVariableIsAnError)
{
    std::map<std::string, Rational> p{{"x", Rational(1)}};
    EXPECT_THROW(poly_eval(X() + Y(), p), std::invalid_argument);
}

// --- binom_poly ---------------------------------------------------------------

TEST(BinomPoly, WorkedExamples)
{
    EXPECT_EQ(binom_poly(X(), 0), K(1));
    EXPECT_EQ(binom_poly(X(), 2), from_golden({{{2, 0, 0}, "1/2"}, {{1, 0, 0}, "-1/2"}}));
    EXPECT_EQ(binom_poly(K(5), 2), K(10));
    EXPECT_EQ(binom_poly(Y() + K(2), 1), Y() + K(2));
}

TEST(BinomPoly, DegreeIsExactlyNTimesDegree)
{
    Gen g(5);
    for (unsigned n = 0; n <= 6; ++n) {
        for (int i = 0; i < 20; ++i) {
            auto alpha = g.poly(xyz(), 3, 2);
            if (alpha.constant_value()) {
                continue;
            }
            ASSERT_EQ(binom_poly(alpha, n).degree(), n * alpha.degree());
        }
    }
}

TEST(BinomPoly, NegativeUpperArgument)
{
    // C(-y, 1) = -y, C(-1, n) = (-1)^n
    EXPECT_EQ(binom_poly(-Y(), 1), -Y());
    for (unsigned n = 0; n < 8; ++n) {
        EXPECT_EQ(binom_poly(K(-1), n), K(n % 2 == 0 ? 1 : -1));
    }
}

// --- poly_substitute ------------------------------------------------------------

TEST(PolySubstitute, WorkedExamples)
{
    std::map<std::string, MultiPoly> s1{{"x", K(-2) * Z()}};
    EXPECT_EQ(poly_substitute(X() + Z(), s1), -Z());

    // m = 1: x -> -(m+1)z = -2z
    EXPECT_EQ(poly_substitute(binom_poly(X(), 1), s1), K(-2) * Z());

    std::map<std::string, MultiPoly> flip{{"z", -Z()}};
    EXPECT_EQ(poly_substitute(poly_substitute(Z(), flip), flip), Z());
}

TEST(PolySubstitute, IdentityBindingsAndSimultaneity)
{
    Gen g(3);
    std::map<std::string, MultiPoly> id{{"x", X()}, {"y", Y()}, {"z", Z()}};
    for (int i = 0; i < 50; ++i) {
        auto a = g.poly(xyz());
        ASSERT_EQ(poly_substitute(a, id), a);
    }
    // Simultaneous swap, not sequential.
    std::map<std::string, MultiPoly> swap{{"x", Y()}, {"y", X()}};
    EXPECT_EQ(poly_substitute(X() * X() + K(3) * Y(), swap), Y() * Y() + K(3) * X());
}

TEST(PolySubstitute, CommutesWithEvaluation)
{
    Gen g(19);
    for (int i = 0; i < 100; ++i) {
        auto a = g.poly(xyz());
        auto img = g.poly(xyz(), 3, 2);
        std::map<std::string, MultiPoly> s{{"y", img}};
        std::map<std::string, Rational> p{{"x", g.rational()}, {"y", g.rational()}, {"z", g.rational()}};
        auto py = p;
        py["y"] = poly_eval(img, p);
        ASSERT_EQ(poly_eval(poly_substitute(a, s), p), poly_eval(a, py));
    }
}

// --- rendering --------------------------------------------------------------------

TEST(Render, GrlexWithExplicitCoefficients)
{
    EXPECT_EQ(to_string(binom_poly(X(), 2)), "(1/2)*x^2 + (-1/2)*x");
    EXPECT_EQ(to_string(MultiPoly(xyz())), "0");
    EXPECT_EQ(to_string(K(4) * Z() - K(2)), "4*z + (-2)");
    EXPECT_EQ(to_string(X() * Z() + Z() * Z() + X() * X() - Y()), "x^2 + x*z + z^2 + (-1)*y");
    EXPECT_EQ(to_string(Q(3, 4)), "(3/4)");
}

TEST(Render, LeadingTermIsFirstInGrlex)
{
    auto p = Z() * Z() + X() * Y() + X();
    auto lead = p.leading_term();
    ASSERT_TRUE(lead);
    EXPECT_EQ(render_monomial(*xyz(), lead->first), "x*y");
}

// --- properties ---------------------------------------------------------------------

TEST(ExactAlgebraProperties, RingLaws)
{
    auto r = binid::testing::ring_laws(300, 101);
    EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ExactAlgebraProperties, PascalRule)
{
    auto r = binid::testing::pascal_rule(300, 102);
    EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ExactAlgebraProperties, EvaluationHomomorphism)
{
    auto r = binid::testing::evaluation_homomorphism(300, 103);
    EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ExactAlgebraProperties, CanonicalCancellation)
{
    auto r = binid::testing::canonical_cancellation(300, 104);
    EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ExactAlgebraProperties, BinomialAtIntegers)
{
    auto r = binid::testing::binomial_at_integers(300, 105);
    EXPECT_TRUE(r.ok()) << r.first_failure;
}
