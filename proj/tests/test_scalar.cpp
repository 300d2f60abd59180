/*
   Copyright 2025 The ccsphere Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ccs/quad.hpp"
#include "ccs/rational.hpp"
#include "ccs/squarefree.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ccs;
using ccs::testing::Gen;

namespace {

Rational R(long p, long q = 1) { return make_rational(p, q); }
QuadScalar sq(long r) { return QuadScalar::sqrt_of(Rational(r)); }

// Direct floating evaluation of sum coeff * sqrt(radicand).
double raw_value(const std::vector<std::pair<Rational, Rational>>& raw)
{
    double v = 0.0;
    for (const auto& [c, r] : raw) v += c.get_d() * std::sqrt(r.get_d());
    return v;
}

}  // namespace

TEST(Rational, ParsesFractions)
{
    EXPECT_EQ(parse_rational("-1/2"), R(-1, 2));
    EXPECT_EQ(parse_rational("6/4"), R(3, 2));
    EXPECT_EQ(parse_rational(" 7 "), R(7));
    EXPECT_EQ(to_string(R(-6, 4)), "-3/2");
}

TEST(Rational, RejectsFloatsAndJunk)
{
    EXPECT_THROW(parse_rational("0.5"), ParseError);
    EXPECT_THROW(parse_rational("1e3"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("1/-2"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, SimplestBetween)
{
    EXPECT_EQ(simplest_between(R(0), R(1, 2)), R(1, 3));
    EXPECT_EQ(simplest_between(R(3, 10), R(7, 20)), R(1, 3));
    EXPECT_EQ(simplest_between(R(-1), R(1)), R(0));
    EXPECT_EQ(simplest_between(R(1, 2), R(5, 2)), R(1));
    EXPECT_EQ(simplest_between(R(-7, 3), R(-2)), R(-9, 4));
    EXPECT_EQ(simplest_between(R(0), R(2, 3)), R(1, 2));
}

TEST(Rational, SimplestBetweenIsInsideAndMinimal)
{
    Gen g(7);
    for (int it = 0; it < 300; ++it) {
        Rational a = g.rational(50, 50), b = g.rational(50, 50);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        Rational s = simplest_between(a, b);
        ASSERT_TRUE(a < s && s < b);
        // Brute-force: no fraction with a smaller denominator lies inside.
        for (long den = 1; den < s.get_den().get_si(); ++den) {
            Rational lo = a * den;
            Integer k = floor_of(lo) + 1;
            ASSERT_FALSE(Rational(k) / den < b) << to_string(a) << " " << to_string(b);
        }
    }
}

TEST(Squarefree, SplitsSmallAndLarge)
{
    auto s = squarefree_split(Integer(72));
    EXPECT_EQ(s.outer, 6);
    EXPECT_EQ(s.core, 2);
    // Two primes above the trial-division bound force the Pollard path.
    Integer p("1000000007"), q("1000000009");
    auto big = squarefree_split(p * p * q * 12);
    EXPECT_EQ(big.outer, p * 2);
    EXPECT_EQ(big.core, q * 3);
    auto f = factorize(p * q * Integer("998244353"));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].first, Integer("998244353"));
}

TEST(QuadNormalize, Examples)
{
    EXPECT_EQ(quad_normalize({{R(1), R(8)}}), QuadScalar(R(2)) * sq(2));
    QuadScalar three = quad_normalize({{R(3), R(1)}});
    EXPECT_TRUE(three.is_rational());
    EXPECT_EQ(three.as_rational(), R(3));
    QuadScalar half_root = quad_normalize({{R(1), R(1, 2)}});
    EXPECT_EQ(half_root, QuadScalar(R(1, 2)) * sq(2));
    EXPECT_EQ(half_root * half_root, QuadScalar(R(1, 2)));
    EXPECT_TRUE(quad_normalize({{R(5), R(0)}}).is_zero());
}

TEST(QuadNormalize, NegativeRadicandIsAnError)
{
    try {
        quad_normalize({{R(1), R(-2)}});
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_STREQ(e.what(), "imaginary radical: route through CQuad");
    }
}

TEST(QuadMul, Examples)
{
    EXPECT_EQ(quad_mul(sq(2), sq(2)), QuadScalar(2));
    EXPECT_EQ(quad_mul(QuadScalar(1) + sq(2), QuadScalar(1) - sq(2)), QuadScalar(-1));
    QuadScalar r6 = quad_mul(sq(2), sq(3));
    EXPECT_EQ(r6, sq(6));
    EXPECT_NEAR(r6.to_double(), std::sqrt(2.0) * std::sqrt(3.0), 1e-12);
    EXPECT_EQ(sq(6) * sq(10), QuadScalar(2) * sq(15));
}

TEST(QuadSign, Examples)
{
    EXPECT_TRUE(quad_is_nonneg(QuadScalar()));
    EXPECT_FALSE(quad_is_nonneg(QuadScalar(1) - sq(2)));
    EXPECT_TRUE(quad_is_nonneg(QuadScalar(3) - QuadScalar(2) * sq(2)));
    // Continued-fraction convergents of sqrt 2 straddle it.
    EXPECT_EQ((QuadScalar(R(99, 70)) - sq(2)).sign(), 1);
    EXPECT_EQ((QuadScalar(R(41, 29)) - sq(2)).sign(), -1);
}

TEST(QuadSign, NearCancellationIsExact)
{
    // (sqrt2 - 1)^20 is about 2e-8 and positive; its conjugate expansion
    // a - b sqrt2 has huge a, b.
    QuadScalar x = sq(2) - QuadScalar(1), p = 1;
    for (int i = 0; i < 20; ++i) p *= x;
    EXPECT_EQ(p.sign(), 1);
    EXPECT_EQ((-p).sign(), -1);
    EXPECT_NEAR(p.to_double(), std::pow(std::sqrt(2.0) - 1, 20), 1e-20);
}

TEST(QuadInverse, RoundTrip)
{
    Gen g(11);
    for (int it = 0; it < 200; ++it) {
        QuadScalar x = g.quad(3);
        if (x.is_zero()) continue;
        ASSERT_EQ(x * x.inverse(), QuadScalar(1)) << x.str();
    }
}

TEST(QuadProperties, CommutativeAndAssociative)
{
    Gen g(1);
    for (int it = 0; it < 1000; ++it) {
        QuadScalar a = g.quad(), b = g.quad(), c = g.quad();
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(QuadProperties, RoundTripMatchesFloatingEvaluation)
{
    Gen g(2);
    for (int it = 0; it < 500; ++it) {
        std::vector<std::pair<Rational, Rational>> raw;
        int k = static_cast<int>(g.integer(1, 4));
        for (int i = 0; i < k; ++i) {
            Rational r = make_rational(g.integer(0, 200), g.integer(1, 30));
            raw.emplace_back(g.rational(), r);
        }
        QuadScalar q = quad_normalize(raw);
        double expect = raw_value(raw);
        ASSERT_NEAR(q.to_double(), expect, 1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST(QuadProperties, SquaresAreNonnegative)
{
    Gen g(3);
    for (int it = 0; it < 500; ++it) {
        QuadScalar x = g.quad(4);
        ASSERT_TRUE(quad_is_nonneg(x * x)) << x.str();
    }
}

TEST(QuadProperties, SignAgreesWithFloatingValue)
{
    Gen g(4);
    for (int it = 0; it < 500; ++it) {
        QuadScalar x = g.quad(3);
        double v = x.to_double();
        if (std::abs(v) < 1e-9) continue;
        ASSERT_EQ(x.sign(), v > 0 ? 1 : -1);
    }
}

TEST(RadicalBasisView, CoprimeIncreasing)
{
    auto b = radical_basis({sq(6), sq(10) + QuadScalar(1), sq(7)});
    std::vector<Integer> expect = {2, 3, 5, 7};
    EXPECT_EQ(b.radicands, expect);
}

TEST(CQuadArith, ConjugationAndInverse)
{
    Gen g(5);
    for (int it = 0; it < 200; ++it) {
        CQuad x = g.cquad();
        ASSERT_EQ(x.conj().conj(), x);
        ASSERT_TRUE(quad_is_nonneg(x.norm_sq()));
        if (x.is_zero()) continue;
        ASSERT_EQ(x * x.inverse(), CQuad(1));
    }
    EXPECT_EQ(CQuad::i() * CQuad::i(), CQuad(-1));
}

namespace {

Integer next_prime(const char* from)
{
    Integer p(from);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p;
}

}  // namespace

TEST(RadicalAtoms, HardCompositesStayCanonical)
{
    // Products of 25-digit primes are out of reach of the bounded Pollard
    // search, so p q enters the base as a single atom.
    Integer p = next_prime("1000000000000000000000000"), q = next_prime("2000000000000000000000000"),
            r = next_prime("3000000000000000000000000");
    auto pq = squarefree_split(p * q);
    EXPECT_EQ(pq.outer, 1);
    EXPECT_EQ(pq.core, p * q);
    QuadScalar a = QuadScalar::sqrt_of(Rational(p * q));
    EXPECT_EQ(a * a, QuadScalar(Rational(p * q)));
    EXPECT_EQ(squarefree_split(p * q * p * q * 18).outer, p * q * 3);

    // q r shares q with the atom, which splits it into p and q.
    QuadScalar b = QuadScalar::sqrt_of(Rational(q * r));
    EXPECT_EQ(a * b, QuadScalar(Rational(q)) * QuadScalar::sqrt_of(Rational(p * r)));
    EXPECT_EQ(radical_atoms(p * q), (std::vector<Integer>{p, q}));
    EXPECT_EQ((a + b).inverse() * (a + b), QuadScalar(1));
    EXPECT_GT((a - b).sign(), 0 - 2);  // decided without error
}

TEST(RadicalAtoms, ExposedSquareFactorIsReported)
{
    Integer p = next_prime("4000000000000000000000000"), q = next_prime("5000000000000000000000000"),
            s = next_prime("6000000000000000000000000");
    EXPECT_EQ(squarefree_split(q * q * p).core, q * q * p);
    EXPECT_THROW(squarefree_split(q * s), std::logic_error);
}
