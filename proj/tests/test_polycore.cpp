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

#include "ccs/poly.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace ccs;
using ccs::testing::Gen;

namespace {

using P = Poly<CQuad>;
using B = BiPoly<CQuad>;
using V = HoloVec<CQuad>;

CQuad sq(long r) { return CQuad(QuadScalar::sqrt_of(Rational(r))); }

P poly(std::vector<CQuad> c) { return P(std::move(c)); }

// Bipoly from a list of (i, j, value).
B bip(std::initializer_list<std::tuple<int, int, CQuad>> terms)
{
    int r = 0, c = 0;
    for (const auto& [i, j, v] : terms) {
        r = std::max(r, i + 1);
        c = std::max(c, j + 1);
    }
    B b(r, c);
    for (const auto& [i, j, v] : terms) b.ref(i, j) += v;
    b.trim();
    return b;
}

B one_plus(int k) { return B::one_plus_zzbar_pow(k); }

}  // namespace

TEST(NormSq, Examples)
{
    V line{{poly({1}), poly({0, 1})}};
    EXPECT_EQ(norm_sq(line), one_plus(1));

    V veronese2{{poly({1}), poly({0, sq(2)}), poly({0, 0, 1})}};
    EXPECT_EQ(norm_sq(veronese2), one_plus(2));

    V mixed{{poly({1, 1}), poly({0, CQuad::i()})}};
    B expect = bip({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 2}});
    EXPECT_EQ(norm_sq(mixed), expect);
    Gen g(3);
    for (int k = 0; k < 5; ++k) {
        Complex z(g.integer(-9, 9) / 4.0, g.integer(-9, 9) / 4.0);
        Complex direct = std::norm(1.0 + z) + std::norm(Complex(0, 1) * z);
        EXPECT_NEAR(std::abs(norm_sq(mixed).eval_numeric(z) - direct), 0.0, 1e-12);
    }
}

TEST(Wedge, Examples)
{
    V e1{{poly({1}), P()}}, e2{{P(), poly({1})}};
    EXPECT_EQ(wedge(e1, e2), V{{poly({1})}});
    V sheared{{poly({1}), poly({0, 1})}};
    EXPECT_EQ(wedge(sheared, e2), V{{poly({1})}});

    V veronese2{{poly({1}), poly({0, sq(2)}), poly({0, 0, 1})}};
    V w = wedge(veronese2, dz(veronese2));
    V expect{{poly({sq(2)}), poly({0, 2}), poly({0, 0, sq(2)})}};
    EXPECT_EQ(w, expect);
    EXPECT_EQ(norm_sq(w), CQuad(2) * one_plus(2));
}

TEST(Wedge, DimensionMismatch)
{
    V a{{poly({1}), poly({1})}}, b{{poly({1})}};
    EXPECT_THROW(wedge(a, b), DimensionError);
}

TEST(Derivatives, Examples)
{
    EXPECT_EQ(dz(poly({0, 0, 0, 1})), poly({0, 0, 3}));
    EXPECT_EQ(dz_h(one_plus(1)), bip({{0, 1, 1}}));
    EXPECT_EQ(dzbar_h(dz_h(one_plus(2))), bip({{0, 0, 2}, {1, 1, 4}}));
}

TEST(LogLaplacian, Examples)
{
    auto l1 = log_laplacian(one_plus(1));
    EXPECT_EQ(l1, RatBiFunc<CQuad>(B::constant(1), one_plus(2)));
    for (int k = 1; k <= 5; ++k)
        EXPECT_EQ(log_laplacian(one_plus(k)), RatBiFunc<CQuad>(B::constant(k), one_plus(2)));
    // |F_1|^2 of the degree-2 Veronese curve.
    EXPECT_EQ(log_laplacian(CQuad(2) * one_plus(2)), RatBiFunc<CQuad>(B::constant(2), one_plus(2)));
}

TEST(LogLaplacian, ZeroIsAnError)
{
    EXPECT_THROW(log_laplacian(B()), std::domain_error);
}

TEST(Content, Examples)
{
    P zm1 = poly({-1, 1});
    V v{{zm1 * zm1, zm1 * poly({0, 1})}};
    auto [g, prim] = content_and_primitive(v);
    EXPECT_EQ(g, zm1);
    EXPECT_EQ(prim, (V{{zm1, poly({0, 1})}}));

    V coprime{{poly({1}), poly({0, 1})}};
    EXPECT_EQ(content_and_primitive(coprime).first, poly({1}));

    // Planar flex: F_2 of (1, z, z^4).
    V f{{poly({1}), poly({0, 1}), poly({0, 0, 0, 0, 1})}};
    V f1 = dz(f), f2 = dz(f1);
    V F2 = wedge_k(wedge(f, f1), 2, f2);
    ASSERT_EQ(F2.size(), 1u);
    EXPECT_EQ(F2[0], poly({0, 0, 12}));
    EXPECT_EQ(content_and_primitive(F2).first, poly({0, 0, 1}));
}

TEST(Content, ZeroVectorIsAnError)
{
    EXPECT_THROW(content_and_primitive(V{{P(), P()}}), std::domain_error);
}

TEST(Proportional, Examples)
{
    auto lam = is_proportional(CQuad(2) * one_plus(1), one_plus(1));
    ASSERT_TRUE(lam);
    EXPECT_EQ(*lam, CQuad(2));
    EXPECT_FALSE(is_proportional(one_plus(1), bip({{0, 0, 1}, {1, 1, 2}})));
    EXPECT_THROW(is_proportional(one_plus(1), B()), std::domain_error);
}

TEST(Proportional, NumericVariant)
{
    BiPoly<Complex> p = one_plus(3).map<Complex>([](const CQuad& x) { return x.to_complex() * 2.5; });
    BiPoly<Complex> q = one_plus(3).map<Complex>([](const CQuad& x) { return x.to_complex(); });
    auto lam = is_near_proportional(p, q);
    ASSERT_TRUE(lam);
    EXPECT_NEAR(lam->real(), 2.5, 1e-14);
    p.ref(1, 1) += 1e-6;
    EXPECT_FALSE(is_near_proportional(p, q));
}

TEST(Gcd, MonicEuclid)
{
    P a = poly({-1, 1}) * poly({2, 1}) * poly({CQuad::i(), 1});
    P b = poly({2, 1}) * poly({CQuad::i(), 1}) * poly({5, 0, 1});
    EXPECT_EQ(gcd(a, b), poly({2, 1}) * poly({CQuad::i(), 1}));
    EXPECT_EQ(gcd(P(), P()), P());
    // Radical coefficients: (z - sqrt2)(z + sqrt3) and (z - sqrt2)^2.
    P r = poly({-sq(2), 1});
    EXPECT_EQ(gcd(r * poly({sq(3), 1}), r * r), r);
}

TEST(PolycoreProperties, HermitianClosure)
{
    Gen g(21);
    for (int it = 0; it < 100; ++it) {
        V v = g.gauss_vec(static_cast<int>(g.integer(1, 4)), 3);
        B n = norm_sq(v);
        ASSERT_TRUE(n.is_hermitian());
        Complex z(g.integer(-20, 20) / 7.0, g.integer(-20, 20) / 7.0);
        Complex val = n.eval_numeric(z);
        ASSERT_NEAR(val.imag(), 0.0, 1e-9 * std::max(1.0, std::abs(val)));
        ASSERT_GE(val.real(), -1e-9);
    }
}

TEST(PolycoreProperties, MixedPartialsCommute)
{
    Gen g(22);
    for (int it = 0; it < 100; ++it) {
        B p = g.gauss_bipoly(4);
        ASSERT_EQ(dzbar_h(dz_h(p)), dz_h(dzbar_h(p)));
        ASSERT_EQ(dz_h(p).conj(), dzbar_h(p.conj()));
    }
}

TEST(PolycoreProperties, LagrangeIdentity)
{
    Gen g(23);
    for (int it = 0; it < 100; ++it) {
        int n = static_cast<int>(g.integer(2, 4));
        V v = g.gauss_vec(n, 2), w = g.gauss_vec(n, 2);
        B ip = inner(v, w);
        ASSERT_EQ(norm_sq(wedge(v, w)), norm_sq(v) * norm_sq(w) - ip * ip.conj());
    }
}

TEST(PolycoreProperties, LogLaplacianIsAdditive)
{
    Gen g(24);
    for (int it = 0; it < 60; ++it) {
        B p = norm_sq(g.gauss_vec(2, 2)), q = norm_sq(g.gauss_vec(2, 2));
        if (p.is_zero() || q.is_zero()) continue;
        ASSERT_EQ(log_laplacian(p * q), log_laplacian(p) + log_laplacian(q));
    }
}

TEST(PolycoreProperties, ContentReassembles)
{
    Gen g(25);
    for (int it = 0; it < 100; ++it) {
        P common = g.gauss_poly(2);
        if (common.is_zero()) continue;
        V v = g.gauss_vec(3, 2);
        if (v.is_zero()) continue;
        for (auto& p : v.e) p = p * common;
        auto [h, prim] = content_and_primitive(v);
        for (std::size_t a = 0; a < v.size(); ++a) ASSERT_EQ(h * prim[a], v[a]);
        auto inner_content = content_and_primitive(prim).first;
        ASSERT_EQ(inner_content.degree(), 0);
    }
}
