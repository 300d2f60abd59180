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

#include "ccs/json_io.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace ccs;
using ccs::testing::Gen;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Serialise to text and back, as the CLI does.
Json through_text(const Json& j) { return parse_json(j.dump()); }

}  // namespace

TEST(JsonScalar, QuadEncoding)
{
    QuadScalar x = QuadScalar(q(1, 2)) + QuadScalar(q(-3, 7)) * QuadScalar::sqrt_of(6);
    Json j = quad_to_json(x);
    ASSERT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j["terms"][0]["coeff"], "1/2");
    EXPECT_EQ(j["terms"][0]["radicand"], "1");
    EXPECT_EQ(j["terms"][1]["coeff"], "-3/7");
    EXPECT_EQ(j["terms"][1]["radicand"], "6");
    EXPECT_EQ(quad_to_json(QuadScalar()), Json({{"terms", Json::array()}}));
}

TEST(JsonScalar, RoundTrips)
{
    Gen g(81);
    for (int i = 0; i < 100; ++i) {
        CQuad x = g.cquad();
        EXPECT_EQ(cquad_from_json(through_text(cquad_to_json(x))), x);
        CPoly p = g.gauss_poly(5);
        EXPECT_EQ(cpoly_from_json(through_text(cpoly_to_json(p))), p);
        CBiPoly b = g.gauss_bipoly(3);
        EXPECT_EQ(bipoly_from_json(through_text(bipoly_to_json(b))), b);
    }
}

TEST(JsonScalar, NonCanonicalInputIsNormalised)
{
    // sqrt(8) written by hand comes back as 2 sqrt(2).
    Json j = {{"terms", {{{"coeff", "1"}, {"radicand", "8"}}}}};
    EXPECT_EQ(quad_from_json(j), QuadScalar(2) * QuadScalar::sqrt_of(2));
}

TEST(JsonScalar, MalformedInput)
{
    EXPECT_THROW(parse_json("{\"terms\": ["), JsonError);
    EXPECT_THROW(quad_from_json(Json::object()), JsonError);
    EXPECT_THROW(quad_from_json(Json({{"terms", {{{"coeff", "0.5"}, {"radicand", "2"}}}}})), JsonError);
    EXPECT_THROW(quad_from_json(Json({{"terms", {{{"coeff", 1}, {"radicand", "2"}}}}})), JsonError);
    EXPECT_THROW(quad_from_json(Json({{"terms", {{{"coeff", "1"}, {"radicand", "-2"}}}}})), JsonError);
    EXPECT_THROW(bipoly_from_json(Json::array({Json::array({cquad_to_json(CQuad(1))}), Json::array()})), JsonError);
}

TEST(JsonFamily, RoundTripAndConsistency)
{
    auto fp = build_family(2, q(-1, 2));
    Json j = through_text(family_to_json(fp));
    EXPECT_EQ(j["t"], "-1/2");
    EXPECT_EQ(j["c"], "27/26");
    EXPECT_EQ(j["C"][1][0], "5/13");
    EXPECT_EQ(j["q"], 0);
    auto back = family_from_json(j);
    EXPECT_EQ(back.C, fp.C);
    EXPECT_EQ(back.h, fp.h);
    EXPECT_EQ(back.c0, fp.c0);

    j["C"][1][0] = "1/2";
    EXPECT_THROW(family_from_json(j), JsonError);
    j["t"] = "2";
    EXPECT_THROW(family_from_json(j), JsonError);
}

TEST(JsonCurve, RoundTripKeepsReport)
{
    for (auto [d, t] : std::vector<std::pair<int, Rational>>{{2, q(-1, 2)}, {3, q(1, 3)}, {4, 0}}) {
        auto c = build_curve(build_family(d, t));
        Json j = through_text(curve_to_json(c));
        auto back = curve_from_json(j);
        EXPECT_EQ(back.n, c.n);
        EXPECT_EQ(back.v1, c.v1);
        EXPECT_EQ(back.v2, c.v2);
        ASSERT_TRUE(back.meta.has_value());
        auto r = curve_report(c);
        EXPECT_EQ(curve_report(back), r);
        EXPECT_EQ(report_from_json(through_text(report_to_json(r))), r);
    }
}

TEST(JsonCurve, WithoutMetadata)
{
    auto c = build_curve(build_family(2, q(-1, 2)));
    c.meta.reset();
    Json j = through_text(curve_to_json(c));
    EXPECT_FALSE(j.contains("meta"));
    auto r = curve_report(curve_from_json(j));
    Json rj = report_to_json(r);
    EXPECT_TRUE(rj["unramified"].is_null());
    EXPECT_EQ(rj["K"], "4/3");
    EXPECT_EQ(rj["full_in"], 5);
    EXPECT_EQ(report_from_json(through_text(rj)), r);
}

TEST(JsonCurve, MalformedCurves)
{
    auto c = build_curve(build_family(2, 0));
    Json j = curve_to_json(c);
    Json bad = j;
    bad["n"] = 6;
    EXPECT_THROW(curve_from_json(bad), JsonError);
    bad = j;
    bad.erase("v2");
    EXPECT_THROW(curve_from_json(bad), JsonError);
    bad = j;
    bad["n"] = "five";
    EXPECT_THROW(curve_from_json(bad), JsonError);
}

TEST(JsonFactorization, NumericFields)
{
    auto f = factorize(build_family(3, q(1, 3)));
    Json j = through_text(factorization_to_json(f));
    EXPECT_EQ(j["q"], 1);
    ASSERT_EQ(j["lambda_sq"].size(), 4u);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(j["lambda_sq"][k].get<double>(), f.lambda_sq[k]);
    EXPECT_EQ(j["W"][0][0].get<double>(), f.W[0][0]);
}
