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

namespace ccs {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) throw JsonError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw JsonError(std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& array_field(const Json& j, const char* key)
{
    const Json& a = field(j, key);
    if (!a.is_array()) throw JsonError(std::string("field \"") + key + "\" must be an array");
    return a;
}

Rational rational_from(const Json& j)
{
    if (!j.is_string()) throw JsonError("exact rationals are encoded as \"p/q\" strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw JsonError(e.what());
    }
}

template <class T>
T get_as(const Json& j, const char* key)
{
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw JsonError(std::string("field \"") + key + "\": " + e.what());
    }
}

Json optional_or_null(bool present, Json value) { return present ? std::move(value) : Json(nullptr); }

double sample(const CRatFunc& f, double x)
{
    return f.eval_numeric({x, 0.0}).real();
}

}  // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonError(e.what());
    }
}

Json quad_to_json(const QuadScalar& x)
{
    Json terms = Json::array();
    for (const auto& [r, q] : x.terms()) terms.push_back({{"coeff", to_string(q)}, {"radicand", r.get_str()}});
    return {{"terms", terms}};
}

QuadScalar quad_from_json(const Json& j)
{
    QuadScalar out;
    for (const Json& t : array_field(j, "terms")) {
        Rational coeff = rational_from(field(t, "coeff"));
        Rational radicand = rational_from(field(t, "radicand"));
        if (radicand.get_den() != 1 || sgn(radicand) <= 0)
            throw JsonError("radicand must be a positive integer string");
        out += QuadScalar(coeff) * QuadScalar::sqrt_of(radicand);
    }
    return out;
}

Json cquad_to_json(const CQuad& x)
{
    return {{"re", quad_to_json(x.re())}, {"im", quad_to_json(x.im())}};
}

CQuad cquad_from_json(const Json& j)
{
    QuadScalar re = quad_from_json(field(j, "re"));
    QuadScalar im = j.contains("im") ? quad_from_json(j["im"]) : QuadScalar();
    return CQuad(re, im);
}

Json cpoly_to_json(const CPoly& p)
{
    Json a = Json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(cquad_to_json(p.coeff(i)));
    return a;
}

CPoly cpoly_from_json(const Json& j)
{
    if (!j.is_array()) throw JsonError("a polynomial is an array of coefficients");
    std::vector<CQuad> c;
    for (const Json& x : j) c.push_back(cquad_from_json(x));
    return CPoly(std::move(c));
}

Json bipoly_to_json(const CBiPoly& b)
{
    Json rows = Json::array();
    for (int i = 0; i < b.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < b.cols(); ++k) row.push_back(cquad_to_json(b.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CBiPoly bipoly_from_json(const Json& j)
{
    if (!j.is_array()) throw JsonError("a bivariate polynomial is an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    CBiPoly b(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw JsonError("ragged coefficient matrix");
        for (int k = 0; k < cols; ++k) b.ref(i, k) = cquad_from_json(j[i][k]);
    }
    b.trim();
    return b;
}

Json ratfunc_to_json(const CRatFunc& f)
{
    return {{"num", bipoly_to_json(f.num())}, {"den", bipoly_to_json(f.den())}};
}

CRatFunc ratfunc_from_json(const Json& j)
{
    CBiPoly den = bipoly_from_json(field(j, "den"));
    if (den.is_zero()) throw JsonError("zero denominator");
    return CRatFunc(bipoly_from_json(field(j, "num")), den);
}

Json family_to_json(const FamilyParams& fp)
{
    Json C = Json::array();
    for (int i = 0; i < fp.C.size(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < fp.C.size(); ++k) row.push_back(to_string(fp.C(i, k)));
        C.push_back(std::move(row));
    }
    return {{"d", fp.d},
            {"t", to_string(fp.t)},
            {"sign", fp.sign},
            {"C", C},
            {"alpha_sq", to_string(fp.alpha_sq)},
            {"c", to_string(fp.c)},
            {"c0", quad_to_json(fp.c0)},
            {"D", to_string(fp.D)},
            {"valid", fp.valid},
            {"rank", fp.rank},
            {"q", fp.q()},
            {"h", cpoly_to_json(fp.h)}};
}

FamilyParams family_from_json(const Json& j)
{
    int d = get_as<int>(j, "d");
    Rational t = rational_from(field(j, "t"));
    int sign = j.contains("sign") ? get_as<int>(j, "sign") : 1;
    FamilyParams fp;
    try {
        fp = build_family(d, t, sign);
    } catch (const std::invalid_argument& e) {
        throw JsonError(std::string("meta: ") + e.what());
    }
    if (j.contains("C")) {
        const Json& C = j["C"];
        if (!C.is_array() || static_cast<int>(C.size()) != fp.C.size())
            throw JsonError("meta: C has the wrong size for d = " + std::to_string(d));
        for (int i = 0; i < fp.C.size(); ++i) {
            if (!C[i].is_array() || static_cast<int>(C[i].size()) != fp.C.size()) throw JsonError("meta: ragged C");
            for (int k = 0; k < fp.C.size(); ++k)
                if (rational_from(C[i][k]) != fp.C(i, k))
                    throw JsonError("meta: C does not match the family at d = " + std::to_string(d) +
                                    ", t = " + to_string(t));
        }
    }
    return fp;
}

Json curve_to_json(const GrassCurve& c)
{
    Json v1 = Json::array(), v2 = Json::array();
    for (const auto& p : c.v1.e) v1.push_back(cpoly_to_json(p));
    for (const auto& p : c.v2.e) v2.push_back(cpoly_to_json(p));
    Json out = {{"n", c.n}, {"v1", v1}, {"v2", v2}};
    if (c.meta) out["meta"] = family_to_json(*c.meta);
    return out;
}

GrassCurve curve_from_json(const Json& j)
{
    GrassCurve c;
    c.n = get_as<int>(j, "n");
    if (c.n < 2) throw JsonError("n must be at least 2");
    std::vector<CPoly> v1, v2;
    for (const Json& p : array_field(j, "v1")) v1.push_back(cpoly_from_json(p));
    for (const Json& p : array_field(j, "v2")) v2.push_back(cpoly_from_json(p));
    if (static_cast<int>(v1.size()) != c.n || static_cast<int>(v2.size()) != c.n)
        throw JsonError("v1 and v2 must have n entries");
    c.v1 = CVec(std::move(v1));
    c.v2 = CVec(std::move(v2));
    if (j.contains("meta") && !j["meta"].is_null()) c.meta = family_from_json(j["meta"]);
    return c;
}

Json report_to_json(const CurveReport& r)
{
    Json numeric = {{"plucker_c", r.plucker_c.to_double()}};
    numeric["K"] = r.K ? Json(r.K->get_d()) : Json(nullptr);
    numeric["S_value"] = r.S_value ? Json(r.S_value->to_double()) : Json(nullptr);
    if (r.S) numeric["S_at"] = {{"z=0", sample(*r.S, 0)}, {"z=1", sample(*r.S, 1)}};
    if (r.detA1_sq) numeric["detA1_sq_at"] = {{"z=0", sample(*r.detA1_sq, 0)}, {"z=1", sample(*r.detA1_sq, 1)}};

    Json out = {{"n", r.n},
                {"K", optional_or_null(r.K.has_value(), r.K ? to_string(*r.K) : "")},
                {"plucker_proportional", r.plucker_proportional},
                {"plucker_c", quad_to_json(r.plucker_c)},
                {"plucker_c_str", r.plucker_c.str()},
                {"full_in", r.full_in},
                {"deg", r.deg},
                {"unramified", optional_or_null(r.unramified.has_value(), r.unramified.value_or(false))},
                {"detA1_sq", optional_or_null(r.detA1_sq.has_value(), r.detA1_sq ? ratfunc_to_json(*r.detA1_sq) : Json())},
                {"detA1_nowhere_zero", r.detA1_nowhere_zero},
                {"S", optional_or_null(r.S.has_value(), r.S ? ratfunc_to_json(*r.S) : Json())},
                {"S_constant", r.S_constant},
                {"S_value", optional_or_null(r.S_value.has_value(), r.S_value ? quad_to_json(*r.S_value) : Json())},
                {"gauss_identity", optional_or_null(r.gauss_identity.has_value(), r.gauss_identity.value_or(false))},
                {"warnings", r.warnings},
                {"numeric", numeric}};
    return out;
}

CurveReport report_from_json(const Json& j)
{
    CurveReport r;
    r.n = get_as<int>(j, "n");
    if (!field(j, "K").is_null()) r.K = rational_from(j["K"]);
    r.plucker_proportional = get_as<bool>(j, "plucker_proportional");
    r.plucker_c = quad_from_json(field(j, "plucker_c"));
    r.full_in = get_as<int>(j, "full_in");
    r.deg = get_as<int>(j, "deg");
    if (!field(j, "unramified").is_null()) r.unramified = get_as<bool>(j, "unramified");
    if (!field(j, "detA1_sq").is_null()) r.detA1_sq = ratfunc_from_json(j["detA1_sq"]);
    r.detA1_nowhere_zero = get_as<bool>(j, "detA1_nowhere_zero");
    if (!field(j, "S").is_null()) r.S = ratfunc_from_json(j["S"]);
    r.S_constant = get_as<bool>(j, "S_constant");
    if (!field(j, "S_value").is_null()) r.S_value = quad_from_json(j["S_value"]);
    if (!field(j, "gauss_identity").is_null()) r.gauss_identity = get_as<bool>(j, "gauss_identity");
    r.warnings = get_as<std::vector<std::string>>(j, "warnings");
    return r;
}

Json factorization_to_json(const SpectralFactorization& f)
{
    return {{"W", f.W},
            {"lambda_sq", f.lambda_sq},
            {"D", f.D},
            {"q", f.q},
            {"residual", f.residual},
            {"orthogonality", f.orthogonality}};
}

}  // namespace ccs
