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

#ifndef CCS_JSON_IO_HPP
#define CCS_JSON_IO_HPP

#include "ccs/curve.hpp"
#include "ccs/spectral.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace ccs {

using Json = nlohmann::json;

/// Structurally invalid or inconsistent JSON input.
class JsonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact scalars.  QuadScalar: {"terms": [{"coeff": "p/q", "radicand": "r"}]}
// with radicand 1 for the rational part.  CQuad: {"re": ..., "im": ...}.
Json quad_to_json(const QuadScalar& x);
QuadScalar quad_from_json(const Json& j);
Json cquad_to_json(const CQuad& x);
CQuad cquad_from_json(const Json& j);

/// CPoly: array of coefficients, constant term first.
Json cpoly_to_json(const CPoly& p);
CPoly cpoly_from_json(const Json& j);

/// Hermitian bivariate polynomial: row-major matrix, entry [i][j] is the
/// coefficient of z^i zbar^j.
Json bipoly_to_json(const CBiPoly& b);
CBiPoly bipoly_from_json(const Json& j);
Json ratfunc_to_json(const CRatFunc& f);
CRatFunc ratfunc_from_json(const Json& j);

/// {"d", "t": "p/q", "sign", "C": [["p/q", ...]], "alpha_sq", "c", "c0",
///  "D", "valid", "rank", "q", "h"}.  Reading rebuilds the family from
/// (d, t, sign) and rejects a C that does not match.
Json family_to_json(const FamilyParams& fp);
FamilyParams family_from_json(const Json& j);

/// {"n", "v1": [CPoly...], "v2": [CPoly...], "meta"?}.
Json curve_to_json(const GrassCurve& c);
GrassCurve curve_from_json(const Json& j);

/// Exact fields as strings or exact encodings plus a "numeric" block of
/// doubles for quick inspection.
Json report_to_json(const CurveReport& r);
CurveReport report_from_json(const Json& j);

/// W, lambda_sq and D as doubles (17 significant digits), q as an integer.
Json factorization_to_json(const SpectralFactorization& f);

/// Parses text, mapping parser errors to JsonError.
Json parse_json(const std::string& text);

}  // namespace ccs

#endif
