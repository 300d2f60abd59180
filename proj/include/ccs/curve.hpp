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

#ifndef CCS_CURVE_HPP
#define CCS_CURVE_HPP

#include "ccs/family.hpp"
#include "ccs/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccs {

class MissingMetadata : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonConstantCurvature : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using CPoly = Poly<CQuad>;
using CVec = HoloVec<CQuad>;
using CBiPoly = BiPoly<CQuad>;
using CRatFunc = RatBiFunc<CQuad>;

/// A holomorphic curve in G(2, n) given as the span of two polynomial
/// sections, optionally with the family parameters it was built from.
struct GrassCurve {
    int n = 0;
    CVec v1, v2;
    std::optional<FamilyParams> meta;
};

/// (sqrt((1-t)/2) (1 - z), sqrt((1+t)/2) (1 + z)), whose squared norm is
/// 1 + t z + t zbar + z zbar.
CVec f01_section(const Rational& t);

/// span{f01 + 0, h f01' + c0 f} with f the exact section of the family in
/// the last n-2 coordinates.  n defaults to rank(C) + 2; a larger n pads
/// with zero coordinates.
GrassCurve build_curve(const FamilyParams& fp, std::optional<int> n = std::nullopt);

/// Applies a unitary U (given by rows) to both spanning vectors.
GrassCurve apply_unitary(const GrassCurve& c, const Matrix<CQuad>& U);

/// |v1 ^ v2|^2 by the Lagrange identity.
CBiPoly plucker_norm_sq(const GrassCurve& c);

struct CurvatureResult {
    std::optional<Rational> K;     // present iff the curvature is constant
    bool plucker_proportional = false;
    QuadScalar plucker_c;          // |w|^2 = plucker_c (1 + z zbar)^deg when proportional
    int deg = 0;                   // deg_z |w|^2
    std::optional<CRatFunc> K_func;  // general path only
};

/// Constant curvature is detected by exact proportionality of |w|^2 to
/// (1 + z zbar)^deg, giving K = 4/deg.  Otherwise K = -(2/lambda) dd log lambda
/// with lambda = dd log |w|^2 and exact constancy test.
CurvatureResult gauss_curvature(const GrassCurve& c);

/// Rank of the matrix of all coefficient vectors of the entries of v1, v2.
int linear_fullness(const GrassCurve& c);
/// The same rank decided numerically through the Hermitian Gram matrix.
int linear_fullness_numeric(const GrassCurve& c, double tol = 1e-9);

/// f primitive, its first osculating curve primitive, and no ramification
/// at infinity (delta_1 = 2 delta_0 - 2).
bool section_unramified(const CVec& f);

/// The same conditions read off the Gram matrix C of the section.
bool gram_unramified(const SymRatMatrix& C);

/// Unramified check for a family curve, using the section of the metadata.
bool unramified_check(const GrassCurve& c);

struct DetA1 {
    CRatFunc value;
    bool nowhere_zero = false;
};

/// |det A1|^2 = (1 - t^2) F1 / (c^2 (d+1)^2 (1 + z zbar)^{2d-2}) with
/// F1 = P P_{z zbar} - P_z P_zbar and P = sum c_ij z^i zbar^j.
DetA1 det_a1_sq(const GrassCurve& c);

/// |det A1|^2 from the curve alone:
/// |v1 ^ v2 ^ v1' ^ v2'|^2 |w|^4 / (|w|^2 dd|w|^2 - d|w|^2 dbar|w|^2)^2.
CRatFunc det_a1_sq_intrinsic(const GrassCurve& c);

struct SecondFF {
    CRatFunc S;
    bool constant = false;
    std::optional<QuadScalar> value;
};

/// S = 2 (4 - K - 8 |det A1|^2) with the intrinsic |det A1|^2.
SecondFF second_ff(const GrassCurve& c, const Rational& K);
/// Same, computing K first; throws NonConstantCurvature if K is not constant.
SecondFF second_ff(const GrassCurve& c);

struct CurveReport {
    int n = 0;
    std::optional<Rational> K;
    bool plucker_proportional = false;
    QuadScalar plucker_c;
    int full_in = 0;
    int deg = 0;
    std::optional<bool> unramified;
    std::optional<CRatFunc> detA1_sq;  // family formula, needs metadata
    bool detA1_nowhere_zero = false;
    std::optional<CRatFunc> S;
    bool S_constant = false;
    std::optional<QuadScalar> S_value;
    std::optional<bool> gauss_identity;  // K + S/2 + 8 |det A1|^2 = 4
    std::vector<std::string> warnings;

    friend bool operator==(const CurveReport& a, const CurveReport& b);
};

CurveReport curve_report(const GrassCurve& c);

}  // namespace ccs

#endif
