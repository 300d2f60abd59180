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

#ifndef CCS_FAMILY_HPP
#define CCS_FAMILY_HPP

#include "ccs/exact_linalg.hpp"
#include "ccs/poly.hpp"
#include "ccs/quad.hpp"

#include <stdexcept>

namespace ccs {

class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// sum_{p=0}^{d} (-1)^p C(d+1,p) t^p as a polynomial in t.
Poly<Rational> D_denom_poly(int d);
Rational D_denom(int d, const Rational& t);

/// Numerator of c_ij as a polynomial in t (any 0 <= i, j <= d; the
/// symmetric cases are folded onto i >= j).
Poly<Rational> coeff_c_numerator(int d, int i, int j);

/// c_ij(t).  Throws InvalidParameter when the common denominator vanishes.
Rational coeff_c(int d, int i, int j, const Rational& t);

/// alpha_i alpha_j = (-1)^{d+1} C(d+1,i) C(d+1,j) t^{d+1} / D(t).
Rational coeff_alpha_product(int d, int i, int j, const Rational& t);

/// The coefficient matrix (c_ij) at t.
SymRatMatrix coeff_matrix(int d, const Rational& t);

struct FamilyParams {
    int d = 2;
    Rational t;
    int sign = 1;

    SymRatMatrix C;
    Rational alpha_sq;  // alpha_0^2; alpha_i = sign C(d+1,i) sqrt(alpha_sq)
    Rational c;         // 1 + alpha_0^2
    QuadScalar c0;      // sqrt(1 - t^2)
    Rational D;         // D_denom(d, t)
    bool valid = false;
    int rank = 0;       // exact rank of C
    Poly<CQuad> h;      // sign sqrt(alpha_sq) (1+z)^{d+1}; imaginary when alpha_sq < 0

    int q() const { return d + 1 - rank; }
};

/// Populates every derived field.  Invalid families (alpha_sq < 0 or C not
/// positive semidefinite) are returned with valid = false.
FamilyParams build_family(int d, const Rational& t, int sign = 1);

/// |f|^2 = 1 + t z + t zbar + z zbar.
BiPoly<Rational> f01_norm_sq(const Rational& t);

/// sum_ij c_ij z^i zbar^j.
BiPoly<Rational> section_norm_sq(const SymRatMatrix& C);

/// |h|^2 as the formal product alpha_i alpha_j z^i zbar^j.
BiPoly<Rational> h_norm_sq(const FamilyParams& fp);

struct IdentityCheck {
    bool holds = false;
    Rational c;
};

/// Expands |f01|^2 |f|^2 + |h|^2 and tests exact proportionality to
/// (1 + z zbar)^{d+1}.
IdentityCheck verify_identity_11(const FamilyParams& fp);

/// The linear recursions on c_ij, with c_ij = 0 outside 0..d.
bool verify_eq_42_43(int d, const Rational& t);
bool verify_eq_42_43(int d, const Rational& t, const SymRatMatrix& C);

}  // namespace ccs

#endif
