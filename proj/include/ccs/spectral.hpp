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

#ifndef CCS_SPECTRAL_HPP
#define CCS_SPECTRAL_HPP

#include "ccs/algebraic.hpp"
#include "ccs/family.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ccs {

using RealMatrix = std::vector<std::vector<double>>;

class NoSingularPoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// m_ij = c_ij / sqrt(C(d,i) C(d,j)), the Gram matrix in the basis of the
/// unit-norm Veronese monomials.
struct ScaledGram {
    int d = 0;
    Rational t;
    SymRatMatrix C;
    RealMatrix M;
};

ScaledGram scaled_gram(const FamilyParams& fp);

/// The same matrix with exact radical entries.
Matrix<QuadScalar> scaled_gram_exact(const SymRatMatrix& C);

struct SpectralFactorization {
    RealMatrix W;                   // columns are eigenvectors
    std::vector<double> lambda_sq;  // eigenvalues, descending
    std::vector<double> D;          // sqrt(max(lambda_sq, 0))
    int q = 0;                      // eigenvalues forced to zero
    double residual = 0;            // max |M - W diag(lambda_sq) W^T|
    double orthogonality = 0;       // max |W^T W - I|
};

/// Cyclic Jacobi.  When q >= 0 the q eigenvalues of smallest magnitude are
/// set to zero; they must lie below gap_tol * ||M||.
SpectralFactorization jacobi_eigen(const RealMatrix& M, double tol = 1e-14, int q = -1, double gap_tol = 1e-8);

/// Eigendecomposition of the scaled Gram matrix with q from the exact rank.
SpectralFactorization factorize(const FamilyParams& fp);

/// Components lambda_k sum_i W_ik sqrt(C(d,i)) z^i for the nonzero
/// eigenvalues.  The result is checked against sum c_ij z^i zbar^j on a
/// 7 x 7 grid in |z| <= 2.
HoloVec<Complex> reconstruct_section(const FamilyParams& fp, const SpectralFactorization& fact);

/// Exact section with |f|^2 = sum c_ij z^i zbar^j from the pivoted LDL^T
/// of C: one component per positive pivot.  Requires a valid family.
HoloVec<CQuad> exact_section(const FamilyParams& fp);

/// det(c_ij) D^{d+1} as a polynomial in t.
QPoly det_numerator(int d);

/// Polynomial whose roots in (-1, 1) are exactly the t with det C(t) = 0:
/// the squarefree part of det_numerator with factors of D removed.
QPoly singular_polynomial(int d);

struct SingularT {
    AlgebraicReal root;
    bool exact = false;
    Rational value;  // the root when exact, else the interval midpoint
    int count = 0;   // number of singular points in the bracket
};

/// The smallest t in (lo, hi) with det C(t) = 0, refined to width.
SingularT find_singular_t(int d, const Rational& lo, const Rational& hi, const Rational& width);

/// Rank and validity of the family at an algebraic parameter.
struct AlgebraicFamilyInfo {
    int rank = 0;
    bool alpha_nonneg = false;
    bool psd = false;
    bool valid() const { return alpha_nonneg && psd; }
};
AlgebraicFamilyInfo family_at(int d, const AlgebraicReal& t);

/// Numerators of the closed-form lambda^2 over the common denominator D(t).
std::optional<std::vector<QPoly>> closed_form_lambda_sq_numerators(int d);
/// Closed-form eigenvalues (squared) of the scaled Gram matrix for d = 2, 3,
/// 4, listed to match closed_form_W.
std::optional<std::vector<Rational>> closed_form_lambda_sq(int d, const Rational& t);
std::optional<std::vector<QuadScalar>> closed_form_lambdas(int d, const Rational& t);
/// Orthogonal eigenvector matrix (columns) for d = 2, 3, 4.
std::optional<Matrix<QuadScalar>> closed_form_W(int d);

/// A rational t != 0 with a valid full-rank family, scanning t = +-k/m in
/// order of increasing m.
std::optional<Rational> nonempty_delta_witness(int d, int max_den = 64);

/// Exact analysis of whether some t in (-1, 1) gives nullity >= 2.
struct MultiplicityScan {
    int grid_points = 0;
    int min_rank = 0;                  // over the rational grid
    int max_root_nullity = 0;          // over the singular points in (-1, 1)
    bool pairwise_common_root = true;  // two closed-form lambda^2 share a root in (-1, 1)
    bool q2_possible() const { return max_root_nullity >= 2 || pairwise_common_root; }
};
MultiplicityScan multiplicity_two_scan(int d, const Rational& step);

}  // namespace ccs

#endif
