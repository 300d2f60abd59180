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

#ifndef CCS_EXACT_LINALG_HPP
#define CCS_EXACT_LINALG_HPP

#include "ccs/poly.hpp"
#include "ccs/rational.hpp"

#include <vector>

namespace ccs {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Symmetric rational matrix.
struct SymRatMatrix {
    Matrix<Rational> e;

    SymRatMatrix() = default;
    explicit SymRatMatrix(int n) : e(n, std::vector<Rational>(n, Rational(0))) {}
    explicit SymRatMatrix(Matrix<Rational> m) : e(std::move(m)) {}

    int size() const { return static_cast<int>(e.size()); }
    const Rational& operator()(int i, int j) const { return e[i][j]; }
    Rational& operator()(int i, int j) { return e[i][j]; }
    bool is_symmetric() const
    {
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < i; ++j)
                if (e[i][j] != e[j][i]) return false;
        return true;
    }
    friend bool operator==(const SymRatMatrix& a, const SymRatMatrix& b) { return a.e == b.e; }
};

/// A = sum_k pivots[k] * cols[k] cols[k]^T with positive pivots, when
/// psd is true.
template <class F>
struct LdlResult {
    bool psd = true;
    std::vector<F> pivots;
    std::vector<std::vector<F>> cols;
    std::vector<int> pivot_index;
    int rank() const { return static_cast<int>(pivots.size()); }
};

/// Exact symmetric LDL^T with diagonal pivoting, used as a positive
/// semidefiniteness test.  `sign` maps a field element to -1, 0 or +1;
/// `is_zero` is the exact zero test.
template <class F, class SignFn>
LdlResult<F> ldl_psd(Matrix<F> A, SignFn sign)
{
    int n = static_cast<int>(A.size());
    std::vector<bool> active(n, true);
    LdlResult<F> out;
    for (int step = 0; step < n; ++step) {
        int k = -1;
        bool negative = false;
        for (int i = 0; i < n; ++i) {
            if (!active[i]) continue;
            int s = sign(A[i][i]);
            if (s > 0 && k < 0) k = i;
            if (s < 0) negative = true;
        }
        if (negative) {
            out.psd = false;
            return out;
        }
        if (k < 0) {
            // Zero diagonal on the remaining block: PSD iff the block is zero.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (active[i] && active[j] && sign(A[i][j]) != 0) {
                        out.psd = false;
                        return out;
                    }
            return out;
        }
        F d = A[k][k];
        std::vector<F> col(n, F(0));
        for (int i = 0; i < n; ++i)
            if (active[i]) col[i] = A[i][k] / d;
        active[k] = false;
        for (int i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (int j = 0; j < n; ++j)
                if (active[j]) A[i][j] -= col[i] * A[k][j];
        }
        out.pivots.push_back(d);
        out.cols.push_back(std::move(col));
        out.pivot_index.push_back(k);
    }
    return out;
}

/// Rank by Gaussian elimination over an exact field with structural zero
/// test (FieldTraits<F>::is_zero).
template <class F>
int rank_by_elimination(Matrix<F> m)
{
    using Traits = FieldTraits<F>;
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (!Traits::is_zero(m[r][c])) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[rank], m[p]);
        F inv = Traits::inv(m[rank][c]);
        for (int r = rank + 1; r < rows; ++r) {
            if (Traits::is_zero(m[r][c])) continue;
            F k = m[r][c] * inv;
            for (int j = c; j < cols; ++j) m[r][j] -= k * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Rank of a rational matrix by fraction-free (Bareiss) elimination with
/// full pivoting over the integers, after clearing row denominators.
int exact_rank(const Matrix<Rational>& m);
inline int exact_rank(const SymRatMatrix& m) { return exact_rank(m.e); }

/// Determinant of a square matrix of polynomials by fraction-free
/// elimination with exact polynomial division.
Poly<Rational> bareiss_det(Matrix<Poly<Rational>> m);

}  // namespace ccs

#endif
