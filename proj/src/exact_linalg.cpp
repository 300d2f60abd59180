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

#include "ccs/exact_linalg.hpp"

#include <utility>

namespace ccs {

int exact_rank(const Matrix<Rational>& m)
{
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    Matrix<Integer> a(rows, std::vector<Integer>(cols));
    for (int i = 0; i < rows; ++i) {
        Integer l = 1;
        for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (int j = 0; j < cols; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
    }
    Integer prev = 1;
    int rank = 0;
    for (int k = 0; k < std::min(rows, cols); ++k) {
        int pr = -1, pc = -1;
        for (int i = k; i < rows && pr < 0; ++i)
            for (int j = k; j < cols; ++j)
                if (a[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[k], a[pr]);
        for (auto& row : a) std::swap(row[k], row[pc]);
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j) {
                Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
        ++rank;
    }
    return rank;
}

Poly<Rational> bareiss_det(Matrix<Poly<Rational>> a)
{
    int n = static_cast<int>(a.size());
    if (n == 0) return Poly<Rational>::constant(Rational(1));
    Poly<Rational> prev = Poly<Rational>::constant(Rational(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    r = i;
                    break;
                }
            if (r < 0) return Poly<Rational>();
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = Poly<Rational>();
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace ccs
