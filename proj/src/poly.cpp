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

namespace ccs {

std::vector<std::vector<int>> k_subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

std::optional<Complex> is_near_proportional(const BiPoly<Complex>& p, const BiPoly<Complex>& q, double tol)
{
    if (q.is_zero()) throw std::domain_error("is_near_proportional: reference polynomial is zero");
    int rows = std::max(p.rows(), q.rows()), cols = std::max(p.cols(), q.cols());
    double pmax = 0.0, qmax = 0.0;
    int bi = 0, bj = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            pmax = std::max(pmax, std::abs(p.at(i, j)));
            if (std::abs(q.at(i, j)) > qmax) {
                qmax = std::abs(q.at(i, j));
                bi = i;
                bj = j;
            }
        }
    Complex lambda = p.at(bi, bj) / q.at(bi, bj);
    double scale = std::max(pmax, 1.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (std::abs(p.at(i, j) - lambda * q.at(i, j)) > tol * scale) return std::nullopt;
    return lambda;
}

}  // namespace ccs
