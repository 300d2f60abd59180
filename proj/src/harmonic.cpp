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

#include "ccs/harmonic.hpp"

namespace ccs {

HoloVec<CQuad> veronese(int m)
{
    if (m <= 0) throw std::invalid_argument("veronese: degree must be positive");
    HoloVec<CQuad> v;
    for (int p = 0; p <= m; ++p)
        v.e.push_back(Poly<CQuad>::monomial(CQuad(QuadScalar::sqrt_of(Rational(binomial(m, p)))), p));
    return v;
}

VeroneseInvariants veronese_invariants(int m, int i)
{
    if (m <= 0 || i < 0 || i > m) throw std::out_of_range("veronese_invariants: index out of range");
    Rational denom = m + 2 * i * (m - i);
    return {Rational(4) / denom, Rational(m - 2 * i) / denom};
}

}  // namespace ccs
