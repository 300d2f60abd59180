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

#ifndef CCS_FIELD_HPP
#define CCS_FIELD_HPP

#include "ccs/quad.hpp"
#include "ccs/rational.hpp"

#include <complex>

namespace ccs {

/// Uniform access to the coefficient fields used by the polynomial
/// templates: Rational, CQuad (exact) and std::complex<double> (numeric).
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational conj(const Rational& x) { return x; }
    static Rational inv(const Rational& x) { return Rational(1) / x; }
    static std::complex<double> to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
};

template <>
struct FieldTraits<CQuad> {
    static constexpr bool exact = true;
    static bool is_zero(const CQuad& x) { return x.is_zero(); }
    static CQuad conj(const CQuad& x) { return x.conj(); }
    static CQuad inv(const CQuad& x) { return x.inverse(); }
    static std::complex<double> to_complex(const CQuad& x) { return x.to_complex(); }
};

template <>
struct FieldTraits<std::complex<double>> {
    static constexpr bool exact = false;
    static bool is_zero(const std::complex<double>& x) { return x == 0.0; }
    static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
    static std::complex<double> inv(const std::complex<double>& x) { return 1.0 / x; }
    static std::complex<double> to_complex(const std::complex<double>& x) { return x; }
};

using Complex = std::complex<double>;

inline CQuad to_cquad(const Rational& q) { return CQuad(q); }

}  // namespace ccs

#endif
