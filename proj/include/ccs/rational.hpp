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

#ifndef CCS_RATIONAL_HPP
#define CCS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ccs {

// GMP keeps mpq_class canonical (positive denominator, reduced) after
// every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse "p/q" or "p" (optional sign).  Decimal points and exponents are
/// rejected: parameters are exact by contract.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" string, or "p" for integers.
std::string to_string(const Rational& q);

Rational make_rational(long num, long den = 1);

Integer binomial(long n, long k);
Rational rpow(const Rational& base, unsigned long exp);

inline int sgn(const Rational& q) { return ::sgn(q); }

/// Simplest rational (smallest denominator, then smallest numerator
/// magnitude) strictly inside the open interval (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

Integer floor_of(const Rational& q);

}  // namespace ccs

#endif
