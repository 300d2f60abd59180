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

#ifndef CCS_QUAD_HPP
#define CCS_QUAD_HPP

#include "ccs/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ccs {

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element of the multi-quadratic extension Q(sqrt 2, sqrt 3, sqrt 5, ...).
///
/// Stored as a map from positive radicand r to a nonzero rational
/// coefficient; radicand 1 is the rational part.  Each r is a product of
/// distinct radical atoms (see squarefree.hpp), whose square roots are
/// linearly independent over Q, so the representation is canonical and
/// equality is structural.
class QuadScalar {
public:
    using TermMap = std::map<Integer, Rational>;

    QuadScalar() = default;
    QuadScalar(const Rational& q);  // NOLINT(google-explicit-constructor)
    QuadScalar(long v) : QuadScalar(Rational(v)) {}  // NOLINT
    QuadScalar(int v) : QuadScalar(Rational(v)) {}   // NOLINT

    /// sqrt(r) for a rational r >= 0.
    static QuadScalar sqrt_of(const Rational& r);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_part() const;
    /// Throws DomainError unless is_rational().
    Rational as_rational() const;

    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    QuadScalar& operator*=(const QuadScalar& o);
    QuadScalar& operator/=(const QuadScalar& o);
    QuadScalar operator-() const;

    QuadScalar inverse() const;

    /// -1, 0 or +1, decided exactly.
    int sign() const;
    double to_double() const;
    std::string str() const;

    friend bool operator==(const QuadScalar& a, const QuadScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QuadScalar& a, const QuadScalar& b) { return !(a == b); }

private:
    void add_term(const Integer& radicand, const Rational& coeff);
    TermMap terms_;
};

inline QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
inline QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
inline QuadScalar operator*(const QuadScalar& a, const QuadScalar& b)
{
    QuadScalar r = a;
    r *= b;
    return r;
}
inline QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

/// Normalise sum of coeff * sqrt(radicand); radicands must be >= 0.
QuadScalar quad_normalize(const std::vector<std::pair<Rational, Rational>>& raw);
QuadScalar quad_mul(const QuadScalar& a, const QuadScalar& b);
bool quad_is_nonneg(const QuadScalar& a);

/// The radicals an expression lives over: the pairwise coprime atoms
/// dividing any radicand, increasing.
struct RadicalBasis {
    std::vector<Integer> radicands;
};
RadicalBasis radical_basis(const std::vector<QuadScalar>& values);

/// Complex number over QuadScalar.
class CQuad {
public:
    CQuad() = default;
    CQuad(const QuadScalar& re, const QuadScalar& im = QuadScalar()) : re_(re), im_(im) {}  // NOLINT
    CQuad(const Rational& re) : re_(re) {}  // NOLINT
    CQuad(long v) : re_(v) {}               // NOLINT
    CQuad(int v) : re_(v) {}                // NOLINT

    static CQuad i() { return CQuad(QuadScalar(), QuadScalar(1)); }

    const QuadScalar& re() const { return re_; }
    const QuadScalar& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    CQuad conj() const { return CQuad(re_, -im_); }
    QuadScalar norm_sq() const { return re_ * re_ + im_ * im_; }
    CQuad inverse() const;

    CQuad& operator+=(const CQuad& o);
    CQuad& operator-=(const CQuad& o);
    CQuad& operator*=(const CQuad& o);
    CQuad& operator/=(const CQuad& o) { return *this *= o.inverse(); }
    CQuad operator-() const { return CQuad(-re_, -im_); }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::string str() const;

    friend bool operator==(const CQuad& a, const CQuad& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const CQuad& a, const CQuad& b) { return !(a == b); }

private:
    QuadScalar re_;
    QuadScalar im_;
};

inline CQuad operator+(CQuad a, const CQuad& b) { return a += b; }
inline CQuad operator-(CQuad a, const CQuad& b) { return a -= b; }
inline CQuad operator*(CQuad a, const CQuad& b) { return a *= b; }
inline CQuad operator/(CQuad a, const CQuad& b) { return a /= b; }

}  // namespace ccs

#endif
