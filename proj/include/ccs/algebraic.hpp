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

#ifndef CCS_ALGEBRAIC_HPP
#define CCS_ALGEBRAIC_HPP

#include "ccs/exact_linalg.hpp"
#include "ccs/poly.hpp"
#include "ccs/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ccs {

using QPoly = Poly<Rational>;

/// p / gcd(p, p'), monic.
QPoly squarefree_part(const QPoly& p);

/// Integer-coefficient primitive associate of p with positive leading term.
QPoly primitive_integer(const QPoly& p);

std::vector<QPoly> sturm_sequence(const QPoly& p);
int sign_variations(const std::vector<QPoly>& seq, const Rational& x);

/// Number of distinct real roots of p in the open interval (lo, hi).
int count_roots(const QPoly& p, const Rational& lo, const Rational& hi);

/// Every real root of p has absolute value below this bound.
Rational root_bound(const QPoly& p);

/// A real root of the squarefree polynomial p.  Either exact (lo == hi and
/// p(lo) = 0) or the only root of p in the open interval (lo, hi), with
/// p(lo) and p(hi) nonzero.
struct AlgebraicReal {
    QPoly p;
    Rational lo, hi;

    bool is_exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    double approx() const;
    std::string str() const;
};

/// Isolates the distinct real roots of p in the open interval (lo, hi), in
/// increasing order.  Roots met exactly at a probe point are returned exact.
std::vector<AlgebraicReal> isolate_roots(const QPoly& p, const Rational& lo, const Rational& hi);

/// Shrinks the interval to width <= width.  Each step also probes the
/// simplest rational in the interval, so rational roots come out exact.
void refine(AlgebraicReal& a, const Rational& width);

/// The field Q(a) presented as Q[t]/(m) with m the defining polynomial.  When
/// a zero divisor shows up, m is replaced by the factor that vanishes at a.
class AlgebraicField {
public:
    explicit AlgebraicField(AlgebraicReal a);

    const AlgebraicReal& root() const { return a_; }
    const QPoly& modulus() const { return a_.p; }

    QPoly reduce(const QPoly& e) const;
    QPoly mul(const QPoly& x, const QPoly& y) const { return reduce(x * y); }
    bool is_zero(const QPoly& e);
    int sign(const QPoly& e);
    QPoly inverse(const QPoly& e);
    /// Numeric value of e at the root.
    double approx(const QPoly& e) const;

private:
    void restrict_to(const QPoly& factor);
    AlgebraicReal a_;
};

/// An element of an AlgebraicField, usable as the scalar type of the exact
/// linear algebra templates.  A null field marks a plain rational constant.
class AlgNum {
public:
    AlgNum() = default;
    AlgNum(long v) : e_(QPoly::constant(Rational(v))) {}
    AlgNum(std::shared_ptr<AlgebraicField> f, QPoly e) : f_(std::move(f)), e_(f_ ? f_->reduce(e) : std::move(e)) {}

    const QPoly& poly() const { return e_; }
    const std::shared_ptr<AlgebraicField>& field() const { return f_; }
    int sign() const;
    bool is_zero() const { return sign() == 0; }

    friend AlgNum operator+(const AlgNum& a, const AlgNum& b) { return AlgNum(pick(a, b), a.e_ + b.e_); }
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b) { return AlgNum(pick(a, b), a.e_ - b.e_); }
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b) { return AlgNum(pick(a, b), a.e_ * b.e_); }
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
    AlgNum operator-() const { return AlgNum(f_, -e_); }
    AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
    AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }

private:
    static std::shared_ptr<AlgebraicField> pick(const AlgNum& a, const AlgNum& b) { return a.f_ ? a.f_ : b.f_; }
    std::shared_ptr<AlgebraicField> f_;
    QPoly e_;
};

/// Rank of a matrix over Q(a) by Gaussian elimination with exact zero tests.
int exact_rank(const Matrix<AlgNum>& m);

}  // namespace ccs

#endif
