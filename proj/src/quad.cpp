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

#include "ccs/quad.hpp"

#include "ccs/squarefree.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace ccs {

namespace {

const Integer kOne(1);

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Lower and upper rational bounds of the value, with each sqrt(r)
// bracketed to within 2^-bits.
std::pair<Rational, Rational> enclose(const QuadScalar::TermMap& terms, unsigned long bits)
{
    Rational lo = 0, hi = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    for (const auto& [r, q] : terms) {
        if (r == kOne) {
            lo += q;
            hi += q;
            continue;
        }
        Integer s;
        Integer big = r * scale * scale;
        mpz_sqrt(s.get_mpz_t(), big.get_mpz_t());
        Rational a(s, scale), b(s + 1, scale);
        a.canonicalize();
        b.canonicalize();
        if (sgn(q) > 0) {
            lo += q * a;
            hi += q * b;
        } else {
            lo += q * b;
            hi += q * a;
        }
    }
    return {lo, hi};
}

}  // namespace

QuadScalar::QuadScalar(const Rational& q)
{
    if (sgn(q) != 0) terms_.emplace(kOne, q);
}

QuadScalar QuadScalar::sqrt_of(const Rational& r)
{
    if (sgn(r) < 0) throw DomainError("imaginary radical: route through CQuad");
    QuadScalar out;
    if (sgn(r) == 0) return out;
    // sqrt(p/q) = sqrt(p q) / q
    Integer pq = r.get_num() * r.get_den();
    SquarefreeSplit s = squarefree_split(pq);
    Rational coeff(s.outer, r.get_den());
    coeff.canonicalize();
    out.terms_.emplace(s.core, coeff);
    return out;
}

bool QuadScalar::is_rational() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kOne);
}

Rational QuadScalar::rational_part() const
{
    auto it = terms_.find(kOne);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational QuadScalar::as_rational() const
{
    if (!is_rational()) throw DomainError("value is irrational: " + str());
    return rational_part();
}

void QuadScalar::add_term(const Integer& radicand, const Rational& coeff)
{
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o)
{
    for (const auto& [r, q] : o.terms_) add_term(r, q);
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o)
{
    for (const auto& [r, q] : o.terms_) add_term(r, -q);
    return *this;
}

QuadScalar QuadScalar::operator-() const
{
    QuadScalar r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o)
{
    if (is_zero() || o.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (o.is_rational()) {
        const Rational& k = o.terms_.begin()->second;
        for (auto& kv : terms_) kv.second *= k;
        return *this;
    }
    if (is_rational()) {
        Rational k = terms_.begin()->second;
        *this = o;
        for (auto& kv : terms_) kv.second *= k;
        return *this;
    }
    QuadScalar out;
    for (const auto& [ra, qa] : terms_) {
        for (const auto& [rb, qb] : o.terms_) {
            // sqrt(a) sqrt(b) = g sqrt((a/g)(b/g)) for squarefree a, b
            Integer g = gcd(ra, rb);
            Integer key = (ra / g) * (rb / g);
            out.add_term(key, qa * qb * Rational(g));
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

QuadScalar QuadScalar::inverse() const
{
    if (is_zero()) throw DomainError("division by zero");
    if (is_rational()) return QuadScalar(Rational(1) / terms_.begin()->second);
    // Eliminate one atom p at a time: x = u + v sqrt(p), x (u - v sqrt(p)) = u^2 - p v^2.
    Integer p = 0;
    for (const auto& kv : terms_) {
        if (kv.first == kOne) continue;
        for (const auto& prime : radical_atoms(kv.first))
            if (prime > p) p = prime;
    }
    QuadScalar u, v;
    for (const auto& [r, q] : terms_) {
        if (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t()))
            v.add_term(r / p, q);
        else
            u.add_term(r, q);
    }
    QuadScalar conj = u - v * QuadScalar::sqrt_of(Rational(p));
    QuadScalar norm = u * u - QuadScalar(Rational(p)) * v * v;
    return conj * norm.inverse();
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o)
{
    return *this *= o.inverse();
}

int QuadScalar::sign() const
{
    if (is_zero()) return 0;
    if (is_rational()) return sgn(terms_.begin()->second);
    for (unsigned long bits = 32;; bits *= 2) {
        auto [lo, hi] = enclose(terms_, bits);
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
    }
}

double QuadScalar::to_double() const
{
    if (is_rational()) return rational_part().get_d();
    auto [lo, hi] = enclose(terms_, 96);
    Rational mid = (lo + hi) / 2;
    return mid.get_d();
}

std::string QuadScalar::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, q] : terms_) {
        if (!first) os << (sgn(q) < 0 ? " - " : " + ");
        else if (sgn(q) < 0) os << "-";
        first = false;
        Rational a = abs(q);
        if (r == kOne) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << "sqrt(" << r.get_str() << ")";
        }
    }
    return os.str();
}

QuadScalar quad_normalize(const std::vector<std::pair<Rational, Rational>>& raw)
{
    QuadScalar out;
    for (const auto& [coeff, radicand] : raw)
        out += QuadScalar(coeff) * QuadScalar::sqrt_of(radicand);
    return out;
}

QuadScalar quad_mul(const QuadScalar& a, const QuadScalar& b)
{
    return a * b;
}

bool quad_is_nonneg(const QuadScalar& a)
{
    return a.sign() >= 0;
}

RadicalBasis radical_basis(const std::vector<QuadScalar>& values)
{
    std::set<Integer> primes;
    for (const auto& v : values)
        for (const auto& kv : v.terms())
            if (kv.first != kOne)
                for (const auto& p : radical_atoms(kv.first)) primes.insert(p);
    return RadicalBasis{{primes.begin(), primes.end()}};
}

CQuad CQuad::inverse() const
{
    QuadScalar n = norm_sq();
    if (n.is_zero()) throw DomainError("division by zero");
    QuadScalar inv = n.inverse();
    return CQuad(re_ * inv, -(im_ * inv));
}

CQuad& CQuad::operator+=(const CQuad& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

CQuad& CQuad::operator-=(const CQuad& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

CQuad& CQuad::operator*=(const CQuad& o)
{
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    QuadScalar re = re_ * o.re_ - im_ * o.im_;
    QuadScalar im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string CQuad::str() const
{
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return "(" + im_.str() + ")*i";
    return "(" + re_.str() + ") + (" + im_.str() + ")*i";
}

}  // namespace ccs
