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

#include "ccs/algebraic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ccs {

QPoly squarefree_part(const QPoly& p)
{
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return QPoly::constant(1);
    return exact_div(p, gcd(p, p.derivative())).monic();
}

QPoly primitive_integer(const QPoly& p)
{
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational k = Rational(l) / Rational(g);
    if (p.leading() < 0) k = -k;
    return k * p;
}

std::vector<QPoly> sturm_sequence(const QPoly& p)
{
    std::vector<QPoly> seq{primitive_integer(p)};
    if (p.degree() <= 0) return seq;
    seq.push_back(primitive_integer(p.derivative()));
    while (seq.back().degree() > 0) {
        QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        // Positive rescaling keeps the sign pattern; primitive_integer makes
        // the leading coefficient positive, so fix the sign by hand.
        QPoly s = primitive_integer(r);
        if (sgn(r.leading()) > 0) s = -s;
        seq.push_back(s);
    }
    return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const Rational& x)
{
    int count = 0, last = 0;
    for (const auto& s : seq) {
        int v = sgn(s.eval(x));
        if (v == 0) continue;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

int count_roots(const QPoly& p, const Rational& lo, const Rational& hi)
{
    if (!(lo < hi)) return 0;
    QPoly q = squarefree_part(p);
    if (q.degree() <= 0) return 0;
    auto seq = sturm_sequence(q);
    // Sturm counts roots in (lo, hi]; drop a root sitting at hi.
    int n = sign_variations(seq, lo) - sign_variations(seq, hi);
    if (q.eval(hi) == 0) --n;
    return n;
}

Rational root_bound(const QPoly& p)
{
    if (p.degree() <= 0) return Rational(1);
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational v = abs(p.coeff(i) / p.leading());
        if (v > m) m = v;
    }
    return m + 1;
}

double AlgebraicReal::approx() const
{
    if (is_exact()) return lo.get_d();
    // The interval may be wide; refine a copy for display.
    AlgebraicReal c = *this;
    refine(c, Rational(1) / Rational(Integer(1) << 60));
    return c.midpoint().get_d();
}

std::string AlgebraicReal::str() const
{
    if (is_exact()) return to_string(lo);
    std::ostringstream os;
    os << "root of degree " << p.degree() << " in (" << to_string(lo) << ", " << to_string(hi) << ")";
    return os.str();
}

namespace {

void isolate(const QPoly& q, const std::vector<QPoly>& seq, const Rational& lo, const Rational& hi, int vlo, int vhi,
             std::vector<AlgebraicReal>& out)
{
    int n = vlo - vhi;
    if (n == 0) return;
    if (n == 1) {
        out.push_back({q, lo, hi});
        return;
    }
    Rational m = simplest_between(lo, hi);
    int vm = sign_variations(seq, m);
    if (q.eval(m) == 0) {
        // Sturm counts (lo, m] which includes m itself.
        isolate(q, seq, lo, m, vlo, vm + 1, out);
        out.push_back({q, m, m});
        isolate(q, seq, m, hi, vm, vhi, out);
        return;
    }
    isolate(q, seq, lo, m, vlo, vm, out);
    isolate(q, seq, m, hi, vm, vhi, out);
}

}  // namespace

std::vector<AlgebraicReal> isolate_roots(const QPoly& p, const Rational& lo_in, const Rational& hi_in)
{
    std::vector<AlgebraicReal> out;
    if (!(lo_in < hi_in)) return out;
    QPoly q = squarefree_part(p);
    if (q.degree() <= 0) return out;
    Rational b = root_bound(q);
    Rational lo = lo_in < -b ? Rational(-b) : lo_in;
    Rational hi = hi_in > b ? b : hi_in;
    if (!(lo < hi)) return out;
    auto seq = sturm_sequence(q);
    int vlo = sign_variations(seq, lo);
    int vhi = sign_variations(seq, hi);
    // Sturm counts (lo, hi]; a root at hi itself lies outside the open interval.
    bool root_at_hi = q.eval(hi) == 0;
    if (root_at_hi) ++vhi;
    isolate(q, seq, lo, hi, vlo, vhi, out);
    // Pull endpoints that are roots of q strictly away from the interval.
    for (auto& a : out) {
        if (a.is_exact()) continue;
        while (q.eval(a.lo) == 0 || q.eval(a.hi) == 0) {
            Rational m = simplest_between(a.lo, a.hi);
            if (q.eval(m) == 0 && count_roots(q, a.lo, a.hi) == 1) {
                a.lo = a.hi = m;
                break;
            }
            if (count_roots(q, a.lo, m) == 1)
                a.hi = m;
            else
                a.lo = m;
        }
    }
    return out;
}

void refine(AlgebraicReal& a, const Rational& width)
{
    while (!a.is_exact() && a.hi - a.lo > width) {
        Rational probe = simplest_between(a.lo, a.hi);
        if (a.p.eval(probe) == 0) {
            a.lo = a.hi = probe;
            return;
        }
        int slo = sgn(a.p.eval(a.lo));
        if (sgn(a.p.eval(probe)) == slo)
            a.lo = probe;
        else
            a.hi = probe;
        Rational mid = a.midpoint();
        int smid = sgn(a.p.eval(mid));
        if (smid == 0) {
            a.lo = a.hi = mid;
            return;
        }
        if (smid == sgn(a.p.eval(a.lo)))
            a.lo = mid;
        else
            a.hi = mid;
    }
}

AlgebraicField::AlgebraicField(AlgebraicReal a) : a_(std::move(a))
{
    if (a_.p.degree() < 1) throw std::invalid_argument("AlgebraicField: constant defining polynomial");
    a_.p = a_.p.monic();
    if (a_.is_exact()) restrict_to(QPoly({Rational(-a_.lo), Rational(1)}));
}

QPoly AlgebraicField::reduce(const QPoly& e) const
{
    if (e.degree() < a_.p.degree()) return e;
    return divmod(e, a_.p).second;
}

void AlgebraicField::restrict_to(const QPoly& factor) { a_.p = factor.monic(); }

bool AlgebraicField::is_zero(const QPoly& e_in)
{
    QPoly e = reduce(e_in);
    if (e.is_zero()) return true;
    if (a_.p.degree() == 1) return false;
    QPoly g = gcd(e, a_.p);
    if (g.degree() == 0) return false;
    // Split m = g * (m/g) and keep the factor that vanishes at the root.
    QPoly other = exact_div(a_.p, g);
    bool in_g = a_.is_exact() ? g.eval(a_.lo) == 0 : count_roots(g, a_.lo, a_.hi) == 1;
    restrict_to(in_g ? g : other);
    return in_g;
}

int AlgebraicField::sign(const QPoly& e_in)
{
    if (is_zero(e_in)) return 0;
    QPoly e = reduce(e_in);
    if (a_.p.degree() == 1) return sgn(e.eval(-a_.p.coeff(0)));
    // Shrink until e has no root near the defining root, then read the sign
    // at a rational point of the interval.
    for (;;) {
        if (count_roots(e, a_.lo, a_.hi) == 0) return sgn(e.eval(a_.midpoint()));
        refine(a_, (a_.hi - a_.lo) / 4);
        if (a_.is_exact()) {
            restrict_to(QPoly({Rational(-a_.lo), Rational(1)}));
            return sgn(e.eval(a_.lo));
        }
    }
}

QPoly AlgebraicField::inverse(const QPoly& e_in)
{
    if (is_zero(e_in)) throw std::domain_error("AlgebraicField: division by zero");
    QPoly e = reduce(e_in);
    // Extended Euclid: track s with s e = r (mod m).
    QPoly r0 = a_.p, r1 = e, s0, s1 = QPoly::constant(1);
    while (r1.degree() > 0) {
        auto [qq, rr] = divmod(r0, r1);
        QPoly s2 = s0 - qq * s1;
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.is_zero()) throw std::logic_error("AlgebraicField: element not invertible after split");
    return reduce(Rational(1 / r1.coeff(0)) * s1);
}

double AlgebraicField::approx(const QPoly& e) const
{
    double x = a_.is_exact() ? a_.lo.get_d() : a_.approx();
    double acc = 0;
    for (int i = e.degree(); i >= 0; --i) acc = acc * x + e.coeff(i).get_d();
    return acc;
}

int AlgNum::sign() const
{
    if (!f_) return e_.is_zero() ? 0 : sgn(e_.coeff(0));
    return f_->sign(e_);
}

AlgNum operator/(const AlgNum& a, const AlgNum& b)
{
    auto f = AlgNum::pick(a, b);
    if (!f) {
        if (b.e_.is_zero()) throw std::domain_error("AlgNum: division by zero");
        return AlgNum(nullptr, QPoly::constant(Rational(a.e_.coeff(0) / b.e_.coeff(0))));
    }
    return AlgNum(f, a.e_ * f->inverse(b.e_));
}

int exact_rank(const Matrix<AlgNum>& m_in)
{
    Matrix<AlgNum> m = m_in;
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[rank], m[p]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c].is_zero()) continue;
            AlgNum k = m[r][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[r][j] -= k * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace ccs
