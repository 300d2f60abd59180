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

#ifndef CCS_POLY_HPP
#define CCS_POLY_HPP

#include "ccs/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ccs {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial in z; index = power.  Trailing zeros are
/// always stripped, so the zero polynomial has no coefficients and
/// degree -1.
template <class F>
class Poly {
public:
    using Traits = FieldTraits<F>;

    Poly() = default;
    explicit Poly(std::vector<F> c) : c_(std::move(c)) { trim(); }

    static Poly constant(const F& v) { return Poly(std::vector<F>{v}); }
    static Poly monomial(const F& v, int k)
    {
        std::vector<F> c(k + 1, F(0));
        c[k] = v;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[i] : F(0); }
    const F& leading() const { return c_.back(); }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly operator-() const
    {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const F& k, const Poly& p)
    {
        if (Traits::is_zero(k)) return Poly();
        Poly r = p;
        for (auto& x : r.c_) x = k * x;
        r.trim();
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const
    {
        if (c_.size() <= 1) return Poly();
        std::vector<F> c(c_.size() - 1, F(0));
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = F(static_cast<long>(i)) * c_[i];
        return Poly(std::move(c));
    }

    F eval(const F& z) const
    {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Poly monic() const
    {
        if (is_zero()) return *this;
        return Traits::inv(leading()) * *this;
    }

    Poly conj_coeffs() const
    {
        Poly r = *this;
        for (auto& x : r.c_) x = Traits::conj(x);
        return r;
    }

    /// Lowest power with a nonzero coefficient (order of vanishing at 0).
    int valuation() const
    {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!Traits::is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    /// z^k p(1/z) with k >= degree.
    Poly reversed(int k) const
    {
        std::vector<F> c(k + 1, F(0));
        for (int i = 0; i <= degree(); ++i) c[k - i] = c_[i];
        return Poly(std::move(c));
    }

    template <class G, class Fn>
    Poly<G> map(Fn fn) const
    {
        std::vector<G> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(fn(x));
        return Poly<G>(std::move(c));
    }

private:
    void trim()
    {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

/// Quotient and remainder over a field.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b)
{
    using Traits = FieldTraits<F>;
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Poly<F>(), a};
    std::vector<F> q(a.degree() - db + 1, F(0));
    F inv_lead = Traits::inv(b.leading());
    for (int i = a.degree(); i >= db; --i) {
        if (Traits::is_zero(r[i])) continue;
        F k = r[i] * inv_lead;
        q[i - db] = k;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= k * b.coeffs()[j];
    }
    r.resize(db);
    return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

/// Monic gcd by Euclid over the coefficient field; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero()) {
        Poly<F> r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Exact division; throws if b does not divide a.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

/// Dense bivariate polynomial sum a_ij z^i zbar^j.  Stored trimmed: no
/// all-zero trailing row or column.
template <class F>
class BiPoly {
public:
    using Traits = FieldTraits<F>;

    BiPoly() = default;
    BiPoly(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, F(0)) {}

    static BiPoly constant(const F& v)
    {
        BiPoly b(1, 1);
        b.a_[0] = v;
        b.trim();
        return b;
    }
    /// p(z) viewed as a bivariate polynomial.
    static BiPoly from_z(const Poly<F>& p)
    {
        BiPoly b(p.degree() + 1, p.is_zero() ? 0 : 1);
        for (int i = 0; i <= p.degree(); ++i) b.ref(i, 0) = p.coeffs()[i];
        b.trim();
        return b;
    }
    /// conj(p)(zbar) = sum conj(p_j) zbar^j.
    static BiPoly from_conj(const Poly<F>& p)
    {
        BiPoly b(p.is_zero() ? 0 : 1, p.degree() + 1);
        for (int j = 0; j <= p.degree(); ++j) b.ref(0, j) = Traits::conj(p.coeffs()[j]);
        b.trim();
        return b;
    }
    /// (1 + z zbar)^k.
    static BiPoly one_plus_zzbar_pow(int k)
    {
        BiPoly b(k + 1, k + 1);
        for (int i = 0; i <= k; ++i) b.ref(i, i) = F(binomial(k, i).get_si());
        return b;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_zero() const { return rows_ == 0; }
    int deg_z() const { return rows_ - 1; }
    int deg_zbar() const { return cols_ - 1; }

    F at(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= rows_ || j >= cols_) return F(0);
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }
    F& ref(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const F& cref(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    void trim()
    {
        int r = rows_, c = cols_;
        auto zero_row = [&](int i) {
            for (int j = 0; j < c; ++j)
                if (!Traits::is_zero(cref(i, j))) return false;
            return true;
        };
        auto zero_col = [&](int j) {
            for (int i = 0; i < r; ++i)
                if (!Traits::is_zero(cref(i, j))) return false;
            return true;
        };
        while (r > 0 && zero_row(r - 1)) --r;
        while (c > 0 && zero_col(c - 1)) --c;
        if (r == 0 || c == 0) {
            rows_ = cols_ = 0;
            a_.clear();
            return;
        }
        if (r == rows_ && c == cols_) return;
        std::vector<F> n(static_cast<std::size_t>(r) * c, F(0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) n[static_cast<std::size_t>(i) * c + j] = cref(i, j);
        rows_ = r;
        cols_ = c;
        a_ = std::move(n);
    }

    BiPoly& operator+=(const BiPoly& o) { return accumulate(o, false); }
    BiPoly& operator-=(const BiPoly& o) { return accumulate(o, true); }
    BiPoly operator-() const
    {
        BiPoly r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        BiPoly r(a.rows_ + b.rows_ - 1, a.cols_ + b.cols_ - 1);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                const F& x = a.cref(i, j);
                if (Traits::is_zero(x)) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l) {
                        const F& y = b.cref(k, l);
                        if (Traits::is_zero(y)) continue;
                        r.ref(i + k, j + l) += x * y;
                    }
            }
        r.trim();
        return r;
    }
    friend BiPoly operator*(const F& k, const BiPoly& p)
    {
        if (Traits::is_zero(k)) return BiPoly();
        BiPoly r = p;
        for (auto& x : r.a_) x = k * x;
        r.trim();
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly dz() const
    {
        if (rows_ <= 1) return BiPoly();
        BiPoly r(rows_ - 1, cols_);
        for (int i = 1; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.ref(i - 1, j) = F(static_cast<long>(i)) * cref(i, j);
        r.trim();
        return r;
    }
    BiPoly dzbar() const
    {
        if (cols_ <= 1) return BiPoly();
        BiPoly r(rows_, cols_ - 1);
        for (int i = 0; i < rows_; ++i)
            for (int j = 1; j < cols_; ++j) r.ref(i, j - 1) = F(static_cast<long>(j)) * cref(i, j);
        r.trim();
        return r;
    }
    /// Complex conjugate as a function: entries transposed and conjugated.
    BiPoly conj() const
    {
        BiPoly r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.ref(j, i) = Traits::conj(cref(i, j));
        return r;
    }
    bool is_hermitian() const { return *this == conj(); }

    F eval(const F& z, const F& zb) const
    {
        F acc(0);
        for (int i = rows_ - 1; i >= 0; --i) {
            F row(0);
            for (int j = cols_ - 1; j >= 0; --j) row = row * zb + cref(i, j);
            acc = acc * z + row;
        }
        return acc;
    }
    /// Numeric value at (z, conj z).
    Complex eval_numeric(Complex z) const
    {
        Complex zb = std::conj(z), acc = 0.0;
        for (int i = rows_ - 1; i >= 0; --i) {
            Complex row = 0.0;
            for (int j = cols_ - 1; j >= 0; --j) row = row * zb + Traits::to_complex(cref(i, j));
            acc = acc * z + row;
        }
        return acc;
    }

    /// Coefficient of zbar^j as a polynomial in z.
    Poly<F> column(int j) const
    {
        std::vector<F> c;
        for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return Poly<F>(std::move(c));
    }

    template <class G, class Fn>
    BiPoly<G> map(Fn fn) const
    {
        BiPoly<G> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.ref(i, j) = fn(cref(i, j));
        r.trim();
        return r;
    }

private:
    BiPoly& accumulate(const BiPoly& o, bool subtract)
    {
        if (o.is_zero()) return *this;
        int r = std::max(rows_, o.rows_), c = std::max(cols_, o.cols_);
        if (r != rows_ || c != cols_) {
            BiPoly n(r, c);
            for (int i = 0; i < rows_; ++i)
                for (int j = 0; j < cols_; ++j) n.ref(i, j) = cref(i, j);
            *this = std::move(n);
        }
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < o.cols_; ++j) {
                if (subtract)
                    ref(i, j) -= o.cref(i, j);
                else
                    ref(i, j) += o.cref(i, j);
            }
        trim();
        return *this;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<F> a_;
};

template <class F>
BiPoly<F> dz_h(const BiPoly<F>& p) { return p.dz(); }
template <class F>
BiPoly<F> dzbar_h(const BiPoly<F>& p) { return p.dzbar(); }

/// Returns lambda with p = lambda q, if it exists (exact test).
template <class F>
std::optional<F> is_proportional(const BiPoly<F>& p, const BiPoly<F>& q)
{
    using Traits = FieldTraits<F>;
    if (q.is_zero()) throw std::domain_error("is_proportional: reference polynomial is zero");
    if (p.is_zero()) return F(0);
    if (p.rows() != q.rows() || p.cols() != q.cols()) return std::nullopt;
    std::optional<F> lambda;
    for (int i = 0; i < q.rows() && !lambda; ++i)
        for (int j = 0; j < q.cols() && !lambda; ++j)
            if (!Traits::is_zero(q.cref(i, j))) lambda = p.cref(i, j) * Traits::inv(q.cref(i, j));
    if (*lambda * q == p) return lambda;
    return std::nullopt;
}

/// Numeric proportionality: |p - lambda q| <= tol * max|p| coefficientwise.
std::optional<Complex> is_near_proportional(const BiPoly<Complex>& p, const BiPoly<Complex>& q, double tol = 1e-10);

/// Finite sequence of polynomials in z.
template <class F>
struct HoloVec {
    std::vector<Poly<F>> e;

    HoloVec() = default;
    explicit HoloVec(std::vector<Poly<F>> entries) : e(std::move(entries)) {}
    explicit HoloVec(std::size_t n) : e(n) {}

    std::size_t size() const { return e.size(); }
    const Poly<F>& operator[](std::size_t i) const { return e[i]; }
    Poly<F>& operator[](std::size_t i) { return e[i]; }

    bool is_zero() const
    {
        return std::all_of(e.begin(), e.end(), [](const Poly<F>& p) { return p.is_zero(); });
    }
    int max_degree() const
    {
        int d = -1;
        for (const auto& p : e) d = std::max(d, p.degree());
        return d;
    }
    friend bool operator==(const HoloVec& a, const HoloVec& b) { return a.e == b.e; }

    template <class G, class Fn>
    HoloVec<G> map(Fn fn) const
    {
        HoloVec<G> r;
        for (const auto& p : e) r.e.push_back(p.template map<G>(fn));
        return r;
    }
};

template <class F>
HoloVec<F> dz(const HoloVec<F>& v)
{
    HoloVec<F> r;
    for (const auto& p : v.e) r.e.push_back(p.derivative());
    return r;
}

template <class F>
Poly<F> dz(const Poly<F>& p) { return p.derivative(); }

/// sum_a v_a(z) conj(w_a)(zbar).
template <class F>
BiPoly<F> inner(const HoloVec<F>& v, const HoloVec<F>& w)
{
    using Traits = FieldTraits<F>;
    if (v.size() != w.size()) throw DimensionError("inner: dimension mismatch");
    int rows = v.max_degree() + 1, cols = w.max_degree() + 1;
    if (rows <= 0 || cols <= 0) return BiPoly<F>();
    BiPoly<F> r(rows, cols);
    for (std::size_t a = 0; a < v.size(); ++a) {
        const auto& x = v[a].coeffs();
        const auto& y = w[a].coeffs();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (Traits::is_zero(x[i])) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (Traits::is_zero(y[j])) continue;
                r.ref(static_cast<int>(i), static_cast<int>(j)) += x[i] * Traits::conj(y[j]);
            }
        }
    }
    r.trim();
    return r;
}

template <class F>
BiPoly<F> norm_sq(const HoloVec<F>& v) { return inner(v, v); }

/// Increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Wedge of a k-vector F (coordinates over lexicographic k-subsets of
/// {0..n-1}) with a vector v:
///   (F ^ v)_S = sum_j (-1)^(k-j) F_{S - s_j} v_{s_j}.
template <class F>
HoloVec<F> wedge_k(const HoloVec<F>& multi, int k, const HoloVec<F>& v)
{
    int n = static_cast<int>(v.size());
    auto lower = k_subsets(n, k);
    if (lower.size() != multi.size()) throw DimensionError("wedge: k-vector has wrong length");
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
    auto upper = k_subsets(n, k + 1);
    HoloVec<F> out(upper.size());
    for (std::size_t s = 0; s < upper.size(); ++s) {
        const auto& S = upper[s];
        Poly<F> acc;
        for (int j = 0; j <= k; ++j) {
            std::vector<int> rest;
            for (int m = 0; m <= k; ++m)
                if (m != j) rest.push_back(S[m]);
            const Poly<F>& f = multi[index.at(rest)];
            if (f.is_zero()) continue;
            Poly<F> term = f * v[S[j]];
            if ((k - j) % 2)
                acc -= term;
            else
                acc += term;
        }
        out[s] = std::move(acc);
    }
    return out;
}

/// Plucker coordinates (v_a w_b - v_b w_a)_{a<b}.
template <class F>
HoloVec<F> wedge(const HoloVec<F>& v, const HoloVec<F>& w)
{
    if (v.size() != w.size()) throw DimensionError("wedge: dimension mismatch");
    return wedge_k(v, 1, w);
}

/// Monic gcd g of all entries and the primitive vector with v = g * prim.
template <class F>
std::pair<Poly<F>, HoloVec<F>> content_and_primitive(const HoloVec<F>& v)
{
    if (v.is_zero()) throw std::domain_error("content_and_primitive: zero vector");
    Poly<F> g;
    for (const auto& p : v.e) {
        g = gcd(g, p);
        if (g.degree() == 0) break;
    }
    HoloVec<F> prim;
    for (const auto& p : v.e) prim.e.push_back(p.is_zero() ? p : exact_div(p, g));
    return {g, prim};
}

/// Quotient of bivariate polynomials.  Not reduced to lowest terms;
/// equality is decided by cross-multiplication.
template <class F>
class RatBiFunc {
public:
    using Traits = FieldTraits<F>;

    RatBiFunc() : num_(), den_(BiPoly<F>::constant(F(1))) {}
    RatBiFunc(BiPoly<F> num, BiPoly<F> den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw std::domain_error("RatBiFunc: zero denominator");
    }
    static RatBiFunc constant(const F& v) { return RatBiFunc(BiPoly<F>::constant(v), BiPoly<F>::constant(F(1))); }
    static RatBiFunc poly(const BiPoly<F>& p) { return RatBiFunc(p, BiPoly<F>::constant(F(1))); }

    const BiPoly<F>& num() const { return num_; }
    const BiPoly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatBiFunc operator+(const RatBiFunc& a, const RatBiFunc& b)
    {
        if (a.den_ == b.den_) return RatBiFunc(a.num_ + b.num_, a.den_);
        return RatBiFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatBiFunc operator-(const RatBiFunc& a, const RatBiFunc& b)
    {
        if (a.den_ == b.den_) return RatBiFunc(a.num_ - b.num_, a.den_);
        return RatBiFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatBiFunc operator*(const RatBiFunc& a, const RatBiFunc& b)
    {
        return RatBiFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatBiFunc operator/(const RatBiFunc& a, const RatBiFunc& b)
    {
        if (b.num_.is_zero()) throw std::domain_error("RatBiFunc: division by zero");
        return RatBiFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatBiFunc operator*(const F& k, const RatBiFunc& a) { return RatBiFunc(k * a.num_, a.den_); }

    /// Exact equality as functions.
    friend bool operator==(const RatBiFunc& a, const RatBiFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
    friend bool operator!=(const RatBiFunc& a, const RatBiFunc& b) { return !(a == b); }

    /// Value if the function is constant.
    std::optional<F> constant_value() const { return is_proportional(num_, den_); }

    Complex eval_numeric(Complex z) const { return num_.eval_numeric(z) / den_.eval_numeric(z); }

private:
    BiPoly<F> num_;
    BiPoly<F> den_;
};

/// d/dz d/dzbar log p = (p p_{z zbar} - p_z p_zbar) / p^2.
template <class F>
RatBiFunc<F> log_laplacian(const BiPoly<F>& p)
{
    if (p.is_zero()) throw std::domain_error("log_laplacian: zero polynomial");
    BiPoly<F> pz = p.dz(), pzb = p.dzbar();
    return RatBiFunc<F>(p * pz.dzbar() - pz * pzb, p * p);
}

/// log of a quotient is a difference of logs.
template <class F>
RatBiFunc<F> log_laplacian(const RatBiFunc<F>& f)
{
    return log_laplacian(f.num()) - log_laplacian(f.den());
}

}  // namespace ccs

#endif
