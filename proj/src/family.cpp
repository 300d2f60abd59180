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

#include "ccs/family.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace ccs {

namespace {

void check_degree(int d)
{
    if (d < 2) throw InvalidParameter("family degree must be at least 2");
}

Integer binom(long a, long b)
{
    if (a < 0 || b < 0 || b > a) return 0;
    return binomial(a, b);
}

Rational nonzero_denominator(int d, const Rational& t)
{
    Rational D = D_denom(d, t);
    if (D == 0) throw InvalidParameter("invalid t: denominator vanishes at t = " + to_string(t));
    return D;
}

}  // namespace

Poly<Rational> D_denom_poly(int d)
{
    std::vector<Rational> c;
    for (int p = 0; p <= d; ++p) c.emplace_back((p % 2 ? -1 : 1) * binom(d + 1, p));
    return Poly<Rational>(std::move(c));
}

Rational D_denom(int d, const Rational& t) { return D_denom_poly(d).eval(t); }

Poly<Rational> coeff_c_numerator(int d, int i, int j)
{
    check_degree(d);
    if (i < 0 || j < 0 || i > d || j > d) throw std::out_of_range("coeff_c: index out of range");
    if (i < j) std::swap(i, j);

    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, Poly<Rational>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(d, i, j);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<Rational> c(d + 1, Rational(0));
    for (int p = i - j; p <= d; ++p) {
        Integer s = 0;
        // k ranges over every integer with all binomials defined.
        for (int k = -d - 2; k <= d + 2; ++k)
            s += binom(i + j - 2 * k, j - k) * binom(d - i - j + 2 * k, k) * binom(d + 1, p - i - j + 2 * k);
        c[p] = Rational((p % 2 ? -1 : 1) * s);
    }
    return cache.emplace(key, Poly<Rational>(std::move(c))).first->second;
}

Rational coeff_c(int d, int i, int j, const Rational& t)
{
    Rational D = nonzero_denominator(d, t);
    return Rational(coeff_c_numerator(d, i, j).eval(t) / D);
}

Rational coeff_alpha_product(int d, int i, int j, const Rational& t)
{
    check_degree(d);
    if (i < 0 || j < 0 || i > d + 1 || j > d + 1) throw std::out_of_range("coeff_alpha_product: index out of range");
    Rational D = nonzero_denominator(d, t);
    Rational v = Rational(binom(d + 1, i) * binom(d + 1, j)) * rpow(t, d + 1) / D;
    return (d + 1) % 2 ? Rational(-v) : v;
}

SymRatMatrix coeff_matrix(int d, const Rational& t)
{
    Rational D = nonzero_denominator(d, t);
    SymRatMatrix C(d + 1);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= i; ++j) {
            Rational v = coeff_c_numerator(d, i, j).eval(t) / D;
            C(i, j) = v;
            C(j, i) = v;
        }
    return C;
}

FamilyParams build_family(int d, const Rational& t, int sign)
{
    check_degree(d);
    if (t <= -1 || t >= 1) throw InvalidParameter("t must lie in (-1, 1)");
    if (sign != 1 && sign != -1) throw InvalidParameter("sign must be +1 or -1");
    FamilyParams fp;
    fp.d = d;
    fp.t = t;
    fp.sign = sign;
    fp.D = nonzero_denominator(d, t);
    fp.C = coeff_matrix(d, t);
    fp.alpha_sq = coeff_alpha_product(d, 0, 0, t);
    fp.c = 1 + fp.alpha_sq;
    fp.c0 = QuadScalar::sqrt_of(1 - t * t);
    fp.rank = exact_rank(fp.C);

    auto ldl = ldl_psd(fp.C.e, [](const Rational& x) { return sgn(x); });
    fp.valid = fp.alpha_sq >= 0 && ldl.psd;

    CQuad root = fp.alpha_sq >= 0 ? CQuad(QuadScalar::sqrt_of(fp.alpha_sq))
                                  : CQuad(QuadScalar(), QuadScalar::sqrt_of(-fp.alpha_sq));
    if (sign < 0) root = -root;
    std::vector<CQuad> hc;
    for (int i = 0; i <= d + 1; ++i) hc.push_back(CQuad(Rational(binom(d + 1, i))) * root);
    fp.h = Poly<CQuad>(std::move(hc));
    return fp;
}

BiPoly<Rational> f01_norm_sq(const Rational& t)
{
    BiPoly<Rational> b(2, 2);
    b.ref(0, 0) = 1;
    b.ref(1, 0) = t;
    b.ref(0, 1) = t;
    b.ref(1, 1) = 1;
    return b;
}

BiPoly<Rational> section_norm_sq(const SymRatMatrix& C)
{
    BiPoly<Rational> b(C.size(), C.size());
    for (int i = 0; i < C.size(); ++i)
        for (int j = 0; j < C.size(); ++j) b.ref(i, j) = C(i, j);
    b.trim();
    return b;
}

BiPoly<Rational> h_norm_sq(const FamilyParams& fp)
{
    int n = fp.d + 2;
    BiPoly<Rational> b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.ref(i, j) = fp.alpha_sq * binom(fp.d + 1, i) * binom(fp.d + 1, j);
    b.trim();
    return b;
}

IdentityCheck verify_identity_11(const FamilyParams& fp)
{
    BiPoly<Rational> lhs = f01_norm_sq(fp.t) * section_norm_sq(fp.C) + h_norm_sq(fp);
    auto k = is_proportional(lhs, BiPoly<Rational>::one_plus_zzbar_pow(fp.d + 1));
    if (!k) return {false, Rational(0)};
    return {*k == fp.c, *k};
}

bool verify_eq_42_43(int d, const Rational& t) { return verify_eq_42_43(d, t, coeff_matrix(d, t)); }

bool verify_eq_42_43(int d, const Rational& t, const SymRatMatrix& C)
{
    if (C.size() != d + 1) throw DimensionError("verify_eq_42_43: matrix size does not match degree");
    auto c = [&](int i, int j) -> Rational {
        if (i < 0 || j < 0 || i > d || j > d) return Rational(0);
        return C(i, j);
    };
    Rational cc = 1 + coeff_alpha_product(d, 0, 0, t);
    for (int i = 0; i <= d + 1; ++i) {
        Rational r = c(i, i) + 2 * t * c(i, i - 1) + c(i - 1, i - 1) + coeff_alpha_product(d, i, i, t) -
                     cc * Rational(binom(d + 1, i));
        if (r != 0) return false;
    }
    for (int i = 0; i <= d + 1; ++i)
        for (int j = 0; j < i; ++j) {
            Rational r = c(i, j) + t * c(i - 1, j) + t * c(i, j - 1) + c(i - 1, j - 1) + coeff_alpha_product(d, i, j, t);
            if (r != 0) return false;
        }
    return true;
}

}  // namespace ccs
