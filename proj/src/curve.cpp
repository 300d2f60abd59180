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

#include "ccs/curve.hpp"

#include "ccs/harmonic.hpp"
#include "ccs/spectral.hpp"

#include <cmath>

namespace ccs {

namespace {

CBiPoly lift(const BiPoly<Rational>& b)
{
    return b.map<CQuad>([](const Rational& x) { return CQuad(x); });
}

const FamilyParams& require_meta(const GrassCurve& c, const char* who)
{
    if (!c.meta) throw MissingMetadata(std::string(who) + ": curve has no family metadata");
    return *c.meta;
}

/// Determinant of a small matrix of bivariate polynomials by cofactor
/// expansion along the first row.
CBiPoly small_det(const std::vector<std::vector<CBiPoly>>& m)
{
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    CBiPoly acc;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<CBiPoly>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<CBiPoly> row;
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        CBiPoly term = m[0][j] * small_det(minor);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

/// Numerator of dd log p: p p_{z zbar} - p_z p_zbar.
template <class F>
BiPoly<F> ll_numerator(const BiPoly<F>& p)
{
    BiPoly<F> pz = p.dz();
    return p * pz.dzbar() - pz * p.dzbar();
}

std::optional<Rational> as_rational(const CQuad& x)
{
    if (!x.is_real() || !x.re().is_rational()) return std::nullopt;
    return x.re().as_rational();
}

Poly<Rational> column_content(const BiPoly<Rational>& b)
{
    Poly<Rational> g;
    for (int j = 0; j < b.cols(); ++j) g = gcd(g, b.column(j));
    return g;
}

}  // namespace

CVec f01_section(const Rational& t)
{
    if (t <= -1 || t >= 1) throw InvalidParameter("f01_section: t must lie in (-1, 1)");
    CQuad a(QuadScalar::sqrt_of((1 - t) / 2)), b(QuadScalar::sqrt_of((1 + t) / 2));
    return CVec({CPoly({a, -a}), CPoly({b, b})});
}

GrassCurve build_curve(const FamilyParams& fp, std::optional<int> n)
{
    if (!fp.valid) throw InvalidParameter("build_curve: invalid family at t = " + to_string(fp.t));
    CVec g = exact_section(fp);
    int need = static_cast<int>(g.size()) + 2;
    int dim = n.value_or(need);
    if (dim < need)
        throw DimensionError("build_curve: n = " + std::to_string(dim) + " is too small for q = " +
                             std::to_string(fp.q()) + " (need n >= " + std::to_string(need) + ")");
    CVec f = f01_section(fp.t);
    CVec df = dz(f);
    CQuad c0(fp.c0);

    GrassCurve c;
    c.n = dim;
    c.meta = fp;
    c.v1 = CVec(static_cast<std::size_t>(dim));
    c.v2 = CVec(static_cast<std::size_t>(dim));
    for (int a = 0; a < 2; ++a) {
        c.v1[a] = f[a];
        c.v2[a] = fp.h * df[a];
    }
    for (std::size_t k = 0; k < g.size(); ++k) c.v2[k + 2] = c0 * g[k];
    return c;
}

GrassCurve apply_unitary(const GrassCurve& c, const Matrix<CQuad>& U)
{
    if (static_cast<int>(U.size()) != c.n) throw DimensionError("apply_unitary: size mismatch");
    GrassCurve r = c;
    for (int i = 0; i < c.n; ++i) {
        CPoly a, b;
        for (int j = 0; j < c.n; ++j) {
            if (U[i][j].is_zero()) continue;
            a = a + U[i][j] * c.v1[j];
            b = b + U[i][j] * c.v2[j];
        }
        r.v1[i] = a;
        r.v2[i] = b;
    }
    return r;
}

CBiPoly plucker_norm_sq(const GrassCurve& c)
{
    CBiPoly p11 = norm_sq(c.v1), p22 = norm_sq(c.v2), p12 = inner(c.v1, c.v2);
    CBiPoly w = p11 * p22 - p12 * p12.conj();
    if (w.is_zero()) throw std::domain_error("plucker_norm_sq: v1 ^ v2 vanishes identically");
    return w;
}

CurvatureResult gauss_curvature(const GrassCurve& c)
{
    CBiPoly w = plucker_norm_sq(c);
    CurvatureResult r;
    r.deg = w.deg_z();
    if (r.deg <= 0) throw std::domain_error("gauss_curvature: constant curve, degenerate metric");
    if (auto k = is_proportional(w, CBiPoly::one_plus_zzbar_pow(r.deg))) {
        r.plucker_proportional = true;
        r.plucker_c = k->re();
        r.K = Rational(4) / r.deg;
        return r;
    }
    CRatFunc lambda(ll_numerator(w), w * w);
    if (lambda.is_zero()) throw std::domain_error("gauss_curvature: degenerate metric");
    CRatFunc K = CRatFunc::constant(CQuad(-2)) * log_laplacian(lambda) / lambda;
    r.K_func = K;
    if (auto v = K.constant_value())
        if (auto q = as_rational(*v)) r.K = *q;
    return r;
}

int linear_fullness(const GrassCurve& c)
{
    // Row a lists every coefficient of coordinate a in v1 and in v2.
    int d1 = std::max(c.v1.max_degree(), 0) + 1, d2 = std::max(c.v2.max_degree(), 0) + 1;
    Matrix<CQuad> m(c.n);
    for (int a = 0; a < c.n; ++a) {
        for (int k = 0; k < d1; ++k) m[a].push_back(c.v1[a].coeff(k));
        for (int k = 0; k < d2; ++k) m[a].push_back(c.v2[a].coeff(k));
    }
    return rank_by_elimination(std::move(m));
}

int linear_fullness_numeric(const GrassCurve& c, double tol)
{
    // Hermitian Gram H = X X^* of the coefficient matrix, as the real
    // symmetric matrix [[Re, -Im], [Im, Re]] whose rank is twice rank(H).
    int n = c.n;
    int d1 = std::max(c.v1.max_degree(), 0) + 1, d2 = std::max(c.v2.max_degree(), 0) + 1;
    std::vector<std::vector<Complex>> X(n);
    for (int a = 0; a < n; ++a) {
        for (int k = 0; k < d1; ++k) X[a].push_back(c.v1[a].coeff(k).to_complex());
        for (int k = 0; k < d2; ++k) X[a].push_back(c.v2[a].coeff(k).to_complex());
    }
    RealMatrix R(2 * n, std::vector<double>(2 * n, 0.0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Complex h = 0;
            for (std::size_t k = 0; k < X[a].size(); ++k) h += X[a][k] * std::conj(X[b][k]);
            R[a][b] = R[a + n][b + n] = h.real();
            R[a][b + n] = -h.imag();
            R[a + n][b] = h.imag();
        }
    auto f = jacobi_eigen(R);
    double top = f.lambda_sq.empty() ? 0 : std::abs(f.lambda_sq.front());
    int rank = 0;
    for (double v : f.lambda_sq) rank += std::abs(v) > tol * std::max(top, 1.0);
    return rank / 2;
}

bool section_unramified(const CVec& f)
{
    // A common zero of the components is a zero of |u23|^2, and so of
    // |det A1|, even though the projective map extends across it.
    auto tower = osculating_tower(f, 1);
    if (tower.h[0].degree() != 0) return false;
    if (tower.top() < 1) return false;  // a line has no first osculating curve
    if (tower.h[1].degree() != 0) return false;
    int delta0 = tower.norm_sq[0].deg_z(), delta1 = tower.norm_sq[1].deg_z();
    return delta1 == 2 * delta0 - 2;
}

bool unramified_check(const GrassCurve& c)
{
    const FamilyParams& fp = require_meta(c, "unramified_check");
    if (1 - fp.t * fp.t <= 0) return false;
    if (!fp.valid) return false;
    return gram_unramified(fp.C);
}

bool gram_unramified(const SymRatMatrix& C)
{
    // The columns of P span the same space as the components of f, so their
    // gcd is the content of f; likewise F1 for the first osculating curve.
    BiPoly<Rational> P = section_norm_sq(C);
    BiPoly<Rational> F1 = ll_numerator(P);
    if (P.is_zero() || F1.is_zero()) return false;
    return column_content(P).degree() == 0 && column_content(F1).degree() == 0 && F1.deg_z() == 2 * P.deg_z() - 2;
}

DetA1 det_a1_sq(const GrassCurve& c)
{
    const FamilyParams& fp = require_meta(c, "det_a1_sq");
    int d = fp.d;
    BiPoly<Rational> P = section_norm_sq(fp.C);
    BiPoly<Rational> F1 = ll_numerator(P);
    Rational k = (1 - fp.t * fp.t) / (fp.c * fp.c * (d + 1) * (d + 1));
    DetA1 r{CRatFunc(lift(k * F1), lift(BiPoly<Rational>::one_plus_zzbar_pow(2 * d - 2))), false};
    r.nowhere_zero = gram_unramified(fp.C);
    return r;
}

CRatFunc det_a1_sq_intrinsic(const GrassCurve& c)
{
    std::vector<const CVec*> x;
    CVec d1 = dz(c.v1), d2 = dz(c.v2);
    x = {&c.v1, &c.v2, &d1, &d2};
    std::vector<std::vector<CBiPoly>> G(4, std::vector<CBiPoly>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            G[a][b] = inner(*x[a], *x[b]);
            if (b != a) G[b][a] = G[a][b].conj();
        }
    CBiPoly g4 = small_det(G);
    CBiPoly w = plucker_norm_sq(c);
    CBiPoly l = ll_numerator(w);
    if (l.is_zero()) throw std::domain_error("det_a1_sq_intrinsic: degenerate metric");
    return CRatFunc(g4 * w * w, l * l);
}

SecondFF second_ff(const GrassCurve& c, const Rational& K)
{
    CRatFunc det = det_a1_sq_intrinsic(c);
    SecondFF s;
    s.S = CRatFunc::constant(CQuad(Rational(2) * (4 - K))) - CQuad(16) * det;
    if (auto v = s.S.constant_value()) {
        s.constant = true;
        s.value = v->re();
    }
    return s;
}

SecondFF second_ff(const GrassCurve& c)
{
    auto k = gauss_curvature(c);
    if (!k.K) throw NonConstantCurvature("second_ff: curvature is not constant");
    return second_ff(c, *k.K);
}

CurveReport curve_report(const GrassCurve& c)
{
    CurveReport r;
    r.n = c.n;
    auto k = gauss_curvature(c);
    r.K = k.K;
    r.plucker_proportional = k.plucker_proportional;
    r.plucker_c = k.plucker_c;
    r.deg = k.deg;
    r.full_in = linear_fullness(c);
    if (c.meta) {
        r.unramified = unramified_check(c);
        auto det = det_a1_sq(c);
        r.detA1_sq = det.value;
        r.detA1_nowhere_zero = det.nowhere_zero;
    } else {
        r.warnings.push_back("no family metadata: unramified and family |det A1|^2 checks skipped");
    }
    if (r.K) {
        auto s = second_ff(c, *r.K);
        r.S = s.S;
        r.S_constant = s.constant;
        r.S_value = s.value;
        if (r.detA1_sq) {
            CRatFunc lhs = CRatFunc::constant(CQuad(*r.K)) + CQuad(make_rational(1, 2)) * *r.S + CQuad(8) * *r.detA1_sq;
            r.gauss_identity = lhs == CRatFunc::constant(CQuad(4));
        }
    } else {
        r.warnings.push_back("curvature is not constant: second fundamental form skipped");
    }
    return r;
}

bool operator==(const CurveReport& a, const CurveReport& b)
{
    return a.n == b.n && a.K == b.K && a.plucker_proportional == b.plucker_proportional &&
           a.plucker_c == b.plucker_c && a.full_in == b.full_in && a.deg == b.deg && a.unramified == b.unramified &&
           a.detA1_sq == b.detA1_sq && a.detA1_nowhere_zero == b.detA1_nowhere_zero && a.S == b.S &&
           a.S_constant == b.S_constant && a.S_value == b.S_value && a.gauss_identity == b.gauss_identity;
}

}  // namespace ccs
