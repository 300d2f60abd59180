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

#include "ccs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace ccs {

namespace {

double frobenius(const RealMatrix& m)
{
    double s = 0;
    for (const auto& row : m)
        for (double x : row) s += x * x;
    return std::sqrt(s);
}

QPoly P(std::vector<long> c) { return QPoly(std::vector<Rational>(c.begin(), c.end())); }

QPoly one_minus_t_pow(int k)
{
    QPoly r = QPoly::constant(1);
    for (int i = 0; i < k; ++i) r = r * P({1, -1});
    return r;
}

}  // namespace

ScaledGram scaled_gram(const FamilyParams& fp)
{
    ScaledGram g;
    g.d = fp.d;
    g.t = fp.t;
    g.C = fp.C;
    int n = fp.d + 1;
    g.M.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.M[i][j] = fp.C(i, j).get_d() / std::sqrt(binomial(fp.d, i).get_d() * binomial(fp.d, j).get_d());
    return g;
}

Matrix<QuadScalar> scaled_gram_exact(const SymRatMatrix& C)
{
    int n = C.size(), d = n - 1;
    Matrix<QuadScalar> m(n, std::vector<QuadScalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = QuadScalar(C(i, j)) *
                      QuadScalar::sqrt_of(Rational(1) / Rational(binomial(d, i) * binomial(d, j)));
    return m;
}

SpectralFactorization jacobi_eigen(const RealMatrix& M, double tol, int q, double gap_tol)
{
    int n = static_cast<int>(M.size());
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != n) throw DimensionError("jacobi_eigen: matrix is not square");
    double norm = frobenius(M);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (std::abs(M[i][j] - M[j][i]) > 1e-12 * std::max(1.0, norm))
                throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");

    RealMatrix A = M;
    RealMatrix V(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) V[i][i] = 1;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) off += A[i][j] * A[i][j];
        if (std::sqrt(off) <= tol * std::max(norm, 1e-300)) break;
        for (int p = 0; p < n; ++p)
            for (int r = p + 1; r < n; ++r) {
                if (A[p][r] == 0) continue;
                double theta = (A[r][r] - A[p][p]) / (2 * A[p][r]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = A[k][p], akr = A[k][r];
                    A[k][p] = c * akp - s * akr;
                    A[k][r] = s * akp + c * akr;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = A[p][k], ark = A[r][k];
                    A[p][k] = c * apk - s * ark;
                    A[r][k] = s * apk + c * ark;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = V[k][p], vkr = V[k][r];
                    V[k][p] = c * vkp - s * vkr;
                    V[k][r] = s * vkp + c * vkr;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return A[a][a] > A[b][b]; });

    SpectralFactorization f;
    f.W.assign(n, std::vector<double>(n, 0.0));
    for (int k = 0; k < n; ++k) {
        int src = order[k];
        f.lambda_sq.push_back(A[src][src]);
        // Sign convention: the first clearly nonzero entry is positive.
        double sign = 1;
        for (int i = 0; i < n; ++i)
            if (std::abs(V[i][src]) > 1e-12) {
                sign = V[i][src] < 0 ? -1 : 1;
                break;
            }
        for (int i = 0; i < n; ++i) f.W[i][k] = sign * V[i][src];
    }

    if (q > 0) {
        if (q > n) throw std::invalid_argument("jacobi_eigen: q exceeds the dimension");
        std::vector<int> by_mag(n);
        std::iota(by_mag.begin(), by_mag.end(), 0);
        std::stable_sort(by_mag.begin(), by_mag.end(),
                         [&](int a, int b) { return std::abs(f.lambda_sq[a]) < std::abs(f.lambda_sq[b]); });
        for (int k = 0; k < q; ++k) {
            double& v = f.lambda_sq[by_mag[k]];
            if (std::abs(v) > gap_tol * std::max(norm, 1.0))
                throw std::runtime_error("jacobi_eigen: eigenvalue above the rank-gap threshold would be zeroed");
            v = 0;
        }
        f.q = q;
        // Keep the zeroed eigenvalues at the tail.
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return f.lambda_sq[a] > f.lambda_sq[b]; });
        SpectralFactorization g = f;
        for (int k = 0; k < n; ++k) {
            g.lambda_sq[k] = f.lambda_sq[idx[k]];
            for (int i = 0; i < n; ++i) g.W[i][k] = f.W[i][idx[k]];
        }
        f = g;
    } else if (q == 0) {
        f.q = 0;
    }

    for (double v : f.lambda_sq) f.D.push_back(std::sqrt(std::max(v, 0.0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double r = 0, o = 0;
            for (int k = 0; k < n; ++k) {
                r += f.W[i][k] * f.lambda_sq[k] * f.W[j][k];
                o += f.W[k][i] * f.W[k][j];
            }
            f.residual = std::max(f.residual, std::abs(M[i][j] - r));
            f.orthogonality = std::max(f.orthogonality, std::abs(o - (i == j ? 1.0 : 0.0)));
        }
    return f;
}

SpectralFactorization factorize(const FamilyParams& fp)
{
    return jacobi_eigen(scaled_gram(fp).M, 1e-14, fp.q());
}

HoloVec<Complex> reconstruct_section(const FamilyParams& fp, const SpectralFactorization& fact)
{
    int n = fp.d + 1;
    if (static_cast<int>(fact.W.size()) != n) throw DimensionError("reconstruct_section: size mismatch");
    HoloVec<Complex> f;
    for (int k = 0; k < n; ++k) {
        if (fact.lambda_sq[k] == 0) continue;
        std::vector<Complex> c(n);
        for (int i = 0; i < n; ++i) c[i] = fact.D[k] * fact.W[i][k] * std::sqrt(binomial(fp.d, i).get_d());
        f.e.emplace_back(std::move(c));
    }
    BiPoly<Complex> want = section_norm_sq(fp.C).map<Complex>([](const Rational& x) { return Complex(x.get_d()); });
    BiPoly<Complex> got = norm_sq(f);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            Complex z(-1.4 + 0.7 * a * 2 / 3, -1.4 + 0.7 * b * 2 / 3);
            Complex w = want.eval_numeric(z), g = got.eval_numeric(z);
            if (std::abs(w - g) > 1e-9 * std::max(1.0, std::abs(w)))
                throw std::runtime_error("reconstruct_section: residual too large");
        }
    return f;
}

HoloVec<CQuad> exact_section(const FamilyParams& fp)
{
    if (!fp.valid) throw InvalidParameter("exact_section: invalid family");
    auto ldl = ldl_psd(fp.C.e, [](const Rational& x) { return sgn(x); });
    HoloVec<CQuad> f;
    for (int k = 0; k < ldl.rank(); ++k) {
        QuadScalar s = QuadScalar::sqrt_of(ldl.pivots[k]);
        std::vector<CQuad> c;
        for (const auto& x : ldl.cols[k]) c.push_back(CQuad(s * QuadScalar(x)));
        f.e.emplace_back(std::move(c));
    }
    return f;
}

QPoly det_numerator(int d)
{
    static std::mutex mu;
    static std::map<int, QPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    Matrix<QPoly> m(d + 1, std::vector<QPoly>(d + 1));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) m[i][j] = coeff_c_numerator(d, i, j);
    QPoly det = bareiss_det(std::move(m));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(d, det).first->second;
}

QPoly singular_polynomial(int d)
{
    QPoly n = det_numerator(d);
    if (n.is_zero()) throw std::logic_error("singular_polynomial: determinant vanishes identically");
    QPoly s = squarefree_part(n);
    QPoly D = D_denom_poly(d);
    for (;;) {
        QPoly g = gcd(s, D);
        if (g.degree() <= 0) break;
        s = exact_div(s, g);
    }
    return s.monic();
}

SingularT find_singular_t(int d, const Rational& lo, const Rational& hi, const Rational& width)
{
    if (!(lo < hi)) throw std::invalid_argument("find_singular_t: empty bracket");
    if (width <= 0) throw std::invalid_argument("find_singular_t: width must be positive");
    auto roots = isolate_roots(singular_polynomial(d), lo, hi);
    if (roots.empty())
        throw NoSingularPoint("no singular parameter for d = " + std::to_string(d) + " in (" + to_string(lo) + ", " +
                              to_string(hi) + ")");
    SingularT s;
    s.count = static_cast<int>(roots.size());
    s.root = roots.front();
    refine(s.root, width);
    s.exact = s.root.is_exact();
    s.value = s.exact ? s.root.lo : s.root.midpoint();
    return s;
}

AlgebraicFamilyInfo family_at(int d, const AlgebraicReal& t)
{
    auto field = std::make_shared<AlgebraicField>(t);
    auto num = [&](const QPoly& p) { return AlgNum(field, p); };
    AlgNum D = num(D_denom_poly(d));
    if (D.is_zero()) throw InvalidParameter("family_at: denominator vanishes at the root");
    int sD = D.sign();

    AlgebraicFamilyInfo info;
    // alpha_0^2 = (-1)^{d+1} t^{d+1} / D has the sign of (-1)^{d+1} t^{d+1} D.
    int st = num(P({0, 1})).sign();
    int sa = ((d + 1) % 2 ? -1 : 1) * ((d + 1) % 2 ? st : st * st) * sD;
    info.alpha_nonneg = sa >= 0;

    // C = N / D, so C is PSD iff sign(D) N is.
    Matrix<AlgNum> m(d + 1, std::vector<AlgNum>(d + 1));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) m[i][j] = num(Rational(sD) * coeff_c_numerator(d, i, j));
    info.rank = exact_rank(m);
    info.psd = ldl_psd(m, [](const AlgNum& x) { return x.sign(); }).psd;
    return info;
}

std::optional<std::vector<QPoly>> closed_form_lambda_sq_numerators(int d)
{
    Rational half = make_rational(1, 2), third = make_rational(1, 3);
    switch (d) {
    case 2:
        return std::vector<QPoly>{one_minus_t_pow(2), one_minus_t_pow(1) * P({1, -2}), P({1, -4, 7})};
    case 3:
        return std::vector<QPoly>{one_minus_t_pow(3), third * (one_minus_t_pow(2) * P({3, -5})),
                                  third * (one_minus_t_pow(1) * P({3, -10, 11})), P({1, -3}) * P({1, -2, 5})};
    case 4:
        return std::vector<QPoly>{one_minus_t_pow(4), half * (one_minus_t_pow(3) * P({2, -3})),
                                  third * (one_minus_t_pow(2) * P({3, -9, 8})),
                                  half * (one_minus_t_pow(1) * P({2, -9, 16, -13})), P({1, -6, 16, -26, 31})};
    default:
        return std::nullopt;
    }
}

std::optional<std::vector<Rational>> closed_form_lambda_sq(int d, const Rational& t)
{
    auto nums = closed_form_lambda_sq_numerators(d);
    if (!nums) return std::nullopt;
    Rational D = D_denom(d, t);
    if (D == 0) throw InvalidParameter("closed_form_lambda_sq: denominator vanishes");
    std::vector<Rational> out;
    for (const auto& p : *nums) out.push_back(p.eval(t) / D);
    return out;
}

std::optional<std::vector<QuadScalar>> closed_form_lambdas(int d, const Rational& t)
{
    auto sq = closed_form_lambda_sq(d, t);
    if (!sq) return std::nullopt;
    std::vector<QuadScalar> out;
    for (const auto& v : *sq) out.push_back(QuadScalar::sqrt_of(v));
    return out;
}

std::optional<Matrix<QuadScalar>> closed_form_W(int d)
{
    auto r = [](long a, long b) { return QuadScalar(make_rational(a, b)); };
    auto s = [](long a, long b) { return QuadScalar::sqrt_of(make_rational(a, b)); };
    switch (d) {
    case 2:
        return Matrix<QuadScalar>{{r(1, 2), -s(1, 2), r(1, 2)}, {-s(1, 2), r(0, 1), s(1, 2)}, {r(1, 2), s(1, 2), r(1, 2)}};
    case 3:
        return Matrix<QuadScalar>{{-s(1, 8), s(3, 8), -s(3, 8), s(1, 8)},
                                  {s(3, 8), -s(1, 8), -s(1, 8), s(3, 8)},
                                  {-s(3, 8), -s(1, 8), s(1, 8), s(3, 8)},
                                  {s(1, 8), s(3, 8), s(3, 8), s(1, 8)}};
    case 4:
        return Matrix<QuadScalar>{{r(1, 4), -r(1, 2), s(3, 8), -r(1, 2), r(1, 4)},
                                  {-r(1, 2), r(1, 2), r(0, 1), -r(1, 2), r(1, 2)},
                                  {s(6, 16), r(0, 1), -r(1, 2), r(0, 1), s(6, 16)},
                                  {-r(1, 2), -r(1, 2), r(0, 1), r(1, 2), r(1, 2)},
                                  {r(1, 4), r(1, 2), s(3, 8), r(1, 2), r(1, 4)}};
    default:
        return std::nullopt;
    }
}

std::optional<Rational> nonempty_delta_witness(int d, int max_den)
{
    for (int m = 2; m <= max_den; ++m)
        for (int k = 1; k < m; ++k) {
            if (std::gcd(k, m) != 1) continue;
            for (int sign : {1, -1}) {
                Rational t = make_rational(sign * k, m);
                if (D_denom(d, t) == 0) continue;
                auto fp = build_family(d, t);
                if (fp.valid && fp.rank == d + 1) return t;
            }
        }
    return std::nullopt;
}

MultiplicityScan multiplicity_two_scan(int d, const Rational& step)
{
    if (step <= 0) throw std::invalid_argument("multiplicity_two_scan: step must be positive");
    MultiplicityScan s;
    s.min_rank = d + 1;
    for (Rational t = -1 + step; t < 1; t += step) {
        if (D_denom(d, t) == 0) continue;
        s.min_rank = std::min(s.min_rank, exact_rank(coeff_matrix(d, t)));
        ++s.grid_points;
    }
    for (const auto& r : isolate_roots(singular_polynomial(d), -1, 1))
        s.max_root_nullity = std::max(s.max_root_nullity, d + 1 - family_at(d, r).rank);

    s.pairwise_common_root = false;
    if (auto nums = closed_form_lambda_sq_numerators(d)) {
        for (std::size_t i = 0; i < nums->size(); ++i)
            for (std::size_t j = i + 1; j < nums->size(); ++j) {
                QPoly g = gcd((*nums)[i], (*nums)[j]);
                if (g.degree() > 0 && !isolate_roots(g, -1, 1).empty()) s.pairwise_common_root = true;
            }
    }
    return s;
}

}  // namespace ccs
