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

#ifndef CCS_HARMONIC_HPP
#define CCS_HARMONIC_HPP

#include "ccs/poly.hpp"

#include <stdexcept>
#include <vector>

namespace ccs {

class RamificationMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Osculating curves F_p = f0 ^ f0' ^ ... ^ f0^(p) with their contents.
template <class F>
struct OsculatingTower {
    HoloVec<F> f0;
    std::vector<HoloVec<F>> F_full;     // F_p, coordinates over (p+1)-subsets
    std::vector<Poly<F>> h;             // monic content of F_p
    std::vector<HoloVec<F>> F_tilde;    // primitive part
    std::vector<BiPoly<F>> norm_sq;     // |F_tilde_p|^2
    /// True when the tower ran until F_{k+1} = 0 or p = n-1, so that
    /// top() is the projective dimension the curve is full in.
    bool complete = false;

    int top() const { return static_cast<int>(F_full.size()) - 1; }
};

/// Degrees and ramification indices of a tower.
template <class F>
struct SequenceInvariants {
    std::vector<int> deltas;         // delta_p, p = 0..top
    std::vector<int> ramifications;  // r_p from the Plucker identity
    std::vector<int> ram_finite;     // divisor route: zeros in C
    std::vector<int> ram_infinity;   // divisor route: zero order at infinity
    std::vector<RatBiFunc<F>> ells;  // l_p, p = 0..top-1
    int full_in = 0;                 // k with the curve full in CP^k, -1 if truncated
};

/// Build the tower up to p = max_p (or until it terminates when max_p < 0).
template <class F>
OsculatingTower<F> osculating_tower(const HoloVec<F>& f0, int max_p = -1)
{
    if (f0.is_zero()) throw std::domain_error("osculating_tower: zero section");
    OsculatingTower<F> t;
    t.f0 = f0;
    int n = static_cast<int>(f0.size());
    HoloVec<F> deriv = f0;
    HoloVec<F> current = f0;
    for (int p = 0;; ++p) {
        if (p > 0) {
            deriv = dz(deriv);
            current = wedge_k(current, p, deriv);
            if (current.is_zero()) {
                t.complete = true;
                break;
            }
        }
        auto [g, prim] = content_and_primitive(current);
        t.F_full.push_back(current);
        t.h.push_back(g);
        t.norm_sq.push_back(norm_sq(prim));
        t.F_tilde.push_back(std::move(prim));
        if (p == n - 1) {
            t.complete = true;
            break;
        }
        if (max_p >= 0 && p == max_p) break;
    }
    return t;
}

/// l_p = |F_{p-1}|^2 |F_{p+1}|^2 / |F_p|^4 for p = 0..top-1 (F_{-1} = 1).
template <class F>
std::vector<RatBiFunc<F>> ell_sequence(const OsculatingTower<F>& tower)
{
    std::vector<BiPoly<F>> full;
    for (int p = 0; p <= tower.top(); ++p) full.push_back(norm_sq(tower.F_full[p]));
    std::vector<RatBiFunc<F>> ells;
    for (int p = 0; p < tower.top(); ++p) {
        BiPoly<F> prev = p == 0 ? BiPoly<F>::constant(F(1)) : full[p - 1];
        if (full[p].is_zero()) throw std::domain_error("ell_sequence: zero norm");
        ells.emplace_back(prev * full[p + 1], full[p] * full[p]);
    }
    return ells;
}

namespace detail {

/// Orders at w = 0 of the contents of the tower of w^D f0(1/w).
template <class F>
std::vector<int> orders_at_infinity(const HoloVec<F>& f0, int levels)
{
    int D = f0.max_degree();
    HoloVec<F> inv;
    for (const auto& p : f0.e) inv.e.push_back(p.is_zero() ? p : p.reversed(D));
    auto tower = osculating_tower(inv, levels);
    std::vector<int> v;
    for (const auto& g : tower.h) v.push_back(g.valuation());
    return v;
}

}  // namespace detail

/// delta_p = deg_z |F_tilde_p|^2 and r_p computed twice: from the global
/// Plucker identity and from the zero divisors of the contents (finite part
/// plus the part at infinity).  A disagreement throws RamificationMismatch.
template <class F>
SequenceInvariants<F> sequence_invariants(const OsculatingTower<F>& tower, bool with_ells = true)
{
    SequenceInvariants<F> s;
    int k = tower.top();
    for (int p = 0; p <= k; ++p) s.deltas.push_back(tower.norm_sq[p].deg_z());
    s.full_in = tower.complete ? k : -1;

    auto delta = [&](int p) { return p < 0 ? 0 : s.deltas[p]; };
    auto hdeg = [&](int p) { return p < 0 ? 0 : tower.h[p].degree(); };
    std::vector<int> vinf = detail::orders_at_infinity(tower.f0, k);
    auto vdeg = [&](int p) { return p < 0 || p > k ? 0 : vinf[p]; };

    for (int p = 0; p < k; ++p) {
        int plucker = 2 * delta(p) - delta(p - 1) - delta(p + 1) - 2;
        int finite = hdeg(p - 1) - 2 * hdeg(p) + hdeg(p + 1);
        int at_inf = vdeg(p - 1) - 2 * vdeg(p) + vdeg(p + 1);
        if (plucker != finite + at_inf)
            throw RamificationMismatch("ramification mismatch at p=" + std::to_string(p) + ": Plucker " +
                                       std::to_string(plucker) + " vs divisors " + std::to_string(finite + at_inf));
        s.ramifications.push_back(plucker);
        s.ram_finite.push_back(finite);
        s.ram_infinity.push_back(at_inf);
    }
    if (with_ells) s.ells = ell_sequence(tower);
    return s;
}

/// Checks d/dz d/dzbar log |F_p|^2 = l_p for every p with l_p defined.
template <class F>
bool check_ell_identity(const OsculatingTower<F>& tower)
{
    auto ells = ell_sequence(tower);
    for (int p = 0; p < static_cast<int>(ells.size()); ++p)
        if (log_laplacian(norm_sq(tower.F_full[p])) != ells[p]) return false;
    return true;
}

/// Member of the harmonic sequence: a vector of bivariate numerators over a
/// common bivariate denominator.
template <class F>
struct HarmonicTerm {
    std::vector<BiPoly<F>> num;
    BiPoly<F> den;

    static HarmonicTerm from_holo(const HoloVec<F>& v)
    {
        HarmonicTerm t;
        for (const auto& p : v.e) t.num.push_back(BiPoly<F>::from_z(p));
        t.den = BiPoly<F>::constant(F(1));
        return t;
    }
    /// sum_a N_a conj(N_a), the numerator of |f|^2.
    BiPoly<F> num_norm_sq() const
    {
        BiPoly<F> q;
        for (const auto& x : num) q += x * x.conj();
        return q;
    }
    RatBiFunc<F> norm_sq() const { return RatBiFunc<F>(num_norm_sq(), den * den.conj()); }
};

/// f_i = d f_{i-1}/dz - (<d f_{i-1}/dz, f_{i-1}> / |f_{i-1}|^2) f_{i-1}.
/// With f = N / Delta and Q = |N|^2 this is (dN Q - <dN, N> N) / (Delta Q).
template <class F>
HarmonicTerm<F> harmonic_next(const HarmonicTerm<F>& prev, const RatBiFunc<F>& norm_prev)
{
    BiPoly<F> Q = prev.num_norm_sq();
    if (Q.is_zero()) throw std::domain_error("harmonic_next: zero norm");
    if (norm_prev != prev.norm_sq()) throw std::invalid_argument("harmonic_next: norm_prev is not |f_prev|^2");
    BiPoly<F> pairing;
    std::vector<BiPoly<F>> dN;
    for (const auto& x : prev.num) {
        dN.push_back(x.dz());
        pairing += dN.back() * x.conj();
    }
    HarmonicTerm<F> next;
    for (std::size_t a = 0; a < prev.num.size(); ++a) next.num.push_back(dN[a] * Q - pairing * prev.num[a]);
    next.den = prev.den * Q;
    return next;
}

/// First `count` members f_0..f_{count-1}; each step is checked against
/// the telescoping identity |f_p|^2 |F_{p-1}|^2 = |F_p|^2.
template <class F>
std::vector<HarmonicTerm<F>> harmonic_sequence(const HoloVec<F>& f0, int count)
{
    auto tower = osculating_tower(f0, count - 1);
    std::vector<HarmonicTerm<F>> seq{HarmonicTerm<F>::from_holo(f0)};
    for (int p = 1; p < count && p <= tower.top(); ++p) {
        seq.push_back(harmonic_next(seq.back(), seq.back().norm_sq()));
        RatBiFunc<F> lhs = seq.back().norm_sq() * RatBiFunc<F>::poly(norm_sq(tower.F_full[p - 1]));
        if (lhs != RatBiFunc<F>::poly(norm_sq(tower.F_full[p])))
            throw std::logic_error("harmonic_sequence: telescoping norm identity failed");
    }
    return seq;
}

/// Rational normal curve (sqrt C(m,p) z^p)_p.
HoloVec<CQuad> veronese(int m);

struct VeroneseInvariants {
    Rational K;
    Rational cos_alpha;
};

/// Curvature 4/(m + 2i(m-i)) and Kahler angle cosine (m-2i)/(m + 2i(m-i))
/// of the i-th member of the degree-m Veronese sequence.
VeroneseInvariants veronese_invariants(int m, int i);

}  // namespace ccs

#endif
