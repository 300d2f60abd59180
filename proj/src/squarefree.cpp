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

#include "ccs/squarefree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace ccs {

namespace {

constexpr unsigned long kTrialBound = 1000000;

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_probable_prime(const Integer& n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Brent's variant of Pollard rho.  Returns a nontrivial factor of the
// composite n, trying successive polynomial constants on failure.  With a
// budget, gives up (returning 1) once that many steps have been spent.
Integer pollard_brent(const Integer& n, unsigned long budget = 0)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    unsigned long spent = 0;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1, tmp;
        unsigned long r = 1, m = 128;
        auto step = [&](Integer& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    tmp = abs(x - y);
                    q = q * tmp;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
            spent += r;
            if (budget && spent > budget) return 1;
        }
        if (g == n) {
            do {
                step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

Integer trial_divide(Integer n, std::map<Integer, unsigned>& out)
{
    for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Integer(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1 && n <= Integer(kTrialBound) * kTrialBound) {
        ++out[n];
        return 1;
    }
    return n;
}

void split_large(const Integer& n, std::map<Integer, unsigned>& out)
{
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split_large(root, out);
        split_large(root, out);
        return;
    }
    Integer f = pollard_brent(n);
    split_large(f, out);
    split_large(n / f, out);
}

// Radical atoms.  Every radicand is written over a set of pairwise coprime
// integers > 1, none a perfect square: the primes found so far plus
// composites that resisted a bounded Pollard search ("hard" atoms).  Square
// roots of products of distinct atoms are linearly independent over Q, so
// this is as canonical as a full factorisation.  A hard atom is split when a
// later radicand shares a factor with it.
constexpr unsigned long kPollardBudget = 1ul << 17;

struct AtomBase {
    std::mutex mu;
    std::set<Integer> large;  // atoms above the trial-division bound
    std::map<Integer, SquarefreeSplit> split_cache;
    std::map<Integer, std::vector<Integer>> atom_cache;
};

AtomBase& atom_base()
{
    static AtomBase b;
    return b;
}

void decompose_locked(AtomBase& base, const Integer& n, unsigned mult, std::map<Integer, unsigned>& out);

// Replaces the hard atom h by its decomposition over a refined base.
void refine_hard_locked(AtomBase& base, Integer h, const Integer& g)
{
    base.large.erase(h);
    base.split_cache.clear();
    base.atom_cache.clear();
    std::map<Integer, unsigned> parts;
    decompose_locked(base, g, 1, parts);
    decompose_locked(base, h / g, 1, parts);
    for (const auto& [a, e] : parts)
        if (e > 1)
            throw std::logic_error("radical atoms: refinement exposed a square factor in an existing radicand");
}

void decompose_locked(AtomBase& base, const Integer& n, unsigned mult, std::map<Integer, unsigned>& out)
{
    std::vector<std::pair<Integer, unsigned>> work;
    {
        std::map<Integer, unsigned> small;
        Integer rest = trial_divide(n, small);
        for (const auto& [p, e] : small) {
            if (p > kTrialBound)
                work.emplace_back(p, e * mult);
            else
                out[p] += e * mult;
        }
        if (rest > 1) work.emplace_back(rest, mult);
    }
    while (!work.empty()) {
        auto [x, m] = work.back();
        work.pop_back();
        if (x == 1) continue;
        if (mpz_perfect_square_p(x.get_mpz_t())) {
            Integer root;
            mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
            work.emplace_back(root, 2 * m);
            continue;
        }
        if (base.large.count(x)) {
            out[x] += m;
            continue;
        }
        bool split = false;
        for (Integer h : base.large) {
            Integer g = gcd(x, h);
            if (g == 1) continue;
            if (g != h) refine_hard_locked(base, h, g);
            work.emplace_back(g, m);
            work.emplace_back(x / g, m);
            split = true;
            break;
        }
        if (split) continue;
        if (is_probable_prime(x)) {
            base.large.insert(x);
            out[x] += m;
            continue;
        }
        Integer f = pollard_brent(x, kPollardBudget);
        if (f != 1 && f != x) {
            work.emplace_back(f, m);
            work.emplace_back(x / f, m);
            continue;
        }
        base.large.insert(x);
        out[x] += m;
    }
}

std::map<Integer, unsigned> decompose(const Integer& n)
{
    AtomBase& base = atom_base();
    std::lock_guard<std::mutex> lock(base.mu);
    for (;;) {
        std::map<Integer, unsigned> out;
        decompose_locked(base, n, 1, out);
        // A refinement in the middle may have split an atom already
        // collected; decompose again against the settled base.
        bool stable = true;
        for (const auto& kv : out)
            if (kv.first > kTrialBound && !base.large.count(kv.first)) stable = false;
        if (stable) return out;
    }
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n_in)
{
    if (n_in <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::map<Integer, unsigned> found;
    Integer n = trial_divide(n_in, found);
    if (n > 1) split_large(n, found);
    return {found.begin(), found.end()};
}

SquarefreeSplit squarefree_split(const Integer& n)
{
    if (n <= 0) throw std::invalid_argument("squarefree_split: n must be positive");
    AtomBase& base = atom_base();
    {
        std::lock_guard<std::mutex> lock(base.mu);
        auto it = base.split_cache.find(n);
        if (it != base.split_cache.end()) return it->second;
    }
    SquarefreeSplit s{1, 1};
    for (const auto& [a, e] : decompose(n)) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), a.get_mpz_t(), e / 2);
        s.outer *= pe;
        if (e % 2) s.core *= a;
    }
    std::lock_guard<std::mutex> lock(base.mu);
    base.split_cache.emplace(n, s);
    return s;
}

std::vector<Integer> radical_atoms(const Integer& n)
{
    AtomBase& base = atom_base();
    {
        std::lock_guard<std::mutex> lock(base.mu);
        auto it = base.atom_cache.find(n);
        if (it != base.atom_cache.end()) return it->second;
    }
    std::vector<Integer> atoms;
    for (const auto& [a, e] : decompose(n)) {
        if (e != 1) throw std::invalid_argument("radical_atoms: argument is not squarefree over the atoms");
        atoms.push_back(a);
    }
    std::lock_guard<std::mutex> lock(base.mu);
    base.atom_cache.emplace(n, atoms);
    return atoms;
}

}  // namespace ccs
