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

#ifndef CCS_SQUAREFREE_HPP
#define CCS_SQUAREFREE_HPP

#include "ccs/rational.hpp"

#include <utility>
#include <vector>

namespace ccs {

/// Prime factorisation of n > 0 as (prime, exponent) pairs in increasing
/// order.  Trial division up to 10^6, then Pollard-Brent.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// n = outer^2 * core with core a product of distinct radical atoms.
///
/// Atoms are pairwise coprime integers > 1 that are not perfect squares:
/// primes, and composites a bounded Pollard search could not split.  The
/// set is shared process-wide and only ever refined.
struct SquarefreeSplit {
    Integer outer;
    Integer core;
};

/// Results are memoised behind a mutex, so concurrent callers are safe.
SquarefreeSplit squarefree_split(const Integer& n);

/// The distinct atoms of a core returned by squarefree_split (memoised).
std::vector<Integer> radical_atoms(const Integer& n);

}  // namespace ccs

#endif
