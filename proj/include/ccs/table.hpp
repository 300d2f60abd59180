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

#ifndef CCS_TABLE_HPP
#define CCS_TABLE_HPP

#include "ccs/json_io.hpp"
#include "ccs/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccs {

enum class CellKind { Blank, Family, Single, None };

std::string to_string(CellKind k);

/// One cell of the (r, n) grid of non-homogeneous examples, r = d + 1.
struct TableCell {
    int r = 0;
    int n = 0;
    CellKind kind = CellKind::Blank;
    std::optional<Rational> K;  // from a constructed curve
    std::string where;          // parameter of the example(s)
    std::string evidence;       // what the pipeline checked

    friend bool operator==(const TableCell& a, const TableCell& b)
    {
        return a.r == b.r && a.n == b.n && a.kind == b.kind && a.K == b.K;
    }
};

struct Table1 {
    std::vector<TableCell> cells;  // row-major in n, then r
    const TableCell& at(int r, int n) const;
};

/// Derives each cell from the family: n = d + 3 - q requires nullity q.
/// q = 0 uses a full-rank witness parameter, q >= 1 the exact singular
/// parameters in (-1, 1) where the family is valid with nullity q.
TableCell derive_cell(int r, int n);
Table1 derive_table1(int r_min = 3, int r_max = 5, int n_min = 5, int n_max = 7);

std::string render_markdown(const Table1& t);
Json table_to_json(const Table1& t);

}  // namespace ccs

#endif
