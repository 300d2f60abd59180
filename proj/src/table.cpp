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

#include "ccs/table.hpp"

#include "ccs/curve.hpp"
#include "ccs/spectral.hpp"

#include <sstream>
#include <stdexcept>

namespace ccs {

namespace {

std::string describe_root(const AlgebraicReal& a)
{
    if (a.is_exact()) return "t = " + to_string(a.lo);
    std::ostringstream os;
    os.precision(15);
    os << "t ~ " << a.approx();
    return os.str();
}

}  // namespace

std::string to_string(CellKind k)
{
    switch (k) {
    case CellKind::Blank: return "";
    case CellKind::Family: return "The family";
    case CellKind::Single: return "The single one";
    case CellKind::None: return "No examples";
    }
    return "";
}

const TableCell& Table1::at(int r, int n) const
{
    for (const auto& c : cells)
        if (c.r == r && c.n == n) return c;
    throw std::out_of_range("Table1: no cell (" + std::to_string(r) + ", " + std::to_string(n) + ")");
}

TableCell derive_cell(int r, int n)
{
    TableCell cell;
    cell.r = r;
    cell.n = n;
    int d = r - 1;
    int q = d + 3 - n;
    if (q < 0) {
        cell.evidence = "n > d + 3: the section has at most d + 1 independent components";
        return cell;
    }
    if (q == 0) {
        auto t = nonempty_delta_witness(d);
        if (!t) {
            cell.kind = CellKind::None;
            cell.evidence = "no full-rank valid parameter found";
            return cell;
        }
        auto curve = build_curve(build_family(d, *t));
        auto report = curve_report(curve);
        cell.kind = CellKind::Family;
        cell.K = report.K;
        cell.where = "open set of t, e.g. t = " + to_string(*t);
        cell.evidence = "full_in = " + std::to_string(report.full_in) + ", S constant: " +
                        (report.S_constant ? "yes" : "no");
        return cell;
    }

    std::vector<AlgebraicReal> hits;
    std::ostringstream ev;
    const char* sep = "";
    for (AlgebraicReal root : isolate_roots(singular_polynomial(d), -1, 1)) {
        refine(root, make_rational(1, 1000000000000000));
        auto info = family_at(d, root);
        int nullity = d + 1 - info.rank;
        ev << describe_root(root) << ": nullity " << nullity << (info.valid() ? ", valid" : ", invalid");
        if (!info.alpha_nonneg) ev << " (alpha^2 < 0)";
        sep = "; ";
        if (nullity == q && info.valid()) hits.push_back(root);
    }
    if (q >= 2) {
        auto scan = multiplicity_two_scan(d, make_rational(1, 100));
        ev << sep << "grid min rank " << scan.min_rank << ", max nullity at roots " << scan.max_root_nullity;
    }
    cell.evidence = ev.str();
    if (hits.empty()) {
        cell.kind = CellKind::None;
        return cell;
    }
    cell.kind = hits.size() == 1 ? CellKind::Single : CellKind::Family;
    for (const auto& h : hits) {
        if (!cell.where.empty()) cell.where += ", ";
        cell.where += describe_root(h);
    }
    // Curves are built exactly at rational parameters only.
    if (hits.front().is_exact()) {
        auto report = curve_report(build_curve(build_family(d, hits.front().lo)));
        cell.K = report.K;
    }
    return cell;
}

Table1 derive_table1(int r_min, int r_max, int n_min, int n_max)
{
    Table1 t;
    for (int n = n_min; n <= n_max; ++n)
        for (int r = r_min; r <= r_max; ++r) t.cells.push_back(derive_cell(r, n));
    return t;
}

std::string render_markdown(const Table1& t)
{
    int r_min = t.cells.front().r, r_max = t.cells.front().r;
    int n_min = t.cells.front().n, n_max = t.cells.front().n;
    for (const auto& c : t.cells) {
        r_min = std::min(r_min, c.r);
        r_max = std::max(r_max, c.r);
        n_min = std::min(n_min, c.n);
        n_max = std::max(n_max, c.n);
    }
    std::ostringstream os;
    os << "| K = 4/r |";
    for (int r = r_min; r <= r_max; ++r) os << " r = d+1 = " << r << " |";
    os << "\n|---|";
    for (int r = r_min; r <= r_max; ++r) os << "---|";
    os << "\n";
    for (int n = n_min; n <= n_max; ++n) {
        os << "| n = " << n << ", G(2," << n << ") |";
        for (int r = r_min; r <= r_max; ++r) {
            const TableCell& c = t.at(r, n);
            os << " " << to_string(c.kind);
            if (c.kind == CellKind::Single && !c.where.empty()) os << " (" << c.where << ")";
            if (c.K) os << ", K = " << to_string(*c.K);
            os << " |";
        }
        os << "\n";
    }
    return os.str();
}

Json table_to_json(const Table1& t)
{
    Json cells = Json::array();
    for (const auto& c : t.cells)
        cells.push_back({{"r", c.r},
                         {"n", c.n},
                         {"kind", c.kind == CellKind::Blank ? "blank" : to_string(c.kind)},
                         {"K", c.K ? Json(to_string(*c.K)) : Json(nullptr)},
                         {"where", c.where},
                         {"evidence", c.evidence}});
    return {{"cells", cells}};
}

}  // namespace ccs
