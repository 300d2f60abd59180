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

// Command-line front end.  Exit codes:
//   0  success
//   1  a verification failed, K is not constant, or no singular point exists
//   2  the family is invalid at the requested parameter
//   3  malformed or unreadable input file
//   4  the request needs an irrational parameter
//   other nonzero codes are CLI11 usage errors

#include "ccs/curve.hpp"
#include "ccs/json_io.hpp"
#include "ccs/spectral.hpp"
#include "ccs/table.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace ccs;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kMalformed = 3, kIrrational = 4 };

// CLI11 validator accepting only exact "p/q" rationals.
const CLI::Validator exact_rational(
    [](std::string& s) -> std::string {
        try {
            parse_rational(s);
            return {};
        } catch (const std::exception& e) {
            return e.what();
        }
    },
    "p/q", "exact rational");

const CLI::Validator sign_flag(
    [](std::string& s) -> std::string { return s == "+" || s == "-" ? "" : "sign must be + or -"; }, "{+,-}",
    "sign");

int sign_of(const std::string& s) { return s == "-" ? -1 : 1; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Decimal value of an isolated root with its bracket.
std::string root_str(const AlgebraicReal& r)
{
    std::ostringstream os;
    os << std::setprecision(17) << r.approx() << " in (" << to_string(r.lo) << ", " << to_string(r.hi) << ")";
    return os.str();
}

std::string k_str(const std::optional<Rational>& K) { return K ? to_string(*K) : "not constant"; }

void print_report(const CurveReport& r, std::ostream& os)
{
    os << "n = " << r.n << "\n";
    os << "K = " << k_str(r.K) << "\n";
    if (r.plucker_proportional)
        os << "|w|^2 = " << r.plucker_c.str() << " (1 + z zbar)^" << r.deg << "\n";
    else
        os << "|w|^2 not proportional to a power of (1 + z zbar), deg " << r.deg << "\n";
    os << "linearly full in C^" << r.full_in << "\n";
    if (r.unramified) os << "unramified = " << yes_no(*r.unramified) << "\n";
    if (r.detA1_sq) os << "|det A1|^2 nowhere zero = " << yes_no(r.detA1_nowhere_zero) << "\n";
    if (r.S) os << "S constant = " << yes_no(r.S_constant) << (r.S_value ? " (S = " + r.S_value->str() + ")" : "") << "\n";
    if (r.gauss_identity) os << "K + S/2 + 8 |det A1|^2 = 4: " << yes_no(*r.gauss_identity) << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
}

int cmd_verify_family(int d, const std::string& t_str, const std::string& sign)
{
    Rational t = parse_rational(t_str);
    FamilyParams fp;
    try {
        fp = build_family(d, t, sign_of(sign));
    } catch (const InvalidParameter& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    }
    auto id = verify_identity_11(fp);
    bool rec = verify_eq_42_43(d, t, fp.C);
    std::cout << "d = " << d << ", t = " << to_string(t) << ", sign = " << sign << "\n";
    std::cout << "recursions hold = " << yes_no(rec) << "\n";
    std::cout << "identity holds = " << yes_no(id.holds) << "\n";
    std::cout << "c = " << to_string(fp.c) << "\n";
    if (fp.alpha_sq == 0) std::cout << "h = 0\n";
    std::cout << "valid = " << (fp.valid ? "true" : "false") << "\n";
    std::cout << "rank = " << fp.rank << ", q = " << fp.q() << "\n";
    if (!rec || !id.holds) return kFailed;
    return fp.valid ? kOk : kInvalid;
}

int write_curve(const GrassCurve& c, const std::string& out)
{
    std::string text = curve_to_json(c).dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream f(out);
    if (!f || !(f << text)) {
        std::cerr << "cannot write " << out << "\n";
        return kMalformed;
    }
    return kOk;
}

int cmd_gen_curve(int d, std::string t_str, const std::string& sign, const std::string& out, bool singular,
                  const std::string& lo, const std::string& hi)
{
    if (singular) {
        SingularT s;
        try {
            s = find_singular_t(d, parse_rational(lo), parse_rational(hi), make_rational(1, 1000000));
        } catch (const NoSingularPoint& e) {
            std::cerr << e.what() << "\n";
            return kFailed;
        }
        if (!s.exact) {
            auto info = family_at(d, s.root);
            std::cerr << "singular parameter t ~ " << root_str(s.root) << " is irrational; family "
                      << (info.valid() ? "valid" : "invalid") << " there (rank " << info.rank << ")\n";
            return info.valid() ? kIrrational : kInvalid;
        }
        t_str = to_string(s.value);
    }
    if (t_str.empty()) {
        std::cerr << "gen-curve: -t or --singular is required\n";
        return kInvalid;
    }
    FamilyParams fp;
    try {
        fp = build_family(d, parse_rational(t_str), sign_of(sign));
    } catch (const InvalidParameter& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    }
    if (!fp.valid) {
        std::cerr << "family invalid at t = " << to_string(fp.t) << "\n";
        return kInvalid;
    }
    GrassCurve c = build_curve(fp);
    auto K = gauss_curvature(c).K;
    // Keep stdout clean for the JSON when writing there.
    std::ostream& info = out.empty() || out == "-" ? std::cerr : std::cout;
    info << "t = " << to_string(fp.t) << "\nn = " << c.n << "\nq = " << fp.q() << "\nK = " << k_str(K) << "\n";
    return write_curve(c, out);
}

int cmd_check_curve(const std::string& path, bool json)
{
    GrassCurve c;
    try {
        std::string text;
        if (path == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream f(path);
            if (!f) throw JsonError("cannot read " + path);
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        c = curve_from_json(parse_json(text));
    } catch (const std::exception& e) {
        std::cerr << "malformed curve: " << e.what() << "\n";
        return kMalformed;
    }
    CurveReport r = curve_report(c);
    if (json)
        std::cout << report_to_json(r).dump(2) << "\n";
    else
        print_report(r, std::cout);
    return r.K ? kOk : kFailed;
}

int cmd_find_singular(int d, const std::string& lo, const std::string& hi, const std::string& width)
{
    SingularT s;
    try {
        s = find_singular_t(d, parse_rational(lo), parse_rational(hi), parse_rational(width));
    } catch (const NoSingularPoint& e) {
        std::cerr << e.what() << "\n";
        return kFailed;
    }
    if (s.exact)
        std::cout << to_string(s.value) << " (exact)\n";
    else
        std::cout << root_str(s.root) << "\n";
    if (s.count > 1) std::cerr << s.count << " singular points in the bracket; reported the smallest\n";
    return kOk;
}

struct SweepRow {
    std::string line;
    bool identity_ok = true;
    bool fullness_ok = true;
    bool ramified = false;
    int q = 0;
};

struct SweepChecks {
    bool identity = false, curvature = false, fullness = false, unramified = false, second_ff = false;
};

SweepRow sweep_point(int d, const Rational& t, int sign, const SweepChecks& ck)
{
    SweepRow row;
    std::ostringstream os;
    os << to_string(t) << ",";
    if (D_denom(d, t) == 0) {
        os << "undefined,,,,";
        row.line = os.str();
        return row;
    }
    FamilyParams fp = build_family(d, t, sign);
    if (ck.identity) row.identity_ok = verify_identity_11(fp).holds && verify_eq_42_43(d, t, fp.C);
    row.q = fp.q();
    os << (fp.valid ? "true" : "false") << "," << fp.q() << "," << fp.rank << ",";
    bool need_curve = fp.valid && (ck.curvature || ck.second_ff || ck.fullness || ck.unramified);
    if (need_curve) {
        GrassCurve c = build_curve(fp);
        auto K = gauss_curvature(c).K;
        if (ck.curvature && K) os << to_string(*K);
        os << ",";
        if (ck.second_ff && K) os << (second_ff(c, *K).constant ? "true" : "false");
        if (ck.fullness) row.fullness_ok = linear_fullness(c) == fp.rank + 2;
        if (ck.unramified) row.ramified = !unramified_check(c);
    } else {
        os << ",";
    }
    row.line = os.str();
    return row;
}

int cmd_sweep(int d, const std::string& lo_s, const std::string& hi_s, const std::string& step_s,
              const std::string& sign, const std::vector<std::string>& checks, unsigned jobs)
{
    Rational lo = parse_rational(lo_s), hi = parse_rational(hi_s), step = parse_rational(step_s);
    if (!(lo < hi) || step <= 0) {
        std::cerr << "sweep needs lo < hi and step > 0\n";
        return kInvalid;
    }
    SweepChecks ck;
    for (const auto& c : checks) {
        if (c == "identity") ck.identity = true;
        else if (c == "curvature") ck.curvature = true;
        else if (c == "fullness") ck.fullness = true;
        else if (c == "unramified") ck.unramified = true;
        else if (c == "second_ff") ck.second_ff = true;
        else {
            std::cerr << "unknown check '" << c << "'\n";
            return kInvalid;
        }
    }
    std::vector<Rational> grid;
    for (Rational t = lo; t <= hi; t += step) grid.push_back(t);

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
    std::vector<SweepRow> rows(grid.size());
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w)
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < grid.size(); i += jobs) rows[i] = sweep_point(d, grid[i], sign_of(sign), ck);
        }));
    for (auto& f : workers) f.get();

    std::cout << "t,valid,q,rank,K,S_constant\n";
    int id_fail = 0, full_fail = 0, ramified = 0, q2 = 0;
    for (const auto& r : rows) {
        std::cout << r.line << "\n";
        id_fail += !r.identity_ok;
        full_fail += !r.fullness_ok;
        ramified += r.ramified;
        q2 += r.q >= 2;
    }
    std::cerr << grid.size() << " points, q >= 2 at " << q2;
    if (ck.identity) std::cerr << ", identity failures " << id_fail;
    if (ck.fullness) std::cerr << ", fullness mismatches " << full_fail;
    if (ck.unramified) std::cerr << ", ramified " << ramified;
    std::cerr << "\n";
    return id_fail || full_fail ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ccsphere: constantly curved holomorphic two-spheres in G(2, n)"};
    app.require_subcommand(1);

    int d = 2;
    std::string t, sign = "+", out, lo = "-1", hi = "1", step = "1/100", width = "1/1000000000000000", in;
    bool json = false, md = false, singular = false;
    std::vector<std::string> checks{"identity", "curvature", "second_ff"};
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto add_d = [&](CLI::App* s) { s->add_option("-d", d, "degree d >= 2")->required()->check(CLI::Range(2, 64)); };
    auto add_sign = [&](CLI::App* s) { s->add_option("--sign", sign, "sign of the alpha_i")->check(sign_flag); };

    auto* vf = app.add_subcommand("verify-family", "check the coefficient family at (d, t)");
    add_d(vf);
    vf->add_option("-t", t, "parameter t as p/q")->required()->check(exact_rational);
    add_sign(vf);

    auto* gc = app.add_subcommand("gen-curve", "build the curve of the family and write it as JSON");
    add_d(gc);
    auto* t_opt = gc->add_option("-t", t, "parameter t as p/q")->check(exact_rational);
    add_sign(gc);
    gc->add_option("-o", out, "output path (default stdout)");
    gc->add_flag("--singular", singular, "use the singular parameter in (lo, hi)")->excludes(t_opt);
    gc->add_option("--lo", lo, "bracket start for --singular")->check(exact_rational);
    gc->add_option("--hi", hi, "bracket end for --singular")->check(exact_rational);

    auto* cc = app.add_subcommand("check-curve", "verify a curve JSON file ('-' for stdin)");
    cc->add_option("path", in, "curve JSON")->required();
    cc->add_flag("--json", json, "print the report as JSON");

    auto* tb = app.add_subcommand("table1", "derive the (r = d+1, n) table of examples");
    tb->add_flag("--md", md, "Markdown output (default)");
    tb->add_flag("--json", json, "JSON output");

    auto* fs = app.add_subcommand("find-singular", "locate the first t in (lo, hi) where the rank drops");
    add_d(fs);
    fs->add_option("--lo", lo, "bracket start")->check(exact_rational);
    fs->add_option("--hi", hi, "bracket end")->check(exact_rational);
    fs->add_option("--width", width, "target interval width")->check(exact_rational);

    auto* sw = app.add_subcommand("sweep", "CSV t,valid,q,rank,K,S_constant over a rational grid");
    add_d(sw);
    sw->add_option("--lo", lo, "first t")->check(exact_rational);
    sw->add_option("--hi", hi, "last t")->check(exact_rational);
    sw->add_option("--step", step, "grid step")->check(exact_rational);
    add_sign(sw);
    sw->add_option("--checks", checks, "identity,curvature,fullness,unramified,second_ff")->delimiter(',');
    sw->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*vf) return cmd_verify_family(d, t, sign);
        if (*gc) return cmd_gen_curve(d, t, sign, out, singular, lo, hi);
        if (*cc) return cmd_check_curve(in, json);
        if (*tb) {
            Table1 table = derive_table1();
            if (json)
                std::cout << table_to_json(table).dump(2) << "\n";
            else
                std::cout << render_markdown(table);
            return kOk;
        }
        if (*fs) return cmd_find_singular(d, lo, hi, width);
        if (*sw) return cmd_sweep(d, lo, hi, step, sign, checks, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kOk;
}
