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

#include "ccs/rational.hpp"

#include <cctype>
#include <optional>

namespace ccs {

namespace {

bool is_integer_literal(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

// Simplest rational in (lo, hi); hi absent means +infinity.  Requires lo >= 0.
Rational simplest_nonneg(const Rational& lo, const std::optional<Rational>& hi)
{
    Integer fl = floor_of(lo);
    Rational next = Rational(fl + 1);
    if (!hi || next < *hi) return next;
    // No integer strictly inside: both ends lie in [fl, fl+1].
    Rational a = lo - Rational(fl);
    Rational b = *hi - Rational(fl);
    std::optional<Rational> inv_hi;
    if (sgn(a) > 0) inv_hi = 1 / a;
    Rational inner = simplest_nonneg(1 / b, inv_hi);
    return Rational(fl) + 1 / inner;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    std::string s = strip(text);
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : strip(s.substr(0, slash));
    std::string den = slash == std::string::npos ? "1" : strip(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not an exact rational \"p/q\": '" + text + "'");
    Integer n(num[0] == '+' ? num.substr(1) : num, 10);
    Integer d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Rational make_rational(long num, long den)
{
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational rpow(const Rational& base, unsigned long exp)
{
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(), exp);
    r.canonicalize();
    return r;
}

Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi)
{
    if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
    if (sgn(lo) < 0 && sgn(hi) > 0) return Rational(0);
    if (sgn(hi) <= 0) return -simplest_nonneg(-hi, Rational(-lo));
    return simplest_nonneg(lo, hi);
}

}  // namespace ccs
