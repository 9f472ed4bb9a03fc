#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "error.hpp"

namespace flatlyap {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational frac(long long p, long long q = 1) {
  if (q == 0) throw InputError("zero denominator");
  return Rational(Integer(p), Integer(q));
}

// "p/q" in lowest terms, q > 0 (integers as "p/1")
inline std::string to_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

// human form: integers without the denominator
inline std::string pretty(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return to_string(x);
}

inline Rational parse_rational(std::string_view s) {
  auto digits = [](std::string_view t, bool sign) {
    if (sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char ch : t)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view p = s.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!digits(p, true) || !digits(q, false)) throw InputError("bad rational '" + std::string(s) + "'");
  Integer den{std::string(q)};
  if (den == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
  std::string ps(p);
  if (!ps.empty() && ps[0] == '+') ps.erase(0, 1);
  return Rational(Integer{ps}, den);
}

}  // namespace flatlyap
