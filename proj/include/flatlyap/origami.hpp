#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"
#include "rational.hpp"

namespace flatlyap {

// Zero orders, sorted descending; empty only in genus 1.
struct Stratum {
  std::vector<int> orders;
  int genus = 1;

  friend bool operator==(const Stratum&, const Stratum&) = default;
  friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

inline Stratum make_stratum(std::vector<int> orders) {
  int sum = 0;
  for (int m : orders) {
    require(m >= 1, "zero orders must be positive");
    sum += m;
  }
  require(sum % 2 == 0, "zero orders must sum to 2g-2");
  std::sort(orders.begin(), orders.end(), std::greater<>());
  return Stratum{std::move(orders), sum / 2 + 1};
}

inline std::string to_string(const Stratum& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.orders.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s.orders[k]);
  }
  return out + ")";
}

namespace detail {

// "2^2,1^2" style list of integers, optional surrounding parentheses
inline std::vector<int> parse_exponent_list(std::string_view text, bool allow_negative) {
  std::string t;
  for (char ch : text)
    if (!is_space(ch)) t += ch;
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::vector<int> out;
  if (t.empty()) return out;
  std::size_t k = 0;
  auto number = [&](bool neg_ok) {
    std::size_t start = k;
    if (neg_ok && k < t.size() && t[k] == '-') ++k;
    std::size_t digits = k;
    while (k < t.size() && t[k] >= '0' && t[k] <= '9') ++k;
    require(k > digits && k - digits < 7, "bad number in '" + t + "'");
    return std::stoi(t.substr(start, k - start));
  };
  while (true) {
    int v = number(allow_negative);
    int rep = 1;
    if (k < t.size() && t[k] == '^') {
      ++k;
      rep = number(false);
      require(rep >= 1 && rep <= 1000, "bad exponent in '" + t + "'");
    }
    out.insert(out.end(), rep, v);
    if (k == t.size()) break;
    require(t[k] == ',', "expected ',' in '" + t + "'");
    ++k;
  }
  return out;
}

}  // namespace detail

// "4,1,1", "(4,1,1)", "2^2,1^2", "H(2)"
inline Stratum parse_stratum(std::string_view text) {
  while (!text.empty() && detail::is_space(text.front())) text.remove_prefix(1);
  if (!text.empty() && (text.front() == 'H' || text.front() == 'h')) text.remove_prefix(1);
  return make_stratum(detail::parse_exponent_list(text, false));
}

// (1/12) sum m(m+2)/(m+1)
inline Rational kappa(const Stratum& s) {
  require(!s.orders.empty(), "kappa needs genus >= 2");
  Rational k = 0;
  for (int m : s.orders) k += frac(m * (m + 2), m + 1);
  return k / 12;
}

// Square-tiled surface: right and up neighbours of each square.
class Origami {
 public:
  Origami(Permutation right, Permutation up) : r_(std::move(right)), u_(std::move(up)) {
    require(r_.degree() == u_.degree(), "right and up have different degrees");
    require(is_transitive(r_, u_), "origami is disconnected");
  }

  const Permutation& right() const { return r_; }
  const Permutation& up() const { return u_; }
  int degree() const { return r_.degree(); }

  friend bool operator==(const Origami&, const Origami&) = default;

 private:
  Permutation r_, u_;
};

inline Origami validate(const Permutation& r, const Permutation& u) { return Origami(r, u); }

// u^-1 r^-1 u r
inline Permutation commutator(const Origami& o) {
  const auto& r = o.right().raw();
  const auto& u = o.up().raw();
  int d = o.degree();
  std::vector<int> ri(d), ui(d), c(d);
  for (int i = 0; i < d; ++i) {
    ri[r[i]] = i;
    ui[u[i]] = i;
  }
  for (int x = 0; x < d; ++x) c[x] = ui[ri[u[r[x]]]];
  return Permutation::from_raw(std::move(c));
}

inline Stratum stratum_of(const Origami& o) {
  auto ct = cycle_type(commutator(o));
  std::vector<int> orders;
  for (int l : ct)
    if (l >= 2) orders.push_back(l - 1);
  auto s = make_stratum(orders);
  // Euler characteristic: 2 - 2g = #cycles - d
  int chi = static_cast<int>(ct.size()) - o.degree();
  ensure(chi == 2 - 2 * s.genus, "genus from Euler characteristic disagrees with stratum");
  return s;
}

inline int genus(const Origami& o) { return stratum_of(o).genus; }

inline Origami canonical(const Origami& o) {
  auto [r, u] = canonical_form(o.right(), o.up());
  return Origami(std::move(r), std::move(u));
}

inline Key canonical_key(const Origami& o) { return canonical_key(o.right(), o.up()); }

inline Origami origami_from_key(const Key& k) {
  auto [r, u] = decode_key(k);
  return Origami(std::move(r), std::move(u));
}

inline std::string to_string(const Origami& o) {
  return "r=" + to_cycle_string(o.right(), false) + "; u=" + to_cycle_string(o.up(), false) +
         "; d=" + std::to_string(o.degree());
}

// "r=<perm>; u=<perm>; d=<int>" with fields in any order; d may be omitted
// when both permutations are image lists.
inline Origami parse_origami_text(std::string_view text) {
  std::map<std::string, std::string> field;
  std::size_t k = 0;
  while (k <= text.size()) {
    auto semi = text.find(';', k);
    if (semi == std::string_view::npos) semi = text.size();
    std::string part(text.substr(k, semi - k));
    k = semi + 1;
    auto eq = part.find('=');
    if (eq == std::string::npos) {
      require(std::all_of(part.begin(), part.end(), detail::is_space), "expected key=value in '" + part + "'");
      continue;
    }
    std::string key;
    for (char ch : part.substr(0, eq))
      if (!detail::is_space(ch)) key += ch;
    require(key == "r" || key == "u" || key == "d", "unknown field '" + key + "'");
    require(!field.count(key), "field '" + key + "' given twice");
    field[key] = part.substr(eq + 1);
  }
  require(field.count("r") && field.count("u"), "origami needs both r= and u=");
  int d = 0;
  if (field.count("d")) {
    std::string t;
    for (char ch : field["d"])
      if (!detail::is_space(ch)) t += ch;
    require(!t.empty() && t.size() < 7 && std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; }),
            "bad degree '" + field["d"] + "'");
    d = std::stoi(t);
    require(d >= 1, "degree must be positive");
  }
  auto r = parse_permutation(field["r"], d);
  auto u = parse_permutation(field["u"], d ? d : r.degree());
  return Origami(std::move(r), std::move(u));
}

}  // namespace flatlyap
