#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "origami.hpp"
#include "rational.hpp"

namespace flatlyap {

// Quadratic differential signature: orders d_j >= -1 with sum 4g-4.
struct QuadSignature {
  std::vector<int> orders;  // sorted descending
  int genus = 0;
};

inline QuadSignature make_quad(std::vector<int> orders, int genus = 0) {
  require(genus >= 0, "quotient genus must be non-negative");
  int sum = 0;
  for (int x : orders) {
    require(x >= -1, "quadratic orders must be >= -1");
    sum += x;
  }
  require(sum == 4 * genus - 4, "signature sums to " + std::to_string(sum) + ", expected " + std::to_string(4 * genus - 4));
  std::sort(orders.begin(), orders.end(), std::greater<>());
  return QuadSignature{std::move(orders), genus};
}

// "Q(3,2,-1^9)" or "3,2,-1^9"
inline QuadSignature parse_quad(std::string_view text, int genus = 0) {
  while (!text.empty() && detail::is_space(text.front())) text.remove_prefix(1);
  if (!text.empty() && (text.front() == 'Q' || text.front() == 'q')) text.remove_prefix(1);
  return make_quad(detail::parse_exponent_list(text, true), genus);
}

inline std::string to_string(const QuadSignature& q) {
  std::string out = "Q(";
  for (std::size_t k = 0; k < q.orders.size();) {
    std::size_t j = k;
    while (j < q.orders.size() && q.orders[j] == q.orders[k]) ++j;
    if (k) out += ',';
    out += std::to_string(q.orders[k]);
    if (j - k > 1) out += "^" + std::to_string(j - k);
    k = j;
  }
  return out + ")";
}

// (1/4) sum over odd d_j of 1/(d_j+2)
inline Rational hyperelliptic_locus_L(const QuadSignature& q) {
  require(q.genus == 0, "hyperelliptic loci need a genus-0 signature");
  Rational L = 0;
  for (int x : q.orders)
    if (x % 2 != 0) L += frac(1, x + 2);
  return L / 4;
}

// orientation double cover
inline Stratum double_cover_stratum(const QuadSignature& q) {
  std::vector<int> orders;
  bool odd = false;
  for (int x : q.orders) {
    if (x % 2 != 0) {
      odd = true;
      if (x + 1 > 0) orders.push_back(x + 1);
    } else if (x > 0) {
      orders.push_back(x / 2);
      orders.push_back(x / 2);
    }
  }
  require(odd, "all orders even: the double cover is disconnected");
  auto s = make_stratum(orders);
  // Riemann-Hurwitz: 2g - 2 = 2(2h - 2) + #odd points
  int branch = 0;
  for (int x : q.orders) branch += x % 2 != 0;
  ensure(2 * s.genus - 2 == 2 * (2 * q.genus - 2) + branch, "Riemann-Hurwitz mismatch");
  return s;
}

enum class HypKind { single_zero, two_zeros };

inline Rational hyperelliptic_component_L(int g, HypKind kind) {
  require(g >= 2, "genus must be >= 2");
  if (kind == HypKind::single_zero) return frac(g * g, 2 * g - 1);
  return frac(g + 1, 2);
}

// the genus-0 signature whose double cover is the hyperelliptic component
inline QuadSignature hyperelliptic_source(int g, HypKind kind) {
  require(g >= 2, "genus must be >= 2");
  std::vector<int> o;
  if (kind == HypKind::single_zero) {
    o.assign(2 * g + 1, -1);
    o.push_back(2 * g - 3);
  } else {
    o.assign(2 * g + 2, -1);
    o.push_back(2 * g - 2);
  }
  return make_quad(o);
}

// rho = g - (r+1)(g-d+r) - r(|w|-1); an empty weight vector counts as |w| = 1
inline int brill_noether_number(int g, int r, int d, const std::vector<int>& w = {}) {
  int total = 0;
  for (int x : w) total += x;
  if (w.empty()) total = 1;
  return g - (r + 1) * (g - d + r) - r * (total - 1);
}

// a*lambda + sum c_i omega_i + b0*delta_0 (other boundary classes dropped)
struct DivisorClass {
  Rational a;
  std::vector<Rational> c;
  Rational b0;

  std::size_t n_marks() const { return c.size(); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline std::string to_string(const DivisorClass& D) {
  std::string out = pretty(D.a) + " lambda";
  for (std::size_t i = 0; i < D.c.size(); ++i) {
    if (D.c[i] == 0) continue;
    out += (D.c[i] < 0 ? " - " : " + ") + pretty(abs(D.c[i])) + " omega" + std::to_string(i + 1);
  }
  out += (D.b0 < 0 ? " - " : " + ") + pretty(abs(D.b0)) + " delta0";
  return out;
}

// class a/(-b0) for unmarked classes
inline Rational divisor_slope(const DivisorClass& D) {
  require(D.c.empty() || std::all_of(D.c.begin(), D.c.end(), [](const Rational& x) { return x == 0; }),
          "slope of a class with omega terms is not defined");
  require(D.b0 < 0, "slope needs a negative delta0 coefficient");
  return D.a / -D.b0;
}

inline DivisorClass logan_divisor(int g, const std::vector<int>& w) {
  int total = 0;
  for (int x : w) {
    require(x >= 1, "weights must be positive");
    total += x;
  }
  require(total == g, "Logan divisor needs weights summing to g");
  require(brill_noether_number(g, 1, g, w) == -1, "weights do not give a divisor");
  DivisorClass D{-1, {}, 0};
  for (int x : w) D.c.push_back(frac(x * (x + 1), 2));
  return D;
}

inline std::vector<std::string> catalog_names() {
  return {"H", "W", "Theta", "BN3", "BN3_2", "Lin", "Lin_printed", "Nfold1", "Nfold2", "GP", "D1", "D2", "Z"};
}

inline DivisorClass catalog_divisor(const std::string& name, int g) {
  auto need = [&](int want) {
    require(g == want, name + " is only available for g=" + std::to_string(want));
  };
  if (name == "H") return need(3), DivisorClass{9, {}, -1};
  if (name == "W") return need(3), DivisorClass{-1, {6}, 0};
  if (name == "Theta") return need(4), DivisorClass{30, {60}, -4};
  if (name == "BN3") return need(5), DivisorClass{8, {}, -1};
  if (name == "BN3_2") return need(4), DivisorClass{8, {4}, -1};
  // the omega signs are positive here; the class with both omega signs
  // negated is kept as Lin_printed and does not reproduce s = 33/4
  if (name == "Lin") return need(4), DivisorClass{8, {1, 1}, -1};
  if (name == "Lin_printed") return need(4), DivisorClass{8, {-1, -1}, -1};
  if (name == "Nfold1") return need(5), DivisorClass{7, {15}, -1};
  if (name == "Nfold2") return need(5), DivisorClass{7, {7, 2}, -1};
  if (name == "GP") return need(4), DivisorClass{17, {}, -2};
  require(g >= 2, name + " needs g >= 2");
  if (name == "D1") return DivisorClass{-12, {4 * g * (g - 1)}, 1};
  if (name == "D2") return DivisorClass{-12, {g * g - 1, g * g - 1}, 1};
  if (name == "Z") return DivisorClass{g + 8, {}, -frac(g + 2, 4)};
  throw InputError("unknown divisor '" + name + "'");
}

// Stratum with an ordered choice of marked zeros (indices into orders).
struct MarkedStratum {
  Stratum stratum;
  std::vector<int> marks;
};

inline MarkedStratum mark(const Stratum& s, const std::vector<int>& marks) {
  std::vector<char> used(s.orders.size(), 0);
  for (int i : marks) {
    require(i >= 0 && i < static_cast<int>(s.orders.size()), "mark index out of range");
    require(!used[i], "zero marked twice");
    used[i] = 1;
  }
  return MarkedStratum{s, marks};
}

// marks given by zero order, e.g. (4,1,1) with orders {4,1}: first unused zero of each order
inline MarkedStratum mark_orders(const Stratum& s, const std::vector<int>& orders) {
  std::vector<char> used(s.orders.size(), 0);
  std::vector<int> marks;
  for (int m : orders) {
    int found = -1;
    for (int i = 0; i < static_cast<int>(s.orders.size()); ++i)
      if (!used[i] && s.orders[i] == m) {
        found = i;
        break;
      }
    require(found >= 0, "no unmarked zero of order " + std::to_string(m) + " in " + to_string(s));
    used[found] = 1;
    marks.push_back(found);
  }
  return MarkedStratum{s, marks};
}

// C.omega_i = alpha (C.lambda) + beta (C.delta)
inline std::pair<Rational, Rational> omega_ratio(const MarkedStratum& ms, int i) {
  require(ms.stratum.genus >= 2, "genus must be >= 2");
  require(i >= 0 && i < static_cast<int>(ms.marks.size()), "mark index out of range");
  Rational den = (ms.stratum.orders[ms.marks[i]] + 1) * kappa(ms.stratum);
  return {1 / den, -1 / (12 * den)};
}

inline Rational L_from_slope(const Stratum& s, const Rational& slope) {
  require(slope > 0 && slope < 12, "slope must lie in (0, 12)");
  return 12 * kappa(s) / (12 - slope);
}

inline Rational slope_from_L(const Stratum& s, const Rational& L) {
  require(L > 0, "L must be positive");
  return 12 - 12 * kappa(s) / L;
}

struct SlopeResult {
  Rational s, L, c;
};

namespace detail {

// C.D = A (C.lambda) + B (C.delta) after substituting the omega ratios
inline std::pair<Rational, Rational> pair_with_curve(const MarkedStratum& ms, const DivisorClass& D) {
  bool unmarked = std::all_of(D.c.begin(), D.c.end(), [](const Rational& x) { return x == 0; });
  require(unmarked || D.c.size() == ms.marks.size(),
          "divisor has " + std::to_string(D.c.size()) + " marked points, stratum has " + std::to_string(ms.marks.size()));
  Rational A = D.a, B = D.b0;
  if (!unmarked)
    for (int i = 0; i < static_cast<int>(D.c.size()); ++i) {
      auto [alpha, beta] = omega_ratio(ms, i);
      A += D.c[i] * alpha;
      B += D.c[i] * beta;
    }
  return {A, B};
}

}  // namespace detail

// C.D = 0 pins s = (C.delta)/(C.lambda)
inline SlopeResult slope_from_disjoint_divisor(const MarkedStratum& ms, const DivisorClass& D) {
  auto [A, B] = detail::pair_with_curve(ms, D);
  require(B != 0, "divisor gives no slope constraint");
  Rational s = -A / B;
  require(s > 0 && s < 12, "solved slope " + pretty(s) + " outside (0, 12)");
  Rational L = L_from_slope(ms.stratum, s);
  return {s, L, L - kappa(ms.stratum)};
}

// C.D >= 0 bounds s from above
inline SlopeResult slope_bound(const MarkedStratum& ms, const DivisorClass& D) {
  auto [A, B] = detail::pair_with_curve(ms, D);
  require(B < 0, "divisor gives no upper bound on the slope");
  Rational s = -A / B;
  require(s > 0 && s < 12, "slope bound " + pretty(s) + " outside (0, 12)");
  Rational L = L_from_slope(ms.stratum, s);
  return {s, L, L - kappa(ms.stratum)};
}

inline Rational spin_slope(int g) {
  require(g >= 2, "genus must be >= 2");
  return frac(4 * (g + 8), g + 2);
}

// Pairings of D1, D2 with curves whose intersection ratios are those of the
// hyperelliptic Teichmueller curves; both vanish for the true classes.
inline std::pair<Rational, Rational> extremality_pairings(int g, const DivisorClass& D1, const DivisorClass& D2) {
  require(g >= 2, "genus must be >= 2");
  require(D1.c.size() == 1 && D2.c.size() == 2, "D1 has one marked point, D2 two");
  // C1: lambda : omega : delta = g^2 : 1 : 4g(2g+1)
  Rational p1 = D1.a * g * g + D1.c[0] + D1.b0 * 4 * g * (2 * g + 1);
  // C2: lambda : (psi1 + psi2) : delta = g(g+1)/4 : 1 : (g+1)(2g+1), psi1 = psi2 by symmetry
  Rational p2 = D2.a * frac(g * (g + 1), 4) + (D2.c[0] + D2.c[1]) / 2 + D2.b0 * (g + 1) * (2 * g + 1);
  return {p1, p2};
}

inline bool extremality_check(int g, const DivisorClass& D1, const DivisorClass& D2) {
  auto [p1, p2] = extremality_pairings(g, D1, D2);
  return p1 == 0 && p2 == 0;
}

inline bool extremality_check(int g) { return extremality_check(g, catalog_divisor("D1", g), catalog_divisor("D2", g)); }

struct TableRow {
  std::string stratum;
  std::string component;  // "hyp", "even", "odd", "nonhyp", "-"
  std::string status;     // non-varying, bound, conjectured, locus
  Rational L;
  std::optional<Rational> s;
  std::string method;
};

namespace detail {

inline TableRow solved(const std::string& comp, const MarkedStratum& ms, const DivisorClass& D, const std::string& how) {
  auto r = slope_from_disjoint_divisor(ms, D);
  return {to_string(ms.stratum), comp, "non-varying", r.L, r.s, how};
}

inline TableRow bounded(const std::string& comp, const MarkedStratum& ms, const DivisorClass& D, const std::string& how) {
  auto r = slope_bound(ms, D);
  return {to_string(ms.stratum), comp, "bound", r.L, r.s, how};
}

inline TableRow hyp(int g, HypKind kind) {
  Stratum s = double_cover_stratum(hyperelliptic_source(g, kind));
  Rational L = hyperelliptic_component_L(g, kind);
  return {to_string(s), "hyp", "non-varying", L, slope_from_L(s, L), "hyperelliptic component"};
}

inline TableRow spin(int g, const Stratum& s) {
  Rational sl = spin_slope(g);
  return {to_string(s), "odd", "non-varying", L_from_slope(s, sl), sl, "spin slope"};
}

inline TableRow locus(const std::string& comp, const std::string& sig) {
  auto q = parse_quad(sig);
  auto s = double_cover_stratum(q);
  Rational L = hyperelliptic_locus_L(q);
  return {to_string(s), comp, "locus", L, slope_from_L(s, L), to_string(q)};
}

inline TableRow conjectured(const std::string& st, const std::string& comp, long long p, long long q) {
  Stratum s = parse_stratum(st);
  Rational L = frac(p, q);
  return {to_string(s), comp, "conjectured", L, slope_from_L(s, L), "open case, table value"};
}

}  // namespace detail

// Non-varying rows, slope bounds, open cases and hyperelliptic loci per genus.
inline std::vector<TableRow> stratum_table(int g) {
  using namespace detail;
  auto S = [](const char* t) { return parse_stratum(t); };
  std::vector<TableRow> rows;
  if (g == 3) {
    rows.push_back(hyp(3, HypKind::single_zero));
    rows.push_back(solved("odd", mark(S("4"), {}), catalog_divisor("H", 3), "H"));
    rows.push_back(solved("-", mark(S("3,1"), {}), catalog_divisor("H", 3), "H"));
    rows.push_back(hyp(3, HypKind::two_zeros));
    rows.push_back(spin(3, S("2,2")));
    rows.push_back(solved("-", mark_orders(S("2,1,1"), {2, 1}), logan_divisor(3, {1, 2}), "BN(1,2)"));
    rows.push_back(bounded("-", mark(S("1,1,1,1"), {}), catalog_divisor("H", 3), "H"));
    rows.push_back(locus("-", "2,2,-1^8"));
  } else if (g == 4) {
    rows.push_back(hyp(4, HypKind::single_zero));
    rows.push_back(solved("even", mark_orders(S("6"), {6}), catalog_divisor("Theta", 4), "Theta"));
    rows.push_back(solved("odd", mark_orders(S("6"), {6}), catalog_divisor("BN3_2", 4), "BN3_2"));
    rows.push_back(solved("-", mark_orders(S("5,1"), {5}), catalog_divisor("BN3_2", 4), "BN3_2"));
    rows.push_back(conjectured("4,2", "even", 32, 15));
    rows.push_back(conjectured("4,2", "odd", 29, 15));
    rows.push_back(hyp(4, HypKind::two_zeros));
    rows.push_back(solved("nonhyp", mark_orders(S("3,3"), {3, 3}), catalog_divisor("Lin", 4), "Lin"));
    rows.push_back(solved("-", mark_orders(S("3,2,1"), {3, 2, 1}), logan_divisor(4, {1, 1, 2}), "BN(1,1,2)"));
    rows.push_back(spin(4, S("2,2,2")));
    rows.push_back(bounded("even", mark(S("2,2,2"), {}), catalog_divisor("GP", 4), "GP"));
    rows.push_back(locus("even", "4,1,-1^9"));
    rows.push_back(bounded("-", mark_orders(S("4,1,1"), {4, 1}), logan_divisor(4, {2, 2}), "BN(2,2)"));
    rows.push_back(locus("-", "3,2,-1^9"));
    rows.push_back(bounded("-", mark_orders(S("2,2,1,1"), {2, 2, 1}), logan_divisor(4, {1, 1, 2}), "BN(1,1,2)"));
    rows.push_back(locus("-", "2,1,1,-1^8"));
    rows.push_back(bounded("-", mark_orders(S("3,1,1,1"), {3, 1, 1}), logan_divisor(4, {1, 2, 1}), "BN(1,2,1)"));
    rows.push_back(bounded("-", mark_orders(S("2,1,1,1,1"), {2, 1, 1}), logan_divisor(4, {1, 2, 1}), "BN(1,2,1)"));
    rows.push_back(bounded("-", mark_orders(S("1^6"), {1, 1, 1}), logan_divisor(4, {1, 1, 2}), "BN(1,1,2)"));
    rows.push_back(locus("-", "2,2,2,-1^10"));
  } else if (g == 5) {
    rows.push_back(hyp(5, HypKind::single_zero));
    rows.push_back(solved("even", mark(S("8"), {}), catalog_divisor("BN3", 5), "BN3"));
    rows.push_back(solved("odd", mark_orders(S("8"), {8}), catalog_divisor("Nfold1", 5), "Nfold1"));
    rows.push_back(solved("-", mark_orders(S("5,3"), {5, 3}), catalog_divisor("Nfold2", 5), "Nfold2"));
    rows.push_back(conjectured("6,2", "odd", 46, 21));
    rows.push_back(hyp(5, HypKind::two_zeros));
    for (auto [comp, sig] : std::vector<std::pair<const char*, const char*>>{
             {"even", "5,1,-1^10"},   {"-", "5,2,-1^11"},     {"odd", "3,3,-1^10"},   {"even", "4,3,-1^11"},
             {"odd", "3,1,1,-1^9"},   {"-", "3,2,1,-1^10"},   {"-", "3,2,2,-1^11"},   {"-", "6,1,-1^11"},
             {"-", "6,2,-1^12"},      {"even", "4,1,1,-1^10"}, {"odd", "1,1,1,1,-1^8"}, {"-", "4,2,1,-1^11"},
             {"-", "2,2,1,1,-1^10"},  {"-", "2,2,2,1,-1^11"}, {"-", "2,2,2,2,-1^12"}})
      rows.push_back(locus(comp, sig));
  } else {
    throw InputError("stratum tables exist for g = 3, 4, 5");
  }
  return rows;
}

}  // namespace flatlyap
