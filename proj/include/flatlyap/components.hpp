#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "origami.hpp"
#include "permutation.hpp"

namespace flatlyap {

struct Involution {
  Permutation sigma;
  int fixed_point_count = 0;
};

namespace detail {

// Fixed points of the flat rotation by pi that sends square i to sigma(i):
// square centres, right/top edge midpoints, and vertices.
inline int involution_fixed_points(const Origami& o, const std::vector<int>& s) {
  const auto& r = o.right().raw();
  const auto& u = o.up().raw();
  int d = o.degree();
  int count = 0;
  for (int i = 0; i < d; ++i) {
    if (s[i] == i) ++count;
    if (s[i] == r[i]) ++count;
    if (s[i] == u[i]) ++count;
  }
  // bottom-left corners of i and c(i) are the same vertex, c = u r u^-1 r^-1
  std::vector<int> ri(d), ui(d);
  for (int i = 0; i < d; ++i) {
    ri[r[i]] = i;
    ui[u[i]] = i;
  }
  std::vector<int> vertex(d, -1);
  int nv = 0;
  for (int i = 0; i < d; ++i) {
    if (vertex[i] >= 0) continue;
    for (int j = i; vertex[j] < 0; j = u[r[ui[ri[j]]]]) vertex[j] = nv;
    ++nv;
  }
  // the rotation sends the bottom-left corner of i to the top-right corner of
  // s(i), which is the bottom-left corner of r(u(s(i)))
  std::vector<char> counted(nv, 0);
  for (int i = 0; i < d; ++i) {
    int v = vertex[i];
    if (counted[v]) continue;
    counted[v] = 1;
    if (vertex[r[u[s[i]]]] == v) ++count;
  }
  return count;
}

}  // namespace detail

// Flat involution with 2g+2 fixed points, if any (the smallest seed sigma(1) wins).
inline std::optional<Involution> hyperelliptic_involution(const Origami& o) {
  int g = genus(o);
  require(g >= 2, "hyperelliptic involution search needs genus >= 2");
  const auto& r = o.right().raw();
  const auto& u = o.up().raw();
  int d = o.degree();
  std::vector<int> ri(d), ui(d);
  for (int i = 0; i < d; ++i) {
    ri[r[i]] = i;
    ui[u[i]] = i;
  }
  for (int j = 0; j < d; ++j) {
    std::vector<int> s(d, -1);
    s[0] = j;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, img] : {std::pair{r[x], ri[s[x]]}, std::pair{u[x], ui[s[x]]}}) {
        if (s[y] < 0) {
          s[y] = img;
          stack.push_back(y);
        } else if (s[y] != img) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    bool involutive = true;
    for (int i = 0; i < d && involutive; ++i) involutive = s[s[i]] == i;
    if (!involutive) continue;
    int fixed = detail::involution_fixed_points(o, s);
    if (fixed != 2 * g + 2) continue;
    return Involution{Permutation::from_raw(s), fixed};
  }
  return std::nullopt;
}

enum class Parity { even, odd };

inline std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

namespace detail {

enum Move { R = 0, U = 1, L = 2, D = 3 };

struct SpinCurve {
  int start = 0;
  std::vector<int> moves;
};

inline int step(const std::vector<int>* perms, int m, int x) { return perms[m][x]; }

// Free and cyclic reduction; cyclic reduction moves the start square.
inline SpinCurve reduce_moves(const std::vector<int>* perms, int start, const std::vector<int>& m) {
  std::vector<int> st;
  for (int x : m) {
    if (!st.empty() && (st.back() + 2) % 4 == x)
      st.pop_back();
    else
      st.push_back(x);
  }
  std::size_t lo = 0, hi = st.size();
  while (hi - lo >= 2 && (st[lo] + 2) % 4 == st[hi - 1]) {
    start = step(perms, st[lo], start);
    ++lo;
    --hi;
  }
  return SpinCurve{start, std::vector<int>(st.begin() + lo, st.begin() + hi)};
}

// Fundamental cycles of a BFS spanning tree of the move graph.
inline std::vector<SpinCurve> fundamental_cycles(const std::vector<int>* perms, int d, int root) {
  std::vector<int> parent(d, -1), pdir(d, -1);
  std::vector<int> order{root};
  std::vector<char> seen(d, 0);
  seen[root] = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int x = order[k];
    for (int dir : {R, U}) {
      int y = perms[dir][x];
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        pdir[y] = dir;
        order.push_back(y);
      }
    }
  }
  ensure(static_cast<int>(order.size()) == d, "move graph is disconnected");
  auto path_from_root = [&](int x) {
    std::vector<int> moves;
    for (; x != root; x = parent[x]) moves.push_back(pdir[x]);
    std::reverse(moves.begin(), moves.end());
    return moves;
  };
  std::vector<SpinCurve> out;
  for (int x = 0; x < d; ++x)
    for (int dir : {R, U}) {
      int y = perms[dir][x];
      if (parent[y] == x && pdir[y] == dir) continue;
      auto m = path_from_root(x);
      m.push_back(dir);
      auto back = path_from_root(y);
      for (auto it = back.rbegin(); it != back.rend(); ++it) m.push_back((*it + 2) % 4);
      out.push_back(reduce_moves(perms, root, m));
    }
  return out;
}

struct Chord {
  int square;
  std::int64_t a, b;  // endpoints on the square's boundary circle, a < b
};

// boundary circle parameter, counterclockwise from the bottom-left corner
inline std::int64_t circle_pos(int side, std::int64_t t, std::int64_t M) {
  switch (side) {
    case D: return t;
    case R: return M + t;
    case U: return 2 * M + (M - t);
    default: return 3 * M + (M - t);
  }
}

inline bool interleave(const Chord& x, const Chord& y) {
  return (x.a < y.a && y.a < x.b) != (x.a < y.b && y.b < x.b);
}

inline int turning(const std::vector<int>& moves) {
  int s = 0;
  int n = static_cast<int>(moves.size());
  for (int k = 0; k < n; ++k) {
    int delta = ((moves[k] - moves[(k + n - 1) % n]) % 4 + 4) % 4;
    ensure(delta != 2, "backtracking left in a reduced curve");
    s += delta == 1 ? 1 : delta == 3 ? -1 : 0;
  }
  ensure(s % 4 == 0, "curve does not close up");
  return s / 4;
}

}  // namespace detail

// Arf invariant of q(c) = ind(c) + 1 on H_1(X; Z/2). The seed picks the
// spanning-tree root, the crossing positions on edges and the basis order;
// the result must not depend on it.
inline Parity spin_parity(const Origami& o, std::uint64_t seed = 0) {
  using namespace detail;
  Stratum st = stratum_of(o);
  require(st.genus >= 2, "spin parity needs genus >= 2");
  for (int m : st.orders) require(m % 2 == 0, "spin parity needs all zero orders even, got " + to_string(st));
  int d = o.degree();
  std::vector<int> perms[4];
  perms[R] = o.right().raw();
  perms[U] = o.up().raw();
  perms[L] = inverse(o.right()).raw();
  perms[D] = inverse(o.up()).raw();

  std::mt19937_64 rng(seed);
  int root = seed == 0 ? 0 : static_cast<int>(rng() % d);
  auto curves = fundamental_cycles(perms, d, root);
  const std::int64_t M = std::int64_t(1) << 32;

  // edges: right side of square i is 2i, top side is 2i+1
  std::vector<std::vector<std::int64_t>> used(2 * d);
  auto fresh = [&](int edge) {
    while (true) {
      std::int64_t t = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(M - 1));
      auto& v = used[edge];
      if (std::find(v.begin(), v.end(), t) == v.end()) {
        v.push_back(t);
        return t;
      }
    }
  };
  int n = static_cast<int>(curves.size());
  std::vector<std::vector<Chord>> chords(n);
  std::vector<int> q(n);
  for (int c = 0; c < n; ++c) {
    const auto& mv = curves[c].moves;
    int len = static_cast<int>(mv.size());
    std::vector<int> sq{curves[c].start};
    for (int m : mv) sq.push_back(perms[m][sq.back()]);
    ensure(sq.back() == curves[c].start, "curve does not return to its start");
    std::vector<std::int64_t> cross(len);
    for (int k = 0; k < len; ++k) {
      int x = sq[k], e;
      switch (mv[k]) {
        case R: e = 2 * x; break;
        case U: e = 2 * x + 1; break;
        case L: e = 2 * sq[k + 1]; break;
        default: e = 2 * sq[k + 1] + 1; break;
      }
      cross[k] = fresh(e);
    }
    for (int k = 0; k < len; ++k) {
      int prev = (k + len - 1) % len;
      auto p = circle_pos((mv[prev] + 2) % 4, cross[prev], M);
      auto x = circle_pos(mv[k], cross[k], M);
      chords[c].push_back({sq[k], std::min(p, x), std::max(p, x)});
    }
    int self = 0;
    for (int a = 0; a < len; ++a)
      for (int b = a + 1; b < len; ++b)
        if (chords[c][a].square == chords[c][b].square && interleave(chords[c][a], chords[c][b])) ++self;
    q[c] = ((turning(mv) + 1 + self) % 2 + 2) % 2;
  }
  std::vector<std::vector<int>> B(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int cnt = 0;
      for (const auto& x : chords[i])
        for (const auto& y : chords[j])
          if (x.square == y.square && interleave(x, y)) ++cnt;
      B[i][j] = B[j][i] = cnt % 2;
    }

  struct Vec {
    std::vector<char> v;
    int q;
  };
  auto bil = [&](const Vec& x, const Vec& y) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
      if (!x.v[i]) continue;
      for (int j = 0; j < n; ++j)
        if (y.v[j]) s ^= B[i][j];
    }
    return s;
  };
  auto add = [&](const Vec& x, const Vec& y) {
    Vec z{std::vector<char>(n), (x.q + y.q + bil(x, y)) % 2};
    for (int i = 0; i < n; ++i) z.v[i] = x.v[i] ^ y.v[i];
    return z;
  };
  std::vector<Vec> pool;
  for (int i = 0; i < n; ++i) {
    Vec x{std::vector<char>(n, 0), q[i]};
    x.v[i] = 1;
    pool.push_back(std::move(x));
  }
  if (seed != 0) std::shuffle(pool.begin(), pool.end(), rng);

  // symplectic reduction: split off hyperbolic pairs (a, b) with <a,b> = 1
  int arf = 0, pairs = 0;
  while (true) {
    int fi = -1, fj = -1;
    for (int i = 0; i < static_cast<int>(pool.size()) && fi < 0; ++i)
      for (int j = i + 1; j < static_cast<int>(pool.size()); ++j)
        if (bil(pool[i], pool[j])) {
          fi = i;
          fj = j;
          break;
        }
    if (fi < 0) break;
    Vec a = pool[fi], b = pool[fj];
    arf ^= a.q & b.q;
    ++pairs;
    std::vector<Vec> rest;
    for (int k = 0; k < static_cast<int>(pool.size()); ++k) {
      if (k == fi || k == fj) continue;
      Vec z = pool[k];
      if (bil(z, b)) z = add(z, a);
      if (bil(z, a)) z = add(z, b);
      rest.push_back(std::move(z));
    }
    pool = std::move(rest);
  }
  ensure(pairs == st.genus, "intersection form has the wrong rank");
  for (const auto& z : pool) ensure(z.q == 0, "quadratic form does not vanish on the radical");
  return arf ? Parity::odd : Parity::even;
}

enum class ComponentKind { hyperelliptic, even, odd, nonhyperelliptic, connected };

inline std::string to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::hyperelliptic: return "hyperelliptic";
    case ComponentKind::even: return "even";
    case ComponentKind::odd: return "odd";
    case ComponentKind::nonhyperelliptic: return "nonhyp";
    default: return "connected";
  }
}

struct ComponentLabel {
  ComponentKind kind = ComponentKind::connected;
  std::optional<Involution> involution;
  std::optional<Parity> parity;
  bool hyperelliptic_locus = false;  // has a hyperelliptic involution at all
};

namespace detail {

// does sigma exchange the two zeros? (strata with two zeros)
inline bool swaps_zeros(const Origami& o, const Permutation& sigma) {
  const auto& r = o.right().raw();
  const auto& u = o.up().raw();
  const auto& s = sigma.raw();
  int d = o.degree();
  std::vector<int> ri(d), ui(d), vertex(d, -1), size;
  for (int i = 0; i < d; ++i) {
    ri[r[i]] = i;
    ui[u[i]] = i;
  }
  for (int i = 0; i < d; ++i) {
    if (vertex[i] >= 0) continue;
    int id = static_cast<int>(size.size()), len = 0;
    for (int j = i; vertex[j] < 0; j = u[r[ui[ri[j]]]]) {
      vertex[j] = id;
      ++len;
    }
    size.push_back(len);
  }
  for (int i = 0; i < d; ++i)
    if (size[vertex[i]] >= 2 && vertex[r[u[s[i]]]] == vertex[i]) return false;
  return true;
}

}  // namespace detail

inline ComponentLabel component_label(const Origami& o, std::uint64_t seed = 0) {
  Stratum st = stratum_of(o);
  require(st.genus >= 2, "component label needs genus >= 2");
  ComponentLabel out;
  out.involution = hyperelliptic_involution(o);
  out.hyperelliptic_locus = out.involution.has_value();
  bool all_even = std::all_of(st.orders.begin(), st.orders.end(), [](int m) { return m % 2 == 0; });
  if (all_even) out.parity = spin_parity(o, seed);
  bool two_equal = st.orders.size() == 2 && st.orders[0] == st.orders[1];
  if (out.involution && (st.orders.size() == 1 || (two_equal && detail::swaps_zeros(o, out.involution->sigma)))) {
    out.kind = ComponentKind::hyperelliptic;
  } else if (out.parity) {
    out.kind = *out.parity == Parity::even ? ComponentKind::even : ComponentKind::odd;
  } else if (two_equal && st.orders[0] % 2 == 1) {
    out.kind = ComponentKind::nonhyperelliptic;
  } else {
    out.kind = ComponentKind::connected;
  }
  return out;
}

}  // namespace flatlyap
