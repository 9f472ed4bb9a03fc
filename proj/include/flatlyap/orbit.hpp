#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <functional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "origami.hpp"
#include "permutation.hpp"
#include "rational.hpp"

namespace flatlyap {

// horizontal shear: (r, u) -> (r, u r^-1)
inline Origami act_T(const Origami& o) {
  return Origami(o.right(), compose(o.up(), inverse(o.right())));
}

// quarter turn: (r, u) -> (u^-1, r)
inline Origami act_S(const Origami& o) { return Origami(inverse(o.up()), o.right()); }

struct Cylinder {
  int width = 0;
  int height = 0;
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
  friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
};

using CylinderDecomposition = std::vector<Cylinder>;

namespace detail {

// Calls f(width, height) for every horizontal cylinder; raw 0-based arrays.
template <class F>
void for_each_cylinder(const int* r, const int* u, int d, F&& f) {
  thread_local std::vector<int> row_of, row_len, row_start, next, has_prev;
  row_of.assign(d, -1);
  row_len.clear();
  row_start.clear();
  for (int i = 0; i < d; ++i) {
    if (row_of[i] >= 0) continue;
    int id = static_cast<int>(row_len.size()), len = 0;
    for (int j = i; row_of[j] < 0; j = r[j]) {
      row_of[j] = id;
      ++len;
    }
    row_len.push_back(len);
    row_start.push_back(i);
  }
  int rows = static_cast<int>(row_len.size());
  next.assign(rows, -1);
  has_prev.assign(rows, 0);
  for (int k = 0; k < rows; ++k) {
    bool glued = true;
    int j = row_start[k];
    do {
      if (u[r[j]] != r[u[j]]) {
        glued = false;
        break;
      }
      j = r[j];
    } while (j != row_start[k]);
    if (glued) {
      next[k] = row_of[u[row_start[k]]];
      has_prev[next[k]] = 1;
    }
  }
  int area = 0;
  thread_local std::vector<char> done;
  done.assign(rows, 0);
  auto chain = [&](int k) {
    int h = 0, j = k;
    while (j >= 0 && !done[j]) {
      done[j] = 1;
      ++h;
      j = next[j];
    }
    ensure(row_len[k] * h > 0, "empty cylinder");
    area += row_len[k] * h;
    f(row_len[k], h);
  };
  for (int k = 0; k < rows; ++k)
    if (!has_prev[k]) chain(k);
  // rows left over lie on closed chains (torus only)
  for (int k = 0; k < rows; ++k)
    if (!done[k]) chain(k);
  ensure(area == d, "cylinder areas do not sum to the degree");
}

}  // namespace detail

inline CylinderDecomposition horizontal_cylinders(const Origami& o) {
  CylinderDecomposition out;
  detail::for_each_cylinder(o.right().raw().data(), o.up().raw().data(), o.degree(),
                            [&](int w, int h) { out.push_back({w, h}); });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline Rational sum_h_over_w(const CylinderDecomposition& cyl) {
  Rational s = 0;
  for (const auto& c : cyl) s += frac(c.height, c.width);
  return s;
}

struct OrbitOptions {
  std::size_t cap = 10'000'000;
};

// The orbit as a graph: members in BFS order (member 0 is the start) with
// the T and S images of each member. Keys are stored back to back.
struct OrbitGraph {
  int degree = 0;
  std::string keys;
  std::vector<std::uint32_t> t_next, s_next;
  std::vector<std::uint64_t> hw_hist;  // count of cylinders (h, w) at h*(d+1)+w

  std::size_t size() const { return degree ? keys.size() / (2 * degree) : 0; }
  std::string_view view(std::size_t i) const { return std::string_view(keys).substr(i * 2 * degree, 2 * degree); }
  Key member(std::size_t i) const { return Key(view(i)); }
};

namespace detail {

// Open-addressing set of member indices, hashed by key bytes.
class KeyIndex {
 public:
  explicit KeyIndex(const OrbitGraph& g) : g_(g) { slots_.assign(1024, kEmpty); }

  // index of k, or the next member index when k is new (caller appends it)
  std::pair<std::uint32_t, bool> find_or_insert(std::string_view k) {
    std::size_t n = g_.size();
    if (2 * (n + 1) > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(k) & mask;; i = (i + 1) & mask) {
      std::uint32_t v = slots_[i];
      if (v == kEmpty) {
        slots_[i] = static_cast<std::uint32_t>(n);
        return {static_cast<std::uint32_t>(n), true};
      }
      if (g_.view(v) == k) return {v, false};
    }
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  static std::size_t hash(std::string_view k) { return std::hash<std::string_view>{}(k); }

  void grow() {
    std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    std::size_t mask = slots_.size() - 1;
    for (std::uint32_t v : old) {
      if (v == kEmpty) continue;
      std::size_t i = hash(g_.view(v)) & mask;
      while (slots_[i] != kEmpty) i = (i + 1) & mask;
      slots_[i] = v;
    }
  }

  const OrbitGraph& g_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace detail

inline OrbitGraph orbit_graph(const Origami& o, const OrbitOptions& opt = {}) {
  require(opt.cap >= 1, "orbit cap must be at least 1");
  require(opt.cap < 0xffffffffu, "orbit cap is too large");
  const int d = o.degree();
  require(d <= 255, "orbits support degree <= 255");
  OrbitGraph g;
  g.degree = d;
  g.hw_hist.assign(static_cast<std::size_t>(d + 1) * (d + 1), 0);
  detail::KeyIndex index(g);
  auto add = [&](std::string_view k) -> std::uint32_t {
    auto [at, fresh] = index.find_or_insert(k);
    if (fresh) {
      if (at >= opt.cap) throw ResourceLimitError("orbit exceeds the cap of " + std::to_string(opt.cap) + " elements");
      g.keys.append(k);
    }
    return at;
  };
  add(canonical_key(o));
  std::vector<int> r(d), u(d), ri(d), ui(d), a(d), best;
  Key k(2 * d, '\0');
  auto key_of = [&](const std::vector<int>& x, const std::vector<int>& y) -> std::string_view {
    bool ok = detail::canonical_raw(x.data(), y.data(), d, best);
    ensure(ok, "orbit element is not transitive");
    for (int i = 0; i < 2 * d; ++i) k[i] = static_cast<char>(best[i]);
    return k;
  };
  for (std::size_t n = 0; n < g.size(); ++n) {
    auto cur = g.view(n);
    for (int i = 0; i < d; ++i) {
      r[i] = static_cast<unsigned char>(cur[i]);
      u[i] = static_cast<unsigned char>(cur[d + i]);
    }
    for (int i = 0; i < d; ++i) {
      ri[r[i]] = i;
      ui[u[i]] = i;
    }
    detail::for_each_cylinder(r.data(), u.data(), d, [&](int w, int h) { ++g.hw_hist[h * (d + 1) + w]; });
    for (int i = 0; i < d; ++i) a[i] = u[ri[i]];
    auto t = add(key_of(r, a));
    auto s = add(key_of(ui, r));
    g.t_next.push_back(t);
    g.s_next.push_back(s);
  }
  return g;
}

// Sorted canonical keys of the orbit.
inline std::vector<Key> orbit(const Origami& o, const OrbitOptions& opt = {}) {
  auto g = orbit_graph(o, opt);
  std::vector<Key> out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.member(i));
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational total_hw(const OrbitGraph& g) {
  Rational total = 0;
  int d = g.degree;
  for (int h = 1; h <= d; ++h)
    for (int w = 1; w <= d; ++w)
      if (auto c = g.hw_hist[h * (d + 1) + w]) total += Rational(Integer(c) * h, Integer(w));
  return total;
}

struct Cusp {
  std::size_t width = 0;
  Key representative;  // least canonical key in the T-orbit
  CylinderDecomposition cylinders;
};

inline std::vector<Cusp> cusps(const OrbitGraph& g) {
  std::vector<Cusp> out;
  std::vector<char> seen(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    Cusp c;
    std::string_view rep = g.view(i);
    for (std::size_t j = i; !seen[j]; j = g.t_next[j]) {
      seen[j] = 1;
      ++c.width;
      if (g.view(j) < rep) rep = g.view(j);
    }
    c.representative = Key(rep);
    c.cylinders = horizontal_cylinders(origami_from_key(c.representative));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Cusp& x, const Cusp& y) { return x.representative < y.representative; });
  return out;
}

inline std::vector<Cusp> cusps(const Origami& o, const OrbitOptions& opt = {}) {
  require(genus(o) >= 2, "cusps need genus >= 2");
  return cusps(orbit_graph(o, opt));
}

struct OrbitSummary {
  int degree = 0;
  Stratum stratum;
  std::size_t orbit_size = 0;
  std::optional<std::size_t> cusp_count;  // absent when served from the cache
  Rational total_hw, L, c, s;
};

inline OrbitSummary make_summary(int degree, const Stratum& st, std::size_t n, std::optional<std::size_t> cusp_count,
                                 const Rational& total) {
  require(st.genus >= 2, "Lyapunov sums need genus >= 2");
  ensure(n >= 1, "empty orbit");
  OrbitSummary out;
  out.degree = degree;
  out.stratum = st;
  out.orbit_size = n;
  out.cusp_count = cusp_count;
  out.total_hw = total;
  Rational k = kappa(st);
  out.L = k + total / Rational(Integer(n));
  out.c = out.L - k;
  out.s = 12 - 12 * k / out.L;
  ensure(out.s == 12 * out.c / out.L, "slope identities disagree");
  ensure(out.L > 0 && out.s > 0 && out.s < 12, "slope out of range");
  return out;
}

inline OrbitSummary summarize(const OrbitGraph& g, const Stratum& st) {
  std::size_t n_cusps = cusps(g).size();
  return make_summary(g.degree, st, g.size(), n_cusps, total_hw(g));
}

// Orbit cache: one line per orbit, "<hash> <N> <total_hw>".
class OrbitCache {
 public:
  explicit OrbitCache(std::filesystem::path dir) : file_(std::move(dir) / "orbits.txt") {}

  static std::optional<OrbitCache> from_env() {
    const char* dir = std::getenv("FLATLYAP_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return OrbitCache(dir);
  }

  static std::string hash(const Key& k) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char ch : k) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  // Malformed lines are skipped, so a corrupted entry falls through to recomputation.
  std::optional<std::pair<std::size_t, Rational>> lookup(const Key& k) const {
    std::ifstream in(file_);
    if (!in) return std::nullopt;
    std::string want = hash(k), line;
    std::optional<std::pair<std::size_t, Rational>> hit;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string h, n, t, extra;
      if (!(ls >> h >> n >> t) || (ls >> extra) || h != want) continue;
      try {
        if (n.empty() || n.size() > 18 || n.find_first_not_of("0123456789") != std::string::npos) continue;
        std::size_t count = std::stoull(n);
        Rational total = parse_rational(t);
        if (count == 0 || total <= 0) continue;
        hit = {count, total};
      } catch (const std::exception&) {
        continue;
      }
    }
    return hit;
  }

  void store(const Key& k, std::size_t n, const Rational& total) const {
    std::error_code ec;
    std::filesystem::create_directories(file_.parent_path(), ec);
    std::ofstream out(file_, std::ios::app);
    if (!out) return;  // cache is best effort
    out << hash(k) << ' ' << n << ' ' << to_string(total) << '\n';
  }

  const std::filesystem::path& path() const { return file_; }

 private:
  std::filesystem::path file_;
};

inline OrbitSummary lyapunov_sum(const Origami& o, const OrbitOptions& opt = {}, const OrbitCache* cache = nullptr) {
  Stratum st = stratum_of(o);
  require(st.genus >= 2, "Lyapunov sums need genus >= 2");
  Key key = canonical_key(o);
  if (cache)
    if (auto hit = cache->lookup(key)) return make_summary(o.degree(), st, hit->first, std::nullopt, hit->second);
  auto g = orbit_graph(o, opt);
  auto out = summarize(g, st);
  if (cache) cache->store(key, out.orbit_size, out.total_hw);
  return out;
}

}  // namespace flatlyap
