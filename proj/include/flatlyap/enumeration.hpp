#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "components.hpp"
#include "error.hpp"
#include "orbit.hpp"
#include "origami.hpp"
#include "permutation.hpp"

namespace flatlyap {

// partitions of n, each descending, in reverse lexicographic order
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// consecutive cycles (1..a)(a+1..a+b)...
inline Permutation standard_permutation(const std::vector<int>& type) {
  int d = std::accumulate(type.begin(), type.end(), 0);
  std::vector<int> img(d);
  int at = 0;
  for (int len : type) {
    for (int k = 0; k < len; ++k) img[at + k] = at + (k + 1) % len;
    at += len;
  }
  return Permutation::from_raw(std::move(img));
}

struct EnumOptions {
  int threads = 1;
};

namespace detail {

inline void enumerate_for_type(const std::vector<int>& type, const Stratum& s, std::vector<Key>& out) {
  const Permutation rp = standard_permutation(type);
  const int d = rp.degree();
  const auto& r = rp.raw();
  std::vector<int> ri(d);
  for (int i = 0; i < d; ++i) ri[r[i]] = i;
  int moved = 0;
  for (int m : s.orders) moved += m + 1;
  CycleType want;
  for (int m : s.orders) want.push_back(m + 1);
  want.resize(want.size() + (d - moved), 1);
  std::sort(want.begin(), want.end(), std::greater<>());

  std::vector<int> u(d), ui(d), c(d), best;
  std::iota(u.begin(), u.end(), 0);
  std::vector<char> seen(d);
  CycleType ct;
  do {
    // c fixes x iff u r x = r u x
    int nonfixed = 0;
    for (int x = 0; x < d && nonfixed <= moved; ++x) nonfixed += u[r[x]] != r[u[x]];
    if (nonfixed != moved) continue;
    for (int i = 0; i < d; ++i) ui[u[i]] = i;
    for (int x = 0; x < d; ++x) c[x] = ui[ri[u[r[x]]]];
    ct.clear();
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < d; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = c[j]) {
        seen[j] = 1;
        ++len;
      }
      ct.push_back(len);
    }
    std::sort(ct.begin(), ct.end(), std::greater<>());
    if (ct != want) continue;
    if (!canonical_raw(r.data(), u.data(), d, best)) continue;  // not transitive
    Key k(2 * d, '\0');
    for (int i = 0; i < 2 * d; ++i) k[i] = static_cast<char>(best[i]);
    out.push_back(std::move(k));
  } while (std::next_permutation(u.begin(), u.end()));
}

}  // namespace detail

// All transitive pairs of degree d in the stratum, one canonical key per class, sorted.
inline std::vector<Key> enumerate_origamis(int d, const Stratum& s, const EnumOptions& opt = {}) {
  require(d >= 1, "degree must be positive");
  require(d <= 12, "exhaustive enumeration is limited to degree <= 12");
  require(opt.threads >= 1, "parallelism must be at least 1");
  int moved = 0;
  for (int m : s.orders) moved += m + 1;
  if (moved > d) return {};
  auto types = partitions(d);
  std::vector<std::vector<Key>> found(types.size());
  if (opt.threads == 1) {
    for (std::size_t t = 0; t < types.size(); ++t) detail::enumerate_for_type(types[t], s, found[t]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < opt.threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < types.size(); t += opt.threads) detail::enumerate_for_type(types[t], s, found[t]);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<Key> all;
  for (auto& v : found) all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

struct OrbitRecord {
  std::vector<Key> members;  // sorted
  OrbitSummary summary;
  ComponentLabel label;  // of members.front()
};

// Disjoint SL(2,Z)-orbits covering the input, ordered by least member.
inline std::vector<OrbitRecord> orbit_partition(const std::vector<Key>& keys, const OrbitOptions& opt = {}) {
  std::vector<Key> sorted(keys);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::unordered_map<Key, std::size_t> owner;
  std::vector<OrbitRecord> out;
  std::optional<Stratum> st;
  for (const Key& k : sorted) {
    if (owner.count(k)) continue;
    Origami o = origami_from_key(k);
    Stratum s = stratum_of(o);
    require(!st || *st == s, "orbit_partition needs a single stratum");
    st = s;
    auto g = orbit_graph(o, opt);
    OrbitRecord rec;
    rec.summary = summarize(g, s);
    rec.members.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) rec.members.push_back(g.member(i));
    std::sort(rec.members.begin(), rec.members.end());
    rec.label = component_label(origami_from_key(rec.members.front()));
    for (const Key& m : rec.members) owner.emplace(m, out.size());
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const OrbitRecord& a, const OrbitRecord& b) { return a.members.front() < b.members.front(); });
  return out;
}

struct Witness {
  Key origami;
  int degree = 0;
  std::size_t orbit_size = 0;
};

struct OrbitRow {
  std::string component;
  int degree = 0;
  std::size_t orbit_size = 0;
  Rational L, c, s;
  Key witness;
};

struct StratumReport {
  Stratum stratum;
  int d_min = 1, d_max = 1;
  // component label -> L value -> first witness (least degree, then least key)
  std::map<std::string, std::map<Rational, Witness>> values;
  std::vector<OrbitRow> orbits;
};

inline std::string component_name(const ComponentLabel& l) { return to_string(l.kind); }

inline StratumReport nonvarying_report(const Stratum& s, int d_max, int d_min = 1, const EnumOptions& eopt = {},
                                       const OrbitOptions& oopt = {}) {
  require(s.genus >= 2, "reports need genus >= 2");
  require(d_min >= 1 && d_min <= d_max, "bad degree range");
  StratumReport rep;
  rep.stratum = s;
  rep.d_min = d_min;
  rep.d_max = d_max;
  for (int d = d_min; d <= d_max; ++d) {
    auto keys = enumerate_origamis(d, s, eopt);
    for (auto& rec : orbit_partition(keys, oopt)) {
      std::string comp = component_name(rec.label);
      auto& byL = rep.values[comp];
      if (!byL.count(rec.summary.L)) byL[rec.summary.L] = Witness{rec.members.front(), d, rec.summary.orbit_size};
      rep.orbits.push_back({comp, d, rec.summary.orbit_size, rec.summary.L, rec.summary.c, rec.summary.s, rec.members.front()});
    }
  }
  return rep;
}

}  // namespace flatlyap
