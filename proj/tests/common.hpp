#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <flatlyap/flatlyap.hpp>
#include <flatlyap/golden.hpp>
#include <flatlyap/io.hpp>

namespace testing_support {

using namespace flatlyap;

inline const std::map<std::string, Origami>& fixture() {
  static const auto m = read_origami_fixture(std::string(FLATLYAP_DATA_DIR) + "/origamis.txt");
  return m;
}

inline const Origami& named(const std::string& name) { return fixture().at(name); }

inline Permutation random_permutation(int d, std::mt19937_64& rng) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_raw(img);
}

inline Origami random_origami(int d, std::mt19937_64& rng) {
  while (true) {
    auto r = random_permutation(d, rng), u = random_permutation(d, rng);
    if (is_transitive(r, u)) return Origami(r, u);
  }
}

// least (r, u) image pair over all simultaneous relabelings; independent of canonical_key
inline std::pair<std::vector<int>, std::vector<int>> brute_class(const Permutation& r, const Permutation& u) {
  int d = r.degree();
  std::vector<int> s(d);
  std::iota(s.begin(), s.end(), 0);
  std::pair<std::vector<int>, std::vector<int>> best;
  bool have = false;
  do {
    auto sig = Permutation::from_raw(s);
    auto c = std::make_pair(conjugate(r, sig).raw(), conjugate(u, sig).raw());
    if (!have || c < best) best = c, have = true;
  } while (std::next_permutation(s.begin(), s.end()));
  return best;
}

// all permutations of degree d as raw image vectors
inline std::vector<std::vector<int>> all_raw(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace testing_support
