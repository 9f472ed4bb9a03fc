#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace flatlyap {

// Bijection of {1..d}. Stored 0-based; the public interface is 1-based.
class Permutation {
 public:
  Permutation() = default;

  // images[i-1] = image of symbol i
  explicit Permutation(const std::vector<int>& images) {
    img_.reserve(images.size());
    for (int v : images) img_.push_back(v - 1);
    check();
  }

  static Permutation identity(int d) {
    require(d >= 1, "degree must be positive");
    Permutation p;
    p.img_.resize(d);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }

  static Permutation from_raw(std::vector<int> img) {
    Permutation p;
    p.img_ = std::move(img);
    p.check();
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }

  int operator()(int x) const {
    require(x >= 1 && x <= degree(), "symbol " + std::to_string(x) + " out of range");
    return img_[x - 1] + 1;
  }

  const std::vector<int>& raw() const { return img_; }

  std::vector<int> images() const {
    std::vector<int> out(img_);
    for (int& v : out) ++v;
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void check() const {
    require(!img_.empty(), "degree must be positive");
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      require(v >= 0 && v < degree(), "image " + std::to_string(v + 1) + " out of range");
      require(!seen[v], "images are not a bijection");
      seen[v] = 1;
    }
  }

  std::vector<int> img_;
};

using CycleType = std::vector<int>;  // sorted descending, fixed points included

// (p*q)(x) = p(q(x))
inline Permutation compose(const Permutation& p, const Permutation& q) {
  require(p.degree() == q.degree(), "degree mismatch in compose");
  std::vector<int> out(p.degree());
  for (int i = 0; i < p.degree(); ++i) out[i] = p.raw()[q.raw()[i]];
  return Permutation::from_raw(std::move(out));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.degree());
  for (int i = 0; i < p.degree(); ++i) out[p.raw()[i]] = i;
  return Permutation::from_raw(std::move(out));
}

// 1-based cycles, each starting at its least symbol, ordered by that symbol
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = p.raw()[j]) {
      seen[j] = 1;
      c.push_back(j + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

// Multi-digit fixed points are left implicit: "(13)" would read as (1 3).
inline std::string to_cycle_string(const Permutation& p, bool with_fixed = true) {
  std::string s;
  for (const auto& c : cycles(p)) {
    if (c.size() == 1 && (!with_fixed || c[0] >= 10)) continue;
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  if (s.empty()) s = "()";
  return s;
}

namespace detail {

inline bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; }

inline std::vector<int> cycle_symbols(const std::string& body) {
  bool separated = false;
  for (char ch : body) {
    if (is_space(ch) || ch == ',')
      separated = true;
    else
      require(ch >= '0' && ch <= '9', "unexpected character '" + std::string(1, ch) + "' in cycle");
  }
  std::vector<int> syms;
  if (separated) {
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      require(tok.size() < 9, "symbol too large");
      syms.push_back(std::stoi(tok));
      tok.clear();
    };
    for (char ch : body) {
      if (is_space(ch) || ch == ',')
        flush();
      else
        tok += ch;
    }
    flush();
    return syms;
  }
  if (body.empty()) return syms;
  // unseparated: one digit per symbol, unless that reading is impossible
  // (a zero digit or a repeated digit), then the whole body is one symbol
  std::string sorted = body;
  std::sort(sorted.begin(), sorted.end());
  bool digitwise = body.find('0') == std::string::npos &&
                   std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (digitwise) {
    for (char ch : body) syms.push_back(ch - '0');
  } else {
    require(body.size() < 9, "symbol too large");
    syms.push_back(std::stoi(body));
  }
  return syms;
}

}  // namespace detail

// Cycle notation, e.g. "(1234)(5)", "(1 14)(2,4)". Unlisted symbols are fixed.
inline Permutation parse_cycles(std::string_view text, int degree) {
  require(degree >= 1, "degree must be positive");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  std::size_t k = 0;
  while (k < text.size()) {
    char ch = text[k];
    if (detail::is_space(ch)) {
      ++k;
      continue;
    }
    require(ch == '(', "expected '(' in cycle notation");
    auto close = text.find(')', k);
    require(close != std::string_view::npos, "unbalanced parenthesis");
    auto syms = detail::cycle_symbols(std::string(text.substr(k + 1, close - k - 1)));
    for (int s : syms) {
      require(s >= 1 && s <= degree,
              "symbol " + std::to_string(s) + " out of range 1.." + std::to_string(degree));
      require(!used[s - 1], "symbol " + std::to_string(s) + " repeated");
      used[s - 1] = 1;
    }
    for (std::size_t j = 0; j < syms.size(); ++j)
      img[syms[j] - 1] = syms[(j + 1) % syms.size()] - 1;
    k = close + 1;
  }
  return Permutation::from_raw(std::move(img));
}

// One-line image format "2 3 4 1 5"
inline Permutation parse_images(std::string_view text) {
  std::vector<int> v;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    require(tok.size() < 9, "symbol too large");
    v.push_back(std::stoi(tok));
    tok.clear();
  };
  for (char ch : text) {
    if (detail::is_space(ch) || ch == ',') {
      flush();
    } else {
      require(ch >= '0' && ch <= '9', "unexpected character in image list");
      tok += ch;
    }
  }
  flush();
  require(!v.empty(), "empty image list");
  return Permutation(v);
}

// Either notation. degree <= 0 means "take it from the image list".
inline Permutation parse_permutation(std::string_view text, int degree) {
  if (text.find('(') != std::string_view::npos) {
    require(degree >= 1, "cycle notation needs an explicit degree");
    return parse_cycles(text, degree);
  }
  bool blank = std::all_of(text.begin(), text.end(), detail::is_space);
  if (blank) {
    require(degree >= 1, "empty permutation needs an explicit degree");
    return Permutation::identity(degree);
  }
  auto p = parse_images(text);
  require(degree <= 0 || p.degree() == degree, "image list length differs from degree");
  return p;
}

inline bool is_transitive(const Permutation& r, const Permutation& u) {
  require(r.degree() == u.degree(), "degree mismatch");
  int d = r.degree();
  std::vector<char> seen(d, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {r.raw()[x], u.raw()[x]})
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == d;
}

// Canonical byte key of a pair: canonical right images then up images,
// one byte per symbol (0-based).
using Key = std::string;

namespace detail {

// Min over base squares of the BFS relabeling (moves r then u), comparing the
// relabeled right images first, then up images. Returns false if not transitive.
inline bool canonical_raw(const int* r, const int* u, int d, std::vector<int>& best) {
  thread_local std::vector<int> label, order, cr, cu;
  label.resize(d);
  order.resize(d);
  cr.resize(d);
  cu.resize(d);
  best.assign(2 * d, INT_MAX);
  bool have = false;
  for (int b = 0; b < d; ++b) {
    std::fill(label.begin(), label.end(), -1);
    int n = 0;
    label[b] = 0;
    order[n++] = b;
    bool better = !have, worse = false;
    int k = 0;
    for (; k < n; ++k) {
      int x = order[k];
      if (label[r[x]] < 0) {
        label[r[x]] = n;
        order[n++] = r[x];
      }
      if (label[u[x]] < 0) {
        label[u[x]] = n;
        order[n++] = u[x];
      }
      cr[k] = label[r[x]];
      if (!better) {
        if (cr[k] < best[k])
          better = true;
        else if (cr[k] > best[k]) {
          worse = true;
          break;
        }
      }
    }
    if (worse) continue;
    if (n != d) return false;
    for (k = 0; k < d; ++k) cu[k] = label[u[order[k]]];
    if (!better) {
      bool less = false;
      for (k = 0; k < d; ++k) {
        if (cu[k] != best[d + k]) {
          less = cu[k] < best[d + k];
          break;
        }
      }
      if (!less) continue;
    }
    std::copy(cr.begin(), cr.end(), best.begin());
    std::copy(cu.begin(), cu.end(), best.begin() + d);
    have = true;
  }
  return true;
}

}  // namespace detail

inline Key canonical_key(const Permutation& r, const Permutation& u) {
  require(r.degree() == u.degree(), "degree mismatch");
  int d = r.degree();
  require(d <= 255, "canonical keys support degree <= 255");
  thread_local std::vector<int> best;
  if (!detail::canonical_raw(r.raw().data(), u.raw().data(), d, best))
    throw InputError("canonical form needs a transitive pair");
  Key k(2 * d, '\0');
  for (int i = 0; i < 2 * d; ++i) k[i] = static_cast<char>(best[i]);
  return k;
}

inline std::pair<Permutation, Permutation> decode_key(const Key& k) {
  ensure(k.size() % 2 == 0 && !k.empty(), "malformed canonical key");
  int d = static_cast<int>(k.size() / 2);
  std::vector<int> r(d), u(d);
  for (int i = 0; i < d; ++i) {
    r[i] = static_cast<unsigned char>(k[i]);
    u[i] = static_cast<unsigned char>(k[d + i]);
  }
  return {Permutation::from_raw(std::move(r)), Permutation::from_raw(std::move(u))};
}

// Representative of the simultaneous-conjugacy class; equal iff conjugate.
inline std::pair<Permutation, Permutation> canonical_form(const Permutation& r, const Permutation& u) {
  return decode_key(canonical_key(r, u));
}

// sigma * p * sigma^-1
inline Permutation conjugate(const Permutation& p, const Permutation& sigma) {
  return compose(compose(sigma, p), inverse(sigma));
}

}  // namespace flatlyap
