#pragma once

// Golden-value harness. Fixture lines are "<id> <source> <expected>" with
// id = <group>.<kind>.<argument>; origami names resolve through a second
// fixture of "name | origami" lines.

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "components.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "io.hpp"
#include "moduli.hpp"
#include "orbit.hpp"
#include "origami.hpp"
#include "rational.hpp"

namespace flatlyap {

struct GoldenEntry {
  std::string id, source, expected;
  int line = 0;
  std::string group() const { return id.substr(0, id.find('.')); }
};

struct GoldenResult {
  GoldenEntry entry;
  std::string actual;
  bool ok = false;
  bool skipped = false;
  std::string note;
};

struct GoldenOptions {
  std::set<std::string> groups;  // empty: all
  bool skip_enumeration = false;
  OrbitOptions orbit{50'000'000};
  EnumOptions enumeration;
  const OrbitCache* cache = nullptr;
};

namespace detail {

inline std::string trim(std::string s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// "(2,2)odd" -> stratum, component ("" when absent)
inline std::pair<Stratum, std::string> stratum_and_component(const std::string& arg) {
  auto close = arg.find(')');
  require(!arg.empty() && arg[0] == '(' && close != std::string::npos, "expected '(orders)component' in '" + arg + "'");
  return {parse_stratum(arg.substr(0, close + 1)), arg.substr(close + 1)};
}

inline std::string join(const std::set<Rational>& vals) {
  std::string out;
  for (const auto& v : vals) out += (out.empty() ? "" : ",") + pretty(v);
  return out.empty() ? "none" : out;
}

inline std::set<Rational> rational_list(const std::string& text) {
  std::set<Rational> out;
  for (const auto& t : split(text, ',')) out.insert(parse_rational(trim(t)));
  return out;
}

}  // namespace detail

inline std::vector<GoldenEntry> read_golden(std::istream& in) {
  std::vector<GoldenEntry> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    GoldenEntry e;
    e.line = n;
    std::string extra;
    require(static_cast<bool>(ls >> e.id >> e.source >> e.expected) && !(ls >> extra),
            "golden line " + std::to_string(n) + ": expected '<id> <source> <expected>'");
    require(detail::split(e.id, '.').size() >= 3, "golden line " + std::to_string(n) + ": malformed id '" + e.id + "'");
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<GoldenEntry> read_golden(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open golden file " + path);
  return read_golden(in);
}

inline std::map<std::string, Origami> read_origami_fixture(std::istream& in) {
  std::map<std::string, Origami> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto bar = t.find('|');
    require(bar != std::string::npos, "origami fixture line " + std::to_string(n) + ": expected 'name | origami'");
    std::string name = detail::trim(t.substr(0, bar));
    require(!name.empty() && !out.count(name), "origami fixture line " + std::to_string(n) + ": bad or repeated name");
    out.emplace(name, parse_origami(t.substr(bar + 1)));
  }
  return out;
}

inline std::map<std::string, Origami> read_origami_fixture(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open origami fixture " + path);
  return read_origami_fixture(in);
}

class GoldenRunner {
 public:
  GoldenRunner(std::map<std::string, Origami> origamis, GoldenOptions opt)
      : origamis_(std::move(origamis)), opt_(std::move(opt)) {}

  bool selected(const GoldenEntry& e) const { return opt_.groups.empty() || opt_.groups.count(e.group()); }

  static bool is_enumeration(const GoldenEntry& e) {
    auto kind = detail::split(e.id, '.')[1];
    return kind == "enumall" || kind == "enumhas";
  }

  // Input errors become mismatches; resource limits propagate.
  GoldenResult run(const GoldenEntry& e) {
    GoldenResult res{e, "", false, false, ""};
    if (opt_.skip_enumeration && is_enumeration(e)) {
      res.skipped = true;
      return res;
    }
    try {
      check(e, res);
    } catch (const InputError& err) {
      res.actual = std::string("error:") + err.what();
      res.ok = false;
    }
    return res;
  }

  std::vector<GoldenResult> run_all(const std::vector<GoldenEntry>& entries) {
    std::vector<GoldenResult> out;
    for (const auto& e : entries)
      if (selected(e)) out.push_back(run(e));
    return out;
  }

 private:
  const Origami& named(const std::string& name) const {
    auto it = origamis_.find(name);
    require(it != origamis_.end(), "unknown origami '" + name + "'");
    return it->second;
  }

  const OrbitSummary& summary(const std::string& name) {
    auto it = sums_.find(name);
    if (it == sums_.end()) it = sums_.emplace(name, lyapunov_sum(named(name), opt_.orbit, opt_.cache)).first;
    return it->second;
  }

  const StratumReport& report(const Stratum& s, int dmax) {
    auto key = std::make_pair(s.orders, dmax);
    auto it = reports_.find(key);
    if (it == reports_.end())
      it = reports_.emplace(key, nonvarying_report(s, dmax, 1, opt_.enumeration, opt_.orbit)).first;
    return it->second;
  }

  static const TableRow& table_row(int g, const std::string& arg, const std::string& status) {
    auto [st, comp] = detail::stratum_and_component(arg);
    require(st.genus == g, "stratum " + to_string(st) + " is not in genus " + std::to_string(g));
    if (comp.empty()) comp = "-";
    static std::map<int, std::vector<TableRow>> tables;
    if (!tables.count(g)) tables[g] = stratum_table(g);
    for (const auto& row : tables[g])
      if (row.stratum == to_string(st) && row.component == comp && row.status == status) return row;
    throw InputError("no " + status + " row for " + arg + " in genus " + std::to_string(g));
  }

  static int group_genus(const GoldenEntry& e) {
    auto grp = e.group();
    require(grp.size() >= 2 && grp[0] == 'g', "group must be g<genus>");
    return std::stoi(grp.substr(1));
  }

  static void numeric(GoldenResult& res, const Rational& actual) {
    res.actual = pretty(actual);
    res.ok = actual == parse_rational(res.entry.expected);
  }

  void check(const GoldenEntry& e, GoldenResult& res) {
    auto parts = detail::split(e.id, '.');
    const std::string kind = parts[1];
    std::string arg = parts[2];
    for (std::size_t k = 3; k < parts.size(); ++k) arg += "." + parts[k];
    if (kind == "lyap") {
      numeric(res, summary(arg).L);
    } else if (kind == "stratum") {
      res.actual = to_string(stratum_of(named(arg)));
      res.ok = res.actual == e.expected;
    } else if (kind == "label") {
      res.actual = to_string(component_label(named(arg)).kind);
      res.ok = res.actual == e.expected;
    } else if (kind == "hypinv") {
      res.actual = hyperelliptic_involution(named(arg)) ? "yes" : "no";
      res.ok = res.actual == e.expected;
    } else if (kind == "hyp") {
      require(arg == "single" || arg == "two", "hyp checks take 'single' or 'two'");
      numeric(res, hyperelliptic_component_L(group_genus(e), arg == "single" ? HypKind::single_zero : HypKind::two_zeros));
    } else if (kind == "row") {
      numeric(res, table_row(group_genus(e), arg, "non-varying").L);
    } else if (kind == "conj") {
      numeric(res, table_row(group_genus(e), arg, "conjectured").L);
      res.note = "open case";
    } else if (kind == "slope") {
      numeric(res, *table_row(group_genus(e), arg, "non-varying").s);
    } else if (kind == "bound") {
      // a sharper bound implies the stated one
      Rational b = table_row(group_genus(e), arg, "bound").L, want = parse_rational(e.expected);
      res.actual = pretty(b);
      res.ok = b <= want;
      if (b < want) res.note = "sharper than stated";
    } else if (kind == "quad") {
      numeric(res, hyperelliptic_locus_L(parse_quad(arg)));
    } else if (kind == "triple") {
      auto st = detail::stratum_and_component(arg).first;
      auto f = detail::split(e.expected, '|');
      require(f.size() == 3, "triple expects 'L|s|c'");
      Rational L = parse_rational(f[0]);
      Rational s = slope_from_L(st, L), c = L - kappa(st);
      res.actual = pretty(L) + "|" + pretty(s) + "|" + pretty(c);
      res.ok = s == parse_rational(f[1]) && c == parse_rational(f[2]);
    } else if (kind == "enumall" || kind == "enumhas") {
      auto dot = arg.rfind('.');
      require(dot != std::string::npos, "enumeration checks take '(orders)component.dmax'");
      auto [st, comp] = detail::stratum_and_component(arg.substr(0, dot));
      const auto& rep = report(st, std::stoi(arg.substr(dot + 1)));
      std::set<Rational> found;
      for (const auto& [c, byL] : rep.values)
        if (comp.empty() || c == comp)
          for (const auto& kv : byL) found.insert(kv.first);
      auto want = detail::rational_list(e.expected);
      res.actual = detail::join(found);
      if (kind == "enumall") {
        res.ok = found == want;
      } else {
        res.ok = std::includes(found.begin(), found.end(), want.begin(), want.end());
        res.actual = res.ok ? e.expected : res.actual;
        if (res.ok && found.size() > want.size()) res.note = std::to_string(found.size()) + " values found";
      }
    } else {
      throw InputError("unknown check kind '" + kind + "'");
    }
  }

  std::map<std::string, Origami> origamis_;
  GoldenOptions opt_;
  std::map<std::string, OrbitSummary> sums_;
  std::map<std::pair<std::vector<int>, int>, StratumReport> reports_;
};

}  // namespace flatlyap
