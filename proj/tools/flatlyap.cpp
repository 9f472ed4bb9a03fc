// flatlyap: command-line front end.
// Exit codes: 0 success, 1 mismatch, 2 input error, 3 resource cap hit, 4 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <flatlyap/flatlyap.hpp>
#include <flatlyap/golden.hpp>
#include <flatlyap/io.hpp>

#ifndef FLATLYAP_DATA_DIR
#define FLATLYAP_DATA_DIR "data"
#endif

using namespace flatlyap;

namespace {

struct RunConfig {
  std::string origami, input;
  std::string stratum;
  int d_min = 1, d_max = 0;
  std::string cache_dir;
  std::string format = "json";
  int threads = 1;
  std::size_t cap = OrbitOptions{}.cap;
};

Origami load_origami(const RunConfig& cfg) {
  require(cfg.origami.empty() != cfg.input.empty(), "give exactly one of --origami or --input");
  if (!cfg.origami.empty()) return parse_origami(cfg.origami);
  std::ifstream in(cfg.input);
  require(static_cast<bool>(in), "cannot open " + cfg.input);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_origami(text);
}

OrbitOptions orbit_options(const RunConfig& cfg) {
  require(cfg.cap >= 1, "orbit-size cap must be >= 1");
  return OrbitOptions{cfg.cap};
}

std::optional<OrbitCache> cache_for(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return OrbitCache(cfg.cache_dir);
  return OrbitCache::from_env();
}

void add_origami_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-o,--origami", cfg.origami, "origami as text (r=...; u=...; d=N) or JSON");
  cmd->add_option("-i,--input", cfg.input, "file holding the origami");
}

void add_format(CLI::App* cmd, RunConfig& cfg, std::vector<std::string> allowed) {
  cmd->add_option("-f,--format", cfg.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  if (detail::trim(text).empty()) return out;
  return detail::parse_exponent_list(text, false);
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (detail::trim(text).empty()) return out;
  for (const auto& t : detail::split(text, ',')) out.push_back(parse_rational(detail::trim(t)));
  return out;
}

Json slope_json(const SlopeResult& r, bool bound) {
  return Json{{"kind", bound ? "bound" : "equality"}, {"s", to_string(r.s)}, {"L", to_string(r.L)}, {"c", to_string(r.c)}};
}

std::string csv_report(const StratumReport& rep) {
  std::ostringstream out;
  out << "stratum,component,degree,orbit_size,L,c,s,witness\n";
  for (const auto& o : rep.orbits)
    out << '"' << to_string(rep.stratum) << "\"," << o.component << ',' << o.degree << ',' << o.orbit_size << ','
        << to_string(o.L) << ',' << to_string(o.c) << ',' << to_string(o.s) << ",\""
        << to_string(origami_from_key(o.witness)) << "\"\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyapunov exponent sums of square-tiled surfaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* stratum_cmd = app.add_subcommand("stratum", "stratum and component of an origami");
  add_origami_options(stratum_cmd, cfg);
  add_format(stratum_cmd, cfg, {"json", "text"});

  auto* classify_cmd = app.add_subcommand("classify", "connected-component label of an origami");
  add_origami_options(classify_cmd, cfg);

  auto* lyap_cmd = app.add_subcommand("lyap", "Lyapunov sum of the Teichmueller curve of an origami");
  add_origami_options(lyap_cmd, cfg);
  lyap_cmd->add_option("--cap", cfg.cap, "orbit-size cap");
  lyap_cmd->add_option("--cache-dir", cfg.cache_dir, "orbit cache directory (default FLATLYAP_CACHE_DIR)");

  auto* orbit_cmd = app.add_subcommand("orbit", "SL(2,Z)-orbit of an origami");
  add_origami_options(orbit_cmd, cfg);
  orbit_cmd->add_option("--cap", cfg.cap, "orbit-size cap");
  add_format(orbit_cmd, cfg, {"json", "text"});
  bool with_cusps = false;
  orbit_cmd->add_flag("--cusps", with_cusps, "list cusps instead of members");

  auto* cyl_cmd = app.add_subcommand("cylinders", "horizontal cylinder decomposition");
  add_origami_options(cyl_cmd, cfg);

  auto* enum_cmd = app.add_subcommand("enumerate", "all orbits of a stratum up to a degree");
  enum_cmd->add_option("-s,--stratum", cfg.stratum, "zero orders, e.g. 3,1 or 1^4")->required();
  enum_cmd->add_option("--dmax", cfg.d_max, "largest degree")->required();
  enum_cmd->add_option("--dmin", cfg.d_min, "smallest degree");
  enum_cmd->add_option("-j,--threads", cfg.threads, "parallelism degree");
  enum_cmd->add_option("--cap", cfg.cap, "orbit-size cap");
  add_format(enum_cmd, cfg, {"json", "csv"});

  auto* slope_cmd = app.add_subcommand("slope-solve", "slope of Teichmueller curves disjoint from a divisor");
  std::string marks, divisor, omega, lambda, delta0;
  int div_genus = 0;
  bool bound = false;
  slope_cmd->add_option("-s,--stratum", cfg.stratum, "zero orders")->required();
  slope_cmd->add_option("--marks", marks, "orders of the marked zeros, in divisor order");
  slope_cmd->add_option("--divisor", divisor, "catalog divisor name");
  slope_cmd->add_option("--genus", div_genus, "genus for genus-dependent catalog divisors");
  slope_cmd->add_option("--lambda", lambda, "lambda coefficient");
  slope_cmd->add_option("--omega", omega, "omega coefficients, comma separated");
  slope_cmd->add_option("--delta0", delta0, "delta0 coefficient (negative for -b delta0)");
  slope_cmd->add_flag("--bound", bound, "treat the divisor as effective and not containing the curve");

  auto* hyp_cmd = app.add_subcommand("hyp-locus", "Lyapunov sum on a hyperelliptic locus");
  std::string quad, hyp_kind;
  int hyp_genus = 0;
  hyp_cmd->add_option("-q,--quad", quad, "genus-0 quadratic signature, e.g. Q(2,2,-1^8)");
  hyp_cmd->add_option("--genus", hyp_genus, "genus of a hyperelliptic component");
  hyp_cmd->add_option("--kind", hyp_kind, "single or two")->check(CLI::IsMember({"single", "two"}));

  auto* cover_cmd = app.add_subcommand("double-cover", "stratum of the orientation double cover");
  cover_cmd->add_option("-q,--quad", quad, "quadratic signature")->required();

  auto* verify_cmd = app.add_subcommand("verify-tables", "check computed values against the golden fixture");
  std::string which = "all", golden = std::string(FLATLYAP_DATA_DIR) + "/golden.txt",
              fixture = std::string(FLATLYAP_DATA_DIR) + "/origamis.txt";
  bool skip_enum = false, verbose = false;
  cfg.cap = OrbitOptions{}.cap;
  std::size_t verify_cap = GoldenOptions{}.orbit.cap;
  verify_cmd->add_option("which", which, "genus 2..6 or all")->check(CLI::IsMember({"2", "3", "4", "5", "6", "all"}));
  verify_cmd->add_option("--golden", golden, "golden fixture");
  verify_cmd->add_option("--origamis", fixture, "named origami fixture");
  verify_cmd->add_flag("--skip-enumeration", skip_enum, "skip exhaustive enumeration checks");
  verify_cmd->add_flag("-v,--verbose", verbose, "print passing checks too");
  verify_cmd->add_option("-j,--threads", cfg.threads, "parallelism degree for enumeration");
  verify_cmd->add_option("--cap", verify_cap, "orbit-size cap");
  verify_cmd->add_option("--cache-dir", cfg.cache_dir, "orbit cache directory (default FLATLYAP_CACHE_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    require(cfg.threads >= 1, "parallelism must be >= 1");
    if (*stratum_cmd) {
      Origami o = load_origami(cfg);
      Stratum st = stratum_of(o);
      require(st.genus >= 2, "origami has genus " + std::to_string(st.genus) + "; strata need genus >= 2");
      auto label = component_label(o);
      if (cfg.format == "text")
        std::cout << to_string(st) << (label.kind == ComponentKind::connected ? "" : to_string(label.kind)) << "\n";
      else
        std::cout << Json{{"stratum", to_json(st)}, {"genus", st.genus}, {"kappa", to_string(kappa(st))},
                          {"component", to_string(label.kind)}}
                         .dump(2)
                  << "\n";
    } else if (*classify_cmd) {
      std::cout << to_json(component_label(load_origami(cfg))).dump(2) << "\n";
    } else if (*lyap_cmd) {
      Origami o = load_origami(cfg);
      auto cache = cache_for(cfg);
      auto sum = lyapunov_sum(o, orbit_options(cfg), cache ? &*cache : nullptr);
      std::cout << to_json(sum).dump(2) << "\n";
    } else if (*orbit_cmd) {
      Origami o = load_origami(cfg);
      if (with_cusps) {
        Json a = Json::array();
        for (const auto& c : cusps(o, orbit_options(cfg))) {
          if (cfg.format == "text")
            std::cout << c.width << "\t" << to_string(origami_from_key(c.representative)) << "\n";
          else
            a.push_back(Json{{"width", c.width}, {"representative", to_string(origami_from_key(c.representative))},
                             {"cylinders", to_json(c.cylinders)}});
        }
        if (cfg.format == "json") std::cout << a.dump(2) << "\n";
      } else {
        Json a = Json::array();
        for (const auto& k : orbit(o, orbit_options(cfg))) {
          if (cfg.format == "text")
            std::cout << to_string(origami_from_key(k)) << "\n";
          else
            a.push_back(to_json(origami_from_key(k)));
        }
        if (cfg.format == "json") std::cout << a.dump(2) << "\n";
      }
    } else if (*cyl_cmd) {
      std::cout << to_json(horizontal_cylinders(load_origami(cfg))).dump(2) << "\n";
    } else if (*enum_cmd) {
      Stratum st = parse_stratum(cfg.stratum);
      auto rep = nonvarying_report(st, cfg.d_max, cfg.d_min, EnumOptions{cfg.threads}, orbit_options(cfg));
      if (cfg.format == "csv")
        std::cout << csv_report(rep);
      else
        std::cout << to_json(rep).dump(2) << "\n";
    } else if (*slope_cmd) {
      Stratum st = parse_stratum(cfg.stratum);
      DivisorClass D;
      if (!divisor.empty()) {
        require(lambda.empty() && omega.empty() && delta0.empty(), "give a divisor name or coefficients, not both");
        D = catalog_divisor(divisor, div_genus ? div_genus : st.genus);
      } else {
        require(!lambda.empty() && !delta0.empty(), "give --divisor or --lambda and --delta0");
        D = DivisorClass{parse_rational(lambda), rational_list(omega), parse_rational(delta0)};
      }
      MarkedStratum ms = mark_orders(st, int_list(marks));
      auto r = bound ? slope_bound(ms, D) : slope_from_disjoint_divisor(ms, D);
      Json j = slope_json(r, bound);
      j["stratum"] = to_string(st);
      j["divisor"] = to_json(D);
      std::cout << j.dump(2) << "\n";
    } else if (*hyp_cmd) {
      if (!quad.empty()) {
        require(hyp_genus == 0 && hyp_kind.empty(), "give --quad or --genus/--kind, not both");
        auto q = parse_quad(quad);
        Stratum st = double_cover_stratum(q);
        Rational L = hyperelliptic_locus_L(q);
        std::cout << Json{{"signature", to_string(q)}, {"cover", to_string(st)}, {"L", to_string(L)},
                          {"s", to_string(slope_from_L(st, L))}, {"c", to_string(L - kappa(st))}}
                         .dump(2)
                  << "\n";
      } else {
        require(hyp_genus >= 2 && !hyp_kind.empty(), "give --quad or both --genus and --kind");
        HypKind k = hyp_kind == "single" ? HypKind::single_zero : HypKind::two_zeros;
        Stratum st = double_cover_stratum(hyperelliptic_source(hyp_genus, k));
        Rational L = hyperelliptic_component_L(hyp_genus, k);
        std::cout << Json{{"component", to_string(st) + "hyp"}, {"source", to_string(hyperelliptic_source(hyp_genus, k))},
                          {"L", to_string(L)}, {"s", to_string(slope_from_L(st, L))}}
                         .dump(2)
                  << "\n";
      }
    } else if (*cover_cmd) {
      auto q = parse_quad(quad);
      Stratum st = double_cover_stratum(q);
      std::cout << Json{{"signature", to_string(q)}, {"stratum", to_json(st)}, {"genus", st.genus}}.dump(2) << "\n";
    } else if (*verify_cmd) {
      GoldenOptions opt;
      if (which != "all") opt.groups = {"g" + which};
      opt.skip_enumeration = skip_enum;
      require(verify_cap >= 1, "orbit-size cap must be >= 1");
      opt.orbit.cap = verify_cap;
      opt.enumeration.threads = cfg.threads;
      auto cache = cache_for(cfg);
      opt.cache = cache ? &*cache : nullptr;
      auto entries = read_golden(golden);
      GoldenRunner runner(read_origami_fixture(fixture), opt);
      int checked = 0, bad = 0, skipped = 0;
      for (const auto& e : entries) {
        if (!runner.selected(e)) continue;
        auto r = runner.run(e);
        if (r.skipped) {
          ++skipped;
          continue;
        }
        ++checked;
        if (!r.ok) {
          ++bad;
          std::cout << "MISMATCH " << e.id << " [" << e.source << "] expected " << e.expected << " actual " << r.actual
                    << "\n";
        } else if (verbose) {
          std::cout << "ok " << e.id << " " << r.actual << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
        }
        std::cout.flush();
      }
      std::cerr << checked << " checks, " << bad << " mismatches, " << skipped << " skipped\n";
      return bad ? 1 : 0;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
