#include <gtest/gtest.h>

#include <random>

#include "common.hpp"

using namespace flatlyap;
using namespace testing_support;

namespace {

const TableRow& row(int g, const std::string& stratum, const std::string& comp, const std::string& status) {
  static std::map<int, std::vector<TableRow>> tables;
  if (!tables.count(g)) tables[g] = stratum_table(g);
  for (const auto& r : tables[g])
    if (r.stratum == stratum && r.component == comp && r.status == status) return r;
  throw std::runtime_error("missing row " + stratum + comp);
}

}  // namespace

TEST(Quad, ParseAndPrint) {
  auto q = parse_quad("Q(2,2,-1^8)");
  EXPECT_EQ(q.genus, 0);
  EXPECT_EQ(parse_quad(to_string(q)).orders, q.orders);
  EXPECT_THROW(parse_quad("2,2,-1^7"), InputError);
  EXPECT_THROW(parse_quad("2,-2,-1^6"), InputError);
}

TEST(Quad, LocusExamples) {
  EXPECT_EQ(hyperelliptic_locus_L(parse_quad("2,2,-1^8")), 2);
  EXPECT_EQ(hyperelliptic_locus_L(parse_quad("5,1,-1^10")), frac(55, 21));
  EXPECT_EQ(hyperelliptic_locus_L(parse_quad("2,2,2,2,-1^12")), 3);
}

TEST(DoubleCover, Examples) {
  EXPECT_EQ(to_string(double_cover_stratum(parse_quad("2,2,-1^8"))), "(1,1,1,1)");
  EXPECT_EQ(to_string(double_cover_stratum(parse_quad("3,1,-1^8"))), "(4,2)");
  EXPECT_EQ(to_string(double_cover_stratum(parse_quad("1,-1^5"))), "(2)");
  EXPECT_THROW(double_cover_stratum(parse_quad("4", 2)), InputError);
}

// the closed forms agree with the locus formula on their genus-0 sources
TEST(HyperellipticComponent, ClosedFormsMatchLocusFormula) {
  for (int g = 2; g <= 20; ++g)
    for (auto kind : {HypKind::single_zero, HypKind::two_zeros}) {
      auto q = hyperelliptic_source(g, kind);
      EXPECT_EQ(hyperelliptic_component_L(g, kind), hyperelliptic_locus_L(q)) << g;
      auto s = double_cover_stratum(q);
      EXPECT_EQ(s.genus, g);
      EXPECT_EQ(s.orders.size(), kind == HypKind::single_zero ? 1u : 2u);
    }
  EXPECT_EQ(hyperelliptic_component_L(3, HypKind::single_zero), frac(9, 5));
  EXPECT_EQ(hyperelliptic_component_L(6, HypKind::two_zeros), frac(7, 2));
  EXPECT_THROW(hyperelliptic_component_L(1, HypKind::two_zeros), InputError);
}

TEST(BrillNoether, Examples) {
  EXPECT_EQ(brill_noether_number(4, 1, 4, {1, 1, 2}), -1);
  EXPECT_EQ(brill_noether_number(3, 1, 3, {1, 2}), -1);
  EXPECT_EQ(brill_noether_number(5, 1, 3), -1);
  EXPECT_EQ(brill_noether_number(4, 1, 3), 0);
}

TEST(Logan, Examples) {
  auto D = logan_divisor(4, {1, 1, 2});
  EXPECT_EQ(D.a, -1);
  EXPECT_EQ(D.c, (std::vector<Rational>{1, 1, 3}));
  EXPECT_EQ(D.b0, 0);
  EXPECT_THROW(logan_divisor(4, {2, 2, 1}), InputError);
  EXPECT_EQ(logan_divisor(4, {4}).c, std::vector<Rational>{10});
  EXPECT_THROW(logan_divisor(4, {2, 1}), InputError);
  EXPECT_THROW(logan_divisor(4, {0, 4}), InputError);
}

TEST(Catalog, AllNamesResolve) {
  for (const auto& name : catalog_names()) {
    bool found = false;
    for (int g = 2; g <= 6 && !found; ++g) {
      try {
        catalog_divisor(name, g);
        found = true;
      } catch (const InputError&) {
      }
    }
    EXPECT_TRUE(found) << name;
  }
  EXPECT_THROW(catalog_divisor("nope", 4), InputError);
  EXPECT_THROW(catalog_divisor("Theta", 5), InputError);
  EXPECT_EQ(divisor_slope(catalog_divisor("H", 3)), 9);
  EXPECT_EQ(divisor_slope(catalog_divisor("GP", 4)), frac(17, 2));
  EXPECT_THROW(divisor_slope(catalog_divisor("W", 3)), InputError);
}

TEST(OmegaRatio, Examples) {
  auto [alpha, beta] = omega_ratio(mark_orders(parse_stratum("4"), {4}), 0);
  EXPECT_EQ(alpha, frac(1, 2));
  EXPECT_EQ(beta, frac(-1, 24));
  EXPECT_THROW(omega_ratio(mark(parse_stratum("4"), {}), 0), InputError);
  EXPECT_THROW(mark(parse_stratum("2,2"), {0, 0}), InputError);
  EXPECT_THROW(mark_orders(parse_stratum("2,2"), {3}), InputError);
}

TEST(SlopeSolver, DisjointDivisorValues) {
  struct Case {
    const char* stratum;
    const char* comp;
    Rational s;
  };
  std::vector<std::pair<int, Case>> cases{
      {3, {"(4)", "odd", 9}},           {3, {"(3,1)", "-", 9}},          {3, {"(2,1,1)", "-", frac(98, 11)}},
      {3, {"(2,2)", "odd", frac(44, 5)}}, {4, {"(6)", "even", frac(60, 7)}}, {4, {"(6)", "odd", frac(108, 13)}},
      {4, {"(5,1)", "-", frac(25, 3)}},   {4, {"(3,3)", "nonhyp", frac(33, 4)}}, {4, {"(3,2,1)", "-", frac(41, 5)}},
      {4, {"(2,2,2)", "odd", 8}},        {5, {"(8)", "even", 8}},          {5, {"(8)", "odd", frac(148, 19)}},
      {5, {"(5,3)", "-", frac(209, 27)}}};
  for (const auto& [g, c] : cases) {
    const auto& r = row(g, c.stratum, c.comp, "non-varying");
    EXPECT_EQ(*r.s, c.s) << c.stratum << c.comp;
    auto st = parse_stratum(c.stratum);
    EXPECT_EQ(r.L, L_from_slope(st, c.s));
  }
}

TEST(SlopeSolver, DirectCalls) {
  auto r = slope_from_disjoint_divisor(mark(parse_stratum("3,1"), {}), catalog_divisor("H", 3));
  EXPECT_EQ(r.s, 9);
  EXPECT_EQ(r.L, frac(7, 4));
  EXPECT_EQ(r.c, frac(21, 16));
  auto lin = slope_from_disjoint_divisor(mark_orders(parse_stratum("3,3"), {3, 3}), catalog_divisor("Lin_printed", 4));
  EXPECT_EQ(lin.s, frac(54, 7));
  EXPECT_THROW(slope_from_disjoint_divisor(mark(parse_stratum("6"), {}), catalog_divisor("Theta", 4)), InputError);
  EXPECT_THROW(slope_bound(mark(parse_stratum("3,1"), {}), DivisorClass{1, {}, 1}), InputError);
}

TEST(SlopeBound, StatedBounds) {
  EXPECT_EQ(row(3, "(1,1,1,1)", "-", "bound").L, 2);
  EXPECT_EQ(row(4, "(2,2,2)", "even", "bound").L, frac(16, 7));
  EXPECT_EQ(row(4, "(4,1,1)", "-", "bound").L, frac(21, 10));
  EXPECT_EQ(row(4, "(2,2,1,1)", "-", "bound").L, frac(13, 6));
  EXPECT_EQ(row(4, "(2,1,1,1,1)", "-", "bound").L, frac(7, 3));
  EXPECT_EQ(row(4, "(1,1,1,1,1,1)", "-", "bound").L, frac(5, 2));
  // the single-lift bound is sharper than 7/3 here
  EXPECT_EQ(row(4, "(3,1,1,1)", "-", "bound").L, frac(9, 4));
}

// every computed origami value respects the bound of its stratum
TEST(SlopeBound, KnownValuesBelowBound) {
  std::vector<std::pair<const char*, const char*>> bounded{
      {"wollmilchsau", "(1,1,1,1)"}, {"L2", "(1,1,1,1)"}, {"411", "(4,1,1)"},
      {"411b", "(4,1,1)"},           {"3111", "(3,1,1,1)"}, {"3111b", "(3,1,1,1)"},
      {"2211a", "(2,2,1,1)"},        {"2211b", "(2,2,1,1)"}, {"21111a", "(2,1,1,1,1)"},
      {"111111a", "(1,1,1,1,1,1)"},  {"111111b", "(1,1,1,1,1,1)"}};
  for (const auto& [name, st] : bounded) {
    auto s = lyapunov_sum(named(name));
    int g = s.stratum.genus;
    EXPECT_LE(s.L, row(g, st, "-", "bound").L) << name;
  }
  for (auto v : {frac(241, 114), frac(72167, 33984)}) EXPECT_LE(v, row(4, "(3,1,1,1)", "-", "bound").L);
}

TEST(SpinSlope, MatchesZClass) {
  for (int g = 2; g <= 20; ++g) EXPECT_EQ(spin_slope(g), divisor_slope(catalog_divisor("Z", g))) << g;
  EXPECT_EQ(spin_slope(3), frac(44, 5));
  EXPECT_EQ(spin_slope(4), 8);
}

TEST(SlopeL, RoundTrip) {
  std::mt19937_64 rng(41);
  std::vector<const char*> strata{"2", "3,1", "1,1,1,1", "5,2,1", "10"};
  for (int trial = 0; trial < 100; ++trial) {
    auto st = parse_stratum(strata[trial % strata.size()]);
    Rational L = frac(1 + rng() % 1000, 1 + rng() % 1000) + kappa(st);
    EXPECT_EQ(L_from_slope(st, slope_from_L(st, L)), L);
  }
  EXPECT_THROW(L_from_slope(parse_stratum("2"), 12), InputError);
  EXPECT_THROW(slope_from_L(parse_stratum("2"), 0), InputError);
}

TEST(Extremality, HoldsForSmallGenera) {
  for (int g = 2; g <= 20; ++g) EXPECT_TRUE(extremality_check(g)) << g;
}

TEST(Extremality, DetectsPerturbedClasses) {
  for (int g = 2; g <= 6; ++g) {
    auto D1 = catalog_divisor("D1", g), D2 = catalog_divisor("D2", g);
    auto bad1 = D1;
    bad1.a += 1;
    EXPECT_FALSE(extremality_check(g, bad1, D2));
    auto bad2 = D2;
    bad2.b0 -= 1;
    EXPECT_FALSE(extremality_check(g, D1, bad2));
  }
}

TEST(StratumTable, RowsAreConsistent) {
  for (int g = 3; g <= 5; ++g)
    for (const auto& r : stratum_table(g)) {
      auto st = parse_stratum(r.stratum);
      EXPECT_EQ(st.genus, g) << r.stratum;
      ASSERT_TRUE(r.s.has_value());
      EXPECT_EQ(*r.s, slope_from_L(st, r.L)) << r.stratum << r.component;
      if (r.status == "locus") {
        auto q = parse_quad(r.method);
        EXPECT_EQ(to_string(double_cover_stratum(q)), r.stratum);
        int branch = 0;
        for (int x : q.orders) branch += x % 2 != 0;
        EXPECT_EQ(2 * g - 2, 2 * (2 * q.genus - 2) + branch);
      }
    }
  EXPECT_THROW(stratum_table(6), InputError);
  EXPECT_THROW(stratum_table(2), InputError);
}

TEST(StratumTable, HyperellipticRows) {
  EXPECT_EQ(row(3, "(4)", "hyp", "non-varying").L, frac(9, 5));
  EXPECT_EQ(row(4, "(3,3)", "hyp", "non-varying").L, frac(5, 2));
  EXPECT_EQ(row(5, "(8)", "hyp", "non-varying").L, frac(25, 9));
}
