#include <gtest/gtest.h>

#include "common.hpp"

using namespace flatlyap;
using namespace testing_support;

TEST(Commutator, Examples) {
  EXPECT_EQ(cycle_type(commutator(named("fig1"))), (CycleType{3, 1, 1}));
  auto t = parse_cycles("(12)", 2);
  EXPECT_TRUE(commutator(Origami(t, t)).is_identity());
  EXPECT_EQ(cycle_type(commutator(named("wollmilchsau"))), (CycleType{2, 2, 2, 2}));
  EXPECT_EQ(stratum_of(named("wollmilchsau")).orders, (std::vector<int>{1, 1, 1, 1}));
}

TEST(StratumOf, Examples) {
  auto s = stratum_of(named("fig1"));
  EXPECT_EQ(s.orders, std::vector<int>{2});
  EXPECT_EQ(s.genus, 2);
  auto torus = stratum_of(Origami(Permutation::identity(1), Permutation::identity(1)));
  EXPECT_TRUE(torus.orders.empty());
  EXPECT_EQ(torus.genus, 1);
  auto t411 = stratum_of(named("411"));
  EXPECT_EQ(t411.orders, (std::vector<int>{4, 1, 1}));
  EXPECT_EQ(t411.genus, 4);
}

TEST(StratumOf, EulerCharacteristicOnRandomOrigamis) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto o = random_origami(1 + trial % 14, rng);
    auto s = stratum_of(o);
    int sum = 0;
    for (int m : s.orders) sum += m;
    EXPECT_EQ(sum, 2 * s.genus - 2);
  }
}

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa(parse_stratum("1,1,1,1")), frac(1, 2));
  EXPECT_EQ(kappa(parse_stratum("3,3")), frac(5, 8));
  EXPECT_EQ(kappa(parse_stratum("2,1,1,1,1")), frac(13, 18));
  EXPECT_THROW(kappa(Stratum{}), InputError);
}

TEST(ParseStratum, Forms) {
  EXPECT_EQ(parse_stratum("H(2,2,1,1)"), parse_stratum("2^2,1^2"));
  EXPECT_EQ(parse_stratum("(1,3)").orders, (std::vector<int>{3, 1}));
  EXPECT_EQ(parse_stratum("1^6").genus, 4);
  EXPECT_THROW(parse_stratum("3"), InputError);
  EXPECT_THROW(parse_stratum("2,0"), InputError);
  EXPECT_THROW(parse_stratum("2;2"), InputError);
}

TEST(Validate, Examples) {
  EXPECT_NO_THROW(validate(parse_cycles("(1234)(5)", 5), parse_cycles("(15)", 5)));
  EXPECT_THROW(validate(Permutation::identity(2), Permutation::identity(2)), InputError);
  EXPECT_THROW(validate(Permutation::identity(2), Permutation::identity(3)), InputError);
  EXPECT_THROW(parse_origami("r=(1 2 3)(4 5 6 7 8 9 10 11 12); u=(1 11)(10 5 13)(2 7); d=12"), InputError);
}

TEST(OrigamiText, FieldsAndRoundTrip) {
  auto a = parse_origami("u=(15); d=5; r=(1234)");
  EXPECT_EQ(a, named("fig1"));
  EXPECT_EQ(parse_origami(to_string(a)), a);
  EXPECT_EQ(parse_origami("r=2 3 4 1 5; u=5 2 3 4 1"), a);
  EXPECT_THROW(parse_origami("r=(12); d=2"), InputError);
  EXPECT_THROW(parse_origami("r=(12); u=(12); x=3; d=2"), InputError);
  EXPECT_THROW(parse_origami("r=(12); u=(12); d=two"), InputError);
  EXPECT_THROW(parse_origami("r=(12); r=(12); u=(1); d=2"), InputError);
}

TEST(OrigamiJson, RoundTripAndErrors) {
  for (const auto& [name, o] : fixture()) EXPECT_EQ(parse_origami(to_json(o).dump()), o) << name;
  EXPECT_THROW(parse_origami("{\"degree\": 2, \"right\": [2, 1]}"), InputError);
  EXPECT_THROW(parse_origami("{\"degree\": 2, \"right\": [2, 1], \"up\": [1]}"), InputError);
  EXPECT_THROW(parse_origami("{\"degree\": 2, "), InputError);
}

TEST(Fixture, NamedOrigamisLieInTheirStrata) {
  std::map<std::string, std::string> want{
      {"fig1", "(2)"},           {"wollmilchsau", "(1,1,1,1)"}, {"L2", "(1,1,1,1)"},
      {"411", "(4,1,1)"},        {"411b", "(4,1,1)"},          {"3111", "(3,1,1,1)"},
      {"3111b", "(3,1,1,1)"},    {"2211a", "(2,2,1,1)"},       {"2211b", "(2,2,1,1)"},
      {"21111a", "(2,1,1,1,1)"}, {"21111b", "(2,1,1,1,1)"},    {"111111a", "(1,1,1,1,1,1)"},
      {"111111b", "(1,1,1,1,1,1)"}, {"ST71", "(7,1)"},          {"ST521", "(5,2,1)"},
      {"ST5111", "(5,1,1,1)"},   {"ST44even", "(4,4)"},        {"ST44odd", "(4,4)"},
      {"ST431", "(4,3,1)"},      {"ST31to5", "(3,1,1,1,1,1)"}, {"10odd", "(10)"},
      {"10even", "(10)"}};
  for (const auto& [name, st] : want) EXPECT_EQ(to_string(stratum_of(named(name))), st) << name;
}
