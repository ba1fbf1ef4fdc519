#include <gtest/gtest.h>

#include "wavesets/report.hpp"
#include "wavesets/setexpr.hpp"

using namespace wavesets;

TEST(PairVerdict, MeyerAndTheorem4) {
  const auto [e, f] = meyer_pair();
  const auto v = pair_verdict(e, f);
  EXPECT_TRUE(v.interpolation_pair && v.theorem1 && v.theorem3_i && v.domains_equal && v.theorem3_ii);
  const auto t = theorem4_sets();
  const auto w = pair_verdict(t.E, t.F);
  EXPECT_FALSE(w.interpolation_pair);
  EXPECT_FALSE(w.theorem1);
  EXPECT_FALSE(w.theorem3_i);
  EXPECT_TRUE(w.domains_equal);
  EXPECT_TRUE(w.theorem3_ii);
  EXPECT_TRUE(w.consistent());
  EXPECT_TRUE(w.proposition6() == false);  // only meaningful for a Shannon base
}

TEST(Campaign, ShannonBaseIsClean) {
  const auto s = fuzz_campaign(1, 40);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.seeds, 40u);
  EXPECT_TRUE(s.findings.empty());
  EXPECT_LE(s.interpolation_pairs, s.domains_equal);
}

TEST(Campaign, FuzzedBaseIsClean) {
  const auto s = fuzz_campaign(100, 20, FuzzBase::kFuzzed);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.proposition6_violations, 0u);
}

TEST(Campaign, Deterministic) {
  EXPECT_EQ(to_json(fuzz_campaign(7, 5)).dump(), to_json(fuzz_campaign(7, 5)).dump());
  const auto [e1, f1] = fuzz_pair(9, FuzzBase::kFuzzed);
  const auto [e2, f2] = fuzz_pair(9, FuzzBase::kFuzzed);
  EXPECT_EQ(e1, e2);
  EXPECT_EQ(f1, f2);
  EXPECT_EQ(parse_fuzz_base("shannon"), FuzzBase::kShannon);
  EXPECT_THROW(parse_fuzz_base("meyer"), DomainError);
}

TEST(Report, RationalsAreStrings) {
  EXPECT_EQ(rational_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(rational_string(Rational(-4)), "-4");
  EXPECT_EQ(rational_string(0), "0");
  const auto j = envelope("check", to_json(is_wavelet_set(shannon_set())));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["is_wavelet_set"], true);
  EXPECT_EQ(j["measure"], "2");
  EXPECT_EQ(j["translation"]["ok"], true);
  EXPECT_EQ(j.begin().key(), "schema");
}

TEST(Report, SetsRoundTrip) {
  const auto t = theorem4_sets();
  const auto j = to_json(t.lemma);
  EXPECT_EQ(parse_set(j["G"]["expr"].get<std::string>()), t.lemma.G);
  EXPECT_EQ(j["mode"], to_string(t.lemma.mode));
  EXPECT_EQ(j["contraction"]["fixed_point"], "8/255pi");
  const auto m = build(t.E, t.F);
  for (const auto& p : to_json(m)["pieces"]) EXPECT_NO_THROW(parse_set(p["part"]["expr"].get<std::string>()));
  const auto item = to_json(catalog_get("four_corners"));
  EXPECT_EQ(parse_box_set(item["sets"]["W"]["expr"].get<std::string>()), catalog_get("four_corners").box("W"));
}

TEST(Report, DomainSteps) {
  const auto [e, f] = meyer_pair();
  const auto j = to_json(congruence_domain(e, f));
  ASSERT_FALSE(j["steps"].empty());
  for (const auto& st : j["steps"]) {
    const auto fl = ExponentFloor::parse(st["floor"].get<std::string>());
    EXPECT_TRUE(fl.is_finite());
    EXPECT_NO_THROW(PiRational::parse(st["base_lo"].get<std::string>()));
  }
  EXPECT_TRUE(j["tails"].empty());
}
