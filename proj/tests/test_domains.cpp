#include <gtest/gtest.h>

#include "wavesets/domains.hpp"
#include "wavesets/setexpr.hpp"

using namespace wavesets;

namespace {

ExtSet S(const char* text) { return parse_set(text); }

const char* kShannon = "[-2pi,-pi) | [pi,2pi)";
const char* kMeyerE = "[-8/3pi,-4/3pi) | [2/3pi,4/3pi)";
const char* kMeyerF = "[-4/3pi,-2/3pi) | [4/3pi,8/3pi)";

// Oracle: sigma(s) - s is an integer multiple of 2 pi.
bool moves_by_lattice(const InterpolationMap& m, const PiRational& s) {
  const auto v = m.evaluate(s);
  if (!v) return false;
  const Rational d = (*v - s).coeff() / 2;
  return d.get_den() == 1;
}

std::vector<PiRational> samples() {
  std::vector<PiRational> out;
  for (long i = -600; i < 600; ++i) {
    if (i == 0) continue;
    out.emplace_back(Rational(2 * i + 1, 61));
  }
  return out;
}

std::vector<ExtSet> small_wavelet_sets() {
  std::vector<ExtSet> out;
  for (long code = 0; code < 6561; ++code) {
    ExtSet s;
    long c = code;
    for (int i = 0; i < 8; ++i) {
      const long m = c % 3 - 1;
      c /= 3;
      s = s | ExtSet(IntervalSet::interval(PiRational(i, 4) + PiRational(2 * m), PiRational(i + 1, 4) + PiRational(2 * m)));
    }
    if (is_dilation_generator(s).ok) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Domains, SelfDomainIsEverything) {
  const auto e = S(kMeyerE);
  const auto d = congruence_domain(e, e);
  EXPECT_EQ(d, SaturatedDyadicSet::everything());
  EXPECT_TRUE(d.contains(PiRational(-5)));
  EXPECT_TRUE(membership(d, PiRational(1, 1000)));
  EXPECT_FALSE(d.contains(PiRational(0)));
  EXPECT_FALSE(SaturatedDyadicSet().contains(PiRational(1)));
}

TEST(Domains, MeyerClosedForm) {
  const auto e = S(kMeyerE);
  const auto f = S(kMeyerF);
  const auto d = congruence_domain(e, f);
  // By hand from the two rays.
  const auto expected = SaturatedDyadicSet::from_steps({
      {S("[-2pi,-4/3pi) | [4/3pi,2pi)"), ExponentFloor(-1)},
      {S("[-4/3pi,-pi) | [pi,4/3pi)"), ExponentFloor(0)},
  });
  EXPECT_EQ(d, expected);
  EXPECT_FALSE(d.contains(PiRational(1, 2)));
  EXPECT_TRUE(d.contains(PiRational(2, 3)));
  EXPECT_FALSE(d.contains(PiRational(-2, 3)));
  const auto m = build(e, f);
  long checked = 0;
  for (const auto& s : samples()) {
    const bool ray = s < PiRational(-2, 3) || s >= PiRational(2, 3);
    EXPECT_EQ(d.contains(s), ray) << s.str();
    EXPECT_EQ(d.contains(s), moves_by_lattice(m, s)) << s.str();
    ++checked;
  }
  EXPECT_GE(checked, 1000);
  EXPECT_EQ(congruence_domain(f, e), d);
  EXPECT_TRUE(theorem3_domain_criterion(e, f));
}

TEST(DomainsProperty, UpClosedAndPointwise) {
  const auto sets = small_wavelet_sets();
  const ExtSet e = S(kShannon);
  const auto pts = samples();
  for (std::size_t i = 0; i < sets.size(); i += 7) {
    const auto m = build(e, sets[i]);
    const auto d = congruence_domain(e, sets[i]);
    for (std::size_t k = 0; k < pts.size(); k += 5) {
      const auto& s = pts[k];
      if (d.contains(s)) EXPECT_TRUE(d.contains(s.scaled(1)));
      EXPECT_EQ(d.contains(s), moves_by_lattice(m, s)) << format_set(sets[i]) << " at " << s.str();
    }
  }
}

TEST(DomainsProperty, CriterionMatchesDomainEquality) {
  const ExtSet e = S(kShannon);
  long equal = 0;
  long differ = 0;
  for (const auto& f : small_wavelet_sets()) {
    const bool same = saturated_equal(congruence_domain(e, f), congruence_domain(f, e));
    EXPECT_EQ(same, theorem3_domain_criterion(e, f)) << format_set(f);
    const bool pair = is_interpolation_pair(e, f);
    if (pair) EXPECT_TRUE(same);
    // Shannon partner: equal domains force a pair.
    if (same) EXPECT_TRUE(pair) << format_set(f);
    (same ? equal : differ)++;
  }
  EXPECT_GT(equal, 0);
  EXPECT_GT(differ, 0);
}
