#include <gtest/gtest.h>

#include "wavesets/interpolation.hpp"
#include "wavesets/setexpr.hpp"

using namespace wavesets;

namespace {

ExtSet S(const char* text) { return parse_set(text); }

const char* kShannon = "[-2pi,-pi) | [pi,2pi)";
const char* kMeyerE = "[-8/3pi,-4/3pi) | [2/3pi,4/3pi)";
const char* kMeyerF = "[-4/3pi,-2/3pi) | [4/3pi,8/3pi)";

// Oracle: sigma by direct search, from the translation witness and a window of dyadic exponents.
std::optional<PiRational> sigma_oracle(const TranslationWitness& w, const PiRational& s) {
  for (long k = -30; k <= 30; ++k) {
    const PiRational b = s.scaled(-k);
    for (const auto& p : w) {
      if (p.part.contains({b})) return (b + PiRational(2 * p.n)).scaled(k);
    }
  }
  return std::nullopt;
}

// Wavelet sets obtained by moving each quarter-pi cell of [0, 2pi) by a lattice step in {-1, 0, 1}.
std::vector<ExtSet> small_wavelet_sets() {
  std::vector<ExtSet> out;
  long code_max = 1;
  for (int i = 0; i < 8; ++i) code_max *= 3;
  for (long code = 0; code < code_max; ++code) {
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

TEST(Interpolation, IdentityMap) {
  const auto e = S(kShannon);
  const auto m = build(e, e);
  EXPECT_TRUE(m.map().is_identity());
  EXPECT_EQ(m.image(e), e);
  EXPECT_EQ(m.image(S("[3pi,5pi)")), S("[3pi,5pi)"));
  EXPECT_TRUE(is_interpolation_pair(e, e));
  EXPECT_TRUE(theorem1_check(e, e));
  const auto t3 = theorem3_pair_report(e, e);
  EXPECT_TRUE(t3.ok);
  EXPECT_TRUE(t3.cells.empty());
}

TEST(Interpolation, MeyerPair) {
  const auto e = S(kMeyerE);
  const auto f = S(kMeyerF);
  const auto m = build(e, f);
  ASSERT_EQ(m.pieces().size(), 2U);
  EXPECT_EQ(m.image(e), f);
  EXPECT_EQ(m.image(e | f), e | f);
  EXPECT_EQ(*m.evaluate(PiRational(1)), PiRational(-1));
  EXPECT_EQ(*m.evaluate(PiRational(-2)), PiRational(2));
  EXPECT_FALSE(m.evaluate(PiRational(0)).has_value());
  EXPECT_TRUE(compose(m, m).is_identity());
  EXPECT_TRUE(is_interpolation_pair(e, f));
  EXPECT_TRUE(theorem1_check(e, f));
  const auto t3 = theorem3_pair_report(e, f);
  EXPECT_TRUE(t3.ok);
  EXPECT_TRUE(t3.k_equals_minus_l);
  EXPECT_FALSE(t3.cells.empty());
  EXPECT_TRUE(compose(build(f, e), m).is_identity());
  EXPECT_EQ(build(f, e).map(), m.map());
}

TEST(Interpolation, ErrorsAndCaps) {
  EXPECT_THROW(build(S("[0,2pi)"), S(kShannon)), DomainError);
  const auto m = build(S(kMeyerE), S(kMeyerF));
  EXPECT_THROW(compose(m, m, 1), ResourceError);
}

TEST(InterpolationProperty, EvaluateMatchesOracleAndCommutes) {
  const auto e = S(kMeyerE);
  const auto f = S(kMeyerF);
  const auto m = build(e, f);
  for (long i = -64; i < 64; ++i) {
    if (i == 0) continue;
    const PiRational s(2 * i + 1, 37);
    const auto v = m.evaluate(s);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(*v, *sigma_oracle(m.pieces(), s));
    for (long k = -8; k <= 8; ++k) EXPECT_EQ(*m.evaluate(s.scaled(k)), v->scaled(k));
  }
}

TEST(InterpolationProperty, SmallPopulationEquivalences) {
  const auto sets = small_wavelet_sets();
  ASSERT_GT(sets.size(), 4U);
  const ExtSet e = S(kShannon);
  long pairs = 0;
  long non_pairs = 0;
  for (const auto& f : sets) {
    ASSERT_TRUE(is_wavelet_set(f).ok);
    const auto m = build(e, f);
    EXPECT_EQ(m.image(e), f);
    EXPECT_TRUE(compose(build(f, e), m).is_identity());
    for (const auto& p : m.map().pieces()) {
      EXPECT_EQ(p.part.translated({p.shift}).measure(), p.part.measure());
    }
    const bool pair = is_interpolation_pair(e, f);
    EXPECT_EQ(pair, theorem1_check(e, f)) << format_set(f);
    EXPECT_EQ(pair, theorem3_pair_criterion(e, f)) << format_set(f);
    if (pair) EXPECT_EQ(build(f, e).map(), m.map());
    (pair ? pairs : non_pairs)++;
  }
  EXPECT_GT(pairs, 0);
  EXPECT_GT(non_pairs, 0);
}

TEST(Interpolation, FamilyBasics) {
  const auto e = S(kMeyerE);
  const auto f = S(kMeyerF);
  EXPECT_EQ(is_interpolation_family({e}), FamilyVerdict::kTrue);
  EXPECT_EQ(is_interpolation_family({e, f}), FamilyVerdict::kTrue);
  EXPECT_EQ(is_interpolation_family({e, f, e}), FamilyVerdict::kTrue);
  EXPECT_EQ(to_string(FamilyVerdict::kIndeterminate), "indeterminate");
}
