#include <gtest/gtest.h>

#include "wavesets/congruence.hpp"
#include "wavesets/setexpr.hpp"

using namespace wavesets;

namespace {

ExtSet S(const char* text) { return parse_set(text); }

const char* kShannon = "[-2pi,-pi) | [pi,2pi)";
const char* kMeyerE = "[-8/3pi,-4/3pi) | [2/3pi,4/3pi)";
const char* kMeyerF = "[-4/3pi,-2/3pi) | [4/3pi,8/3pi)";

// Oracle: the multiplicity of the 2pi-translates at a point of [0, 2pi), by brute force.
long translation_count(const ExtSet& s, const PiRational& x) {
  long c = 0;
  for (long m = -40; m <= 40; ++m) c += s.contains({x + PiRational(2 * m)}) ? 1 : 0;
  return c;
}

// Oracle: the multiplicity of the dyadic dilates at a point of the dilation domain.
long dilation_count(const ExtSet& s, const PiRational& x) {
  long c = 0;
  for (long j = -40; j <= 40; ++j) c += s.contains({x.scaled(j)}) ? 1 : 0;
  return c;
}

long band_at(const std::vector<MultiplicityBand<IntervalSet>>& bands, const PiRational& x) {
  for (const auto& b : bands) {
    if (b.set.contains({x})) return b.multiplicity;
  }
  return 0;
}

}  // namespace

TEST(Congruence, TranslationProfileExamples) {
  const auto sh = translation_profile(S(kShannon));
  ASSERT_EQ(sh.size(), 1U);
  EXPECT_EQ(sh[0].set, S("[0,2pi)"));
  EXPECT_EQ(sh[0].multiplicity, 1);
  const auto p = translation_profile(S("[0,2pi) | [2pi,3pi)"));
  ASSERT_EQ(p.size(), 2U);
  EXPECT_EQ(p[0].set, S("[pi,2pi)"));
  EXPECT_EQ(p[0].multiplicity, 1);
  EXPECT_EQ(p[1].set, S("[0,pi)"));
  EXPECT_EQ(p[1].multiplicity, 2);
}

TEST(Congruence, TranslationGeneratorExamples) {
  EXPECT_TRUE(is_translation_generator(S("[0,2pi)")).ok);
  const auto r = is_translation_generator(S("[pi,2pi)"));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.gap, S("[0,pi)"));
  EXPECT_TRUE(r.overlap.empty());
  EXPECT_TRUE(is_translation_generator(S(kMeyerE)).ok);
}

TEST(Congruence, DilationExamples) {
  EXPECT_TRUE(is_dilation_generator(S(kShannon)).ok);
  const auto z = is_dilation_generator(S("[0,2pi)"));
  EXPECT_FALSE(z.ok);
  EXPECT_TRUE(z.divergent);
  EXPECT_EQ(z.overlap, S("[pi,2pi)"));
  const auto prof = dilation_profile(S("[1/2pi,pi) | [2pi,4pi)"));
  EXPECT_EQ(band_at(prof, PiRational(3, 2)), 2);
  EXPECT_EQ(band_at(prof, PiRational(-3, 2)), 0);
  const auto h = is_dilation_generator(S("[pi,7/4pi) | [7/2pi,4pi)"));
  EXPECT_FALSE(h.ok);
  EXPECT_TRUE(h.overlap.empty());
  EXPECT_EQ(h.gap, S("[-2pi,-pi)"));
}

TEST(Congruence, WaveletSetExamples) {
  const auto r = is_wavelet_set(S(kShannon));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.measure, Rational(2));
  EXPECT_FALSE(is_wavelet_set(S("[0,2pi)")).ok);
  EXPECT_FALSE(is_wavelet_set(S("[0,2pi)")).dilation.ok);
  EXPECT_TRUE(is_wavelet_set(S(kMeyerE)).ok);
  EXPECT_TRUE(is_wavelet_set(S(kMeyerF)).ok);
}

TEST(Congruence, WitnessExamples) {
  const auto e = S(kMeyerE);
  const auto f = S(kMeyerF);
  const auto self = translation_witness(e, e);
  ASSERT_EQ(self.size(), 1U);
  EXPECT_EQ(self[0].n, 0);
  EXPECT_EQ(self[0].part, e);
  const auto tw = translation_witness(e, f);
  ASSERT_EQ(tw.size(), 2U);
  EXPECT_EQ(tw[0].n, -1);
  EXPECT_EQ(tw[0].part, S("[2/3pi,4/3pi)"));
  EXPECT_EQ(tw[1].n, 2);
  EXPECT_EQ(tw[1].part, S("[-8/3pi,-4/3pi)"));
  const auto jw = joint_witness(e, f);
  ASSERT_EQ(jw.size(), 2U);
  // Oracle: brute-force the dilation exponent of each translation piece over [-6, 6].
  for (const auto& cell : jw) {
    long found = 99;
    for (long k = -6; k <= 6; ++k) {
      if (cell.part.dilated(k).subset_of(f)) found = k;
    }
    EXPECT_EQ(cell.k, found);
  }
  const auto selfj = joint_witness(e, e);
  ASSERT_EQ(selfj.size(), 1U);
  EXPECT_EQ(selfj[0].k, 0);
  EXPECT_THROW(translation_witness(S("[0,pi)"), e), DomainError);
}

TEST(CongruenceProperty, WitnessInverseRelabel) {
  const auto e = S(kMeyerE);
  const auto f = S(kMeyerF);
  const auto ef = translation_witness(e, f);
  const auto fe = translation_witness(f, e);
  ASSERT_EQ(ef.size(), fe.size());
  for (const auto& p : ef) {
    bool matched = false;
    for (const auto& q : fe) matched = matched || (q.n == -p.n && q.part == p.part.translated({PiRational(2 * p.n)}));
    EXPECT_TRUE(matched);
  }
  // Joint cells regroup to the single witnesses.
  const auto jw = joint_witness(e, f);
  for (const auto& p : ef) {
    ExtSet u;
    for (const auto& c : jw) {
      if (c.n == p.n) u = u | c.part;
    }
    EXPECT_EQ(u, p.part);
  }
}

TEST(CongruenceProperty, ProfilesAgreeWithBruteForce) {
  const char* samples[] = {kShannon, kMeyerE, "[1/8pi,3pi)", "[1/2pi,pi) | [2pi,4pi)", "[-5/4pi,-pi) | [3/8pi,11/4pi)",
                           "[pi,7/4pi) | [7/2pi,4pi)"};
  for (const char* text : samples) {
    const auto s = S(text);
    const auto tp = translation_profile(s);
    const auto dp = dilation_profile(s);
    for (long k = 0; k < 128; ++k) {
      const PiRational x(2 * k + 1, 128);
      EXPECT_EQ(band_at(tp, x), translation_count(s, x)) << text << " at " << x.str();
      const PiRational y = PiRational(1) + PiRational(2 * k + 1, 256);
      EXPECT_EQ(band_at(dp, y), dilation_count(s, y)) << text;
      EXPECT_EQ(band_at(dp, -y), dilation_count(s, -y)) << text;
    }
  }
}

TEST(Congruence, PlaneExamples) {
  const auto sq = parse_box_set("[-pi,pi) x [-pi,pi)");
  EXPECT_EQ(sq.measure(), Rational(4));
  const auto r = is_wavelet_set_2d(sq);
  EXPECT_TRUE(r.translation.ok);
  EXPECT_FALSE(r.dilation.ok);
  EXPECT_FALSE(r.ok);
  const auto ring = parse_box_set("[-2pi,2pi) x [-2pi,-pi) | [-2pi,2pi) x [pi,2pi) | [-2pi,-pi) x [-pi,pi) | [pi,2pi) x [-pi,pi)");
  EXPECT_TRUE(is_dilation_generator(ring).ok);
  EXPECT_FALSE(is_translation_generator(ring).ok);
}
