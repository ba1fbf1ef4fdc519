#include <gtest/gtest.h>

#include "wavesets/catalog.hpp"
#include "wavesets/construct.hpp"
#include "wavesets/render.hpp"
#include "wavesets/setexpr.hpp"

using namespace wavesets;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

std::size_t set_rects(const std::string& svg) { return count(svg, "height=\"12\" fill="); }

}  // namespace

TEST(Decimal6, Rounding) {
  EXPECT_EQ(decimal6(0), "0");
  EXPECT_EQ(decimal6(1), "1");
  EXPECT_EQ(decimal6(-3), "-3");
  EXPECT_EQ(decimal6(Rational(1, 3)), "0.333333");
  EXPECT_EQ(decimal6(Rational(2, 3)), "0.666667");
  EXPECT_EQ(decimal6(Rational(-2, 3)), "-0.666667");
  EXPECT_EQ(decimal6(Rational(1, 8)), "0.125");
  EXPECT_EQ(decimal6(Rational(9999995, 10)), "1000000");
  EXPECT_EQ(decimal6(Rational(1234567)), "1234570");
  EXPECT_EQ(decimal6(Rational(1, 1000000)), "0.000001");
  EXPECT_EQ(decimal6(Rational(12345, 100)), "123.45");
  EXPECT_EQ(decimal6(Rational(5, 2000000)), "0.0000025");
  EXPECT_EQ(decimal6(Rational(1000005, 1000000)), "1.00001");
}

TEST(Render1D, ShannonIsTwoBars) {
  const auto svg = render_1d({{"W", shannon_set()}});
  EXPECT_EQ(set_rects(svg), 2u);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
}

TEST(Render1D, EmptyRowAndEscaping) {
  const auto svg = render_1d({{"a<b", ExtSet{}}});
  EXPECT_EQ(set_rects(svg), 0u);
  EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
}

TEST(Render1D, Deterministic) {
  const auto t = theorem4_sets();
  const auto m = build(t.E, t.F);
  const std::vector<std::pair<std::string, ExtSet>> rows{{"E", t.E}, {"F", t.F}};
  EXPECT_EQ(render_1d(rows, &m), render_1d(rows, &m));
}

TEST(Render1D, Theorem4ArrowBundles) {
  const auto t = theorem4_sets();
  const auto m = build(t.E, t.F);
  const auto svg = render_1d({{"E", t.E}, {"F", t.F}}, &m);
  EXPECT_EQ(count(svg, "class=\"bundle\""), m.pieces().size());
  EXPECT_EQ(m.pieces().size(), 5u);
  // F carries a tail: accumulation markers are drawn.
  EXPECT_GE(count(svg, "<circle"), 1u);
}

TEST(Render2D, SquareAndDeterminism) {
  const auto sq = translation_square();
  const auto svg = render_2d(sq);
  EXPECT_EQ(count(svg, "<rect"), 3u);  // background, outline, the square
  EXPECT_EQ(svg, render_2d(sq));
  const auto fc = four_corners();
  EXPECT_EQ(render_2d(fc), render_2d(fc));
  EXPECT_GT(count(render_2d(fc), "<rect"), 3u);
}

TEST(Render1D, EveryIntervalAppearsOnce) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ExtSet w = random_wavelet_set(seed);
    const auto b = w.bounds();
    ASSERT_TRUE(b.has_value());
    const Rational lo = b->first[0].coeff();
    const Rational scale = Rational(1200 - 120 - 80) / (b->second[0].coeff() - lo);
    const auto svg = render_1d({{"W", w}});
    const auto parts = w.truncate(1 / scale).set.parts();
    EXPECT_EQ(set_rects(svg), parts.size()) << seed;
    for (const auto& iv : parts) {
      if ((iv.hi.coeff() - iv.lo.coeff()) * scale < 1) continue;  // subpixel pieces may share a rounded x
      const std::string x = "x=\"" + decimal6(160 + (iv.lo.coeff() - lo) * scale) + "\" y=";
      EXPECT_EQ(count(svg, "<rect " + x), 1u) << seed << " " << iv.lo.str();
    }
  }
}
