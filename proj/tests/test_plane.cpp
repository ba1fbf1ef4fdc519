#include <gtest/gtest.h>

#include "wavesets/plane.hpp"
#include "wavesets/setexpr.hpp"

using namespace wavesets;

namespace {

PiRational P(long num, long den = 1) { return PiRational(num, den); }

// Oracle: lattice translates of the square by 2 pi Z^2 meeting a sample grid exactly once.
long square_hits(const ExtBox& w, const PiRational& x, const PiRational& y) {
  long hits = 0;
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      if (w.contains({x + P(2 * a), y + P(2 * b)})) ++hits;
    }
  }
  return hits;
}

// Oracle: dyadic multiples 2^k p, k in [-12, 12], of an annulus point landing in w.
long annulus_hits(const ExtBox& w, const PiRational& x, const PiRational& y) {
  long hits = 0;
  for (long k = -12; k <= 12; ++k) {
    if (w.contains({x.scaled(k), y.scaled(k)})) ++hits;
  }
  return hits;
}

void expect_pointwise(const ExtBox& w) {
  // Odd multiples of pi/29: off every dyadic breakpoint.
  for (long i = -14; i < 14; ++i) {
    for (long j = -14; j < 14; ++j) {
      const PiRational x(Rational(2 * i + 1, 29));
      const PiRational y(Rational(2 * j + 1, 29));
      EXPECT_EQ(square_hits(w, x, y), 1) << x.str() << "," << y.str();
      const PiRational u = x.scaled(1);
      const PiRational v = y.scaled(1);
      if (abs(u) >= P(1) || abs(v) >= P(1)) EXPECT_EQ(annulus_hits(w, u, v), 1) << u.str() << "," << v.str();
    }
  }
}

}  // namespace

TEST(Plane, BoxAlgebraBasics) {
  EXPECT_EQ(rect(P(0), P(1), P(0), P(1)) & rect(P(1, 2), P(3, 2), P(1, 2), P(3, 2)),
            rect(P(1, 2), P(1), P(1, 2), P(1)));
  EXPECT_EQ(translation_square().measure(), 4);
  EXPECT_EQ(rect(P(0), P(1), P(0), P(1)).dilated(2), rect(P(0), P(4), P(0), P(4)));
  EXPECT_EQ(dilation_annulus().measure(), 12);
  EXPECT_FALSE(is_wavelet_set_2d(translation_square()).ok);
  EXPECT_TRUE(is_wavelet_set_2d(translation_square()).translation.ok);
  EXPECT_FALSE(is_wavelet_set_2d(translation_square()).dilation.ok);
}

TEST(Plane, FourCorners) {
  const auto c = four_corners_construction();
  EXPECT_TRUE(validate(c.config).ok);
  EXPECT_EQ(c.result.mode, Lemma5Mode::kTail);
  EXPECT_TRUE(is_wavelet_set_2d(c.set).ok);
  EXPECT_EQ(c.set.measure(), 4);
  ASSERT_EQ(c.pieces.size(), 4U);
  // Quadrant symmetry: each W_i is a mirror image of W_1.
  EXPECT_EQ(c.pieces[0].reflected({true, false}), c.pieces[1]);
  EXPECT_EQ(c.pieces[0].reflected({true, true}), c.pieces[2]);
  EXPECT_EQ(c.pieces[0].reflected({false, true}), c.pieces[3]);
  EXPECT_EQ(c.set.reflected({true, false}), c.set);
  EXPECT_EQ(c.set.reflected({false, true}), c.set);
  EXPECT_EQ(fixed_point(c.result.contraction), (Point<2>{P(2, 3), P(2, 3)}));
  expect_pointwise(c.set);
}

TEST(Plane, WeddingCake) {
  const auto c = wedding_cake_construction();
  EXPECT_TRUE(is_wavelet_set_2d(c.set).ok);
  EXPECT_EQ(c.set.measure(), 4);
  EXPECT_EQ(c.set.reflected({true, false}), c.set);
  EXPECT_EQ(c.set.reflected({false, true}), c.set);
  expect_pointwise(c.set);
}

TEST(Plane, SwSetTiles) {
  const auto t = sw_tiles();
  ExtBox tiles = t.B;
  ExtBox ring = t.B.dilated(1);
  Rational area = t.B.measure();
  Rational ring_area = ring.measure();
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(tiles.disjoint_from(t.E[i]));
    EXPECT_TRUE(ring.disjoint_from(t.F[i]));
    tiles = tiles | t.E[i];
    ring = ring | t.F[i];
    area += t.E[i].measure();
    ring_area += t.F[i].measure();
  }
  EXPECT_EQ(tiles, translation_square());
  EXPECT_EQ(ring, dilation_annulus());
  EXPECT_EQ(area, 4);
  EXPECT_EQ(ring_area, 12);
  const auto c = sw_construction();
  EXPECT_TRUE(validate(c.config).ok);
  EXPECT_TRUE(is_wavelet_set_2d(c.set).ok);
  EXPECT_EQ(c.set.measure(), 4);
  expect_pointwise(c.set);
}

TEST(Plane, PineTreeStaircase) {
  for (long g = 1; g <= 6; ++g) {
    const auto c = pine_tree_construction(g);
    EXPECT_TRUE(validate(c.config).ok) << g;
    EXPECT_TRUE(is_wavelet_set_2d(c.set).ok) << g;
    EXPECT_EQ(c.set.measure(), 4);
    const ExtBox e = pine_staircase(g);
    EXPECT_EQ(e | e.reflected({true, true}), translation_square());
    EXPECT_TRUE(e.disjoint_from(e.reflected({true, true})));
  }
  EXPECT_EQ(pine_tree(P(1, 64)), pine_tree_construction(6).set);
  EXPECT_THROW(pine_tree(P(1, 3)), DomainError);
  EXPECT_THROW(pine_tree(P(3, 64)), DomainError);
  EXPECT_THROW(pine_tree_construction(0), DomainError);
  expect_pointwise(pine_tree(P(1, 16)));
}

TEST(Plane, RoundTripFormat) {
  for (const auto& s : {four_corners(), wedding_cake(), sw_set(), pine_tree(P(1, 8))}) {
    EXPECT_EQ(parse_box_set(format_set(s)), s);
  }
}
