#pragma once

#include <array>
#include <vector>

#include "wavesets/construct.hpp"

namespace wavesets {

using ExtBox = ExtendedSet<BoxSet>;

ExtBox rect(const PiRational& x0, const PiRational& x1, const PiRational& y0, const PiRational& y1);

/// [-pi, pi)^2 and the annulus [-2pi, 2pi)^2 minus [-pi, pi)^2.
ExtBox translation_square();
ExtBox dilation_annulus();

/// A 2D wavelet set assembled from one Lemma 5 piece and its mirror images.
struct PlaneConstruction {
  Lemma5Config2 config;
  Lemma5Result2 result;
  std::vector<ExtBox> pieces;  // W_1, W_2, ...
  ExtBox fixed;                // extra part outside the Lemma 5 pieces
  ExtBox set;
};

/// Mirror images used for W_1..W_4: identity, flip x, flip both, flip y.
const std::array<std::array<bool, 2>, 4>& quadrant_flips();

PlaneConstruction four_corners_construction();
PlaneConstruction wedding_cake_construction();
PlaneConstruction sw_construction();
/// Staircase refinement of the triangle pair at cell width pi / 2^g, 1 <= g <= 12.
PlaneConstruction pine_tree_construction(long g);
/// Same, with the cell width given as a dyadic fraction of pi.
PlaneConstruction pine_tree_construction(const PiRational& r);

ExtBox four_corners();
ExtBox wedding_cake();
ExtBox sw_set();
ExtBox pine_tree(const PiRational& r);

/// Staircase of {x >= -pi, y <= pi, y >= x}: cells above the diagonal, plus diagonal cells with corner >= 0.
ExtBox pine_staircase(long g);

struct SwTiles {
  ExtBox B;
  std::array<ExtBox, 4> E;
  std::array<ExtBox, 4> F;
};

SwTiles sw_tiles();

}  // namespace wavesets
