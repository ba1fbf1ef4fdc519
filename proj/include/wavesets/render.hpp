#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wavesets/interpolation.hpp"
#include "wavesets/plane.hpp"

namespace wavesets {

struct Canvas1D {
  int width = 1200;
  int height = 400;
};

struct Canvas2D {
  int width = 800;
  int height = 800;
};

/// Exact rational to a decimal string with at most 6 significant digits (round half away from zero).
std::string decimal6(const Rational& q);

/// Stacked number lines. With arrows, one bundle per translation piece of the map, drawn from row 0 to row 1.
std::string render_1d(const std::vector<std::pair<std::string, ExtSet>>& rows, const InterpolationMap* arrows = nullptr,
                      const Canvas1D& canvas = {});

std::string render_2d(const ExtBox& s, const Canvas2D& canvas = {});

}  // namespace wavesets
