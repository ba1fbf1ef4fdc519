#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "wavesets/intervals.hpp"

namespace wavesets {

/// Half-open product [x.lo, x.hi) x [y.lo, y.hi).
struct Box {
  Interval x;
  Interval y;
  Rational area() const { return x.length().coeff() * y.length().coeff(); }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Vertical strip [xlo, xhi) x ys.
struct Slab {
  PiRational xlo;
  PiRational xhi;
  IntervalSet ys;
  friend bool operator==(const Slab&, const Slab&) = default;
};

/// Finite union of half-open boxes in canonical slab form: slabs sorted by x,
/// disjoint, nonempty cross-sections, and adjacent slabs never share a cross-section.
class BoxSet {
 public:
  static constexpr int kDim = 2;
  using point_type = Point<2>;

  BoxSet() = default;
  explicit BoxSet(const std::vector<Box>& boxes);
  static BoxSet box(const point_type& lo, const point_type& hi);
  static BoxSet rect(const PiRational& x0, const PiRational& x1, const PiRational& y0, const PiRational& y1) {
    return box({x0, y0}, {x1, y1});
  }

  const std::vector<Slab>& slabs() const { return slabs_; }
  bool empty() const { return slabs_.empty(); }

  /// Area as a coefficient of pi^2.
  Rational measure() const;

  friend BoxSet combine(const BoxSet& a, const BoxSet& b, SetOp op);
  friend BoxSet operator|(const BoxSet& a, const BoxSet& b) { return combine(a, b, SetOp::kUnion); }
  friend BoxSet operator&(const BoxSet& a, const BoxSet& b) { return combine(a, b, SetOp::kIntersect); }
  friend BoxSet operator-(const BoxSet& a, const BoxSet& b) { return combine(a, b, SetOp::kDifference); }
  friend BoxSet operator^(const BoxSet& a, const BoxSet& b) { return combine(a, b, SetOp::kSymDiff); }

  bool subset_of(const BoxSet& other) const { return (*this - other).empty(); }

  BoxSet affine(long k, const point_type& t) const;
  BoxSet reflected(const std::array<bool, 2>& flip) const;

  std::optional<std::pair<point_type, point_type>> bounds() const;
  std::vector<PiRational> breakpoints(int axis) const;
  bool contains(const point_type& p) const;
  std::optional<PiRational> distance_from(const point_type& p) const;
  std::vector<std::pair<point_type, point_type>> boxes() const;

  friend bool operator==(const BoxSet&, const BoxSet&) = default;

 private:
  static BoxSet from_slabs(std::vector<Slab> raw);
  std::vector<Slab> slabs_;
};

}  // namespace wavesets
