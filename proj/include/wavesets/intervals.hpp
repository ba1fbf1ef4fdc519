#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wavesets/scalars.hpp"

namespace wavesets {

template <int D>
using Point = std::array<PiRational, D>;

/// Which Boolean combination a set operation computes.
enum class SetOp { kUnion, kIntersect, kDifference, kSymDiff };

inline bool apply_op(SetOp op, bool a, bool b) {
  switch (op) {
    case SetOp::kUnion:
      return a || b;
    case SetOp::kIntersect:
      return a && b;
    case SetOp::kDifference:
      return a && !b;
    case SetOp::kSymDiff:
      return a != b;
  }
  return false;
}

/// Half-open [lo, hi) with lo < hi.
struct Interval {
  PiRational lo;
  PiRational hi;

  Interval(PiRational lo_, PiRational hi_);
  PiRational length() const { return hi - lo; }
  bool contains(const PiRational& x) const { return lo <= x && x < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical finite union of half-open intervals: sorted, disjoint, never adjacent.
/// Two IntervalSets denote the same set modulo null sets iff they compare equal.
class IntervalSet {
 public:
  static constexpr int kDim = 1;
  using point_type = Point<1>;

  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> parts);
  /// Any sequence of intervals; overlaps and adjacency are resolved.
  static IntervalSet normalize(std::vector<Interval> raw);
  static IntervalSet box(const point_type& lo, const point_type& hi);
  static IntervalSet interval(const PiRational& lo, const PiRational& hi);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  /// Lebesgue measure as a coefficient of pi.
  Rational measure() const;

  friend IntervalSet combine(const IntervalSet& a, const IntervalSet& b, SetOp op);
  friend IntervalSet operator|(const IntervalSet& a, const IntervalSet& b) { return combine(a, b, SetOp::kUnion); }
  friend IntervalSet operator&(const IntervalSet& a, const IntervalSet& b) { return combine(a, b, SetOp::kIntersect); }
  friend IntervalSet operator-(const IntervalSet& a, const IntervalSet& b) { return combine(a, b, SetOp::kDifference); }
  friend IntervalSet operator^(const IntervalSet& a, const IntervalSet& b) { return combine(a, b, SetOp::kSymDiff); }

  bool subset_of(const IntervalSet& other) const { return (*this - other).empty(); }

  /// 2^k * x + t.
  IntervalSet affine(long k, const point_type& t) const;
  IntervalSet affine(long k, const PiRational& t) const { return affine(k, point_type{t}); }
  /// x -> -x on flagged axes (modulo null sets: [a,b) -> [-b,-a)).
  IntervalSet reflected(const std::array<bool, 1>& flip) const;

  std::optional<std::pair<point_type, point_type>> bounds() const;
  std::vector<PiRational> breakpoints(int axis) const;
  bool contains(const point_type& p) const;
  bool contains(const PiRational& x) const { return contains(point_type{x}); }
  /// Sup-norm distance from p to the closure of the set; empty sets give nullopt.
  std::optional<PiRational> distance_from(const point_type& p) const;
  /// Boxes of the canonical representation as (lo, hi) corners.
  std::vector<std::pair<point_type, point_type>> boxes() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> canonical) : parts_(std::move(canonical)) {}
  std::vector<Interval> parts_;
};

/// Distance from x to the closed interval [lo, hi].
PiRational distance_to_closed(const PiRational& x, const PiRational& lo, const PiRational& hi);

}  // namespace wavesets
