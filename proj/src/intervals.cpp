#include "wavesets/intervals.hpp"

#include <algorithm>

namespace wavesets {

Interval::Interval(PiRational lo_, PiRational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) throw DomainError("Interval requires lo < hi, got [" + lo.str() + ", " + hi.str() + ")");
}

IntervalSet::IntervalSet(std::initializer_list<Interval> parts)
    : IntervalSet(normalize(std::vector<Interval>(parts))) {}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  out.reserve(raw.size());
  for (auto& iv : raw) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::box(const point_type& lo, const point_type& hi) { return interval(lo[0], hi[0]); }

IntervalSet IntervalSet::interval(const PiRational& lo, const PiRational& hi) {
  if (!(lo < hi)) return {};
  return IntervalSet(std::vector<Interval>{Interval(lo, hi)});
}

Rational IntervalSet::measure() const {
  Rational m = 0;
  for (const auto& iv : parts_) m += iv.length().coeff();
  return m;
}

IntervalSet combine(const IntervalSet& a, const IntervalSet& b, SetOp op) {
  const auto& pa = a.parts_;
  const auto& pb = b.parts_;
  if (pa.empty() || pb.empty() || pa.back().hi <= pb.front().lo || pb.back().hi <= pa.front().lo) {
    // Disjoint hulls.
    switch (op) {
      case SetOp::kIntersect:
        return {};
      case SetOp::kDifference:
        return a;
      default:
        if (pb.empty()) return a;
        if (pa.empty()) return b;
    }
  }
  // Sweep over the merged endpoint sequence; membership flips at each endpoint.
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  bool in_a = false;
  bool in_b = false;
  const PiRational* open_at = nullptr;
  auto next_a = [&]() -> const PiRational* {
    if (i >= 2 * pa.size()) return nullptr;
    return (i % 2 == 0) ? &pa[i / 2].lo : &pa[i / 2].hi;
  };
  auto next_b = [&]() -> const PiRational* {
    if (j >= 2 * pb.size()) return nullptr;
    return (j % 2 == 0) ? &pb[j / 2].lo : &pb[j / 2].hi;
  };
  while (true) {
    const PiRational* xa = next_a();
    const PiRational* xb = next_b();
    if (xa == nullptr && xb == nullptr) break;
    const PiRational* x = xa;
    bool step_a = xa != nullptr;
    bool step_b = xb != nullptr;
    if (step_a && step_b) {
      const auto c = *xa <=> *xb;
      step_a = c <= 0;
      step_b = c >= 0;
      if (!step_a) x = xb;
    } else if (step_b) {
      x = xb;
    }
    if (step_a) {
      in_a = !in_a;
      ++i;
    }
    if (step_b) {
      in_b = !in_b;
      ++j;
    }
    const bool inside = apply_op(op, in_a, in_b);
    if (inside && open_at == nullptr) {
      open_at = x;
    } else if (!inside && open_at != nullptr) {
      if (!out.empty() && out.back().hi == *open_at) {
        out.back().hi = *x;
      } else {
        out.emplace_back(*open_at, *x);
      }
      open_at = nullptr;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::affine(long k, const point_type& t) const {
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const auto& iv : parts_) out.emplace_back(iv.lo.scaled(k) + t[0], iv.hi.scaled(k) + t[0]);
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::reflected(const std::array<bool, 1>& flip) const {
  if (!flip[0]) return *this;
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) out.emplace_back(-it->hi, -it->lo);
  return IntervalSet(std::move(out));
}

std::optional<std::pair<IntervalSet::point_type, IntervalSet::point_type>> IntervalSet::bounds() const {
  if (parts_.empty()) return std::nullopt;
  return std::make_pair(point_type{parts_.front().lo}, point_type{parts_.back().hi});
}

std::vector<PiRational> IntervalSet::breakpoints(int /*axis*/) const {
  std::vector<PiRational> out;
  out.reserve(2 * parts_.size());
  for (const auto& iv : parts_) {
    out.push_back(iv.lo);
    out.push_back(iv.hi);
  }
  return out;
}

bool IntervalSet::contains(const point_type& p) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), p[0],
                             [](const PiRational& x, const Interval& iv) { return x < iv.lo; });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(p[0]);
}

PiRational distance_to_closed(const PiRational& x, const PiRational& lo, const PiRational& hi) {
  if (x < lo) return lo - x;
  if (hi < x) return x - hi;
  return PiRational();
}

std::optional<PiRational> IntervalSet::distance_from(const point_type& p) const {
  std::optional<PiRational> best;
  for (const auto& iv : parts_) {
    PiRational d = distance_to_closed(p[0], iv.lo, iv.hi);
    if (!best || d < *best) best = std::move(d);
  }
  return best;
}

std::vector<std::pair<IntervalSet::point_type, IntervalSet::point_type>> IntervalSet::boxes() const {
  std::vector<std::pair<point_type, point_type>> out;
  out.reserve(parts_.size());
  for (const auto& iv : parts_) out.emplace_back(point_type{iv.lo}, point_type{iv.hi});
  return out;
}

}  // namespace wavesets
