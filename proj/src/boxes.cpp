#include "wavesets/boxes.hpp"

#include <algorithm>

namespace wavesets {

namespace {

std::vector<PiRational> sorted_unique(std::vector<PiRational> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

BoxSet BoxSet::from_slabs(std::vector<Slab> raw) {
  BoxSet out;
  for (auto& s : raw) {
    if (s.ys.empty()) continue;
    if (!out.slabs_.empty() && out.slabs_.back().xhi == s.xlo && out.slabs_.back().ys == s.ys) {
      out.slabs_.back().xhi = s.xhi;
    } else {
      out.slabs_.push_back(std::move(s));
    }
  }
  return out;
}

BoxSet::BoxSet(const std::vector<Box>& boxes) {
  std::vector<PiRational> xs;
  xs.reserve(2 * boxes.size());
  for (const auto& b : boxes) {
    xs.push_back(b.x.lo);
    xs.push_back(b.x.hi);
  }
  xs = sorted_unique(std::move(xs));
  std::vector<Slab> raw;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    std::vector<Interval> ys;
    for (const auto& b : boxes) {
      if (b.x.lo <= xs[i] && xs[i + 1] <= b.x.hi) ys.push_back(b.y);
    }
    raw.push_back({xs[i], xs[i + 1], IntervalSet::normalize(std::move(ys))});
  }
  *this = from_slabs(std::move(raw));
}

BoxSet BoxSet::box(const point_type& lo, const point_type& hi) {
  if (!(lo[0] < hi[0]) || !(lo[1] < hi[1])) return {};
  BoxSet out;
  out.slabs_.push_back({lo[0], hi[0], IntervalSet::interval(lo[1], hi[1])});
  return out;
}

Rational BoxSet::measure() const {
  Rational m = 0;
  for (const auto& s : slabs_) m += (s.xhi - s.xlo).coeff() * s.ys.measure();
  return m;
}

BoxSet combine(const BoxSet& a, const BoxSet& b, SetOp op) {
  std::vector<PiRational> xs;
  for (const auto* src : {&a, &b}) {
    for (const auto& s : src->slabs_) {
      xs.push_back(s.xlo);
      xs.push_back(s.xhi);
    }
  }
  xs = sorted_unique(std::move(xs));
  std::vector<Slab> raw;
  std::size_t ia = 0;
  std::size_t ib = 0;
  const IntervalSet none;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const PiRational& x0 = xs[i];
    while (ia < a.slabs_.size() && a.slabs_[ia].xhi <= x0) ++ia;
    while (ib < b.slabs_.size() && b.slabs_[ib].xhi <= x0) ++ib;
    const IntervalSet& ya = (ia < a.slabs_.size() && a.slabs_[ia].xlo <= x0) ? a.slabs_[ia].ys : none;
    const IntervalSet& yb = (ib < b.slabs_.size() && b.slabs_[ib].xlo <= x0) ? b.slabs_[ib].ys : none;
    raw.push_back({x0, xs[i + 1], combine(ya, yb, op)});
  }
  return BoxSet::from_slabs(std::move(raw));
}

BoxSet BoxSet::affine(long k, const point_type& t) const {
  std::vector<Slab> raw;
  raw.reserve(slabs_.size());
  for (const auto& s : slabs_) raw.push_back({s.xlo.scaled(k) + t[0], s.xhi.scaled(k) + t[0], s.ys.affine(k, t[1])});
  return from_slabs(std::move(raw));
}

BoxSet BoxSet::reflected(const std::array<bool, 2>& flip) const {
  std::vector<Slab> raw;
  raw.reserve(slabs_.size());
  for (const auto& s : slabs_) {
    IntervalSet ys = s.ys.reflected({flip[1]});
    if (flip[0]) {
      raw.push_back({-s.xhi, -s.xlo, std::move(ys)});
    } else {
      raw.push_back({s.xlo, s.xhi, std::move(ys)});
    }
  }
  if (flip[0]) std::reverse(raw.begin(), raw.end());
  return from_slabs(std::move(raw));
}

std::optional<std::pair<BoxSet::point_type, BoxSet::point_type>> BoxSet::bounds() const {
  if (slabs_.empty()) return std::nullopt;
  PiRational ylo = slabs_.front().ys.parts().front().lo;
  PiRational yhi = slabs_.front().ys.parts().back().hi;
  for (const auto& s : slabs_) {
    ylo = min(ylo, s.ys.parts().front().lo);
    yhi = max(yhi, s.ys.parts().back().hi);
  }
  return std::make_pair(point_type{slabs_.front().xlo, ylo}, point_type{slabs_.back().xhi, yhi});
}

std::vector<PiRational> BoxSet::breakpoints(int axis) const {
  std::vector<PiRational> out;
  for (const auto& s : slabs_) {
    if (axis == 0) {
      out.push_back(s.xlo);
      out.push_back(s.xhi);
    } else {
      auto ys = s.ys.breakpoints(0);
      out.insert(out.end(), ys.begin(), ys.end());
    }
  }
  return sorted_unique(std::move(out));
}

bool BoxSet::contains(const point_type& p) const {
  for (const auto& s : slabs_) {
    if (s.xlo <= p[0] && p[0] < s.xhi) return s.ys.contains(p[1]);
  }
  return false;
}

std::optional<PiRational> BoxSet::distance_from(const point_type& p) const {
  std::optional<PiRational> best;
  for (const auto& s : slabs_) {
    const PiRational dx = distance_to_closed(p[0], s.xlo, s.xhi);
    const auto dy = s.ys.distance_from({p[1]});
    PiRational d = max(dx, *dy);
    if (!best || d < *best) best = std::move(d);
  }
  return best;
}

std::vector<std::pair<BoxSet::point_type, BoxSet::point_type>> BoxSet::boxes() const {
  std::vector<std::pair<point_type, point_type>> out;
  for (const auto& s : slabs_) {
    for (const auto& iv : s.ys.parts()) out.emplace_back(point_type{s.xlo, iv.lo}, point_type{s.xhi, iv.hi});
  }
  return out;
}

}  // namespace wavesets
