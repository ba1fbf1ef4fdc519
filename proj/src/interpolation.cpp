#include "wavesets/interpolation.hpp"

#include <algorithm>
#include <map>

namespace wavesets {

DyadicMap DyadicMap::from_pieces(std::vector<MapPiece> pieces) {
  std::map<PiRational, ExtSet> by_shift;
  for (auto& p : pieces) {
    if (p.part.empty()) continue;
    auto [it, fresh] = by_shift.try_emplace(p.shift, p.part);
    if (!fresh) it->second = it->second | p.part;
  }
  DyadicMap m;
  for (auto& [t, part] : by_shift) m.pieces_.push_back({std::move(part), t});
  return m;
}

DyadicMap DyadicMap::identity() { return from_pieces({{dilation_domain<IntervalSet>(), PiRational()}}); }

ExtSet DyadicMap::support() const {
  ExtSet u;
  for (const auto& p : pieces_) u = u | p.part;
  return u;
}

std::optional<PiRational> DyadicMap::evaluate(const PiRational& s) const {
  if (s.is_zero()) return std::nullopt;
  const auto [j, b] = dyadic_reduce(s);
  for (const auto& p : pieces_) {
    if (p.part.contains({b})) return s + p.shift.scaled(j);
  }
  return std::nullopt;
}

ExtSet DyadicMap::image(const ExtSet& s) const {
  ExtSet out;
  for (const auto& [j, b] : dyadic_blocks(s)) {
    for (const auto& p : pieces_) {
      const ExtSet hit = b & p.part;
      if (!hit.empty()) out = out | hit.translated({p.shift}).dilated(j);
    }
  }
  return out;
}

bool DyadicMap::is_identity() const {
  return pieces_.size() == 1 && pieces_[0].shift.is_zero() && pieces_[0].part == dilation_domain<IntervalSet>();
}

DyadicMap compose(const DyadicMap& second, const DyadicMap& first, std::size_t piece_cap) {
  std::vector<MapPiece> out;
  for (const auto& p : first.pieces()) {
    for (const auto& [j, c] : dyadic_blocks(p.part.translated({p.shift}))) {
      for (const auto& q : second.pieces()) {
        const ExtSet hit = c & q.part;
        if (hit.empty()) continue;
        if (out.size() >= piece_cap) throw ResourceError("composition exceeded the piece cap");
        out.push_back({hit.dilated(j).translated({-p.shift}), p.shift + q.shift.scaled(j)});
      }
    }
  }
  return DyadicMap::from_pieces(std::move(out));
}

namespace {

// Small per-thread cache keyed by the (E, F) pair; one per value type.
template <class V, class F>
V pair_memo(const ExtSet& e, const ExtSet& f, F&& compute) {
  constexpr std::size_t kSlots = 4;
  thread_local std::vector<std::pair<std::pair<ExtSet, ExtSet>, V>> cache;
  for (const auto& [k, v] : cache) {
    if (k.first == e && k.second == f) return v;
  }
  V v = compute();
  if (cache.size() == kSlots) cache.erase(cache.begin());
  cache.emplace_back(std::pair{e, f}, v);
  return v;
}

std::vector<Quadruple> quadruples_uncached(const ExtSet& e, const ExtSet& f);

}  // namespace

InterpolationMap build(const ExtSet& e, const ExtSet& f) {
  return pair_memo<InterpolationMap>(e, f, [&] {
    if (!is_wavelet_set(e).ok) throw DomainError("source is not a wavelet set");
    if (!is_wavelet_set(f).ok) throw DomainError("target is not a wavelet set");
    InterpolationMap m;
    m.source_ = e;
    m.target_ = f;
    m.pieces_ = translation_witness(e, f);
    std::vector<MapPiece> pieces;
    for (const auto& w : m.pieces_) {
      const PiRational t(2 * w.n);
      for (const auto& [j, b] : dyadic_blocks(w.part)) pieces.push_back({b, t.scaled(-j)});
    }
    m.map_ = DyadicMap::from_pieces(std::move(pieces));
    return m;
  });
}

bool is_interpolation_pair(const ExtSet& e, const ExtSet& f) {
  const auto s = build(e, f);
  return compose(s, s).is_identity();
}

bool theorem1_check(const ExtSet& e, const ExtSet& f) {
  const ExtSet u = e | f;
  return build(e, f).image(u).subset_of(u);
}

std::vector<Quadruple> nonzero_quadruples(const ExtSet& e, const ExtSet& f) {
  return pair_memo<std::vector<Quadruple>>(e, f, [&] { return quadruples_uncached(e, f); });
}

namespace {

std::vector<Quadruple> quadruples_uncached(const ExtSet& e, const ExtSet& f) {
  if (!is_wavelet_set(e).ok || !is_wavelet_set(f).ok) throw DomainError("inputs must be wavelet sets");
  const auto cells = joint_witness(e, f);
  std::vector<Quadruple> out;
  std::vector<std::pair<const JointCell<IntervalSet>*, ExtSet>> images;
  for (const auto& b : cells) {
    if (b.n != 0) images.emplace_back(&b, b.part.dilated(b.k));
  }
  for (const auto& a : cells) {
    if (a.n == 0) continue;
    const auto ba = a.part.bounds();
    const PiRational t(2 * a.n);
    for (const auto& [b, img] : images) {
      const auto bi = img.bounds();
      if (!ba || !bi || bi->second[0] - t <= ba->first[0] || ba->second[0] <= bi->first[0] - t) continue;
      ExtSet x = a.part & img.translated({-t});
      if (!x.empty()) out.push_back({a.n, a.k, b->n, b->k, std::move(x)});
    }
  }
  return out;
}

}  // namespace

Theorem3PairReport theorem3_pair_report(const ExtSet& e, const ExtSet& f) {
  Theorem3PairReport r;
  r.cells = nonzero_quadruples(e, f);
  for (const auto& q : r.cells) {
    if (Rational(q.n) + mul_pow2(Rational(q.m), q.l) != 0) r.violations.push_back(q);
  }
  r.ok = r.violations.empty();
  r.k_equals_minus_l = r.ok && std::all_of(r.cells.begin(), r.cells.end(), [](const Quadruple& q) { return q.k == -q.l; });
  return r;
}

std::string to_string(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::kTrue:
      return "true";
    case FamilyVerdict::kFalse:
      return "false";
    default:
      return "indeterminate";
  }
}

FamilyReport interpolation_family_report(const std::vector<ExtSet>& sets, std::size_t bound, std::size_t piece_cap) {
  FamilyReport r;
  if (sets.empty()) throw DomainError("empty family");
  std::vector<DyadicMap> given;
  for (const auto& s : sets) {
    DyadicMap m = build(sets.front(), s).map();
    if (std::find(given.begin(), given.end(), m) == given.end()) given.push_back(std::move(m));
  }
  r.distinct_maps = given.size();
  // Closure under composition, up to the bound.
  std::vector<DyadicMap> closure = given;
  bool escaped = false;
  try {
    for (std::size_t i = 0; i < closure.size() && closure.size() <= bound; ++i) {
      for (std::size_t j = 0; j <= i && closure.size() <= bound; ++j) {
        for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
          DyadicMap c = compose(closure[a], closure[b], piece_cap);
          if (std::find(closure.begin(), closure.end(), c) != closure.end()) continue;
          escaped = true;
          closure.push_back(std::move(c));
          if (closure.size() > bound) break;
        }
      }
    }
  } catch (const ResourceError&) {
    r.closure_size = closure.size();
    r.verdict = escaped ? FamilyVerdict::kFalse : FamilyVerdict::kIndeterminate;
    return r;
  }
  r.closure_size = std::min(closure.size(), bound);
  r.verdict = escaped ? FamilyVerdict::kFalse : FamilyVerdict::kTrue;
  return r;
}

}  // namespace wavesets
