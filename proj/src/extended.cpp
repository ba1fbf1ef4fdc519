#include "wavesets/extended.hpp"

#include <algorithm>
#include <numeric>

namespace wavesets {

namespace {

/// Largest e with 2^e pi <= r.
long level_for_radius(const PiRational& r) { return dyadic_bracket(r.coeff()); }

PiRational radius(long level) { return PiRational(mul_pow2(Rational(1), level)); }

template <class R>
R annulus(const Point<R::kDim>& c, long level, long lambda) {
  return neighbourhood<R>(c, level) - neighbourhood<R>(c, level + lambda);
}

/// Union of the orthants of N(c, level) meeting x.
template <class R>
R orthant_hull(const R& x, const Point<R::kDim>& c, long level) {
  R out;
  for (unsigned mask = 0; mask < (1U << R::kDim); ++mask) {
    R q = orthant<R>(c, level, mask);
    if (!(q & x).empty()) out = out | q;
  }
  return out;
}

/// Largest r such that x agrees with a union of orthants at c inside c + [-r, r)^D.
template <class R>
std::optional<PiRational> cone_radius(const R& x, const Point<R::kDim>& c) {
  constexpr int D = R::kDim;
  std::optional<PiRational> best;
  auto offer = [&](PiRational v) {
    if (!best || v < *best) best = std::move(v);
  };
  for (const auto& [lo, hi] : x.boxes()) {
    bool touches = true;
    for (int i = 0; i < D; ++i) touches = touches && lo[i] <= c[i] && c[i] <= hi[i];
    if (touches) {
      for (int i = 0; i < D; ++i) {
        if (lo[i] < c[i]) offer(c[i] - lo[i]);
        if (c[i] < hi[i]) offer(hi[i] - c[i]);
      }
    } else {
      PiRational d;
      for (int i = 0; i < D; ++i) d = max(d, distance_to_closed(c[i], lo[i], hi[i]));
      offer(d);
    }
  }
  return best;
}

template <int D>
bool in_neighbourhood(const Point<D>& x, const Point<D>& c, long level) {
  const PiRational r = radius(level);
  for (int i = 0; i < D; ++i) {
    const PiRational d = x[i] - c[i];
    if (d < -r || !(d < r)) return false;
  }
  return true;
}

/// Moves g to the deeper level e2; returns the part pushed outside the new neighbourhood.
template <class R>
R relevel(Germ<R>& g, long e2) {
  if (e2 == g.level) return {};
  if (e2 > g.level) throw DomainError("relevel: can only move a germ deeper");
  const R inner = neighbourhood<R>(g.center, e2);
  const R ann = annulus<R>(g.center, e2, g.lambda);
  R spill;
  R nb;
  for (long i = 0; g.level + g.lambda * i > e2 + g.lambda; ++i) {
    R term = contract(g.base, g.center, g.lambda, i);
    spill = spill | (term - inner);
    nb = nb | (term & ann);
  }
  g.level = e2;
  g.base = std::move(nb);
  return spill;
}

/// Same germ written with contraction ratio 2^(lambda * m).
template <class R>
void rescale(Germ<R>& g, long m) {
  if (m == 1) return;
  R nb;
  for (long i = 0; i < m; ++i) nb = nb | contract(g.base, g.center, g.lambda, i);
  g.base = std::move(nb);
  g.lambda *= m;
}

template <class R>
void reduce_lambda(Germ<R>& g) {
  const long big = -g.lambda;
  for (long d = 1; d < big; ++d) {
    if (big % d != 0) continue;
    const long lam = -d;
    R b2 = g.base & annulus<R>(g.center, g.level, lam);
    R regen;
    for (long i = 0; i < big / d; ++i) regen = regen | contract(b2, g.center, lam, i);
    if (regen == g.base) {
      g.lambda = lam;
      g.base = std::move(b2);
      return;
    }
  }
}

template <class R>
bool is_trivial(const Germ<R>& g, R* cone) {
  R hull = orthant_hull(g.base, g.center, g.level);
  if (g.base == (annulus<R>(g.center, g.level, g.lambda) & hull)) {
    *cone = neighbourhood<R>(g.center, g.level) & hull;
    return true;
  }
  return false;
}

constexpr long kMaxRaise = 1L << 16;

}  // namespace

template <class R>
R neighbourhood(const Point<R::kDim>& center, long level) {
  constexpr int D = R::kDim;
  const auto r = uniform_point<D>(radius(level));
  return R::box(center - r, center + r);
}

template <class R>
R orthant(const Point<R::kDim>& c, long level, unsigned mask) {
  constexpr int D = R::kDim;
  const PiRational r = radius(level);
  Point<D> lo;
  Point<D> hi;
  for (int i = 0; i < D; ++i) {
    if ((mask >> i) & 1U) {
      lo[i] = c[i];
      hi[i] = c[i] + r;
    } else {
      lo[i] = c[i] - r;
      hi[i] = c[i];
    }
  }
  return R::box(lo, hi);
}

template <class R>
R contract(const R& x, const Point<R::kDim>& p, long lambda, long i) {
  const long k = lambda * i;
  if (k == 0) return x;
  return x.affine(k, times(p, Rational(1 - mul_pow2(Rational(1), k))));
}

template <class R>
Rational Germ<R>::measure() const {
  return base.measure() / (1 - mul_pow2(Rational(1), lambda * D));
}

template <class R>
Rational SelfSimilarTail<R>::measure() const {
  const long ld = map.lambda_exp * R::kDim;
  return base.measure() * mul_pow2(Rational(1), ld * start) / (1 - mul_pow2(Rational(1), ld));
}

template <class R>
void ExtendedSet<R>::canonicalize() {
  std::vector<germ_type> kept;
  for (auto& g : germs_) {
    if (g.base.empty()) continue;
    R cone;
    if (is_trivial(g, &cone)) {
      finite_ = finite_ | cone;
      continue;
    }
    kept.push_back(std::move(g));
  }
  germs_ = std::move(kept);
  for (auto& g : germs_) reduce_lambda(g);

  std::vector<std::optional<long>> caps(germs_.size());
  for (std::size_t i = 0; i < germs_.size(); ++i) {
    for (std::size_t j = 0; j < germs_.size(); ++j) {
      if (i == j) continue;
      const long c = level_for_radius(sup_distance<D>(germs_[i].center, germs_[j].center) * Rational(1, 2));
      if (!caps[i] || c < *caps[i]) caps[i] = c;
    }
  }
  for (std::size_t i = 0; i < germs_.size(); ++i) {
    if (caps[i] && germs_[i].level > *caps[i]) finite_ = finite_ | relevel(germs_[i], *caps[i]);
  }
  for (std::size_t i = 0; i < germs_.size(); ++i) {
    auto& g = germs_[i];
    for (long step = 0; !caps[i] || g.level < *caps[i]; ++step) {
      if (step > kMaxRaise) throw DomainError("canonicalize: germ level failed to stabilise");
      const R ring = neighbourhood<R>(g.center, g.level + 1) - neighbourhood<R>(g.center, g.level);
      R outer = finite_ & ring;
      const R ring_in =
          neighbourhood<R>(g.center, g.level + 1 + g.lambda) - neighbourhood<R>(g.center, g.level + g.lambda);
      if (!(contract(outer, g.center, g.lambda, 1) == (g.base & ring_in))) break;
      g.base = (g.base - ring_in) | outer;
      finite_ = finite_ - ring;
      ++g.level;
    }
  }
  std::sort(germs_.begin(), germs_.end(), [](const germ_type& a, const germ_type& b) { return a.center < b.center; });
}

template <class R>
ExtendedSet<R> ExtendedSet<R>::from_parts(R finite, std::vector<germ_type> germs) {
  for (std::size_t i = 0; i < germs.size(); ++i) {
    const auto& g = germs[i];
    if (g.lambda >= 0) throw DomainError("germ contraction exponent must be negative");
    if (!g.base.subset_of(annulus<R>(g.center, g.level, g.lambda))) {
      throw DomainError("germ base must lie in its annulus");
    }
    const R nb = neighbourhood<R>(g.center, g.level);
    if (!(finite & nb).empty()) throw DomainError("finite part overlaps a germ neighbourhood");
    for (std::size_t j = 0; j < i; ++j) {
      if (!(nb & neighbourhood<R>(germs[j].center, germs[j].level)).empty()) {
        throw DomainError("germ neighbourhoods overlap");
      }
    }
  }
  ExtendedSet out;
  out.finite_ = std::move(finite);
  out.germs_ = std::move(germs);
  out.canonicalize();
  return out;
}

template <class R>
std::vector<SelfSimilarTail<R>> ExtendedSet<R>::tails() const {
  std::vector<SelfSimilarTail<R>> out;
  for (const auto& g : germs_) out.push_back({g.map(), g.base, 0});
  return out;
}

template <class R>
Rational ExtendedSet<R>::measure() const {
  Rational m = finite_.measure();
  for (const auto& g : germs_) m += g.measure();
  return m;
}

}  // namespace wavesets

namespace wavesets {

template <class R>
ExtendedSet<R> combine(const ExtendedSet<R>& a, const ExtendedSet<R>& b, SetOp op) {
  if (a.germs_.empty() && b.germs_.empty()) return ExtendedSet<R>(combine(a.finite_, b.finite_, op));
  constexpr int D = R::kDim;
  struct Slot {
    Point<D> center;
    std::optional<Germ<R>> ga;
    std::optional<Germ<R>> gb;
    long lambda = -1;
    long level = 0;
  };
  std::vector<Slot> slots;
  auto slot_for = [&](const Point<D>& c) -> Slot& {
    for (auto& s : slots) {
      if (s.center == c) return s;
    }
    slots.push_back({c, std::nullopt, std::nullopt});
    return slots.back();
  };
  for (const auto& g : a.germs_) slot_for(g.center).ga = g;
  for (const auto& g : b.germs_) slot_for(g.center).gb = g;

  R fa = a.finite_;
  R fb = b.finite_;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto& s = slots[i];
    long l = 1;
    std::optional<long> lvl;
    for (auto* g : {&s.ga, &s.gb}) {
      if (!*g) continue;
      l = std::lcm(l, -(*g)->lambda);
      if (!lvl || (*g)->level < *lvl) lvl = (*g)->level;
    }
    s.lambda = -l;
    for (auto* g : {&s.ga, &s.gb}) {
      if (*g) rescale(**g, l / -(*g)->lambda);
    }
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (i == j) continue;
      const long c = level_for_radius(sup_distance<D>(s.center, slots[j].center) * Rational(1, 2));
      if (c < *lvl) lvl = c;
    }
    s.level = *lvl;
  }
  auto settle = [&](Slot& s) {
    if (s.ga) fa = fa | relevel(*s.ga, s.level);
    if (s.gb) fb = fb | relevel(*s.gb, s.level);
  };
  for (auto& s : slots) settle(s);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& s : slots) {
      long e = s.level;
      for (const R* f : {&fa, &fb}) {
        if (auto r = cone_radius(*f, s.center)) e = std::min(e, level_for_radius(*r));
      }
      if (e < s.level) {
        s.level = e;
        settle(s);
        changed = true;
      }
    }
  }
  std::vector<Germ<R>> germs;
  for (auto& s : slots) {
    const R nb = neighbourhood<R>(s.center, s.level);
    const R ann = annulus<R>(s.center, s.level, s.lambda);
    R ba = s.ga ? s.ga->base : (fa & ann);
    R bb = s.gb ? s.gb->base : (fb & ann);
    fa = fa - nb;
    fb = fb - nb;
    germs.push_back({s.center, s.lambda, s.level, combine(ba, bb, op)});
  }
  ExtendedSet<R> out;
  out.finite_ = combine(fa, fb, op);
  out.germs_ = std::move(germs);
  out.canonicalize();
  return out;
}

template <class R>
ExtendedSet<R> ExtendedSet<R>::affine(long k, const point_type& t) const {
  ExtendedSet out;
  out.finite_ = finite_.affine(k, t);
  for (const auto& g : germs_) {
    out.germs_.push_back({scaled(g.center, k) + t, g.lambda, g.level + k, g.base.affine(k, t)});
  }
  out.canonicalize();
  return out;
}

template <class R>
ExtendedSet<R> ExtendedSet<R>::reflected(const std::array<bool, D>& flip) const {
  ExtendedSet out;
  out.finite_ = finite_.reflected(flip);
  for (const auto& g : germs_) {
    point_type c = g.center;
    for (int i = 0; i < D; ++i) {
      if (flip[i]) c[i] = -c[i];
    }
    out.germs_.push_back({c, g.lambda, g.level, g.base.reflected(flip)});
  }
  out.canonicalize();
  return out;
}

template <class R>
bool ExtendedSet<R>::contains(const point_type& x) const {
  for (const auto& g : germs_) {
    if (!in_neighbourhood<D>(x, g.center, g.level)) continue;
    if (x == g.center) return false;
    point_type y = x;
    while (in_neighbourhood<D>(y, g.center, g.level + g.lambda)) y = g.center + scaled(y - g.center, -g.lambda);
    return g.base.contains(y);
  }
  return finite_.contains(x);
}

template <class R>
std::optional<std::pair<typename ExtendedSet<R>::point_type, typename ExtendedSet<R>::point_type>>
ExtendedSet<R>::bounds() const {
  std::optional<std::pair<point_type, point_type>> out = finite_.bounds();
  auto absorb = [&](const point_type& lo, const point_type& hi) {
    if (!out) {
      out = std::make_pair(lo, hi);
      return;
    }
    for (int i = 0; i < D; ++i) {
      out->first[i] = min(out->first[i], lo[i]);
      out->second[i] = max(out->second[i], hi[i]);
    }
  };
  for (const auto& g : germs_) {
    absorb(g.center, g.center);
    if (auto bb = g.base.bounds()) absorb(bb->first, bb->second);
  }
  return out;
}

template <class R>
std::pair<R, std::vector<Germ<R>>> ExtendedSet<R>::expanded(long depth) const {
  R fin = finite_;
  std::vector<germ_type> gs = germs_;
  for (auto& g : gs) fin = fin | relevel(g, g.level + g.lambda * depth);
  return {std::move(fin), std::move(gs)};
}

template <class R>
Truncation<R> ExtendedSet<R>::truncate(const Rational& eps) const {
  if (sgn(eps) <= 0) throw DomainError("truncate: eps must be positive");
  if (germs_.empty()) return {finite_, Rational(0)};
  const Rational budget = eps / static_cast<long>(germs_.size());
  R fin = finite_;
  Rational defect = 0;
  for (auto g : germs_) {
    const Rational ratio = mul_pow2(Rational(1), g.lambda * D);
    Rational rest = g.measure();
    long depth = 0;
    while (rest > budget) {
      rest *= ratio;
      ++depth;
    }
    fin = fin | relevel(g, g.level + g.lambda * depth);
    defect += rest;
  }
  return {std::move(fin), std::move(defect)};
}

template <class R>
ExtendedSet<R> make_tail(const AffineContraction<R::kDim>& S, const R& base, long start) {
  if (start < 0) throw DomainError("make_tail: start must be nonnegative");
  if (base.empty()) return {};
  const auto p = S.fixed_point();
  const long lam = S.lambda_exp;
  const R b0 = contract(base, p, lam, start);
  const auto dist = b0.distance_from(p);
  if (!dist || dist->is_zero()) throw DomainError("make_tail: base closure contains the fixed point");
  const long e = level_for_radius(*dist) - lam;
  const R inner = neighbourhood<R>(p, e + lam);
  const R outer = neighbourhood<R>(p, e);
  const R ann = outer - inner;
  R fin;
  R gb;
  for (long i = 0;; ++i) {
    R term = contract(b0, p, lam, i);
    if (term.subset_of(inner)) break;
    if (i > 0 && !(term & b0).empty()) throw DomainError("make_tail: images of the base overlap");
    fin = fin | (term - outer);
    gb = gb | (term & ann);
  }
  return ExtendedSet<R>::from_parts(std::move(fin), {Germ<R>{p, lam, e, std::move(gb)}});
}

template class ExtendedSet<IntervalSet>;
template class ExtendedSet<BoxSet>;
template struct Germ<IntervalSet>;
template struct Germ<BoxSet>;
template struct SelfSimilarTail<IntervalSet>;
template struct SelfSimilarTail<BoxSet>;
template ExtendedSet<IntervalSet> combine(const ExtendedSet<IntervalSet>&, const ExtendedSet<IntervalSet>&, SetOp);
template ExtendedSet<BoxSet> combine(const ExtendedSet<BoxSet>&, const ExtendedSet<BoxSet>&, SetOp);
template ExtendedSet<IntervalSet> make_tail(const AffineContraction<1>&, const IntervalSet&, long);
template ExtendedSet<BoxSet> make_tail(const AffineContraction<2>&, const BoxSet&, long);
template IntervalSet contract(const IntervalSet&, const Point<1>&, long, long);
template BoxSet contract(const BoxSet&, const Point<2>&, long, long);
template IntervalSet neighbourhood(const Point<1>&, long);
template BoxSet neighbourhood(const Point<2>&, long);
template IntervalSet orthant(const Point<1>&, long, unsigned);
template BoxSet orthant(const Point<2>&, long, unsigned);

}  // namespace wavesets
