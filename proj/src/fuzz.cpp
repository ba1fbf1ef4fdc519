#include <algorithm>
#include <random>

#include "wavesets/construct.hpp"

namespace wavesets {

namespace {

const ExtSet& shannon() {
  static const ExtSet s = ExtSet(IntervalSet::interval(PiRational(-2), PiRational(-1))) |
                          ExtSet(IntervalSet::interval(PiRational(1), PiRational(2)));
  return s;
}

std::pair<long, long> lattice_window(const ExtSet& s, const PiRational& before, const PiRational& after) {
  const auto b = s.bounds();
  if (!b) return {0, -1};
  return {floor_to_long(Rational((b->first[0] - after).coeff() / 2)),
          ceil_to_long(Rational((b->second[0] + before).coeff() / 2))};
}

ExtSet shifted(const ExtSet& s, long n) { return s.translated({PiRational(2 * n)}); }

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::optional<FuzzMove> sample_cycle(std::mt19937_64& rng, const ExtSet& w, const FuzzParams& p) {
  const PiRational h = PiRational(1).scaled(-p.grid - uniform(rng, 0, 2));
  std::vector<long> cells;
  for (const auto& iv : w.finite().parts()) {
    for (long i = ceil_to_long(Rational(iv.lo / h)); h * Rational(i + 1) <= iv.hi; ++i) cells.push_back(i);
  }
  if (cells.empty()) return std::nullopt;
  const long i = cells[uniform(rng, 0, static_cast<long>(cells.size()) - 1)];
  std::vector<std::pair<long, long>> opts;  // (k, n)
  for (long k : {-2L, -1L, 1L, 2L}) {
    for (long t : {-3L, -2L, -1L, 1L, 2L, 3L}) opts.emplace_back(k, k > 0 ? (1L << k) * t : t);
  }
  std::shuffle(opts.begin(), opts.end(), rng);
  for (const auto& [k, n] : opts) {
    FuzzMove m{FuzzMove::Kind::kCycle};
    m.cycle = {Interval(h * Rational(i), h * Rational(i + 1)), n, k};
    if (apply_move(m, w)) return m;
  }
  return std::nullopt;
}

std::optional<FuzzMove> sample_lemma5(std::mt19937_64& rng, const ExtSet& w, const FuzzParams& p) {
  const long cells = 1L << p.grid;
  const PiRational h = PiRational(1).scaled(-p.grid);
  Lemma5Move lm;
  lm.d1 = h * Rational(uniform(rng, 1, cells));
  lm.d2 = h * Rational(uniform(rng, 1, cells));
  const ExtSet e(IntervalSet::interval(-lm.d1, lm.d2));
  const ExtSet f = dilation_reduction(class_piece(w, e));
  if (f.empty()) return std::nullopt;
  std::vector<long> k1s;
  for (long k1 = -1; k1 >= -16 && k1s.size() < 3; --k1) {
    if (f.dilated(k1).subset_of(e)) k1s.push_back(k1);
  }
  if (k1s.empty()) return std::nullopt;
  lm.k1 = k1s[uniform(rng, 0, static_cast<long>(k1s.size()) - 1)];
  std::vector<std::pair<long, long>> cands;
  for (long k2 = 1; k2 <= 5; ++k2) {
    for (const auto& iv : f.finite().parts()) {
      const Rational lo = (iv.lo.scaled(k2) + lm.d1).coeff() / 2;
      const Rational hi = (iv.hi.scaled(k2) - lm.d2).coeff() / 2;
      for (long n2 = ceil_to_long(lo); Rational(n2) <= hi; ++n2) {
        if (n2 != 0) cands.emplace_back(k2, n2);
      }
    }
  }
  if (cands.empty()) return std::nullopt;
  const auto [k2, n2] = cands[uniform(rng, 0, static_cast<long>(cands.size()) - 1)];
  lm.k2 = k2;
  lm.n2 = n2;
  FuzzMove m{FuzzMove::Kind::kLemma5};
  m.lemma = lm;
  return m;
}

}  // namespace

std::string FuzzMove::str() const {
  switch (kind) {
    case Kind::kCycle:
      return "cycle([" + cycle.a.lo.str() + ", " + cycle.a.hi.str() + "), n=" + std::to_string(cycle.n) +
             ", k=" + std::to_string(cycle.k) + ")";
    case Kind::kLemma5:
      return "lemma5([-" + lemma.d1.str() + ", " + lemma.d2.str() + "), k1=" + std::to_string(lemma.k1) +
             ", k2=" + std::to_string(lemma.k2) + ", n2=" + std::to_string(lemma.n2) + ")";
    default:
      return "reflect";
  }
}

ExtSet translation_reduction(const ExtSet& s) {
  const ExtSet dom = translation_domain<IntervalSet>();
  ExtSet out;
  const auto [lo, hi] = lattice_window(s, PiRational(0), PiRational(0));
  for (long m = lo; m <= hi; ++m) out = out | shifted(s & shifted(dom, m), -m);
  return out;
}

ExtSet class_piece(const ExtSet& w, const ExtSet& classes) {
  const auto cb = classes.bounds();
  if (!cb) return {};
  ExtSet out;
  const auto [lo, hi] = lattice_window(w, -cb->first[0], cb->second[0]);
  for (long m = lo - 1; m <= hi + 1; ++m) out = out | (w & shifted(classes, m));
  return out;
}

ExtSet dilation_reduction(const ExtSet& s) {
  ExtSet out;
  for (const auto& [j, b] : dyadic_blocks(s)) out = out | b;
  return out;
}

std::optional<ExtSet> apply_move(const FuzzMove& m, const ExtSet& w) {
  switch (m.kind) {
    case FuzzMove::Kind::kReflect:
      return w.reflected({true});
    case FuzzMove::Kind::kCycle: {
      const auto& c = m.cycle;
      const ExtSet a(IntervalSet::interval(c.a.lo, c.a.hi));
      const Rational mq = -mul_pow2(Rational(c.n), -c.k);
      if (c.n == 0 || c.k == 0 || mq.get_den() != 1 || !a.subset_of(w)) return std::nullopt;
      const ExtSet b = shifted(a, c.n).dilated(-c.k);
      if (!b.subset_of(w) || !(a & b).empty()) return std::nullopt;
      return (w - a - b) | shifted(a, c.n) | b.translated({PiRational(2 * mq)});
    }
    case FuzzMove::Kind::kLemma5: {
      const auto& l = m.lemma;
      if (l.d1.sign() <= 0 || l.d2.sign() <= 0 || PiRational(1) < l.d1 || PiRational(1) < l.d2) return std::nullopt;
      const ExtSet e(IntervalSet::interval(-l.d1, l.d2));
      const ExtSet piece = class_piece(w, e);
      Lemma5Config cfg{e, dilation_reduction(piece), 0, l.n2, l.k1, l.k2};
      if (!validate(cfg).ok) return std::nullopt;
      try {
        return (w - piece) | lemma5(cfg).G;
      } catch (const DomainError&) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

namespace {

std::pair<std::vector<FuzzMove>, ExtSet> generate(std::uint64_t seed, const FuzzParams& p) {
  std::mt19937_64 rng(seed);
  std::vector<FuzzMove::Kind> kinds;
  const long nc = uniform(rng, 0, p.cycle_moves);
  const long nl = uniform(rng, 0, p.lemma5_moves);
  kinds.insert(kinds.end(), nc, FuzzMove::Kind::kCycle);
  kinds.insert(kinds.end(), nl, FuzzMove::Kind::kLemma5);
  std::shuffle(kinds.begin(), kinds.end(), rng);
  if (p.reflect && uniform(rng, 0, 1) == 1) kinds.push_back(FuzzMove::Kind::kReflect);
  std::vector<FuzzMove> plan;
  ExtSet w = shannon();
  auto sample = [&](FuzzMove::Kind kind) -> std::optional<FuzzMove> {
    if (kind == FuzzMove::Kind::kCycle) return sample_cycle(rng, w, p);
    if (kind == FuzzMove::Kind::kLemma5) return sample_lemma5(rng, w, p);
    return FuzzMove{FuzzMove::Kind::kReflect};
  };
  for (const auto kind : kinds) {
    bool done = false;
    // A kind that has no admissible move falls back to the other kind.
    for (int t = 0; t < 2 * p.attempts && !done; ++t) {
      const bool fallback = t >= p.attempts && kind != FuzzMove::Kind::kReflect;
      const auto k = fallback ? (kind == FuzzMove::Kind::kCycle ? FuzzMove::Kind::kLemma5 : FuzzMove::Kind::kCycle) : kind;
      const auto m = sample(k);
      if (!m) continue;
      if (auto next = apply_move(*m, w)) {
        w = std::move(*next);
        plan.push_back(*m);
        done = true;
      }
    }
    if (!done) {
      std::string tried;
      for (const auto& m : plan) tried += "; after " + m.str();
      throw DomainError("random_wavelet_set: no admissible move in " + std::to_string(2 * p.attempts) +
                        " attempts (seed " + std::to_string(seed) + tried + ")");
    }
  }
  return {std::move(plan), std::move(w)};
}

}  // namespace

std::vector<FuzzMove> random_plan(std::uint64_t seed, const FuzzParams& p) { return generate(seed, p).first; }

ExtSet apply_plan(const std::vector<FuzzMove>& plan, const ExtSet& base) {
  ExtSet w = base;
  for (const auto& m : plan) {
    if (auto next = apply_move(m, w)) w = std::move(*next);
  }
  return w;
}

ExtSet random_wavelet_set(std::uint64_t seed, const FuzzParams& p) { return generate(seed, p).second; }

}  // namespace wavesets
