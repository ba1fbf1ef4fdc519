#include "wavesets/congruence.hpp"

#include <set>
#include <stdexcept>

namespace wavesets {

namespace {

template <int D>
LatticeIndex<D> index_sub(const LatticeIndex<D>& a, const LatticeIndex<D>& b) {
  if constexpr (D == 1) {
    return a - b;
  } else {
    return {a[0] - b[0], a[1] - b[1]};
  }
}

/// Multiplicity layers: layer k holds points covered more than k times.
template <class R>
class LayerStack {
 public:
  explicit LayerStack(std::size_t cap) : cap_(cap) {}

  void add(const ExtendedSet<R>& p) {
    if (p.empty()) return;
    for (std::size_t k = layers_.size(); k-- > 0;) {
      ExtendedSet<R> x = layers_[k] & p;
      if (x.empty()) continue;
      if (k + 1 == layers_.size()) {
        if (layers_.size() < cap_) layers_.push_back(std::move(x));
      } else {
        layers_[k + 1] = layers_[k + 1] | x;
      }
    }
    if (layers_.empty()) {
      layers_.push_back(p);
    } else {
      layers_[0] = layers_[0] | p;
    }
  }

  ExtendedSet<R> layer(std::size_t k) const { return k < layers_.size() ? layers_[k] : ExtendedSet<R>(); }
  std::size_t depth() const { return layers_.size(); }

 private:
  std::size_t cap_;
  std::vector<ExtendedSet<R>> layers_;
};

template <class R>
std::vector<MultiplicityBand<R>> bands(const LayerStack<R>& st) {
  std::vector<MultiplicityBand<R>> out;
  for (std::size_t k = 0; k < st.depth(); ++k) {
    ExtendedSet<R> exact = st.layer(k) - st.layer(k + 1);
    if (!exact.empty()) out.push_back({std::move(exact), static_cast<long>(k + 1)});
  }
  return out;
}

template <class R>
std::vector<LatticeIndex<R::kDim>> lattice_range(const Point<R::kDim>& lo, const Point<R::kDim>& hi) {
  // Translates 2 pi m of the translation domain that can meet the box [lo, hi].
  constexpr int D = R::kDim;
  const Rational off = D == 1 ? Rational(0) : Rational(1);
  std::array<long, D> a{};
  std::array<long, D> b{};
  for (int i = 0; i < D; ++i) {
    a[i] = floor_to_long(Rational((lo[i].coeff() + off) / 2));
    b[i] = ceil_to_long(Rational((hi[i].coeff() + off) / 2)) - 1;
  }
  std::vector<LatticeIndex<D>> out;
  if constexpr (D == 1) {
    for (long m = a[0]; m <= b[0]; ++m) out.push_back(m);
  } else {
    for (long m0 = a[0]; m0 <= b[0]; ++m0) {
      for (long m1 = a[1]; m1 <= b[1]; ++m1) out.push_back({m0, m1});
    }
  }
  return out;
}

/// Lattice indices m whose translate of the translation domain meets some box covering s.
template <class R>
std::set<LatticeIndex<R::kDim>> touched_indices(const ExtendedSet<R>& s) {
  std::set<LatticeIndex<R::kDim>> out;
  auto add = [&](const Point<R::kDim>& lo, const Point<R::kDim>& hi) {
    for (const auto& m : lattice_range<R>(lo, hi)) out.insert(m);
  };
  for (const auto& [lo, hi] : s.finite().boxes()) add(lo, hi);
  for (const auto& g : s.germs()) {
    const auto b = neighbourhood<R>(g.center, g.level).bounds();
    if (b) add(b->first, b->second);
  }
  return out;
}

template <class R>
std::vector<ExtendedSet<R>> translation_cells(const ExtendedSet<R>& s) {
  std::vector<ExtendedSet<R>> out;
  const ExtendedSet<R> dom = translation_domain<R>();
  for (const auto& m : touched_indices(s)) {
    const Point<R::kDim> t = lattice_point<R::kDim>(m);
    ExtendedSet<R> piece = s & dom.translated(t);
    if (!piece.empty()) out.push_back(piece.translated(Point<R::kDim>{} - t));
  }
  return out;
}

template <class R>
struct DyadicScan {
  std::vector<std::pair<long, ExtendedSet<R>>> blocks;  // (j, 2^-j (s restricted to block j))
  ExtendedSet<R> cone;                                  // dilation-domain trace of a cone at 0
};

constexpr long kMaxBlocks = 1L << 14;

template <class R>
DyadicScan<R> dyadic_scan(const ExtendedSet<R>& s) {
  constexpr int D = R::kDim;
  const Point<D> origin{};
  for (const auto& g : s.germs()) {
    if (g.center == origin) throw DomainError("set accumulates at the origin; dilation reduction is unbounded");
  }
  DyadicScan<R> out;
  const auto b = s.bounds();
  if (!b) return out;
  PiRational big;
  for (int i = 0; i < D; ++i) big = max(big, max(abs(b->first[i]), abs(b->second[i])));
  if (big.is_zero()) return out;
  long j = dyadic_bracket_upper(big.coeff());
  for (long step = 0;; ++step) {
    if (step > kMaxBlocks) throw DomainError("dilation reduction did not terminate");
    const ExtendedSet<R> inner(neighbourhood<R>(origin, j));
    ExtendedSet<R> block = s & (ExtendedSet<R>(neighbourhood<R>(origin, j + 1)) - inner);
    if (!block.empty()) out.blocks.emplace_back(j, block.dilated(-j));
    const ExtendedSet<R> rest = s & inner;
    if (rest.empty()) break;
    bool cone = true;
    R hull;
    for (unsigned mask = 0; mask < (1U << D) && cone; ++mask) {
      const R o = orthant<R>(origin, j, mask);
      const ExtendedSet<R> part = rest & ExtendedSet<R>(o);
      if (part.empty()) continue;
      if (part == ExtendedSet<R>(o)) {
        hull = hull | orthant<R>(origin, 1, mask);
      } else {
        cone = false;
      }
    }
    if (cone) {
      out.cone = ExtendedSet<R>(hull) & dilation_domain<R>();
      break;
    }
    --j;
  }
  return out;
}

template <class R>
GeneratorReportT<R> report(const LayerStack<R>& st, const ExtendedSet<R>& dom, const ExtendedSet<R>& cone) {
  GeneratorReportT<R> r;
  r.overlap = st.layer(1) | cone;
  r.gap = dom - st.layer(0) - cone;
  r.divergent = !cone.empty();
  r.ok = r.overlap.empty() && r.gap.empty();
  return r;
}

}  // namespace

template <class R>
ExtendedSet<R> translation_domain() {
  constexpr int D = R::kDim;
  if constexpr (D == 1) {
    return ExtendedSet<R>(R::box({PiRational(0)}, {PiRational(2)}));
  } else {
    return ExtendedSet<R>(R::box(uniform_point<D>(PiRational(-1)), uniform_point<D>(PiRational(1))));
  }
}

template <class R>
ExtendedSet<R> dilation_domain() {
  return ExtendedSet<R>(neighbourhood<R>(Point<R::kDim>{}, 1) - neighbourhood<R>(Point<R::kDim>{}, 0));
}

template <class R>
std::vector<MultiplicityBand<R>> translation_profile(const ExtendedSet<R>& s) {
  LayerStack<R> st(static_cast<std::size_t>(-1));
  for (const auto& c : translation_cells(s)) st.add(c);
  return bands(st);
}

template <class R>
std::vector<MultiplicityBand<R>> dilation_profile(const ExtendedSet<R>& s) {
  LayerStack<R> st(static_cast<std::size_t>(-1));
  const auto scan = dyadic_scan(s);
  for (const auto& [j, c] : scan.blocks) st.add(c);
  auto out = bands(st);
  if (!scan.cone.empty()) out.push_back({scan.cone, -1});  // unbounded multiplicity
  return out;
}

template <class R, class F>
GeneratorReportT<R> memoized(const ExtendedSet<R>& s, F&& compute) {
  // One cache per lambda type, so translation and dilation reports stay apart.
  constexpr std::size_t kSlots = 8;
  thread_local std::vector<std::pair<ExtendedSet<R>, GeneratorReportT<R>>> cache;
  for (const auto& [k, v] : cache) {
    if (k == s) return v;
  }
  auto r = compute();
  if (cache.size() == kSlots) cache.erase(cache.begin());
  cache.emplace_back(s, r);
  return r;
}

template <class R>
GeneratorReportT<R> translation_generator_report(const ExtendedSet<R>& s) {
  LayerStack<R> st(2);
  for (const auto& c : translation_cells(s)) st.add(c);
  return report(st, translation_domain<R>(), ExtendedSet<R>());
}

template <class R>
GeneratorReportT<R> dilation_generator_report(const ExtendedSet<R>& s) {
  LayerStack<R> st(2);
  const auto scan = dyadic_scan(s);
  for (const auto& [j, c] : scan.blocks) st.add(c);
  return report(st, dilation_domain<R>(), scan.cone);
}

template <class R>
GeneratorReportT<R> is_translation_generator(const ExtendedSet<R>& s) {
  return memoized(s, [&] { return translation_generator_report(s); });
}

template <class R>
GeneratorReportT<R> is_dilation_generator(const ExtendedSet<R>& s) {
  return memoized(s, [&] { return dilation_generator_report(s); });
}

template <class R>
WaveletReportT<R> is_wavelet_set(const ExtendedSet<R>& s) {
  WaveletReportT<R> r;
  r.translation = is_translation_generator(s);
  r.dilation = is_dilation_generator(s);
  r.ok = r.translation.ok && r.dilation.ok;
  r.measure = s.measure();
  return r;
}

template <class R>
std::optional<std::pair<long, long>> dyadic_span(const ExtendedSet<R>& s) {
  const auto scan = dyadic_scan(s);
  if (!scan.cone.empty()) throw DomainError("set contains a cone at the origin");
  if (scan.blocks.empty()) return std::nullopt;
  return std::make_pair(scan.blocks.back().first, scan.blocks.front().first);
}

template <class R>
std::vector<std::pair<long, ExtendedSet<R>>> dyadic_blocks(const ExtendedSet<R>& s) {
  auto scan = dyadic_scan(s);
  if (!scan.cone.empty()) throw DomainError("set contains a cone at the origin");
  return std::move(scan.blocks);
}

std::pair<long, PiRational> dyadic_reduce(const PiRational& s) {
  if (s.is_zero()) throw DomainError("zero has no dyadic reduction");
  const long j = s.sign() > 0 ? dyadic_bracket(s.coeff()) : dyadic_bracket_upper(Rational(-s.coeff()));
  return {j, s.scaled(-j)};
}

template <class R>
TranslationWitnessT<R> translation_witness(const ExtendedSet<R>& e, const ExtendedSet<R>& f) {
  if (!is_translation_generator(e).ok) throw DomainError("first set is not a 2pi-translation generator");
  if (!is_translation_generator(f).ok) throw DomainError("second set is not a 2pi-translation generator");
  TranslationWitnessT<R> out;
  constexpr int D = R::kDim;
  // e meets f - 2 pi n only if some cell of e and some cell of f differ by n.
  const auto me = touched_indices(e);
  const auto mf = touched_indices(f);
  std::set<LatticeIndex<D>> candidates;
  for (const auto& a : me) {
    for (const auto& b : mf) candidates.insert(index_sub<D>(b, a));
  }
  for (const auto& n : candidates) {
    const Point<D> t = lattice_point<D>(n);
    ExtendedSet<R> piece = e & f.translated(Point<D>{} - t);
    if (!piece.empty()) out.push_back({std::move(piece), n});
  }
  if (!verifies_translation(out, e, f)) throw DomainError("sets are not 2pi-translation congruent");
  return out;
}

template <class R>
DilationWitnessT<R> dilation_witness(const ExtendedSet<R>& e, const ExtendedSet<R>& f) {
  if (!is_dilation_generator(e).ok) throw DomainError("first set is not a 2-dilation generator");
  if (!is_dilation_generator(f).ok) throw DomainError("second set is not a 2-dilation generator");
  DilationWitnessT<R> out;
  const auto se = dyadic_span(e);
  const auto sf = dyadic_span(f);
  if (!se || !sf) return out;
  for (long k = sf->first - se->second; k <= sf->second - se->first; ++k) {
    ExtendedSet<R> piece = e & f.dilated(-k);
    if (!piece.empty()) out.push_back({std::move(piece), k});
  }
  if (!verifies_dilation(out, e, f)) throw DomainError("sets are not 2-dilation congruent");
  return out;
}

template <class R>
JointWitnessT<R> joint_witness(const ExtendedSet<R>& e, const ExtendedSet<R>& f) {
  const auto tw = translation_witness(e, f);
  const auto dw = dilation_witness(e, f);
  JointWitnessT<R> out;
  for (const auto& t : tw) {
    for (const auto& d : dw) {
      ExtendedSet<R> cell = t.part & d.part;
      if (cell.empty()) continue;
      if (is_zero_index<R::kDim>(t.n) != (d.k == 0)) {
        throw std::logic_error("joint witness cell with exactly one of n, k zero");
      }
      out.push_back({std::move(cell), t.n, d.k});
    }
  }
  return out;
}

template <class R>
bool verifies_translation(const TranslationWitnessT<R>& w, const ExtendedSet<R>& e, const ExtendedSet<R>& f) {
  ExtendedSet<R> dom;
  ExtendedSet<R> img;
  Rational total = 0;
  for (const auto& p : w) {
    dom = dom | p.part;
    img = img | p.part.translated(lattice_point<R::kDim>(p.n));
    total += p.part.measure();
  }
  return dom == e && img == f && total == e.measure() && total == f.measure();
}

template <class R>
bool verifies_dilation(const DilationWitnessT<R>& w, const ExtendedSet<R>& e, const ExtendedSet<R>& f) {
  ExtendedSet<R> dom;
  ExtendedSet<R> img;
  Rational total_dom = 0;
  Rational total_img = 0;
  for (const auto& p : w) {
    dom = dom | p.part;
    img = img | p.part.dilated(p.k);
    total_dom += p.part.measure();
    total_img += mul_pow2(p.part.measure(), p.k * R::kDim);
  }
  return dom == e && img == f && total_dom == e.measure() && total_img == f.measure();
}

#define WAVESETS_INSTANTIATE(R)                                                                              \
  template ExtendedSet<R> translation_domain<R>();                                                           \
  template ExtendedSet<R> dilation_domain<R>();                                                              \
  template std::vector<MultiplicityBand<R>> translation_profile(const ExtendedSet<R>&);                      \
  template std::vector<MultiplicityBand<R>> dilation_profile(const ExtendedSet<R>&);                         \
  template GeneratorReportT<R> is_translation_generator(const ExtendedSet<R>&);                              \
  template GeneratorReportT<R> is_dilation_generator(const ExtendedSet<R>&);                                 \
  template WaveletReportT<R> is_wavelet_set(const ExtendedSet<R>&);                                          \
  template std::optional<std::pair<long, long>> dyadic_span(const ExtendedSet<R>&);                          \
  template std::vector<std::pair<long, ExtendedSet<R>>> dyadic_blocks(const ExtendedSet<R>&);                \
  template TranslationWitnessT<R> translation_witness(const ExtendedSet<R>&, const ExtendedSet<R>&);         \
  template DilationWitnessT<R> dilation_witness(const ExtendedSet<R>&, const ExtendedSet<R>&);               \
  template JointWitnessT<R> joint_witness(const ExtendedSet<R>&, const ExtendedSet<R>&);                     \
  template bool verifies_translation(const TranslationWitnessT<R>&, const ExtendedSet<R>&, const ExtendedSet<R>&); \
  template bool verifies_dilation(const DilationWitnessT<R>&, const ExtendedSet<R>&, const ExtendedSet<R>&);

WAVESETS_INSTANTIATE(IntervalSet)
WAVESETS_INSTANTIATE(BoxSet)

#undef WAVESETS_INSTANTIATE

}  // namespace wavesets
