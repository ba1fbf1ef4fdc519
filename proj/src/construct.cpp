#include "wavesets/construct.hpp"

#include "wavesets/setexpr.hpp"

namespace wavesets {

namespace {

template <class R>
LatticeIndex<R::kDim> index_diff(const LatticeIndex<R::kDim>& a, const LatticeIndex<R::kDim>& b) {
  if constexpr (R::kDim == 1) {
    return a - b;
  } else {
    return {a[0] - b[0], a[1] - b[1]};
  }
}

template <class R>
LatticeIndex<R::kDim> index_neg(const LatticeIndex<R::kDim>& a) {
  if constexpr (R::kDim == 1) {
    return -a;
  } else {
    return {-a[0], -a[1]};
  }
}

}  // namespace

std::string to_string(Lemma5Mode m) {
  switch (m) {
    case Lemma5Mode::kTelescoped:
      return "exact-telescoped";
    case Lemma5Mode::kTail:
      return "exact-tail";
    default:
      return "truncated";
  }
}

template <class R>
std::string Lemma5ValidationT<R>::message() const {
  if (ok) return "valid";
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : "; ") + s; };
  if (!positive_measure) add("E and F need finite positive measure");
  if (!outside_translate.empty()) add("2^k1 F is not inside E + 2 n1 pi: outside part " + format_set(outside_translate));
  if (!outside_dilate.empty()) add("E + 2 n2 pi is not inside 2^k2 F: outside part " + format_set(outside_dilate));
  if (!overlap.empty()) add("E + 2 n2 pi meets 2^k1 F in " + format_set(overlap));
  if (!exponents_ordered) add("k1 must be less than k2");
  return out;
}

template <class R>
Lemma5ValidationT<R> validate(const Lemma5ConfigT<R>& c) {
  constexpr int D = R::kDim;
  Lemma5ValidationT<R> v;
  v.positive_measure = sgn(c.E.measure()) > 0 && sgn(c.F.measure()) > 0;
  const ExtendedSet<R> dil1 = c.F.dilated(c.k1);
  const ExtendedSet<R> tr2 = c.E.translated(lattice_point<D>(c.n2));
  v.outside_translate = dil1 - c.E.translated(lattice_point<D>(c.n1));
  v.outside_dilate = tr2 - c.F.dilated(c.k2);
  v.overlap = tr2 & dil1;
  v.exponents_ordered = c.k1 < c.k2;
  if (v.exponents_ordered) {
    v.contraction = AffineContraction<D>(c.k1 - c.k2, lattice_point<D>(index_diff<R>(c.n2, c.n1)));
  }
  v.ok = v.positive_measure && v.exponents_ordered && v.outside_translate.empty() && v.outside_dilate.empty() &&
         v.overlap.empty();
  return v;
}

template <class R>
Lemma5ResultT<R> lemma5(const Lemma5ConfigT<R>& c, const std::optional<Rational>& eps) {
  constexpr int D = R::kDim;
  const auto v = validate(c);
  if (!v.ok) throw DomainError("invalid Lemma 5 configuration: " + v.message());
  Lemma5ResultT<R> r;
  r.contraction = *v.contraction;
  const ExtendedSet<R> tr2 = c.E.translated(lattice_point<D>(c.n2));
  r.G0 = c.F.dilated(c.k1) - tr2.dilated(c.k1 - c.k2);
  if (!r.G0.is_finite()) throw DomainError("Lemma 5 engine needs a G0 without accumulation points");
  r.orbit = make_tail(r.contraction, r.G0.finite());
  // The orbit is nested inside 2^k1 F; its translate lies inside E + 2 n2 pi.
  const ExtendedSet<R> shifted = r.orbit.translated(lattice_point<D>(index_diff<R>(c.n2, c.n1)));
  if (!r.orbit.subset_of(c.F.dilated(c.k1)) || !shifted.subset_of(tr2)) {
    throw std::logic_error("Lemma 5 orbit escaped its nesting");
  }
  const ExtendedSet<R> rest = tr2 - shifted;
  r.G = r.orbit | rest;
  r.mode = r.G.is_finite() ? Lemma5Mode::kTelescoped : Lemma5Mode::kTail;
  if (eps && !r.G.is_finite()) {
    auto t = r.G.truncate(*eps);
    r.G = ExtendedSet<R>(std::move(t.set));
    r.defect = std::move(t.defect);
    r.mode = Lemma5Mode::kTruncated;
  }
  const ExtendedSet<R> orbit_part = r.orbit & r.G;
  const ExtendedSet<R> rest_part = rest & r.G;
  if (!orbit_part.empty()) {
    r.to_E.push_back({orbit_part, index_neg<R>(c.n1)});
    r.to_F.push_back({orbit_part, -c.k1});
  }
  if (!rest_part.empty()) {
    r.to_E.push_back({rest_part, index_neg<R>(c.n2)});
    r.to_F.push_back({rest_part, -c.k2});
  }
  return r;
}

#define WAVESETS_INSTANTIATE(R)                                                                \
  template struct Lemma5ValidationT<R>;                                                        \
  template Lemma5ValidationT<R> validate(const Lemma5ConfigT<R>&);                             \
  template Lemma5ResultT<R> lemma5(const Lemma5ConfigT<R>&, const std::optional<Rational>&);

WAVESETS_INSTANTIATE(IntervalSet)
WAVESETS_INSTANTIATE(BoxSet)

#undef WAVESETS_INSTANTIATE

}  // namespace wavesets
