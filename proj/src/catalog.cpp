#include "wavesets/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wavesets/setexpr.hpp"

namespace wavesets {

namespace {

PiRational P(long num, long den = 1) { return PiRational(num, den); }

ExtSet I(const PiRational& lo, const PiRational& hi) { return ExtSet(IntervalSet::interval(lo, hi)); }

PiRational pow2pi(long k) { return P(1).scaled(k); }

}  // namespace

ExtSet shannon_set() { return I(P(-2), P(-1)) | I(P(1), P(2)); }

std::pair<ExtSet, ExtSet> meyer_pair() {
  return {I(P(-8, 3), P(-4, 3)) | I(P(2, 3), P(4, 3)), I(P(-4, 3), P(-2, 3)) | I(P(4, 3), P(8, 3))};
}

std::pair<ExtSet, ExtSet> overlapping_pair() { return {shannon_set(), I(P(-1), P(-1, 2)) | I(P(3, 2), P(3))}; }

Theorem4Sets theorem4_sets() {
  Theorem4Sets t;
  t.config = {I(P(0), P(1, 16)), parse_set("[pi,129/128pi) | [17/16pi,225/128pi) | [113/64pi,2pi)"), 0, 4, -5, 3};
  t.lemma = lemma5(t.config);
  // Complement of the positive part modulo 2 pi: itself a telescoped Lemma 5 output with fixed point -2pi/3.
  const ExtSet x = lemma5(Lemma5Config{I(P(1), P(2)), I(P(-2), P(-1)), -1, -2, -1, 1}).G;
  const auto cell = [](long k) { return I(PiRational(Rational(33)).scaled(-k), PiRational(Rational(34)).scaled(-k)); };
  t.E = x | t.lemma.G | cell(4) | cell(3).translated({P(12)}) | cell(2).translated({P(8)}) | cell(1).translated({P(96)});
  t.F = x | t.lemma.G | cell(2) | cell(4).translated({P(6)}) | cell(1).translated({P(16)}) | cell(3).translated({P(24)});
  return t;
}

Example7Sets example7(long n) {
  if (n < 1 || n > 60) throw DomainError("example7: N must lie in [1, 60]");
  Example7Sets out;
  ExtSet g_union;   // G_1..G_N
  ExtSet removed;   // 2^-(k+1) G_k
  for (long k = 1; k <= n; ++k) {
    const PiRational lo(Rational(mul_pow2(Rational(1), k) - 1) / mul_pow2(Rational(1), k));
    const PiRational hi(Rational(mul_pow2(Rational(1), k + 1) - 1) / mul_pow2(Rational(1), k + 1));
    const ExtSet gk = I(lo, hi).translated({PiRational(Rational(mul_pow2(Rational(1), k + 2) - 2))});
    g_union = g_union | gk;
    removed = removed | gk.dilated(-(k + 1));
  }
  out.config = {I(P(0), P(1, 2)), I(P(1), P(2)) - removed, 0, 1, -2, 1};
  out.W_plus = lemma5(out.config).G | g_union;
  out.W = out.W_plus | out.W_plus.reflected({true});
  out.residual = mul_pow2(Rational(1), -(n + 1));
  return out;
}

ExtSet example8_G() {
  const Lemma5Config c{I(P(0), P(1)), I(P(1), P(7, 4)), 0, 1, -1, 1};
  return I(P(-1), P(-1, 2)) | lemma5(c).G | I(P(7, 2), P(4));
}

ExtSet example9_G() {
  const Lemma5Config c{I(P(-2), P(-11, 8)) | I(P(-9, 8), P(-1)), I(P(-2), P(-3, 2)), 0, -1, 0, 1};
  return I(P(5, 8), P(7, 8)) | I(P(1), P(5, 4)) | I(P(7, 2), P(4)) | I(P(-3, 4), P(-1, 2)) | lemma5(c).G;
}

ExtSet example10_G_plus_closed_form(long l, long m) {
  const PiRational p(Rational(mul_pow2(Rational(1), l) / (mul_pow2(Rational(1), l + m) - 1)));
  return I(p, pow2pi(1 - m)) | I(pow2pi(l), pow2pi(l) + p);
}

ExtSet example10_G_minus_closed_form(long m, long n) {
  const Rational big = mul_pow2(Rational(1), m + n);
  const PiRational q(Rational((big - mul_pow2(Rational(1), n)) / (big - 1)));
  const PiRational a(Rational(mul_pow2(Rational(1), n) - big));
  return I(a - q, a) | I(P(-2) + pow2pi(1 - m), -q);
}

Example10Sets example10(long l, long m, long n) {
  for (long v : {l, m, n}) {
    if (v < 1 || v > 20) throw DomainError("example10: l, m, n must lie in [1, 20]");
  }
  Example10Sets out;
  const Lemma5Config plus{I(P(0), pow2pi(1 - m)), I(P(1), P(2)), 0, 1L << (l - 1), -m, l};
  const PiRational a = P(-2) + pow2pi(1 - m);
  const Lemma5Config minus{I(a, P(0)), I(a, P(-1) + pow2pi(-m)), 0, (1L << (n - 1)) * (1 - (1L << m)), 0, m + n};
  const auto rp = lemma5(plus);
  const auto rm = lemma5(minus);
  out.G_plus = rp.G;
  out.G_minus = rm.G;
  out.plus_mode = rp.mode;
  out.minus_mode = rm.mode;
  out.K = out.G_minus | out.G_plus;
  return out;
}

std::optional<Example2Family> example2_search(long g) {
  if (g < 0 || g > 4) throw DomainError("example2 search: grid exponent must lie in [0, 4]");
  const auto [e, f] = overlapping_pair();
  const auto sigma = build(e, f);
  const PiRational h = pow2pi(-g);
  std::vector<ExtSet> cells;
  const ExtSet only_e = e - f;
  for (const auto& iv : only_e.finite().parts()) {
    for (PiRational x = iv.lo; x < iv.hi; x = x + h) cells.push_back(I(x, min(x + h, iv.hi)));
  }
  if (cells.size() > 20) throw DomainError("example2 search: too many cells");
  const ExtSet common = e & f;
  // Masks 0 and all-ones give E and F back.
  for (unsigned long mask = 1; mask + 1 < (1UL << cells.size()); ++mask) {
    ExtSet gset = common;
    for (std::size_t i = 0; i < cells.size(); ++i) gset = gset | ((mask >> i & 1UL) ? sigma.image(cells[i]) : cells[i]);
    if (!is_wavelet_set(gset).ok) continue;
    const ExtSet hset = (e - gset) | common | (f - gset);
    return Example2Family{e, f, gset, hset};
  }
  return std::nullopt;
}

}  // namespace wavesets

namespace wavesets {

namespace {

using Check = std::function<bool()>;

struct Builder {
  CatalogItem& item;
  bool verify;

  void expect(const std::string& what, const Check& check) {
    if (verify) item.expectations.push_back({what, check()});
  }
  void wavelet(const std::string& label) {
    const ExtSet& s = item.set(label);
    expect(label + " is a wavelet set", [&] { return is_wavelet_set(s).ok; });
  }
  void wavelet2(const std::string& label) {
    const ExtBox& s = item.box(label);
    expect(label + " is a 2D wavelet set", [&] { return is_wavelet_set_2d(s).ok; });
    expect(label + " has area 4 pi^2", [&] { return s.measure() == 4; });
  }
};

bool domains_equal(const ExtSet& e, const ExtSet& f) {
  return saturated_equal(congruence_domain(e, f), congruence_domain(f, e));
}

void build_pair_checks(Builder& b, bool pair) {
  const ExtSet& e = b.item.set("E");
  const ExtSet& f = b.item.set("F");
  b.wavelet("E");
  b.wavelet("F");
  b.expect(std::string("interpolation pair is ") + (pair ? "true" : "false"),
           [&] { return is_interpolation_pair(e, f) == pair; });
  b.expect("theorem 1 check agrees", [&] { return theorem1_check(e, f) == pair; });
  b.expect("theorem 3(i) criterion agrees", [&] { return theorem3_pair_criterion(e, f) == pair; });
  b.expect("theorem 3(ii) criterion matches domain equality",
           [&] { return theorem3_domain_criterion(e, f) == domains_equal(e, f); });
}

using Recipe = std::function<void(Builder&, const std::vector<long>&)>;

struct Entry {
  CatalogInfo info;
  Recipe recipe;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> v;
    v.push_back({{"shannon", "[-2pi,-pi) | [pi,2pi)", 1, {}}, [](Builder& b, const std::vector<long>&) {
                   b.item.sets.emplace_back("W", shannon_set());
                   b.wavelet("W");
                   b.expect("[0,2pi) is not a wavelet set",
                            [] { return !is_wavelet_set(ExtSet(IntervalSet::interval(P(0), P(2)))).ok; });
                 }});
    v.push_back({{"meyer_pair", "Meyer pair E, F", 1, {}}, [](Builder& b, const std::vector<long>&) {
                   auto [e, f] = meyer_pair();
                   b.item.sets.emplace_back("E", e);
                   b.item.sets.emplace_back("F", f);
                   build_pair_checks(b, true);
                   b.expect("k = -l on every witnessed cell", [&] { return theorem3_pair_report(e, f).k_equals_minus_l; });
                   b.expect("domains equal the two rays beyond 2pi/3", [&] {
                     const auto d = SaturatedDyadicSet::from_steps(
                         {{parse_set("[-2pi,-4/3pi) | [4/3pi,2pi)"), ExponentFloor(-1)},
                          {parse_set("[-4/3pi,-pi) | [pi,4/3pi)"), ExponentFloor(0)}});
                     return congruence_domain(e, f) == d && congruence_domain(f, e) == d;
                   });
                 }});
    v.push_back({{"overlapping_pair", "Shannon with a partner meeting it on [3/2pi,2pi)", 1, {}},
                 [](Builder& b, const std::vector<long>&) {
                   auto [e, f] = overlapping_pair();
                   b.item.sets.emplace_back("E", e);
                   b.item.sets.emplace_back("F", f);
                   build_pair_checks(b, true);
                   b.expect("E meets F", [&] { return !(e & f).empty(); });
                 }});
    v.push_back({{"example2_family", "wavelet sets G, H inside E ∪ F of the overlapping pair", 1, {{"g", 2, 0, 4}}},
                 [](Builder& b, const std::vector<long>& p) {
                   const auto fam = example2_search(p[0]);
                   if (!fam) {
                     b.item.notes.push_back("not found at this grid resolution");
                     return;
                   }
                   for (const auto& [label, s] :
                        {std::pair{"E", fam->E}, std::pair{"F", fam->F}, std::pair{"G", fam->G}, std::pair{"H", fam->H}}) {
                     b.item.sets.emplace_back(label, s);
                   }
                   b.wavelet("G");
                   b.wavelet("H");
                   b.expect("G and H lie in E ∪ F", [&] {
                     const ExtSet u = fam->E | fam->F;
                     return fam->G.subset_of(u) && fam->H.subset_of(u);
                   });
                   b.expect("{E, F, G} is not an interpolation family",
                            [&] { return is_interpolation_family({fam->E, fam->F, fam->G}) == FamilyVerdict::kFalse; });
                   b.expect("{E, F, G, H} is an interpolation family of four maps", [&] {
                     const auto r = interpolation_family_report({fam->E, fam->F, fam->G, fam->H});
                     return r.verdict == FamilyVerdict::kTrue && r.distinct_maps == 4;
                   });
                 }});
    v.push_back({{"theorem4_pair", "domains equal but not an interpolation pair", 1, {}},
                 [](Builder& b, const std::vector<long>&) {
                   const auto t = theorem4_sets();
                   b.item.sets.emplace_back("E", t.E);
                   b.item.sets.emplace_back("F", t.F);
                   b.item.sets.emplace_back("G", t.lemma.G);
                   b.item.notes.push_back("G mode " + to_string(t.lemma.mode) + ", fixed point " +
                                          fixed_point(t.lemma.contraction).str());
                   build_pair_checks(b, false);
                   b.expect("domains of congruence are equal", [&] { return domains_equal(t.E, t.F); });
                   b.expect("G is an exact tail with fixed point 8pi/255", [&] {
                     return t.lemma.mode == Lemma5Mode::kTail && fixed_point(t.lemma.contraction) == P(8, 255);
                   });
                   b.expect("sigma^2 moves E1 = [33/16pi, 34/16pi) by +12pi", [&] {
                     const auto s = build(t.E, t.F);
                     const ExtSet e1 = I(P(33, 16), P(34, 16));
                     return compose(s, s).image(e1) == e1.translated({P(12)});
                   });
                 }});
    v.push_back({{"example7", "unbounded symmetric wavelet set truncated at depth N", 1, {{"N", 16, 1, 60}}},
                 [](Builder& b, const std::vector<long>& p) {
                   const auto x = example7(p[0]);
                   b.item.sets.emplace_back("W", x.W);
                   b.item.notes.push_back("per-side residual " + PiRational(x.residual).str());
                   b.expect("W equals its negation", [&] { return x.W.reflected({true}) == x.W; });
                   b.expect("dilation check passes", [&] { return is_dilation_generator(x.W).ok; });
                   b.expect("translation check: no overlap, gap of measure 2 * 2^-(N+1) pi", [&] {
                     const auto r = is_translation_generator(x.W);
                     const ExtSet side = I(P(1) - PiRational(x.residual), P(1));
                     return r.overlap.empty() && r.gap == (side | side.reflected({true}).translated({P(2)})) &&
                            r.gap.measure() == 2 * x.residual;
                   });
                 }});
    v.push_back({{"example8_G", "wavelet set inside 2E ∪ E ∪ E/2, not a pair with Shannon", 1, {}},
                 [](Builder& b, const std::vector<long>&) {
                   const ExtSet e = shannon_set();
                   b.item.sets.emplace_back("E", e);
                   b.item.sets.emplace_back("G", example8_G());
                   const ExtSet& g = b.item.set("G");
                   b.wavelet("G");
                   b.expect("G inside 2E ∪ E ∪ E/2", [&] { return g.subset_of(e.dilated(1) | e | e.dilated(-1)); });
                   b.expect("(E, G) is not an interpolation pair", [&] { return !is_interpolation_pair(e, g); });
                 }});
    v.push_back({{"example9_G", "wavelet set inside (E-2pi) ∪ E ∪ (E+2pi), not a pair with Shannon", 1, {}},
                 [](Builder& b, const std::vector<long>&) {
                   const ExtSet e = shannon_set();
                   b.item.sets.emplace_back("E", e);
                   b.item.sets.emplace_back("G", example9_G());
                   const ExtSet& g = b.item.set("G");
                   b.wavelet("G");
                   b.expect("G inside (E-2pi) ∪ E ∪ (E+2pi)",
                            [&] { return g.subset_of(e.translated({P(-2)}) | e | e.translated({P(2)})); });
                   b.expect("(E, G) is not an interpolation pair", [&] { return !is_interpolation_pair(e, g); });
                 }});
    v.push_back({{"example10", "the family G-(m,n) ∪ G+(l,m)", 1, {{"l", 1, 1, 20}, {"m", 1, 1, 20}, {"n", 1, 1, 20}}},
                 [](Builder& b, const std::vector<long>& p) {
                   const auto x = example10(p[0], p[1], p[2]);
                   b.item.sets.emplace_back("K", x.K);
                   b.item.sets.emplace_back("G_plus", x.G_plus);
                   b.item.sets.emplace_back("G_minus", x.G_minus);
                   b.wavelet("K");
                   b.expect("G+ matches its closed form",
                            [&] { return x.G_plus == example10_G_plus_closed_form(p[0], p[1]); });
                   b.expect("G- matches its closed form",
                            [&] { return x.G_minus == example10_G_minus_closed_form(p[1], p[2]); });
                 }});
    auto plane = [](const std::string& name, const std::string& summary, std::function<PlaneConstruction(long)> make,
                    std::vector<CatalogParam> params) {
      return Entry{{name, summary, 2, std::move(params)}, [make](Builder& b, const std::vector<long>& p) {
                     const auto c = make(p.empty() ? 0 : p[0]);
                     b.item.boxes.emplace_back("W", c.set);
                     for (std::size_t i = 0; i < c.pieces.size(); ++i) {
                       b.item.boxes.emplace_back("W" + std::to_string(i + 1), c.pieces[i]);
                     }
                     b.wavelet2("W");
                   }};
    };
    v.push_back(plane("four_corners", "four corners set", [](long) { return four_corners_construction(); }, {}));
    v.push_back(plane("wedding_cake", "wedding cake set", [](long) { return wedding_cake_construction(); }, {}));
    v.push_back(plane("sw_set", "Lemma 5 pieces in the four quadrants plus the block B", [](long) { return sw_construction(); }, {}));
    v.push_back(plane("pine_tree", "staircase pine tree at cell width pi / 2^g",
                      [](long g) { return pine_tree_construction(g); }, {{"g", 6, 1, 12}}));
    return v;
  }();
  return all;
}

}  // namespace

}  // namespace wavesets

namespace wavesets {

bool CatalogItem::ok() const {
  return std::all_of(expectations.begin(), expectations.end(), [](const Expectation& e) { return e.passed; });
}

const ExtSet& CatalogItem::set(const std::string& label) const {
  for (const auto& [k, v] : sets) {
    if (k == label) return v;
  }
  throw DomainError("catalog item " + name + " has no set " + label);
}

const ExtBox& CatalogItem::box(const std::string& label) const {
  for (const auto& [k, v] : boxes) {
    if (k == label) return v;
  }
  throw DomainError("catalog item " + name + " has no set " + label);
}

const std::vector<CatalogInfo>& catalog_list() {
  static const std::vector<CatalogInfo> infos = [] {
    std::vector<CatalogInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CatalogInfo& catalog_info(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.info.name == name) return e.info;
  }
  throw DomainError("unknown catalog entry: " + name);
}

CatalogItem catalog_get(const std::string& name, const std::vector<long>& params, bool verify) {
  const Entry* entry = nullptr;
  for (const auto& e : entries()) {
    if (e.info.name == name) entry = &e;
  }
  if (entry == nullptr) throw DomainError("unknown catalog entry: " + name);
  const auto& declared = entry->info.params;
  if (params.size() > declared.size()) {
    throw DomainError(name + " takes " + std::to_string(declared.size()) + " parameter(s)");
  }
  std::vector<long> full;
  for (std::size_t i = 0; i < declared.size(); ++i) {
    const long v = i < params.size() ? params[i] : declared[i].default_value;
    if (v < declared[i].min_value || v > declared[i].max_value) {
      throw DomainError(name + ": " + declared[i].name + " must lie in [" + std::to_string(declared[i].min_value) + ", " +
                        std::to_string(declared[i].max_value) + "]");
    }
    full.push_back(v);
  }
  CatalogItem item;
  item.name = name;
  item.params = full;
  Builder b{item, verify};
  entry->recipe(b, full);
  return item;
}

}  // namespace wavesets
