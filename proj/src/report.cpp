#include "wavesets/report.hpp"

#include "wavesets/setexpr.hpp"

namespace wavesets {

namespace {

Json index_json(long n) { return n; }
Json index_json(const std::array<long, 2>& n) { return Json::array({n[0], n[1]}); }

Json point_json(const Point<1>& p) { return p[0].str(); }
Json point_json(const Point<2>& p) { return Json::array({p[0].str(), p[1].str()}); }

template <class R>
Json generator_json(const GeneratorReportT<R>& r) {
  return Json{{"ok", r.ok}, {"gap", set_json(r.gap)}, {"overlap", set_json(r.overlap)}, {"divergent", r.divergent}};
}

template <class R>
Json wavelet_json(const WaveletReportT<R>& r) {
  return Json{{"is_wavelet_set", r.ok},
              {"translation", to_json(r.translation)},
              {"dilation", to_json(r.dilation)},
              {"measure", rational_string(r.measure)}};
}

template <class R>
Json contraction_json(const AffineContraction<R::kDim>& s) {
  return Json{{"lambda_exp", s.lambda_exp}, {"shift", point_json(s.shift)}, {"fixed_point", point_json(s.fixed_point())}};
}

template <class R>
Json lemma5_json(const Lemma5ResultT<R>& r) {
  Json to_e = Json::array();
  for (const auto& p : r.to_E) to_e.push_back({{"part", set_json(p.part)}, {"n", index_json(p.n)}});
  Json to_f = Json::array();
  for (const auto& p : r.to_F) to_f.push_back({{"part", set_json(p.part)}, {"k", p.k}});
  return Json{{"G", set_json(r.G)},
              {"mode", to_string(r.mode)},
              {"defect", rational_string(r.defect)},
              {"contraction", contraction_json<R>(r.contraction)},
              {"G0", set_json(r.G0)},
              {"orbit", set_json(r.orbit)},
              {"translation_witness", to_e},
              {"dilation_witness", to_f}};
}

}  // namespace

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_num().get_str() + "/" + c.get_den().get_str();
}

Json set_json(const ExtSet& s) { return Json{{"expr", format_set(s)}, {"measure", rational_string(s.measure())}}; }
Json set_json(const ExtBox& s) { return Json{{"expr", format_set(s)}, {"measure", rational_string(s.measure())}}; }

Json to_json(const GeneratorReport& r) { return generator_json(r); }
Json to_json(const GeneratorReport2& r) { return generator_json(r); }
Json to_json(const WaveletReport& r) { return wavelet_json(r); }
Json to_json(const WaveletReport2& r) { return wavelet_json(r); }

Json to_json(const SaturatedDyadicSet& d) {
  Json steps = Json::array();
  Json tails = Json::array();
  for (const auto& st : d.steps()) {
    for (const auto& iv : st.base.finite().parts()) {
      steps.push_back({{"base_lo", iv.lo.str()}, {"base_hi", iv.hi.str()}, {"floor", st.floor.str()}});
    }
    if (!st.base.germs().empty()) {
      tails.push_back({{"base", format_set(ExtSet::from_parts(IntervalSet{}, st.base.germs()))}, {"floor", st.floor.str()}});
    }
  }
  return Json{{"steps", steps}, {"tails", tails}};
}

Json to_json(const Quadruple& q) {
  return Json{{"n", q.n}, {"k", q.k}, {"m", q.m}, {"l", q.l}, {"cell", set_json(q.cell)}};
}

Json to_json(const InterpolationMap& m) {
  Json pieces = Json::array();
  for (const auto& p : m.pieces()) pieces.push_back({{"part", set_json(p.part)}, {"n", p.n}});
  Json normal = Json::array();
  for (const auto& p : m.map().pieces()) normal.push_back({{"part", set_json(p.part)}, {"shift", p.shift.str()}});
  return Json{{"source", set_json(m.source())}, {"target", set_json(m.target())}, {"pieces", pieces},
              {"normal_form", normal}};
}

Json to_json(const PairVerdict& v) {
  return Json{{"interpolation_pair", v.interpolation_pair},
              {"theorem1", v.theorem1},
              {"theorem3_i", v.theorem3_i},
              {"domains_equal", v.domains_equal},
              {"theorem3_ii", v.theorem3_ii}};
}

template <class R>
Json validation_json(const Lemma5ValidationT<R>& v) {
  Json j{{"ok", v.ok},
         {"positive_measure", v.positive_measure},
         {"exponents_ordered", v.exponents_ordered},
         {"outside_translate", set_json(v.outside_translate)},
         {"outside_dilate", set_json(v.outside_dilate)},
         {"overlap", set_json(v.overlap)}};
  if (!v.ok) j["message"] = v.message();
  return j;
}

Json to_json(const Lemma5Validation& v) { return validation_json(v); }
Json to_json(const Lemma5ValidationT<BoxSet>& v) { return validation_json(v); }

Json to_json(const Lemma5Result& r) { return lemma5_json(r); }
Json to_json(const Lemma5Result2& r) { return lemma5_json(r); }

Json to_json(const FuzzFinding& f) {
  Json plan = Json::array();
  for (const auto& m : f.plan) plan.push_back(m.str());
  return Json{{"seed", f.seed},         {"property", f.property}, {"plan", plan},
              {"E", set_json(f.E)},     {"F", set_json(f.F)},     {"verdict", to_json(f.verdict)}};
}

Json to_json(const CampaignSummary& s) {
  Json findings = Json::array();
  for (const auto& f : s.findings) findings.push_back(to_json(f));
  return Json{{"ok", s.ok()},
              {"first_seed", s.first_seed},
              {"seeds", s.seeds},
              {"base", to_string(s.base)},
              {"wavelet_failures", s.wavelet_failures},
              {"roundtrip_failures", s.roundtrip_failures},
              {"interpolation_pairs", s.interpolation_pairs},
              {"domains_equal", s.domains_equal},
              {"theorem_discrepancies", s.theorem_discrepancies},
              {"proposition6_violations", s.proposition6_violations},
              {"pair_without_equal_domains", s.pair_without_equal_domains},
              {"counterexamples", findings}};
}

Json to_json(const CatalogInfo& info) {
  Json params = Json::array();
  for (const auto& p : info.params) {
    params.push_back({{"name", p.name}, {"default", p.default_value}, {"min", p.min_value}, {"max", p.max_value}});
  }
  return Json{{"name", info.name}, {"summary", info.summary}, {"dim", info.dim}, {"params", params}};
}

Json to_json(const CatalogItem& item) {
  Json sets = Json::object();
  for (const auto& [label, s] : item.sets) sets[label] = set_json(s);
  for (const auto& [label, s] : item.boxes) sets[label] = set_json(s);
  Json exp = Json::array();
  for (const auto& e : item.expectations) exp.push_back({{"what", e.what}, {"passed", e.passed}});
  return Json{{"name", item.name}, {"params", item.params}, {"ok", item.ok()}, {"sets", sets},
              {"expectations", exp},   {"notes", item.notes}};
}

Json envelope(const std::string& command, const Json& payload) {
  Json out{{"schema", kSchemaVersion}, {"command", command}};
  for (const auto& [k, v] : payload.items()) out[k] = v;
  return out;
}

}  // namespace wavesets
