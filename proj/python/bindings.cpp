#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavesets/render.hpp"
#include "wavesets/report.hpp"
#include "wavesets/setexpr.hpp"

namespace py = pybind11;
using namespace wavesets;

namespace {

bool planar(const std::string& text) { return text.find('x') != std::string::npos; }

ExtSet line(const std::string& text) {
  if (planar(text)) throw DomainError("expected a set on the line: " + text);
  return parse_set(text);
}

// Dicts go through JSON text so the Python side sees exactly the CLI schema.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

template <class R>
LatticeIndex<R::kDim> index_of(const std::vector<long>& v) {
  if constexpr (R::kDim == 1) {
    if (v.size() != 1) throw DomainError("translation index must have one entry");
    return v[0];
  } else {
    if (v.size() != 2) throw DomainError("translation index must have two entries");
    return {v[0], v[1]};
  }
}

template <class R>
py::object lemma5_py(const ExtendedSet<R>& e, const ExtendedSet<R>& f, const std::vector<long>& n1,
                     const std::vector<long>& n2, long k1, long k2, const std::optional<std::string>& eps) {
  const Lemma5ConfigT<R> c{e, f, index_of<R>(n1), index_of<R>(n2), k1, k2};
  const auto v = validate(c);
  if (!v.ok) return to_py(envelope("lemma5", Json{{"ok", false}, {"validation", to_json(v)}}));
  std::optional<Rational> q;
  if (eps) {
    q = Rational(*eps);
    q->canonicalize();
  }
  return to_py(envelope("lemma5", Json{{"ok", true}, {"result", to_json(lemma5(c, q))}}));
}

}  // namespace

PYBIND11_MODULE(_wavesets, m) {
  m.doc() = "Exact dyadic wavelet sets";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = py::reinterpret_borrow<py::object>(parse_error.ptr())(e.what());
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      err.attr("token") = e.token();
      PyErr_SetObject(parse_error.ptr(), err.ptr());
    }
  });
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.attr("SCHEMA") = kSchemaVersion;

  m.def(
      "canonical",
      [](const std::string& text) { return planar(text) ? format_set(parse_box_set(text)) : format_set(parse_set(text)); },
      "Canonical literal of a set", py::arg("expr"));
  m.def(
      "measure",
      [](const std::string& text) {
        return rational_string(planar(text) ? parse_box_set(text).measure() : parse_set(text).measure());
      },
      "Measure as a p/q coefficient of pi^D", py::arg("expr"));
  m.def(
      "check",
      [](const std::string& text) {
        return planar(text) ? to_py(envelope("check", to_json(is_wavelet_set_2d(parse_box_set(text)))))
                            : to_py(envelope("check", to_json(is_wavelet_set(parse_set(text)))));
      },
      py::arg("expr"));
  m.def(
      "pair",
      [](const std::string& e, const std::string& f) {
        const auto v = pair_verdict(line(e), line(f));
        Json j = to_json(v);
        j["consistent"] = v.consistent();
        return to_py(envelope("pair", j));
      },
      py::arg("E"), py::arg("F"));
  m.def(
      "domain",
      [](const std::string& e, const std::string& f) {
        const auto d = congruence_domain(line(e), line(f));
        const auto back = congruence_domain(line(f), line(e));
        return to_py(envelope("domain", Json{{"domain", to_json(d)}, {"reverse", to_json(back)}, {"equal", d == back}}));
      },
      py::arg("E"), py::arg("F"));
  m.def(
      "sigma",
      [](const std::string& e, const std::string& f) { return to_py(envelope("sigma", to_json(build(line(e), line(f))))); },
      py::arg("E"), py::arg("F"));
  m.def(
      "sigma_eval",
      [](const std::string& e, const std::string& f, const std::string& s) -> std::optional<std::string> {
        const auto v = build(line(e), line(f)).evaluate(parse_pirat(s));
        if (!v) return std::nullopt;
        return v->str();
      },
      "sigma(s) as a pi-literal, or None off the map's domain", py::arg("E"), py::arg("F"), py::arg("s"));
  m.def(
      "sigma_image",
      [](const std::string& e, const std::string& f, const std::string& s) {
        return format_set(build(line(e), line(f)).image(line(s)));
      },
      py::arg("E"), py::arg("F"), py::arg("S"));
  m.def(
      "lemma5",
      [](const std::string& e, const std::string& f, const std::vector<long>& n1, const std::vector<long>& n2, long k1,
         long k2, const std::optional<std::string>& eps) {
        if (planar(e) || planar(f)) return lemma5_py(parse_box_set(e), parse_box_set(f), n1, n2, k1, k2, eps);
        return lemma5_py(parse_set(e), parse_set(f), n1, n2, k1, k2, eps);
      },
      py::arg("E"), py::arg("F"), py::arg("n1"), py::arg("n2"), py::arg("k1"), py::arg("k2"),
      py::arg("truncate") = py::none());
  m.def("catalog_list", [] {
    Json entries = Json::array();
    for (const auto& info : catalog_list()) entries.push_back(to_json(info));
    return to_py(entries);
  });
  m.def(
      "catalog_get",
      [](const std::string& name, const std::vector<long>& params, bool verify) {
        return to_py(envelope("catalog get", to_json(catalog_get(name, params, verify))));
      },
      py::arg("name"), py::arg("params") = std::vector<long>{}, py::arg("verify") = true);
  m.def(
      "fuzz",
      [](std::size_t seeds, std::uint64_t first_seed, const std::string& base) {
        const auto b = parse_fuzz_base(base);
        CampaignSummary s;
        {
          py::gil_scoped_release release;
          s = fuzz_campaign(first_seed, seeds, b);
        }
        return to_py(envelope("fuzz", to_json(s)));
      },
      py::arg("seeds"), py::arg("first_seed") = 0, py::arg("base") = "shannon");
  m.def(
      "render_1d",
      [](const std::vector<std::pair<std::string, std::string>>& rows, bool arrows) {
        std::vector<std::pair<std::string, ExtSet>> data;
        for (const auto& [label, text] : rows) data.emplace_back(label, line(text));
        std::optional<InterpolationMap> m;
        if (arrows) {
          if (data.size() < 2) throw DomainError("arrows need two rows");
          m = build(data[0].second, data[1].second);
        }
        return render_1d(data, m ? &*m : nullptr);
      },
      py::arg("rows"), py::arg("arrows") = false);
  m.def(
      "render_2d", [](const std::string& text) { return render_2d(parse_box_set(text)); }, py::arg("expr"));
}
