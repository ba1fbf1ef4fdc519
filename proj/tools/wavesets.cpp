#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wavesets/render.hpp"
#include "wavesets/report.hpp"
#include "wavesets/setexpr.hpp"

using namespace wavesets;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Bad input that is not a set literal (unknown name, malformed number, bad flag value).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_planar(const std::string& text) { return text.find('x') != std::string::npos; }

ExtSet line_set(const std::string& text) {
  if (is_planar(text)) throw UsageError("expected a set on the line, got a planar literal: " + text);
  return parse_set(text);
}

Rational parse_rational(const std::string& text) {
  // "p/q", an integer, or "2^k".
  try {
    if (text.rfind("2^", 0) == 0) return mul_pow2(Rational(1), std::stol(text.substr(2)));
    Rational q(text);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return q;
  } catch (const std::exception&) {
    throw UsageError("malformed rational '" + text + "' (expected p/q or 2^k)");
  }
}

std::vector<long> parse_index(const std::string& text) {
  std::vector<long> out;
  std::size_t pos = 0;
  try {
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      out.push_back(std::stol(text.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } catch (const std::exception&) {
    throw UsageError("malformed lattice index '" + text + "'");
  }
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_text(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

std::vector<long> catalog_params(const std::vector<std::string>& raw) {
  std::vector<long> out;
  for (const auto& s : raw) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw UsageError("catalog parameter '" + s + "' is not an integer");
    }
  }
  return out;
}

// Unknown names and out-of-range parameters are usage errors here.
CatalogItem catalog_entry_checked(const std::string& name, const std::vector<std::string>& raw, bool verify) {
  const auto params = catalog_params(raw);
  try {
    catalog_info(name);
    return catalog_get(name, params, verify);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

template <class R>
LatticeIndex<R::kDim> lattice(const std::vector<long>& v, const std::string& name) {
  if constexpr (R::kDim == 1) {
    if (v.size() != 1) throw UsageError(name + " must be one integer");
    return v[0];
  } else {
    if (v.size() != 2) throw UsageError(name + " must be two integers a,b");
    return {v[0], v[1]};
  }
}

struct Lemma5Args {
  std::string e;
  std::string f;
  std::string n1 = "0";
  std::string n2 = "0";
  long k1 = 0;
  long k2 = 0;
  std::string truncate;
};

template <class R>
int run_lemma5(const Lemma5Args& a, const ExtendedSet<R>& e, const ExtendedSet<R>& f) {
  Lemma5ConfigT<R> c{e, f, lattice<R>(parse_index(a.n1), "--n1"), lattice<R>(parse_index(a.n2), "--n2"), a.k1, a.k2};
  const auto v = validate(c);
  if (!v.ok) {
    emit(envelope("lemma5", Json{{"ok", false}, {"validation", to_json(v)}}));
    return kFailed;
  }
  std::optional<Rational> eps;
  if (!a.truncate.empty()) eps = parse_rational(a.truncate);
  const auto r = lemma5(c, eps);
  emit(envelope("lemma5", Json{{"ok", true}, {"result", to_json(r)}}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dyadic wavelet sets: checks, interpolation maps, congruence domains and constructions."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wavesets 1.0");

  std::string expr;
  auto* check = app.add_subcommand("check", "Wavelet-set report for a set literal");
  check->add_option("set", expr, "Set literal, on the line or in the plane")->required();

  std::string e_text;
  std::string f_text;
  std::string eval_at;
  std::string image_of;
  bool square = false;
  auto* sigma = app.add_subcommand("sigma", "Interpolation map from E to F");
  sigma->add_option("E", e_text)->required();
  sigma->add_option("F", f_text)->required();
  auto* o_eval = sigma->add_option("--eval", eval_at, "Evaluate at a point, e.g. 33/16pi");
  auto* o_image = sigma->add_option("--image", image_of, "Image of a set literal");
  auto* o_square = sigma->add_flag("--square", square, "sigma composed with itself");
  o_eval->excludes(o_image)->excludes(o_square);
  o_image->excludes(o_square);

  auto* pair = app.add_subcommand("pair", "Interpolation pair verdicts with the cross-equalities asserted");
  pair->add_option("E", e_text)->required();
  pair->add_option("F", f_text)->required();

  auto* domain = app.add_subcommand("domain", "Congruence domain of sigma from E to F");
  domain->add_option("E", e_text)->required();
  domain->add_option("F", f_text)->required();

  Lemma5Args l5;
  auto* lem = app.add_subcommand("lemma5", "Run the Lemma 5 construction");
  lem->add_option("--E", l5.e, "Set E")->required();
  lem->add_option("--F", l5.f, "Set F")->required();
  lem->add_option("--n1", l5.n1, "Translation index (a or a,b)")->required();
  lem->add_option("--n2", l5.n2, "Translation index (a or a,b)")->required();
  lem->add_option("--k1", l5.k1)->required();
  lem->add_option("--k2", l5.k2)->required();
  lem->add_option("--truncate", l5.truncate, "Drop tails below this measure (p/q or 2^k, units of pi^D)");

  auto* cat = app.add_subcommand("catalog", "Named constructions");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries");
  std::string cat_name;
  std::vector<std::string> cat_raw;
  bool no_verify = false;
  auto* cat_get = cat->add_subcommand("get", "Build an entry and check its expectations");
  cat_get->add_option("name", cat_name)->required();
  cat_get->add_option("params", cat_raw, "Integer parameters in declared order");
  cat_get->add_flag("--no-verify", no_verify, "Skip the expectation checks");

  std::size_t seeds = 100;
  std::uint64_t first_seed = 0;
  std::string base = "shannon";
  FuzzParams fp;
  auto* fuzz = app.add_subcommand("fuzz", "Randomized pair campaign");
  fuzz->add_option("--seeds", seeds, "Number of seeds")->required();
  fuzz->add_option("--first-seed", first_seed);
  fuzz->add_option("--base", base, "shannon or fuzzed")->check(CLI::IsMember({"shannon", "fuzzed"}));
  fuzz->add_option("--cycle-moves", fp.cycle_moves)->check(CLI::Range(0, 16));
  fuzz->add_option("--lemma5-moves", fp.lemma5_moves)->check(CLI::Range(0, 8));
  fuzz->add_option("--grid", fp.grid)->check(CLI::Range(1, 8));

  std::vector<std::string> rows;
  std::string catalog_entry;
  std::vector<std::string> entry_raw;
  std::string out;
  bool arrows = false;
  auto* r1 = app.add_subcommand("render1d", "SVG of stacked number lines");
  r1->add_option("--row", rows, "label=set literal (repeatable)");
  r1->add_option("--catalog", catalog_entry, "Draw the sets of a catalog entry");
  r1->add_option("--param", entry_raw, "Catalog parameters");
  r1->add_flag("--arrows", arrows, "Draw sigma from the first row to the second");
  r1->add_option("--out", out, "Output file (default stdout)");

  std::string plane_expr;
  std::string label;
  auto* r2 = app.add_subcommand("render2d", "SVG of a planar set");
  r2->add_option("set", plane_expr, "Planar set literal");
  r2->add_option("--catalog", catalog_entry, "Catalog entry");
  r2->add_option("--param", entry_raw, "Catalog parameters");
  r2->add_option("--label", label, "Set label within the entry (default: first)");
  r2->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) {
      if (is_planar(expr)) {
        const auto r = is_wavelet_set_2d(parse_box_set(expr));
        emit(envelope("check", to_json(r)));
        return r.ok ? kOk : kFailed;
      }
      const auto r = is_wavelet_set(parse_set(expr));
      emit(envelope("check", to_json(r)));
      return r.ok ? kOk : kFailed;
    }

    if (*sigma) {
      const ExtSet e = line_set(e_text);
      const ExtSet f = line_set(f_text);
      const auto m = build(e, f);
      if (!eval_at.empty()) {
        const auto v = m.evaluate(parse_pirat(eval_at));
        emit(envelope("sigma", Json{{"at", parse_pirat(eval_at).str()}, {"value", v ? Json(v->str()) : Json()}}));
      } else if (!image_of.empty()) {
        emit(envelope("sigma", Json{{"of", set_json(line_set(image_of))}, {"image", set_json(m.image(line_set(image_of)))}}));
      } else if (square) {
        const auto sq = compose(m, m);
        Json pieces = Json::array();
        for (const auto& p : sq.pieces()) pieces.push_back({{"part", set_json(p.part)}, {"shift", p.shift.str()}});
        emit(envelope("sigma", Json{{"square", pieces}, {"is_identity", sq.is_identity()}}));
      } else {
        emit(envelope("sigma", to_json(m)));
      }
      return kOk;
    }

    if (*pair) {
      const ExtSet e = line_set(e_text);
      const ExtSet f = line_set(f_text);
      const auto v = pair_verdict(e, f);
      Json j = to_json(v);
      j["consistent"] = v.consistent();
      if (!v.consistent()) {
        const auto t3 = theorem3_pair_report(e, f);
        Json cells = Json::array();
        for (const auto& q : t3.violations) cells.push_back(to_json(q));
        j["witness"] = Json{{"map", to_json(build(e, f))}, {"theorem3_violations", cells}};
      }
      emit(envelope("pair", j));
      return v.consistent() ? kOk : kFailed;
    }

    if (*domain) {
      const ExtSet e = line_set(e_text);
      const ExtSet f = line_set(f_text);
      const auto d = congruence_domain(e, f);
      const auto back = congruence_domain(f, e);
      emit(envelope("domain", Json{{"domain", to_json(d)}, {"reverse", to_json(back)}, {"equal", d == back}}));
      return kOk;
    }

    if (*lem) {
      if (is_planar(l5.e) || is_planar(l5.f)) return run_lemma5(l5, parse_box_set(l5.e), parse_box_set(l5.f));
      return run_lemma5(l5, parse_set(l5.e), parse_set(l5.f));
    }

    if (*cat_list) {
      Json entries = Json::array();
      for (const auto& info : catalog_list()) entries.push_back(to_json(info));
      emit(envelope("catalog list", Json{{"entries", entries}}));
      return kOk;
    }

    if (*cat_get) {
      const auto item = catalog_entry_checked(cat_name, cat_raw, !no_verify);
      emit(envelope("catalog get", to_json(item)));
      return item.ok() ? kOk : kFailed;
    }

    if (*fuzz) {
      const auto s = fuzz_campaign(first_seed, seeds, parse_fuzz_base(base), fp);
      emit(envelope("fuzz", to_json(s)));
      return s.ok() ? kOk : kFailed;
    }

    if (*r1) {
      std::vector<std::pair<std::string, ExtSet>> data;
      if (!catalog_entry.empty()) {
        data = catalog_entry_checked(catalog_entry, entry_raw, false).sets;
        if (data.empty()) throw UsageError(catalog_entry + " is planar; use render2d");
      }
      for (const auto& r : rows) {
        const auto eq = r.find('=');
        if (eq == std::string::npos) throw UsageError("--row expects label=set, got '" + r + "'");
        data.emplace_back(r.substr(0, eq), line_set(r.substr(eq + 1)));
      }
      if (data.empty()) throw UsageError("render1d needs --row or --catalog");
      std::optional<InterpolationMap> m;
      if (arrows) {
        if (data.size() < 2) throw UsageError("--arrows needs two rows");
        m = build(data[0].second, data[1].second);
      }
      write_text(render_1d(data, m ? &*m : nullptr), out);
      return kOk;
    }

    if (*r2) {
      ExtBox s;
      if (!catalog_entry.empty()) {
        const auto item = catalog_entry_checked(catalog_entry, entry_raw, false);
        if (item.boxes.empty()) throw UsageError(catalog_entry + " has no planar sets; use render1d");
        s = label.empty() ? item.boxes.front().second : item.box(label);
      } else if (!plane_expr.empty()) {
        s = parse_box_set(plane_expr);
      } else {
        throw UsageError("render2d needs a set literal or --catalog");
      }
      write_text(render_2d(s), out);
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
