#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavesets/domains.hpp"
#include "wavesets/plane.hpp"

namespace wavesets {

struct CatalogParam {
  std::string name;
  long default_value;
  long min_value;
  long max_value;
};

struct CatalogInfo {
  std::string name;
  std::string summary;
  int dim;  // 1 or 2
  std::vector<CatalogParam> params;
};

struct Expectation {
  std::string what;
  bool passed;
};

/// A built entry: named sets (1D or 2D), the declared expectations and whether each held.
struct CatalogItem {
  std::string name;
  std::vector<long> params;
  std::vector<std::pair<std::string, ExtSet>> sets;
  std::vector<std::pair<std::string, ExtBox>> boxes;
  std::vector<Expectation> expectations;
  std::vector<std::string> notes;

  bool ok() const;
  const ExtSet& set(const std::string& label) const;
  const ExtBox& box(const std::string& label) const;
};

const std::vector<CatalogInfo>& catalog_list();
const CatalogInfo& catalog_info(const std::string& name);

/// Builds the entry. Missing params take their defaults; out-of-range params raise DomainError.
/// With verify, every declared expectation is checked and recorded.
CatalogItem catalog_get(const std::string& name, const std::vector<long>& params = {}, bool verify = true);

// Direct builders.

ExtSet shannon_set();
std::pair<ExtSet, ExtSet> meyer_pair();
/// Shannon together with a wavelet set that meets it and forms an interpolation pair with it.
std::pair<ExtSet, ExtSet> overlapping_pair();

struct Theorem4Sets {
  ExtSet E;
  ExtSet F;
  Lemma5Config config;
  Lemma5Result lemma;
};
Theorem4Sets theorem4_sets();

struct Example7Sets {
  ExtSet W;              // symmetric truncated set
  ExtSet W_plus;         // G_0 together with G_1..G_N
  Rational residual;     // per-side translation gap, coefficient of pi
  Lemma5Config config;
};
Example7Sets example7(long n = 16);

ExtSet example8_G();
ExtSet example9_G();

struct Example10Sets {
  ExtSet G_plus;
  ExtSet G_minus;
  ExtSet K;
  Lemma5Mode plus_mode = Lemma5Mode::kTelescoped;
  Lemma5Mode minus_mode = Lemma5Mode::kTelescoped;
};
Example10Sets example10(long l, long m, long n);
ExtSet example10_G_plus_closed_form(long l, long m);
ExtSet example10_G_minus_closed_form(long m, long n);

/// {E, F, G, H} with G inside E ∪ F found by exhaustive search over cells of width pi / 2^g.
struct Example2Family {
  ExtSet E;
  ExtSet F;
  ExtSet G;
  ExtSet H;
};
std::optional<Example2Family> example2_search(long g);

}  // namespace wavesets
