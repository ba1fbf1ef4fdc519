#pragma once

#include <json.hpp>

#include "wavesets/campaign.hpp"
#include "wavesets/catalog.hpp"

namespace wavesets {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// "p/q", or "p" for integers.
std::string rational_string(const Rational& q);

/// {"expr": literal, "measure": coefficient of pi^D}.
Json set_json(const ExtSet& s);
Json set_json(const ExtBox& s);

Json to_json(const GeneratorReport& r);
Json to_json(const GeneratorReport2& r);
Json to_json(const WaveletReport& r);
Json to_json(const WaveletReport2& r);
/// {"steps": [{base_lo, base_hi, floor}...], "tails": [{base, floor}...]}; floors "-inf", "+inf" or an integer.
Json to_json(const SaturatedDyadicSet& d);
Json to_json(const Quadruple& q);
Json to_json(const InterpolationMap& m);
Json to_json(const PairVerdict& v);
Json to_json(const Lemma5Validation& v);
Json to_json(const Lemma5ValidationT<BoxSet>& v);
Json to_json(const Lemma5Result& r);
Json to_json(const Lemma5Result2& r);
Json to_json(const FuzzFinding& f);
Json to_json(const CampaignSummary& s);
Json to_json(const CatalogItem& item);
Json to_json(const CatalogInfo& info);

/// Wraps a payload as {"schema": 1, "command": name, ...payload}.
Json envelope(const std::string& command, const Json& payload);

}  // namespace wavesets
