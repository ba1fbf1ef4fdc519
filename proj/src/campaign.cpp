#include "wavesets/campaign.hpp"

#include <functional>

#include "wavesets/catalog.hpp"
#include "wavesets/setexpr.hpp"

namespace wavesets {

namespace {

constexpr std::uint64_t kSecondStream = 0x9e3779b97f4a7c15ULL;

using Failing = std::function<bool(const ExtSet&)>;

// Greedy one-move deletion until no single deletion keeps the failure.
std::vector<FuzzMove> minimize(std::vector<FuzzMove> plan, const ExtSet& base, const Failing& failing) {
  bool progress = true;
  while (progress && !plan.empty()) {
    progress = false;
    for (std::size_t i = 0; i < plan.size(); ++i) {
      auto shorter = plan;
      shorter.erase(shorter.begin() + static_cast<long>(i));
      if (failing(apply_plan(shorter, base))) {
        plan = std::move(shorter);
        progress = true;
        break;
      }
    }
  }
  return plan;
}

}  // namespace

PairVerdict pair_verdict(const ExtSet& e, const ExtSet& f) {
  PairVerdict v;
  v.interpolation_pair = is_interpolation_pair(e, f);
  v.theorem1 = theorem1_check(e, f);
  v.theorem3_i = theorem3_pair_criterion(e, f);
  v.domains_equal = saturated_equal(congruence_domain(e, f), congruence_domain(f, e));
  v.theorem3_ii = theorem3_domain_criterion(e, f);
  return v;
}

std::string to_string(FuzzBase b) { return b == FuzzBase::kShannon ? "shannon" : "fuzzed"; }

FuzzBase parse_fuzz_base(const std::string& text) {
  if (text == "shannon") return FuzzBase::kShannon;
  if (text == "fuzzed") return FuzzBase::kFuzzed;
  throw DomainError("unknown fuzz base '" + text + "' (expected shannon or fuzzed)");
}

std::pair<ExtSet, ExtSet> fuzz_pair(std::uint64_t seed, FuzzBase base, const FuzzParams& p) {
  ExtSet e = base == FuzzBase::kShannon ? shannon_set() : random_wavelet_set(seed ^ kSecondStream, p);
  return {std::move(e), random_wavelet_set(seed, p)};
}

CampaignSummary fuzz_campaign(std::uint64_t first_seed, std::size_t count, FuzzBase base, const FuzzParams& p) {
  CampaignSummary out;
  out.first_seed = first_seed;
  out.seeds = count;
  out.base = base;
  const ExtSet shannon = shannon_set();
  for (std::uint64_t seed = first_seed; seed < first_seed + count; ++seed) {
    const auto plan = random_plan(seed, p);
    const ExtSet f = apply_plan(plan, shannon);
    const ExtSet e = base == FuzzBase::kShannon ? shannon : random_wavelet_set(seed ^ kSecondStream, p);

    auto report = [&](const std::string& property, const Failing& failing) {
      FuzzFinding finding;
      finding.seed = seed;
      finding.property = property;
      finding.plan = minimize(plan, shannon, failing);
      finding.E = e;
      finding.F = apply_plan(finding.plan, shannon);
      finding.verdict = pair_verdict(e, finding.F);
      out.findings.push_back(std::move(finding));
    };

    const Failing not_wavelet = [](const ExtSet& s) { return !is_wavelet_set(s).ok; };
    if (not_wavelet(f)) {
      ++out.wavelet_failures;
      report("wavelet", not_wavelet);
      continue;
    }
    const Failing no_roundtrip = [](const ExtSet& s) { return !(parse_set(format_set(s)) == s); };
    if (no_roundtrip(f)) {
      ++out.roundtrip_failures;
      report("roundtrip", no_roundtrip);
    }

    const PairVerdict v = pair_verdict(e, f);
    out.interpolation_pairs += v.interpolation_pair;
    out.domains_equal += v.domains_equal;
    if (!v.consistent()) {
      ++out.theorem_discrepancies;
      report("consistency", [&](const ExtSet& s) { return !pair_verdict(e, s).consistent(); });
    }
    if (base == FuzzBase::kShannon && !v.proposition6()) {
      ++out.proposition6_violations;
      report("proposition6", [&](const ExtSet& s) { return !pair_verdict(e, s).proposition6(); });
    }
    if (v.interpolation_pair && !v.domains_equal) {
      ++out.pair_without_equal_domains;
      report("pair_implies_domains", [&](const ExtSet& s) {
        const auto w = pair_verdict(e, s);
        return w.interpolation_pair && !w.domains_equal;
      });
    }
  }
  return out;
}

}  // namespace wavesets
