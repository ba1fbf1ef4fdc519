#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavesets/construct.hpp"
#include "wavesets/domains.hpp"

namespace wavesets {

/// The five pair verdicts. Theorem 1 must agree with the pair check, Theorem 3(ii) with domain equality.
struct PairVerdict {
  bool interpolation_pair = false;
  bool theorem1 = false;
  bool theorem3_i = false;
  bool domains_equal = false;
  bool theorem3_ii = false;

  bool consistent() const {
    return theorem1 == interpolation_pair && theorem3_i == interpolation_pair && theorem3_ii == domains_equal;
  }
  /// Equal domains force a pair when E is Shannon.
  bool proposition6() const { return !domains_equal || interpolation_pair; }
};

PairVerdict pair_verdict(const ExtSet& e, const ExtSet& f);

enum class FuzzBase { kShannon, kFuzzed };

std::string to_string(FuzzBase b);
FuzzBase parse_fuzz_base(const std::string& text);

struct FuzzFinding {
  std::uint64_t seed = 0;
  std::string property;
  std::vector<FuzzMove> plan;  // minimized moves producing F from Shannon
  ExtSet E;
  ExtSet F;
  PairVerdict verdict;
};

struct CampaignSummary {
  std::uint64_t first_seed = 0;
  std::size_t seeds = 0;
  FuzzBase base = FuzzBase::kShannon;
  std::size_t wavelet_failures = 0;
  std::size_t roundtrip_failures = 0;
  std::size_t interpolation_pairs = 0;
  std::size_t domains_equal = 0;
  std::size_t theorem_discrepancies = 0;   // verdicts that fail consistent()
  std::size_t proposition6_violations = 0;  // Shannon base only
  std::size_t pair_without_equal_domains = 0;
  std::vector<FuzzFinding> findings;

  bool ok() const {
    return wavelet_failures == 0 && roundtrip_failures == 0 && theorem_discrepancies == 0 &&
           proposition6_violations == 0 && pair_without_equal_domains == 0;
  }
};

/// The pair for one seed: F = fuzzed(seed); E = Shannon, or a second fuzzed set from an independent stream.
std::pair<ExtSet, ExtSet> fuzz_pair(std::uint64_t seed, FuzzBase base, const FuzzParams& p = {});

/// Seeds first_seed .. first_seed + count - 1. Failures are minimized by dropping moves from F's plan.
CampaignSummary fuzz_campaign(std::uint64_t first_seed, std::size_t count, FuzzBase base = FuzzBase::kShannon,
                              const FuzzParams& p = {});

}  // namespace wavesets
