#pragma once

#include <vector>

#include "wavesets/interpolation.hpp"

namespace wavesets {

struct DomainStep {
  ExtSet base;  // subset of the dilation domain
  ExponentFloor floor;
};

inline bool operator==(const DomainStep& a, const DomainStep& b) { return a.floor == b.floor && a.base == b.base; }

/// x = 2^j b (b in the dilation domain) belongs iff j >= floor(b).
/// Canonical: one step per distinct floor, sorted by floor, bases partitioning the dilation domain.
class SaturatedDyadicSet {
 public:
  SaturatedDyadicSet();  // empty
  /// Overlaps resolve to the least floor; uncovered points get +inf.
  static SaturatedDyadicSet from_steps(const std::vector<DomainStep>& steps);
  static SaturatedDyadicSet everything();
  static SaturatedDyadicSet nothing();

  const std::vector<DomainStep>& steps() const { return steps_; }
  ExponentFloor floor_at(const PiRational& b) const;  // b in the dilation domain
  bool contains(const PiRational& s) const;            // false at 0

  friend bool operator==(const SaturatedDyadicSet& a, const SaturatedDyadicSet& b) { return a.steps_ == b.steps_; }

 private:
  std::vector<DomainStep> steps_;
};

/// Points where sigma_E^F moves by a multiple of 2 pi.
SaturatedDyadicSet congruence_domain(const ExtSet& e, const ExtSet& f);

inline bool saturated_equal(const SaturatedDyadicSet& a, const SaturatedDyadicSet& b) { return a == b; }
inline bool membership(const SaturatedDyadicSet& d, const PiRational& s) { return d.contains(s); }

struct Theorem3DomainReport {
  bool ok = false;
  std::vector<Quadruple> cells;
  std::vector<Quadruple> violations;  // [n] + l != [m]
};

Theorem3DomainReport theorem3_domain_report(const ExtSet& e, const ExtSet& f);
inline bool theorem3_domain_criterion(const ExtSet& e, const ExtSet& f) { return theorem3_domain_report(e, f).ok; }

}  // namespace wavesets
