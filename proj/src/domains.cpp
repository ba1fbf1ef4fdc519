#include "wavesets/domains.hpp"

#include <algorithm>
#include <map>

namespace wavesets {

SaturatedDyadicSet::SaturatedDyadicSet() : steps_{{dilation_domain<IntervalSet>(), ExponentFloor::pos_inf()}} {}

SaturatedDyadicSet SaturatedDyadicSet::from_steps(const std::vector<DomainStep>& steps) {
  const ExtSet dom = dilation_domain<IntervalSet>();
  std::map<ExponentFloor, ExtSet> by_floor;
  ExtSet taken;
  std::vector<const DomainStep*> order;
  for (const auto& s : steps) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(), [](const DomainStep* a, const DomainStep* b) { return a->floor < b->floor; });
  for (const DomainStep* s : order) {
    const ExtSet fresh = (s->base & dom) - taken;
    if (fresh.empty()) continue;
    taken = taken | fresh;
    auto [it, ins] = by_floor.try_emplace(s->floor, fresh);
    if (!ins) it->second = it->second | fresh;
  }
  const ExtSet rest = dom - taken;
  if (!rest.empty()) {
    auto [it, ins] = by_floor.try_emplace(ExponentFloor::pos_inf(), rest);
    if (!ins) it->second = it->second | rest;
  }
  SaturatedDyadicSet out;
  out.steps_.clear();
  for (auto& [fl, base] : by_floor) out.steps_.push_back({std::move(base), fl});
  return out;
}

SaturatedDyadicSet SaturatedDyadicSet::everything() {
  SaturatedDyadicSet d;
  d.steps_[0].floor = ExponentFloor::neg_inf();
  return d;
}

SaturatedDyadicSet SaturatedDyadicSet::nothing() { return {}; }

ExponentFloor SaturatedDyadicSet::floor_at(const PiRational& b) const {
  for (const auto& s : steps_) {
    if (s.base.contains({b})) return s.floor;
  }
  throw DomainError("point is outside the dilation domain");
}

bool SaturatedDyadicSet::contains(const PiRational& s) const {
  if (s.is_zero()) return false;
  const auto [j, b] = dyadic_reduce(s);
  return floor_at(b).admits(j);
}

SaturatedDyadicSet congruence_domain(const ExtSet& e, const ExtSet& f) {
  const auto m = build(e, f);
  std::vector<DomainStep> steps;
  for (const auto& p : m.pieces()) {
    const ExponentFloor base = p.n == 0 ? ExponentFloor::neg_inf() : two_adic_floor(p.n);
    for (const auto& [j, b] : dyadic_blocks(p.part)) steps.push_back({b, base + j});
  }
  return SaturatedDyadicSet::from_steps(steps);
}

Theorem3DomainReport theorem3_domain_report(const ExtSet& e, const ExtSet& f) {
  Theorem3DomainReport r;
  r.cells = nonzero_quadruples(e, f);
  for (const auto& q : r.cells) {
    if (two_adic_floor(q.n) + q.l != two_adic_floor(q.m)) r.violations.push_back(q);
  }
  r.ok = r.violations.empty();
  return r;
}

}  // namespace wavesets
