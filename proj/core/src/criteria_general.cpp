#include <algorithm>

#include "padicmin/criteria.hpp"
#include "padicmin/error.hpp"

namespace padicmin {

MinimalityVerdict minimal_general(const IntPolynomial& f, const Limits& limits) {
  const Prime p = f.prime();
  const int delta = delta_level(p);
  checked_table_size(p, delta, limits.table_bound);

  MinimalityVerdict v;
  v.method = Method::kDeltaRule;
  for (int level = 1; level <= delta; ++level) {
    const std::uint64_t m = *prime_power_u64(p, level);
    ResidueMap map(f, m);
    OrbitCycle orbit = cycle_reached_from(map, 0);
    const bool full = orbit.tail_length == 0 && orbit.cycle.size() == m;
    v.conditions.push_back({"f mod " + std::to_string(p.value()) + "^" + std::to_string(level) +
                                " is a full cycle",
                            "level-" + std::to_string(level),
                            {Integer(static_cast<unsigned long>(orbit.cycle.size()))},
                            Integer(static_cast<unsigned long>(m)),
                            full});
    if (!full && !v.first_failing_level) {
      v.first_failing_level = level;
      v.witness = CycleWitness{level, std::move(orbit.cycle), orbit.tail_length};
    }
  }
  v.minimal = !v.first_failing_level.has_value();
  if (!v.minimal) {
    const auto& w = *v.witness;
    v.reason = "no full cycle mod " + std::to_string(p.value()) + "^" + std::to_string(w.level) +
               ": orbit of 0 " + (w.tail_length ? "falls into" : "closes on") + " a cycle of length " +
               std::to_string(w.cycle.size());
    if (w.cycle.size() == 1) v.reason += " (fixed point " + std::to_string(w.cycle.front()) + ")";
  }
  return v;
}

std::optional<MinimalityVerdict> closed_form_verdict(const IntPolynomial& f) {
  switch (f.prime().value()) {
    case 2: return minimal_z2(f);
    case 3: return minimal_z3(f);
    default: return std::nullopt;
  }
}

CrossValidation cross_validate(const IntPolynomial& f, int n_max, const Limits& limits) {
  const Prime p = f.prime();
  const int delta = delta_level(p);
  const int top = std::max(n_max, delta);
  checked_table_size(p, top, limits.table_bound);

  CrossValidation r;
  r.closed_form = closed_form_verdict(f);
  r.delta_rule = minimal_general(f, limits);
  for (int level = 1; level <= top; ++level) {
    const bool full = is_full_cycle(f, level, limits);
    r.full_cycle_levels.push_back(full);
    if (!full && !r.first_failing_level) r.first_failing_level = level;
  }

  const bool all_full = !r.first_failing_level.has_value();
  const bool fails_by_delta = r.first_failing_level && *r.first_failing_level <= delta;
  auto violation = [&](std::string msg) { r.violations.push_back(std::move(msg)); };

  if (r.delta_rule.minimal && !all_full) {
    violation("delta-rule says minimal but level " + std::to_string(*r.first_failing_level) +
              " has no full cycle");
  }
  if (!r.delta_rule.minimal && !fails_by_delta) {
    violation("delta-rule says not minimal but every level <= delta is a full cycle");
  }
  if (r.closed_form) {
    const auto& cf = *r.closed_form;
    if (cf.minimal && !all_full) {
      violation("closed form says minimal but level " + std::to_string(*r.first_failing_level) +
                " has no full cycle");
    }
    if (!cf.minimal && !fails_by_delta) {
      violation("closed form says not minimal but every level <= delta is a full cycle");
    }
    if (cf.minimal != r.delta_rule.minimal) {
      violation("closed form and delta-rule disagree");
    }
    if (cf.first_failing_level != r.first_failing_level) {
      auto show = [](const std::optional<int>& l) { return l ? std::to_string(*l) : "none"; };
      violation("closed-form stage report names level " + show(cf.first_failing_level) +
                " but brute force first fails at " + show(r.first_failing_level));
    }
  }
  if (p.value() == 2 && f.constant_term() == 1 &&
      minimal_z2_larin_form(f).minimal != r.delta_rule.minimal) {
    violation("Larin form disagrees with delta-rule");
  }
  if (p.value() == 3 && f.constant_term() == 1 && f.degree() <= 5 &&
      minimal_degree5_z3(f).minimal != r.delta_rule.minimal) {
    violation("degree-5 table disagrees with delta-rule");
  }
  r.consistent = r.violations.empty();
  return r;
}

}  // namespace padicmin
