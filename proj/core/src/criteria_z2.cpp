#include "padicmin/criteria.hpp"
#include "padicmin/error.hpp"

namespace padicmin {

namespace {

Integer mod(const Integer& x, unsigned long m) { return floor_mod(x, Integer(m)); }

void require_prime(const IntPolynomial& f, unsigned p, const char* who) {
  if (f.prime().value() != p) {
    throw Error(ErrorCode::kUnsupportedPrime,
                std::string(who) + " applies to p=" + std::to_string(p) + " only, got p=" +
                    std::to_string(f.prime().value()));
  }
}

MinimalityVerdict fixed_point_verdict(const IntPolynomial& f, Method method) {
  MinimalityVerdict v;
  v.method = method;
  v.minimal = false;
  const unsigned long p = f.prime().value();
  v.conditions.push_back({"a0 unit (mod " + std::to_string(p) + ")", "level-1",
                          {mod(f.constant_term(), p)}, Integer(p), false});
  v.first_failing_level = 1;
  v.reason = "fixed point mod p: p divides a0, so f(0) = 0 mod p";
  return v;
}

std::string failing_names(const MinimalityVerdict& v) {
  std::string out;
  for (const auto& c : v.conditions) {
    if (c.pass) continue;
    if (!out.empty()) out += "; ";
    out += c.name;
  }
  return out;
}

}  // namespace

MinimalityVerdict minimal_z2(const IntPolynomial& f) {
  require_prime(f, 2, "minimal_z2");
  if (mod(f.constant_term(), 2) == 0) return fixed_point_verdict(f, Method::kClosedFormP2);

  const bool unit_constant = f.constant_term() == 1;
  // Exact sums when a_0 = 1; otherwise the a_0-weighted sums mod 4.
  const CoefficientSums s = unit_constant ? coefficient_sums(f) : primed_coefficient_sums(f, 2);
  const std::string tick = unit_constant ? "" : "'";
  const Integer a1 = f.coefficient(1);
  const Integer a2_term = 2 * f.coefficient(2) * f.constant_term();

  MinimalityVerdict v;
  v.method = Method::kClosedFormP2;
  if (!unit_constant) {
    v.conditions.push_back({"a0 unit (mod 2)", "level-1", {mod(f.constant_term(), 2)}, 2, true});
  }
  const Integer c1 = mod(a1, 2);
  const Integer c2 = mod(s.a1_odd, 2);
  const Integer c3 = mod(s.a0_even + s.a1_odd, 4);
  const Integer c4 = mod(a2_term + a1 * s.a1_odd, 4);
  v.conditions.push_back({"a1 = 1 (mod 2)", "level-2", {c1}, 2, c1 == 1});
  v.conditions.push_back({"A" + tick + "1 = 1 (mod 2)", "level-2", {c2}, 2, c2 == 1});
  v.conditions.push_back(
      {"A" + tick + "0 + A" + tick + "1 = 1 (mod 4)", "level-2", {c3}, 4, c3 == 1});
  v.conditions.push_back({std::string(unit_constant ? "2a2" : "2a2a0") + " + a1A" + tick +
                              "1 = 1 (mod 4)",
                          "level-3", {c4}, 4, c4 == 1});

  const bool level1 = mod(s.a0_even + s.a1_odd, 2) == 1;
  const bool level2 = c1 == 1 && c2 == 1 && c3 == 1;
  const bool level3 = level2 && c4 == 1;
  v.minimal = level3;
  if (!level1) {
    v.first_failing_level = 1;
  } else if (!level2) {
    v.first_failing_level = 2;
  } else if (!level3) {
    v.first_failing_level = 3;
  }
  if (!v.minimal) v.reason = "failed: " + failing_names(v);
  return v;
}

MinimalityVerdict minimal_z2_larin_form(const IntPolynomial& f) {
  require_prime(f, 2, "minimal_z2_larin_form");
  if (f.constant_term() != 1) {
    throw Error(ErrorCode::kPrecondition, "the Larin form assumes a0 = 1");
  }
  const CoefficientSums s = coefficient_sums(f);
  const Integer a1 = f.coefficient(1);
  const Integer a2 = f.coefficient(2);

  MinimalityVerdict v;
  v.method = Method::kClosedFormP2Larin;
  const Integer c1 = mod(a1, 2);
  const Integer lhs2 = mod(s.a1_odd - a1, 4), rhs2 = mod(2 * a2, 4);
  const Integer lhs3 = mod(s.a0_even - a2, 4), rhs3 = mod(a1 + a2 - 1, 4);
  v.conditions.push_back({"a1 = 1 (mod 2)", "level-2", {c1}, 2, c1 == 1});
  v.conditions.push_back({"A1 - a1 = 2a2 (mod 4)", "level-3", {lhs2, rhs2}, 4, lhs2 == rhs2});
  v.conditions.push_back(
      {"A0 - a2 = a1 + a2 - 1 (mod 4)", "level-3", {lhs3, rhs3}, 4, lhs3 == rhs3});
  v.minimal = v.conditions[0].pass && v.conditions[1].pass && v.conditions[2].pass;
  if (!v.minimal) v.reason = "failed: " + failing_names(v);
  return v;
}

}  // namespace padicmin
