#include <array>

#include "padicmin/criteria.hpp"
#include "padicmin/error.hpp"

namespace padicmin {

namespace {

Integer mod(const Integer& x, unsigned long m) { return floor_mod(x, Integer(m)); }

Integer at(const std::vector<Integer>& c, std::size_t i) {
  return i < c.size() ? c[i] : Integer(0);
}

/// sum_{j >= 0} c_{first + 6j}
Integer stride6_sum(const std::vector<Integer>& c, std::size_t first) {
  Integer s = 0;
  for (std::size_t i = first; i < c.size(); i += 6) s += c[i];
  return s;
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

// The four (D0, D1, a1) mod 3 patterns. Odd cases test A1 + 5, even cases
// A0 + 6; the second exclusion is k2 a2 + 3 sum c_{s + 6j} mod 9.
struct Z3Case {
  int d0, d1, a1;
  bool uses_odd_sum;
  int a2_factor;
};
constexpr std::array<Z3Case, 4> kZ3Cases{{
    {0, 2, 1, true, 3},
    {0, 1, 1, false, 6},
    {1, 0, 2, true, 6},
    {2, 0, 2, false, 3},
}};

// Degree-5 table over (a1, ..., a5) mod 3. Case (3) uses 1 mod 9: it is
// what the general table forces when a2 = 1 and a5 = 2 mod 3.
struct Degree5Case {
  std::array<int, 5> pattern;
  bool uses_odd_sum;  // a1 + a3 + a5, else a2 + a4
  std::array<int, 2> allowed;
  int allowed_count;
};
constexpr std::array<Degree5Case, 4> kDegree5Cases{{
    {{1, 0, 1, 0, 2}, true, {7, 0}, 1},
    {{1, 0, 0, 0, 0}, false, {0, 6}, 2},
    {{2, 1, 0, 2, 2}, true, {1, 0}, 1},
    {{2, 2, 0, 1, 2}, false, {0, 0}, 1},
}};

}  // namespace

MinimalityVerdict minimal_z3(const IntPolynomial& f) {
  if (f.prime().value() != 3) {
    throw Error(ErrorCode::kUnsupportedPrime,
                "minimal_z3 applies to p=3 only, got p=" + std::to_string(f.prime().value()));
  }
  MinimalityVerdict v;
  v.method = Method::kClosedFormP3;
  if (mod(f.constant_term(), 3) == 0) {
    v.conditions.push_back({"a0 unit (mod 3)", "level-1", {mod(f.constant_term(), 3)}, 3, false});
    v.first_failing_level = 1;
    v.reason = "fixed point mod p: p divides a0, so f(0) = 0 mod p";
    return v;
  }

  const bool unit_constant = f.constant_term() == 1;
  const std::vector<Integer> c =
      unit_constant ? f.coefficients() : weighted_coefficients(f, 2);
  const CoefficientSums s =
      unit_constant ? coefficient_sums(f) : primed_coefficient_sums(f, 2);
  const std::string t = unit_constant ? "" : "'";

  if (!unit_constant) {
    v.conditions.push_back({"a0 unit (mod 3)", "level-1", {mod(f.constant_term(), 3)}, 3, true});
  }
  const Integer r_a0 = mod(s.a0_even, 3);
  const Integer r_a1 = mod(s.a1_odd, 3);
  v.conditions.push_back({"A" + t + "0 = 0 (mod 3)", "level-1", {r_a0}, 3, r_a0 == 0});
  v.conditions.push_back({"A" + t + "1 = 1 (mod 3)", "level-1", {r_a1}, 3, r_a1 == 1});
  const bool level1 = r_a0 == 0 && r_a1 == 1;

  const Integer d0 = mod(s.d0_even, 3), d1 = mod(s.d1_odd, 3), a1 = mod(at(c, 1), 3);
  const Z3Case* matched = nullptr;
  for (std::size_t k = 0; k < kZ3Cases.size(); ++k) {
    const auto& cs = kZ3Cases[k];
    if (d0 == cs.d0 && d1 == cs.d1 && a1 == cs.a1) {
      matched = &cs;
      v.matched_case = static_cast<int>(k) + 1;
    }
  }
  v.conditions.push_back({"(D" + t + "0, D" + t + "1, a1) mod 3 matches a case", "level-2",
                          {d0, d1, a1}, 3, matched != nullptr});

  bool level2 = level1 && matched != nullptr;
  bool level3 = false;
  if (matched) {
    const std::string label = "case (" + std::to_string(*v.matched_case) + "): ";
    const std::string lhs_name = matched->uses_odd_sum ? "A" + t + "1 + 5" : "A" + t + "0 + 6";
    const Integer lhs = matched->uses_odd_sum ? mod(s.a1_odd + 5, 9) : mod(s.a0_even + 6, 9);
    const std::size_t stride_start = matched->uses_odd_sum ? 5 : 2;
    const Integer rhs = mod(matched->a2_factor * at(c, 2) + 3 * stride6_sum(c, stride_start), 9);
    const std::string rhs_name = std::to_string(matched->a2_factor) +
                                 (unit_constant ? "a2" : "a2a0") + " + 3 sum a_{" +
                                 std::to_string(stride_start) + "+6j}" +
                                 (unit_constant ? "" : "a0^{" + std::to_string(stride_start - 1) +
                                                           "+6j}");
    const bool first = lhs != 0;
    const bool second = lhs != rhs;
    v.conditions.push_back({label + lhs_name + " != 0 (mod 9)", "level-2", {lhs}, 9, first});
    v.conditions.push_back(
        {label + lhs_name + " != " + rhs_name + " (mod 9)", "level-3", {lhs, rhs}, 9, second});
    level2 = level2 && first;
    level3 = level2 && second;
  }

  v.minimal = level3;
  if (!level1) {
    v.first_failing_level = 1;
  } else if (!level2) {
    v.first_failing_level = 2;
  } else if (!level3) {
    v.first_failing_level = 3;
  }
  if (!v.minimal) {
    v.reason = (level1 && !matched) ? "derivative-pattern mismatch: (f^3)'(0) != 1 mod 3"
                                    : "failed: " + failing_names(v);
  }
  return v;
}

MinimalityVerdict minimal_degree5_z3(const IntPolynomial& f) {
  if (f.prime().value() != 3) {
    throw Error(ErrorCode::kUnsupportedPrime, "minimal_degree5_z3 applies to p=3 only");
  }
  if (f.constant_term() != 1 || f.degree() > 5) {
    throw Error(ErrorCode::kPrecondition,
                "the degree-5 table needs a0 = 1 and degree <= 5");
  }
  MinimalityVerdict v;
  v.method = Method::kClosedFormP3Degree5;

  std::vector<Integer> r3;
  for (std::size_t i = 1; i <= 5; ++i) r3.push_back(mod(f.coefficient(i), 3));
  const Degree5Case* matched = nullptr;
  for (std::size_t k = 0; k < kDegree5Cases.size(); ++k) {
    const auto& cs = kDegree5Cases[k];
    bool eq = true;
    for (std::size_t i = 0; i < 5; ++i) eq = eq && r3[i] == cs.pattern[i];
    if (eq) {
      matched = &cs;
      v.matched_case = static_cast<int>(k) + 1;
    }
  }
  v.conditions.push_back({"(a1, ..., a5) mod 3 matches a case", "level-2", r3, 3, matched != nullptr});
  if (!matched) {
    v.reason = "coefficient pattern mod 3 matches no case";
    return v;
  }
  const Integer sum = matched->uses_odd_sum
                          ? mod(f.coefficient(1) + f.coefficient(3) + f.coefficient(5), 9)
                          : mod(f.coefficient(2) + f.coefficient(4), 9);
  bool ok = false;
  std::string allowed;
  for (int i = 0; i < matched->allowed_count; ++i) {
    ok = ok || sum == matched->allowed[i];
    if (i) allowed += " or ";
    allowed += std::to_string(matched->allowed[i]);
  }
  const std::string label = "case (" + std::to_string(*v.matched_case) + "): ";
  v.conditions.push_back({label + (matched->uses_odd_sum ? "a1 + a3 + a5" : "a2 + a4") + " = " +
                              allowed + " (mod 9)",
                          "level-3", {sum}, 9, ok});
  v.minimal = ok;
  if (!ok) v.reason = "failed: " + failing_names(v);
  return v;
}

}  // namespace padicmin
