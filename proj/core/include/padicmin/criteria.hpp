#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padicmin/dynamics.hpp"

namespace padicmin {

/// Even/odd coefficient sums. With `primed` set, each a_i is weighted by
/// a_0^{i-1} and the sums are residues modulo p^precision; otherwise they
/// are exact integer sums of the raw coefficients.
struct CoefficientSums {
  Integer a0_even;  ///< A_0  = sum_{i even, i != 0} c_i
  Integer a1_odd;   ///< A_1  = sum_{i odd} c_i
  Integer d0_even;  ///< D_0  = sum_{i even, i != 0} i c_i
  Integer d1_odd;   ///< D_1  = sum_{i odd} i c_i
  bool primed = false;

  friend bool operator==(const CoefficientSums&, const CoefficientSums&) = default;
};

CoefficientSums coefficient_sums(const IntPolynomial& f);
/// Throws Error(kNotUnit) if p | a_0.
CoefficientSums primed_coefficient_sums(const IntPolynomial& f, int precision);

/// c_i = a_i a_0^{i-1} mod p^precision (c_0 = 1): the coefficients of the
/// unit-normalized conjugate without computing an inverse.
std::vector<Integer> weighted_coefficients(const IntPolynomial& f, int precision);

enum class Method {
  kClosedFormP2,
  kClosedFormP2Larin,
  kClosedFormP3,
  kClosedFormP3Degree5,
  kDeltaRule,
};
const char* method_name(Method m) noexcept;
std::optional<Method> method_from_name(std::string_view name) noexcept;

struct Condition {
  std::string name;
  /// Which finite level the condition controls, e.g. "level-2".
  std::string stage;
  std::vector<Integer> residues;
  Integer modulus;
  bool pass = false;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct CycleWitness {
  int level = 0;
  std::vector<Residue> cycle;
  std::uint64_t tail_length = 0;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct MinimalityVerdict {
  bool minimal = false;
  Method method = Method::kDeltaRule;
  std::optional<int> matched_case;
  std::vector<Condition> conditions;
  std::optional<CycleWitness> witness;
  /// Smallest n for which f_{/n} has no full cycle, when the decider knows it.
  std::optional<int> first_failing_level;
  std::string reason;

  friend bool operator==(const MinimalityVerdict&, const MinimalityVerdict&) = default;
};

/// delta = 3 for p in {2, 3}, else 2.
int delta_level(Prime p) noexcept;

MinimalityVerdict minimal_z2(const IntPolynomial& f);
MinimalityVerdict minimal_z2_larin_form(const IntPolynomial& f);
MinimalityVerdict minimal_z3(const IntPolynomial& f);
MinimalityVerdict minimal_degree5_z3(const IntPolynomial& f);
MinimalityVerdict minimal_general(const IntPolynomial& f, const Limits& limits = {});

/// minimal_z2 / minimal_z3 for p in {2, 3}, nullopt otherwise.
std::optional<MinimalityVerdict> closed_form_verdict(const IntPolynomial& f);

struct CrossValidation {
  std::optional<MinimalityVerdict> closed_form;
  MinimalityVerdict delta_rule;
  /// full_cycle_levels[k] is the full-cycle check at level k + 1.
  std::vector<bool> full_cycle_levels;
  std::optional<int> first_failing_level;
  bool consistent = false;
  std::vector<std::string> violations;
};

/// Checks the deciders against brute-force full-cycle tests at levels
/// 1..max(n_max, delta).
CrossValidation cross_validate(const IntPolynomial& f, int n_max, const Limits& limits = {});

}  // namespace padicmin
