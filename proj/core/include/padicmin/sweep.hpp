#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicmin/criteria.hpp"

namespace padicmin {

/// A box of polynomials a_0 + a_1 x + ... + a_d x^d with a_0 fixed and
/// each of a_1..a_d ranging over [0, coefficient_bound).
struct SweepConfig {
  Prime prime{2};
  int degree = 4;
  std::uint64_t coefficient_bound = 8;
  long constant_term = 1;
  int n_max = 3;
  unsigned threads = 1;
  /// Uniform sampling instead of enumeration; forced when the box exceeds
  /// the work budget.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  Limits limits{};
};

inline constexpr std::uint64_t kDefaultSweepSamples = 10'000;

struct SweepReport {
  std::uint64_t examined = 0;
  std::uint64_t agree_minimal = 0;
  std::uint64_t agree_nonminimal = 0;
  std::uint64_t disagreements = 0;
  /// Tuples whose polynomial is constant; never minimal, not decided.
  std::uint64_t degenerate = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  /// Lexicographically smallest (a_0, ..., a_d) that disagreed.
  std::optional<std::vector<Integer>> first_counterexample;
  std::vector<std::string> counterexample_violations;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Enumerates (or samples) the box, running cross_validate on every tuple,
/// and merges per-worker tallies deterministically.
SweepReport run_sweep(const SweepConfig& config);

/// Number of tuples in the enumeration box, nullopt on overflow.
std::optional<std::uint64_t> sweep_box_size(const SweepConfig& config) noexcept;

/// Coefficients (a_0, ..., a_d) for lexicographic index `index` of the box.
std::vector<Integer> sweep_tuple(const SweepConfig& config, std::uint64_t index);

}  // namespace padicmin
