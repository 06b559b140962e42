#pragma once

#include <cstdint>

namespace padicmin {

inline constexpr int kDefaultMaxPrecision = 64;
inline constexpr std::uint64_t kDefaultTableBound = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMaxTableBound = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kDefaultWorkBudget = 10'000'000;

/// Resource caps threaded through every operation that materializes p^n
/// sized state. Passed by value; there is no global configuration.
struct Limits {
  int max_precision = kDefaultMaxPrecision;
  std::uint64_t table_bound = kDefaultTableBound;
  std::uint64_t work_budget = kDefaultWorkBudget;
};

}  // namespace padicmin
