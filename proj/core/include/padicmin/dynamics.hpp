#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "padicmin/limits.hpp"
#include "padicmin/polynomial.hpp"

namespace padicmin {

using Residue = std::uint64_t;

/// f_{/n} on Z/p^n Z as a dense lookup table.
struct ReducedMapTable {
  Prime prime;
  int level;
  std::vector<std::uint32_t> table;

  std::uint64_t size() const noexcept { return table.size(); }
  Residue operator()(Residue x) const { return table[x]; }
};

/// p^n, or Error(kBoundExceeded) when it exceeds `bound`.
std::uint64_t checked_table_size(Prime p, int level, std::uint64_t bound);

ReducedMapTable reduced_map_table(const IntPolynomial& f, int level,
                                  const Limits& limits = {});

struct BijectivityResult {
  bool bijective = false;
  /// x != y with f_{/n}(x) = f_{/n}(y), present when not bijective.
  std::optional<std::pair<Residue, Residue>> collision;
};

BijectivityResult is_bijective(const ReducedMapTable& table);
BijectivityResult is_bijective_mod(const IntPolynomial& f, int level,
                                   const Limits& limits = {});

struct CycleDecomposition {
  int level = 0;
  bool bijective = false;
  /// Each cycle starts at its minimal element; cycles sorted by that element.
  std::vector<std::vector<Residue>> cycles;
  /// Residues that are strictly pre-periodic (0 when bijective).
  std::uint64_t non_periodic_count = 0;

  bool is_single_full_cycle(std::uint64_t modulus) const {
    return cycles.size() == 1 && cycles.front().size() == modulus;
  }
  /// Cycle containing x, if x is periodic.
  const std::vector<Residue>* cycle_containing(Residue x) const;
};

CycleDecomposition cycle_decomposition(const ReducedMapTable& table);
CycleDecomposition cycle_decomposition(const IntPolynomial& f, int level,
                                       const Limits& limits = {});

enum class FullCycleStrategy { kTable, kOrbitWalk };
const char* strategy_name(FullCycleStrategy s) noexcept;

struct FullCycleCheck {
  bool full_cycle = false;
  FullCycleStrategy strategy = FullCycleStrategy::kTable;
};

/// Table + decomposition when p^n fits the table bound, otherwise a walk of
/// the orbit of 0 (requires p^n < 2^63).
FullCycleCheck check_full_cycle(const IntPolynomial& f, int level,
                                const Limits& limits = {});
bool is_full_cycle(const IntPolynomial& f, int level, const Limits& limits = {});

/// Allocation-free full-cycle test by following 0 for p^n steps.
bool orbit_of_zero_is_full(const ResidueMap& map);

/// The periodic part reached from `start`, plus the tail length before it.
struct OrbitCycle {
  std::vector<Residue> cycle;  // rotated to start at its minimal element
  std::uint64_t tail_length = 0;
};
OrbitCycle cycle_reached_from(const ResidueMap& map, Residue start);

/// f applied k times at the precision of x.
PadicApprox iterate(const IntPolynomial& f, const PadicApprox& x, std::uint64_t k);

}  // namespace padicmin
