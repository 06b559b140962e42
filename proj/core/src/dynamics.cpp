#include "padicmin/dynamics.hpp"

#include <algorithm>

#include "padicmin/error.hpp"

namespace padicmin {

std::uint64_t checked_table_size(Prime p, int level, std::uint64_t bound) {
  if (level < 1) {
    throw Error(ErrorCode::kPrecisionOutOfRange, "level must be >= 1");
  }
  auto size = prime_power_u64(p, level);
  if (!size || *size > bound || *size > kMaxTableBound) {
    throw Error(ErrorCode::kBoundExceeded,
                std::to_string(p.value()) + "^" + std::to_string(level) +
                    " exceeds the table bound " + std::to_string(bound));
  }
  return *size;
}

ReducedMapTable reduced_map_table(const IntPolynomial& f, int level, const Limits& limits) {
  const std::uint64_t m = checked_table_size(f.prime(), level, limits.table_bound);
  ResidueMap map(f, m);
  ReducedMapTable t{f.prime(), level, std::vector<std::uint32_t>(m)};
  for (std::uint64_t x = 0; x < m; ++x) t.table[x] = static_cast<std::uint32_t>(map(x));
  return t;
}

BijectivityResult is_bijective(const ReducedMapTable& t) {
  constexpr std::uint64_t kUnseen = UINT64_MAX;
  std::vector<std::uint64_t> preimage(t.size(), kUnseen);
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    auto& slot = preimage[t.table[x]];
    if (slot != kUnseen) return {false, std::pair<Residue, Residue>{slot, x}};
    slot = x;
  }
  return {true, std::nullopt};
}

BijectivityResult is_bijective_mod(const IntPolynomial& f, int level, const Limits& limits) {
  return is_bijective(reduced_map_table(f, level, limits));
}

const std::vector<Residue>* CycleDecomposition::cycle_containing(Residue x) const {
  for (const auto& c : cycles) {
    if (std::find(c.begin(), c.end(), x) != c.end()) return &c;
  }
  return nullptr;
}

CycleDecomposition cycle_decomposition(const ReducedMapTable& t) {
  // 0 = unvisited, 1 = on the current walk, 2 = finished.
  const std::uint64_t m = t.size();
  std::vector<std::uint8_t> state(m, 0);
  std::vector<Residue> path;
  CycleDecomposition out;
  out.level = t.level;
  std::uint64_t periodic = 0;

  for (Residue start = 0; start < m; ++start) {
    if (state[start] != 0) continue;
    path.clear();
    Residue x = start;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = t.table[x];
    }
    if (state[x] == 1) {
      auto first = std::find(path.begin(), path.end(), x);
      std::vector<Residue> cycle(first, path.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      periodic += cycle.size();
      out.cycles.push_back(std::move(cycle));
    }
    for (Residue y : path) state[y] = 2;
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.non_periodic_count = m - periodic;
  out.bijective = out.non_periodic_count == 0;
  return out;
}

CycleDecomposition cycle_decomposition(const IntPolynomial& f, int level, const Limits& limits) {
  return cycle_decomposition(reduced_map_table(f, level, limits));
}

const char* strategy_name(FullCycleStrategy s) noexcept {
  return s == FullCycleStrategy::kTable ? "table" : "orbit-walk";
}

bool orbit_of_zero_is_full(const ResidueMap& map) {
  const std::uint64_t m = map.modulus();
  Residue x = 0;
  for (std::uint64_t k = 1; k <= m; ++k) {
    x = map(x);
    if (x == 0) return k == m;
  }
  return false;
}

FullCycleCheck check_full_cycle(const IntPolynomial& f, int level, const Limits& limits) {
  if (level < 1) {
    throw Error(ErrorCode::kPrecisionOutOfRange, "level must be >= 1");
  }
  auto size = prime_power_u64(f.prime(), level);
  if (size && *size <= limits.table_bound && *size <= kMaxTableBound) {
    auto table = reduced_map_table(f, level, limits);
    return {cycle_decomposition(table).is_single_full_cycle(*size), FullCycleStrategy::kTable};
  }
  if (!size || *size > (std::uint64_t{1} << 62)) {
    throw Error(ErrorCode::kBoundExceeded,
                std::to_string(f.prime().value()) + "^" + std::to_string(level) +
                    " is too large for an orbit walk");
  }
  // Spot-check: a full cycle mod p^n projects to a full cycle mod p.
  if (!orbit_of_zero_is_full(ResidueMap(f, f.prime().value()))) {
    return {false, FullCycleStrategy::kOrbitWalk};
  }
  return {orbit_of_zero_is_full(ResidueMap(f, *size)), FullCycleStrategy::kOrbitWalk};
}

bool is_full_cycle(const IntPolynomial& f, int level, const Limits& limits) {
  return check_full_cycle(f, level, limits).full_cycle;
}

OrbitCycle cycle_reached_from(const ResidueMap& map, Residue start) {
  // Brent's cycle detection: O(1) memory beyond the reported cycle.
  std::uint64_t power = 1, length = 1;
  Residue tortoise = start, hare = map(start);
  while (tortoise != hare) {
    if (power == length) {
      tortoise = hare;
      power *= 2;
      length = 0;
    }
    hare = map(hare);
    ++length;
  }
  OrbitCycle out;
  tortoise = hare = start;
  for (std::uint64_t i = 0; i < length; ++i) hare = map(hare);
  while (tortoise != hare) {
    tortoise = map(tortoise);
    hare = map(hare);
    ++out.tail_length;
  }
  out.cycle.reserve(length);
  Residue x = tortoise;
  for (std::uint64_t i = 0; i < length; ++i) {
    out.cycle.push_back(x);
    x = map(x);
  }
  std::rotate(out.cycle.begin(), std::min_element(out.cycle.begin(), out.cycle.end()),
              out.cycle.end());
  return out;
}

PadicApprox iterate(const IntPolynomial& f, const PadicApprox& x, std::uint64_t k) {
  if (f.prime() != x.prime()) {
    throw Error(ErrorCode::kMismatchedOperands, "prime mismatch in iterate");
  }
  if (auto m = prime_power_u64(x.prime(), x.precision()); m && *m <= (std::uint64_t{1} << 62)) {
    ResidueMap map(f, *m);
    Residue r = x.value().get_ui();
    for (std::uint64_t i = 0; i < k; ++i) r = map(r);
    return PadicApprox(x.prime(), x.precision(), Integer(static_cast<unsigned long>(r)),
                       x.precision());
  }
  PadicApprox r = x;
  for (std::uint64_t i = 0; i < k; ++i) r = evaluate(f, r);
  return r;
}

}  // namespace padicmin
