#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "padicmin/criteria.hpp"

namespace padicmin {

/// psi_n: Z/p^n Z -> Z/p^n Z with psi(f^k(0)) = k, conjugating f_{/n} to
/// the translation x -> x + 1.
struct ConjugacyTable {
  Prime prime;
  int level;
  std::vector<std::uint32_t> psi;
  std::vector<std::uint32_t> psi_inverse;  ///< psi_inverse[k] = f^k(0)

  std::uint64_t size() const noexcept { return psi.size(); }
};

/// Walks the orbit of 0 once. Throws Error(kNotFullCycle) when f_{/n} is
/// not a single p^n-cycle.
ConjugacyTable build_psi(const IntPolynomial& f, int level, const Limits& limits = {});

/// psi(f(x)) = psi(x) + 1 for every x.
bool satisfies_conjugation(const ConjugacyTable& psi, const ReducedMapTable& f_table);

struct TowerLevel {
  int level = 0;
  bool conjugation = false;
  /// psi_n(x mod p^n) = psi_{n+1}(x) mod p^n; vacuous at the top level.
  bool compatible_with_next = true;
};

struct TowerReport {
  std::vector<TowerLevel> levels;
  bool all_pass() const;
};

/// Builds psi_1..psi_{n_max} and checks both identities exhaustively.
/// Throws Error(kNotFullCycle) naming the first level without a full cycle.
TowerReport verify_conjugacy_tower(const IntPolynomial& f, int n_max, const Limits& limits = {});

/// Two-column "x psi[x]" export.
void write_conjugacy_table(std::ostream& os, const ConjugacyTable& t);

/// Evidence that f_{/n} is a full cycle, required before a stream is built.
class StreamCertificate {
 public:
  /// From a verdict that certifies minimality on Z_p (every level).
  static StreamCertificate from_verdict(const IntPolynomial& f, const MinimalityVerdict& v);
  /// By checking the full cycle at this level directly.
  static StreamCertificate by_full_cycle_check(const IntPolynomial& f, int level,
                                               const Limits& limits = {});

  const IntPolynomial& polynomial() const noexcept { return f_; }
  /// Levels this certificate covers: all when nullopt.
  std::optional<int> level() const noexcept { return level_; }

 private:
  StreamCertificate(IntPolynomial f, std::optional<int> level) : f_(std::move(f)), level_(level) {}
  IntPolynomial f_;
  std::optional<int> level_;
};

/// Lazy producer of seed, f(seed), f^2(seed), ... modulo p^n. One state
/// word per step; no tables.
class FullCycleStream {
 public:
  /// Seeds outside [0, p^n) are reduced mod p^n. Throws Error(kPrecondition)
  /// if the certificate does not cover `level`.
  FullCycleStream(const StreamCertificate& certificate, int level, const Integer& seed,
                  const Limits& limits = {});

  Prime prime() const noexcept { return prime_; }
  int level() const noexcept { return level_; }
  Residue seed() const noexcept { return seed_; }
  std::uint64_t period() const noexcept { return map_.modulus(); }

  /// Returns the current value and advances.
  Residue next() noexcept {
    Residue out = state_;
    state_ = map_(state_);
    return out;
  }

 private:
  Prime prime_;
  int level_;
  ResidueMap map_;
  Residue seed_;
  Residue state_;
};

/// count values of the stream (convenience for tests and the CLI).
std::vector<Residue> full_cycle_stream(const StreamCertificate& certificate, int level,
                                       const Integer& seed, std::uint64_t count,
                                       const Limits& limits = {});

enum class StreamFormat { kDecimal, kDigits };

/// kDecimal: one residue per line. kDigits: header "p n count seed", then
/// each residue as n little-endian base-p digits per line.
void write_stream(std::ostream& os, FullCycleStream& stream, std::uint64_t count,
                  StreamFormat format);

std::string packed_digits(Residue x, Prime p, int level);

}  // namespace padicmin
