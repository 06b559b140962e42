#include "padicmin/conjugacy.hpp"

#include <ostream>

#include "padicmin/error.hpp"

namespace padicmin {

ConjugacyTable build_psi(const IntPolynomial& f, int level, const Limits& limits) {
  const std::uint64_t m = checked_table_size(f.prime(), level, limits.table_bound);
  ResidueMap map(f, m);
  constexpr std::uint32_t kUnset = UINT32_MAX;
  ConjugacyTable t{f.prime(), level, std::vector<std::uint32_t>(m, kUnset),
                   std::vector<std::uint32_t>(m)};
  Residue x = 0;
  for (std::uint64_t k = 0; k < m; ++k) {
    if (t.psi[x] != kUnset) {
      throw Error(ErrorCode::kNotFullCycle,
                  "f mod " + std::to_string(f.prime().value()) + "^" + std::to_string(level) +
                      " is not a full cycle: orbit of 0 repeats after " + std::to_string(k) +
                      " steps");
    }
    t.psi[x] = static_cast<std::uint32_t>(k);
    t.psi_inverse[k] = static_cast<std::uint32_t>(x);
    x = map(x);
  }
  if (x != 0) {
    throw Error(ErrorCode::kNotFullCycle, "orbit of 0 does not close after p^n steps");
  }
  return t;
}

bool satisfies_conjugation(const ConjugacyTable& psi, const ReducedMapTable& f_table) {
  const std::uint64_t m = psi.size();
  if (f_table.size() != m) return false;
  for (std::uint64_t x = 0; x < m; ++x) {
    if (psi.psi[f_table.table[x]] != (psi.psi[x] + 1) % m) return false;
  }
  return true;
}

bool TowerReport::all_pass() const {
  for (const auto& l : levels) {
    if (!l.conjugation || !l.compatible_with_next) return false;
  }
  return !levels.empty();
}

TowerReport verify_conjugacy_tower(const IntPolynomial& f, int n_max, const Limits& limits) {
  if (n_max < 1) {
    throw Error(ErrorCode::kPrecisionOutOfRange, "n_max must be >= 1");
  }
  checked_table_size(f.prime(), n_max, limits.table_bound);
  TowerReport report;
  std::optional<ConjugacyTable> below;
  for (int n = 1; n <= n_max; ++n) {
    ConjugacyTable psi = build_psi(f, n, limits);
    TowerLevel entry{n, satisfies_conjugation(psi, reduced_map_table(f, n, limits)), true};
    if (below) {
      const std::uint64_t lower = below->size();
      bool ok = true;
      for (std::uint64_t x = 0; x < psi.size() && ok; ++x) {
        ok = below->psi[x % lower] == psi.psi[x] % lower;
      }
      report.levels.back().compatible_with_next = ok;
    }
    report.levels.push_back(entry);
    below = std::move(psi);
  }
  return report;
}

void write_conjugacy_table(std::ostream& os, const ConjugacyTable& t) {
  for (std::uint64_t x = 0; x < t.size(); ++x) os << x << ' ' << t.psi[x] << '\n';
}

StreamCertificate StreamCertificate::from_verdict(const IntPolynomial& f,
                                                  const MinimalityVerdict& v) {
  if (!v.minimal) {
    throw Error(ErrorCode::kPrecondition, "verdict does not certify minimality");
  }
  return StreamCertificate(f, std::nullopt);
}

StreamCertificate StreamCertificate::by_full_cycle_check(const IntPolynomial& f, int level,
                                                         const Limits& limits) {
  auto check = check_full_cycle(f, level, limits);
  if (!check.full_cycle) {
    throw Error(ErrorCode::kNotFullCycle,
                "f mod " + std::to_string(f.prime().value()) + "^" + std::to_string(level) +
                    " is not a full cycle");
  }
  return StreamCertificate(f, level);
}

namespace {

std::uint64_t stream_modulus(Prime p, int level) {
  auto m = prime_power_u64(p, level);
  if (level < 1 || !m || *m > (std::uint64_t{1} << 62)) {
    throw Error(ErrorCode::kBoundExceeded, "stream modulus p^n must be below 2^62");
  }
  return *m;
}

}  // namespace

FullCycleStream::FullCycleStream(const StreamCertificate& certificate, int level,
                                 const Integer& seed, const Limits&)
    : prime_(certificate.polynomial().prime()),
      level_(level),
      map_(certificate.polynomial(), stream_modulus(prime_, level)) {
  if (certificate.level() && *certificate.level() != level) {
    throw Error(ErrorCode::kPrecondition,
                "certificate covers level " + std::to_string(*certificate.level()) +
                    ", stream requested at level " + std::to_string(level));
  }
  Integer s = floor_mod(seed, Integer(static_cast<unsigned long>(map_.modulus())));
  seed_ = s.get_ui();
  state_ = seed_;
}

std::vector<Residue> full_cycle_stream(const StreamCertificate& certificate, int level,
                                       const Integer& seed, std::uint64_t count,
                                       const Limits& limits) {
  FullCycleStream stream(certificate, level, seed, limits);
  std::vector<Residue> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

std::string packed_digits(Residue x, Prime p, int level) {
  constexpr char kAlphabet[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  const std::uint32_t base = p.value();
  for (int i = 0; i < level; ++i) {
    const auto d = static_cast<std::uint32_t>(x % base);
    x /= base;
    if (base <= 36) {
      out += kAlphabet[d];
    } else {
      if (i) out += '.';
      out += std::to_string(d);
    }
  }
  return out;
}

void write_stream(std::ostream& os, FullCycleStream& stream, std::uint64_t count,
                  StreamFormat format) {
  if (format == StreamFormat::kDigits) {
    os << stream.prime().value() << ' ' << stream.level() << ' ' << count << ' '
       << stream.seed() << '\n';
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    const Residue x = stream.next();
    if (format == StreamFormat::kDecimal) {
      os << x << '\n';
    } else {
      os << packed_digits(x, stream.prime(), stream.level()) << '\n';
    }
  }
}

}  // namespace padicmin
