#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "padicmin/limits.hpp"

namespace padicmin {

using Integer = mpz_class;

/// Deterministic primality test for 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// A validated prime p < 2^32.
class Prime {
 public:
  explicit Prime(std::uint64_t p);

  std::uint32_t value() const noexcept { return value_; }
  operator std::uint32_t() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t value_;
};

/// p^n as an exact integer.
Integer prime_power(Prime p, int n);

/// p^n when it fits in 64 bits, otherwise nullopt.
std::optional<std::uint64_t> prime_power_u64(Prime p, int n) noexcept;

/// Mathematical (floor) residue of `i` modulo `m` > 0, in [0, m).
Integer floor_mod(const Integer& i, const Integer& m);

/// Exponent of the largest power of p dividing x (x != 0).
int valuation_of(const Integer& x, Prime p);

/// p-adic valuation at a finite working precision.
struct ValuationResult {
  /// Empty when the residue is 0: truncation cannot tell 0 from p^N * u.
  std::optional<int> valuation;
  int precision = 0;

  bool at_least_precision() const noexcept { return !valuation.has_value(); }
  /// |x|_p = p^{norm_exponent}
  std::optional<int> norm_exponent() const noexcept {
    if (!valuation) return std::nullopt;
    return -*valuation;
  }
};

/// An element of Z_p known modulo p^N, stored as its canonical residue.
///
/// Instances are immutable; arithmetic returns new values. Operands of a
/// binary operation must share prime and precision.
class PadicApprox {
 public:
  PadicApprox(Prime p, int precision, const Integer& value,
              int max_precision = kDefaultMaxPrecision);

  Prime prime() const noexcept { return prime_; }
  int precision() const noexcept { return precision_; }
  const Integer& value() const noexcept { return value_; }
  Integer modulus() const { return prime_power(prime_, precision_); }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const;

  /// Base-p digits, little-endian, exactly `precision()` entries.
  std::vector<std::uint32_t> digits() const;

  /// Projection to Z/p^m Z.
  PadicApprox reduce_precision(int m) const;
  ValuationResult valuation() const;

  PadicApprox operator+(const PadicApprox& other) const;
  PadicApprox operator-(const PadicApprox& other) const;
  PadicApprox operator*(const PadicApprox& other) const;
  PadicApprox operator-() const;
  PadicApprox pow(const Integer& exponent) const;
  /// Throws Error(kNotUnit) when p divides the residue.
  PadicApprox inverse() const;

  /// "value" or "value [d0.d1.d2...]" when with_digits is set.
  std::string to_string(bool with_digits = false) const;

  friend bool operator==(const PadicApprox& a, const PadicApprox& b) {
    return a.prime_ == b.prime_ && a.precision_ == b.precision_ &&
           a.value_ == b.value_;
  }

 private:
  struct Unchecked {};
  PadicApprox(Unchecked, Prime p, int precision, Integer value);
  void require_compatible(const PadicApprox& other) const;

  Prime prime_;
  int precision_;
  Integer value_;
};

/// Residue of i modulo p^N; negative inputs wrap.
PadicApprox canonicalize(const Integer& i, Prime p, int precision,
                         int max_precision = kDefaultMaxPrecision);

inline PadicApprox reduce_precision(const PadicApprox& x, int m) {
  return x.reduce_precision(m);
}
inline ValuationResult valuation(const PadicApprox& x) { return x.valuation(); }
inline PadicApprox mod_inverse(const PadicApprox& x) { return x.inverse(); }

enum class RingOp { kAdd, kSub, kMul };
PadicApprox ring_arith(RingOp op, const PadicApprox& x, const PadicApprox& y);
PadicApprox ring_pow(const PadicApprox& x, const Integer& exponent);

/// Little-endian base-p digits joined by '.', e.g. 11 at p=3, N=3 -> "2.0.1".
std::string digit_string(const PadicApprox& x);

}  // namespace padicmin
