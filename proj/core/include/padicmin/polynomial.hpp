#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padicmin/padic.hpp"

namespace padicmin {

__extension__ typedef unsigned __int128 uint128;

/// Integer polynomial a_0 + a_1 x + ... + a_d x^d with trailing zeros
/// stripped. The zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// a_i, or 0 past the degree.
  Integer coefficient(std::size_t i) const;

  Integer operator()(const Integer& x) const;

  Polynomial derivative(int order = 1) const;
  /// f''/2 with exact coefficients C(i,2) a_i.
  Polynomial half_second_derivative() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// A polynomial of degree >= 1 viewed as a dynamical system on Z_p.
class IntPolynomial {
 public:
  IntPolynomial(Prime p, std::vector<Integer> coefficients);
  IntPolynomial(Prime p, std::initializer_list<long> coefficients);

  Prime prime() const noexcept { return prime_; }
  const Polynomial& poly() const noexcept { return poly_; }
  const std::vector<Integer>& coefficients() const noexcept { return poly_.coefficients(); }
  int degree() const noexcept { return poly_.degree(); }
  Integer coefficient(std::size_t i) const { return poly_.coefficient(i); }
  const Integer& constant_term() const noexcept { return poly_.coefficients().front(); }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  Prime prime_;
  Polynomial poly_;
};

/// Parses "1,3,0,2" (constant term first) into coefficients.
std::vector<Integer> parse_coefficients(std::string_view text);
std::string format_coefficients(std::span<const Integer> coefficients);
/// Human-readable rendering such as "1 + 3x + 2x^3".
std::string to_string(const Polynomial& f);

/// Horner evaluation of f at x modulo p^N.
PadicApprox evaluate(const IntPolynomial& f, const PadicApprox& x);
PadicApprox evaluate(const Polynomial& f, const PadicApprox& x);

Polynomial derivative(const IntPolynomial& f, int order);

/// g(x) = f(a_0 x) / a_0, i.e. b_i = a_i a_0^{i-1} mod p^N with b_0 = 1.
/// Throws Error(kNotUnit) when p | a_0 (0 is then a fixed point mod p).
IntPolynomial normalize_unit_constant(const IntPolynomial& f, int precision);

/// f with coefficients reduced modulo m < 2^63, evaluated in machine words.
class ResidueMap {
 public:
  ResidueMap(const Polynomial& f, std::uint64_t modulus);
  ResidueMap(const IntPolynomial& f, std::uint64_t modulus)
      : ResidueMap(f.poly(), modulus) {}

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t operator()(std::uint64_t x) const noexcept {
    // Horner, highest coefficient first.
    uint128 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = (acc * x + *it) % modulus_;
    }
    return static_cast<std::uint64_t>(acc);
  }

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> coeffs_;
};

}  // namespace padicmin
