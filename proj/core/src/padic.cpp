#include "padicmin/padic.hpp"

#include <sstream>

#include "padicmin/error.hpp"

namespace padicmin {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotPrime: return "not-prime";
    case ErrorCode::kPrecisionOutOfRange: return "precision-out-of-range";
    case ErrorCode::kMismatchedOperands: return "mismatched-operands";
    case ErrorCode::kNotUnit: return "not-unit";
    case ErrorCode::kDegeneratePolynomial: return "degenerate-polynomial";
    case ErrorCode::kMalformedInput: return "malformed-input";
    case ErrorCode::kBoundExceeded: return "bound-exceeded";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kNotFullCycle: return "not-full-cycle";
    case ErrorCode::kUnsupportedPrime: return "unsupported-prime";
  }
  return "unknown";
}

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Miller-Rabin with the first twelve primes as bases is exact below 2^64.
bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) {
    throw Error(ErrorCode::kNotPrime,
                "prime " + std::to_string(p) + " exceeds the supported range (< 2^32)");
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  value_ = static_cast<std::uint32_t>(p);
}

Integer prime_power(Prime p, int n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p.value(), static_cast<unsigned long>(n));
  return r;
}

std::optional<std::uint64_t> prime_power_u64(Prime p, int n) noexcept {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > UINT64_MAX / p.value()) return std::nullopt;
    r *= p.value();
  }
  return r;
}

Integer floor_mod(const Integer& i, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), i.get_mpz_t(), m.get_mpz_t());
  return r;
}

int valuation_of(const Integer& x, Prime p) {
  if (x == 0) {
    throw Error(ErrorCode::kPrecondition, "valuation of zero is infinite");
  }
  Integer pp = p.value();
  return static_cast<int>(mpz_remove(Integer().get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

PadicApprox::PadicApprox(Prime p, int precision, const Integer& value,
                         int max_precision)
    : prime_(p), precision_(precision) {
  if (precision < 1 || precision > max_precision) {
    throw Error(ErrorCode::kPrecisionOutOfRange,
                "precision " + std::to_string(precision) + " outside [1, " +
                    std::to_string(max_precision) + "]");
  }
  value_ = floor_mod(value, prime_power(p, precision));
}

PadicApprox::PadicApprox(Unchecked, Prime p, int precision, Integer value)
    : prime_(p), precision_(precision), value_(std::move(value)) {}

PadicApprox canonicalize(const Integer& i, Prime p, int precision, int max_precision) {
  return PadicApprox(p, precision, i, max_precision);
}

bool PadicApprox::is_unit() const {
  return mpz_fdiv_ui(value_.get_mpz_t(), prime_.value()) != 0;
}

std::vector<std::uint32_t> PadicApprox::digits() const {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(precision_));
  Integer rest = value_;
  for (int i = 0; i < precision_; ++i) {
    out.push_back(static_cast<std::uint32_t>(
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), prime_.value())));
  }
  return out;
}

PadicApprox PadicApprox::reduce_precision(int m) const {
  if (m < 1 || m > precision_) {
    throw Error(ErrorCode::kPrecisionOutOfRange,
                "cannot reduce precision " + std::to_string(precision_) + " to " +
                    std::to_string(m));
  }
  if (m == precision_) return *this;
  return PadicApprox(Unchecked{}, prime_, m, floor_mod(value_, prime_power(prime_, m)));
}

ValuationResult PadicApprox::valuation() const {
  ValuationResult r;
  r.precision = precision_;
  if (value_ != 0) r.valuation = valuation_of(value_, prime_);
  return r;
}

void PadicApprox::require_compatible(const PadicApprox& other) const {
  if (prime_ != other.prime_ || precision_ != other.precision_) {
    throw Error(ErrorCode::kMismatchedOperands,
                "operands differ in prime or precision (" +
                    std::to_string(prime_.value()) + "^" + std::to_string(precision_) +
                    " vs " + std::to_string(other.prime_.value()) + "^" +
                    std::to_string(other.precision_) + ")");
  }
}

PadicApprox PadicApprox::operator+(const PadicApprox& other) const {
  require_compatible(other);
  Integer m = modulus();
  Integer s = value_ + other.value_;
  if (s >= m) s -= m;
  return PadicApprox(Unchecked{}, prime_, precision_, std::move(s));
}

PadicApprox PadicApprox::operator-(const PadicApprox& other) const {
  require_compatible(other);
  Integer s = value_ - other.value_;
  if (s < 0) s += modulus();
  return PadicApprox(Unchecked{}, prime_, precision_, std::move(s));
}

PadicApprox PadicApprox::operator*(const PadicApprox& other) const {
  require_compatible(other);
  Integer s = value_ * other.value_;
  return PadicApprox(Unchecked{}, prime_, precision_, floor_mod(s, modulus()));
}

PadicApprox PadicApprox::operator-() const {
  if (value_ == 0) return *this;
  return PadicApprox(Unchecked{}, prime_, precision_, modulus() - value_);
}

PadicApprox PadicApprox::pow(const Integer& exponent) const {
  if (exponent < 0) {
    throw Error(ErrorCode::kPrecondition, "negative exponent");
  }
  Integer r;
  Integer m = modulus();
  mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  return PadicApprox(Unchecked{}, prime_, precision_, std::move(r));
}

PadicApprox PadicApprox::inverse() const {
  if (!is_unit()) {
    throw Error(ErrorCode::kNotUnit,
                to_string() + " is divisible by " + std::to_string(prime_.value()) +
                    " and has no inverse mod p^N");
  }
  Integer r;
  Integer m = modulus();
  mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), m.get_mpz_t());
  return PadicApprox(Unchecked{}, prime_, precision_, std::move(r));
}

std::string PadicApprox::to_string(bool with_digits) const {
  std::string s = value_.get_str();
  if (with_digits) s += " [" + digit_string(*this) + "]";
  return s;
}

std::string digit_string(const PadicApprox& x) {
  std::ostringstream os;
  bool first = true;
  for (auto d : x.digits()) {
    if (!first) os << '.';
    os << d;
    first = false;
  }
  return os.str();
}

PadicApprox ring_arith(RingOp op, const PadicApprox& x, const PadicApprox& y) {
  switch (op) {
    case RingOp::kAdd: return x + y;
    case RingOp::kSub: return x - y;
    case RingOp::kMul: return x * y;
  }
  throw Error(ErrorCode::kPrecondition, "unknown ring operation");
}

PadicApprox ring_pow(const PadicApprox& x, const Integer& exponent) {
  return x.pow(exponent);
}

}  // namespace padicmin
