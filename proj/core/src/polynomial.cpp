#include "padicmin/polynomial.hpp"

#include <sstream>

#include "padicmin/error.hpp"

namespace padicmin {

namespace {

void trim(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim(coeffs_);
}

Integer Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer Polynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative(int order) const {
  if (order < 1) {
    throw Error(ErrorCode::kPrecondition, "derivative order must be >= 1");
  }
  std::vector<Integer> c = coeffs_;
  for (int k = 0; k < order && !c.empty(); ++k) {
    std::vector<Integer> next;
    next.reserve(c.size());
    for (std::size_t i = 1; i < c.size(); ++i) next.push_back(c[i] * static_cast<unsigned long>(i));
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::half_second_derivative() const {
  std::vector<Integer> c;
  for (std::size_t i = 2; i < coeffs_.size(); ++i) {
    c.push_back(coeffs_[i] * static_cast<unsigned long>(i * (i - 1) / 2));
  }
  return Polynomial(std::move(c));
}

IntPolynomial::IntPolynomial(Prime p, std::vector<Integer> coefficients)
    : prime_(p), poly_(std::move(coefficients)) {
  if (poly_.degree() < 1) {
    throw Error(ErrorCode::kDegeneratePolynomial,
                "polynomial must have degree >= 1 (constant maps are never onto)");
  }
}

IntPolynomial::IntPolynomial(Prime p, std::initializer_list<long> coefficients)
    : IntPolynomial(p, [&] {
        std::vector<Integer> c;
        for (long v : coefficients) c.emplace_back(v);
        return c;
      }()) {}

std::vector<Integer> parse_coefficients(std::string_view text) {
  std::vector<Integer> out;
  if (strip(text).empty()) {
    throw Error(ErrorCode::kMalformedInput, "empty coefficient list");
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = strip(text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start));
    std::string_view digits = tok;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(ErrorCode::kMalformedInput,
                  "malformed coefficient '" + std::string(tok) + "' in \"" +
                      std::string(text) + "\"");
    }
    std::string s(tok);
    if (s.front() == '+') s.erase(0, 1);
    out.emplace_back(s, 10);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_coefficients(std::span<const Integer> coefficients) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ',';
    out += coefficients[i].get_str();
  }
  return out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Integer mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << '-';
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

PadicApprox evaluate(const Polynomial& f, const PadicApprox& x) {
  Integer m = x.modulus();
  Integer acc = 0;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = floor_mod(acc * x.value() + *it, m);
  }
  return PadicApprox(x.prime(), x.precision(), acc, x.precision());
}

PadicApprox evaluate(const IntPolynomial& f, const PadicApprox& x) {
  if (f.prime() != x.prime()) {
    throw Error(ErrorCode::kMismatchedOperands,
                "polynomial over p=" + std::to_string(f.prime().value()) +
                    " evaluated at element of Z_" + std::to_string(x.prime().value()));
  }
  return evaluate(f.poly(), x);
}

Polynomial derivative(const IntPolynomial& f, int order) {
  return f.poly().derivative(order);
}

IntPolynomial normalize_unit_constant(const IntPolynomial& f, int precision) {
  const Prime p = f.prime();
  PadicApprox a0 = canonicalize(f.constant_term(), p, precision, precision);
  if (!a0.is_unit()) {
    throw Error(ErrorCode::kNotUnit,
                "constant term " + f.constant_term().get_str() + " is divisible by " +
                    std::to_string(p.value()) + "; 0 is a fixed point modulo p");
  }
  const Integer m = prime_power(p, precision);
  std::vector<Integer> b;
  b.reserve(f.coefficients().size());
  b.emplace_back(1);
  Integer power = 1;  // a_0^{i-1}
  for (std::size_t i = 1; i < f.coefficients().size(); ++i) {
    b.push_back(floor_mod(f.coefficients()[i] * power, m));
    power = floor_mod(power * a0.value(), m);
  }
  Polynomial g(b);
  if (g.degree() < 1) {
    throw Error(ErrorCode::kDegeneratePolynomial,
                "normalized polynomial is constant modulo p^" + std::to_string(precision));
  }
  return IntPolynomial(p, g.coefficients());
}

ResidueMap::ResidueMap(const Polynomial& f, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0 || modulus > (std::uint64_t{1} << 63)) {
    throw Error(ErrorCode::kBoundExceeded, "machine-word modulus out of range");
  }
  Integer m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(modulus), 0, 0, &modulus);
  coeffs_.reserve(f.coefficients().size());
  for (const auto& a : f.coefficients()) {
    Integer r = floor_mod(a, m);
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, r.get_mpz_t());
    coeffs_.push_back(v);
  }
  if (coeffs_.empty()) coeffs_.push_back(0);
}

}  // namespace padicmin
