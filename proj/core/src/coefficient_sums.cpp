#include "padicmin/criteria.hpp"
#include "padicmin/error.hpp"

namespace padicmin {

namespace {

CoefficientSums sums_of(const std::vector<Integer>& c) {
  CoefficientSums s;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const unsigned long idx = i;
    if (i % 2 == 0) {
      s.a0_even += c[i];
      s.d0_even += c[i] * idx;
    } else {
      s.a1_odd += c[i];
      s.d1_odd += c[i] * idx;
    }
  }
  return s;
}

}  // namespace

std::vector<Integer> weighted_coefficients(const IntPolynomial& f, int precision) {
  const Prime p = f.prime();
  const Integer m = prime_power(p, precision);
  const Integer a0 = floor_mod(f.constant_term(), m);
  if (mpz_fdiv_ui(a0.get_mpz_t(), p.value()) == 0) {
    throw Error(ErrorCode::kNotUnit,
                "constant term " + f.constant_term().get_str() + " is not a unit mod " +
                    std::to_string(p.value()));
  }
  std::vector<Integer> c;
  c.reserve(f.coefficients().size());
  c.emplace_back(1);
  Integer power = 1;
  for (std::size_t i = 1; i < f.coefficients().size(); ++i) {
    c.push_back(floor_mod(f.coefficients()[i] * power, m));
    power = floor_mod(power * a0, m);
  }
  return c;
}

CoefficientSums coefficient_sums(const IntPolynomial& f) {
  return sums_of(f.coefficients());
}

CoefficientSums primed_coefficient_sums(const IntPolynomial& f, int precision) {
  const Integer m = prime_power(f.prime(), precision);
  CoefficientSums s = sums_of(weighted_coefficients(f, precision));
  s.a0_even = floor_mod(s.a0_even, m);
  s.a1_odd = floor_mod(s.a1_odd, m);
  s.d0_even = floor_mod(s.d0_even, m);
  s.d1_odd = floor_mod(s.d1_odd, m);
  s.primed = true;
  return s;
}

int delta_level(Prime p) noexcept { return p.value() <= 3 ? 3 : 2; }

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::kClosedFormP2: return "closed-form-p2";
    case Method::kClosedFormP2Larin: return "closed-form-p2-larin";
    case Method::kClosedFormP3: return "closed-form-p3";
    case Method::kClosedFormP3Degree5: return "closed-form-p3-deg5";
    case Method::kDeltaRule: return "delta-rule";
  }
  return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) noexcept {
  for (Method m : {Method::kClosedFormP2, Method::kClosedFormP2Larin, Method::kClosedFormP3,
                   Method::kClosedFormP3Degree5, Method::kDeltaRule}) {
    if (name == method_name(m)) return m;
  }
  return std::nullopt;
}

}  // namespace padicmin
