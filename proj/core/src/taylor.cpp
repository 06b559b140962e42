#include "padicmin/taylor.hpp"

#include "padicmin/error.hpp"

namespace padicmin {

TaylorData taylor_data(const IntPolynomial& f, int level, const PadicApprox& x0,
                       int precision, bool with_gamma, const Limits& limits) {
  const Prime p = f.prime();
  if (x0.prime() != p) {
    throw Error(ErrorCode::kMismatchedOperands, "base point lives in a different Z_p");
  }
  if (level < 1 || precision < 1) {
    throw Error(ErrorCode::kPrecisionOutOfRange, "level and precision must be >= 1");
  }
  const int working = level + precision;
  if (working > limits.max_precision) {
    throw Error(ErrorCode::kPrecisionOutOfRange,
                "working precision " + std::to_string(working) + " exceeds " +
                    std::to_string(limits.max_precision));
  }
  const std::uint64_t steps = checked_table_size(p, level, limits.table_bound);
  const Integer modulus = prime_power(p, working);
  const Polynomial df = f.poly().derivative();
  const Polynomial half_d2f = f.poly().half_second_derivative();

  const Integer start = floor_mod(x0.value(), modulus);
  Integer x = start;
  Integer alpha = 1;
  Integer half_second = 0;
  for (std::uint64_t i = 0; i < steps; ++i) {
    Integer fp = floor_mod(df(x), modulus);
    if (with_gamma) {
      Integer fh = floor_mod(half_d2f(x), modulus);
      half_second = floor_mod(fh * alpha * alpha + fp * half_second, modulus);
    }
    alpha = floor_mod(fp * alpha, modulus);
    x = floor_mod(f.poly()(x), modulus);
  }

  const Integer pn = prime_power(p, level);
  Integer displacement = floor_mod(x - start, modulus);
  if (!mpz_divisible_p(displacement.get_mpz_t(), pn.get_mpz_t())) {
    throw Error(ErrorCode::kPrecondition,
                "base point " + start.get_str() + " is not fixed by f^{p^" +
                    std::to_string(level) + "} modulo p^" + std::to_string(level) +
                    "; f_{/n} lacks the assumed cycle");
  }
  Integer beta = displacement / pn;

  TaylorData out{
      PadicApprox(p, working, start, working),
      level,
      precision,
      PadicApprox(p, precision, alpha, precision),
      PadicApprox(p, precision, beta, precision),
      std::nullopt,
  };
  if (with_gamma) out.gamma = PadicApprox(p, precision, half_second, precision);
  return out;
}

LiftReport lift_check(const IntPolynomial& f, int level, const Limits& limits) {
  if (!is_full_cycle(f, level, limits)) {
    throw Error(ErrorCode::kPrecondition,
                "lift_check requires a full cycle at level " + std::to_string(level));
  }
  const Prime p = f.prime();
  auto data = taylor_data(f, level, PadicApprox(p, 1, 0), 1, false, limits);
  LiftReport r;
  r.level = level;
  r.beta_mod_p = data.beta.value().get_ui();
  r.alpha_mod_p = data.alpha.value().get_ui();
  r.lifts = r.beta_mod_p != 0 && r.alpha_mod_p == 1;
  return r;
}

}  // namespace padicmin
