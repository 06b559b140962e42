#pragma once

#include <optional>

#include "padicmin/dynamics.hpp"

namespace padicmin {

/// First-order (and optionally second-order) data of g_n = f^{p^n} around a
/// point x_0 that is periodic modulo p^n with period dividing p^n.
struct TaylorData {
  PadicApprox base_point;
  int level;
  int precision;
  PadicApprox alpha;  ///< (g_n)'(x_0) mod p^precision
  PadicApprox beta;   ///< (g_n(x_0) - x_0) / p^n mod p^precision
  std::optional<PadicApprox> gamma;  ///< (g_n)''(x_0) / 2 mod p^precision

  /// The affine fiber map z -> alpha z + beta.
  PadicApprox phi(const PadicApprox& z) const { return alpha * z + beta; }
};

/// Iterates f pointwise p^n times at precision n + N; never composes
/// symbolically. Throws Error(kPrecondition) if g_n(x_0) != x_0 mod p^n.
TaylorData taylor_data(const IntPolynomial& f, int level, const PadicApprox& x0,
                       int precision, bool with_gamma = false,
                       const Limits& limits = {});

struct LiftReport {
  int level = 0;
  bool lifts = false;       ///< f_{/n+1} has a full cycle
  Residue beta_mod_p = 0;   ///< must be nonzero
  Residue alpha_mod_p = 0;  ///< must be 1
};

/// Decides whether a full cycle of f_{/n} lifts to level n+1 from the
/// Taylor data at x = 0 alone. Throws Error(kPrecondition) when f_{/n} is
/// not itself a full cycle.
LiftReport lift_check(const IntPolynomial& f, int level, const Limits& limits = {});

}  // namespace padicmin
