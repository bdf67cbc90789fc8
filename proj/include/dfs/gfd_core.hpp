#pragma once

#include <cmath>

#include "dfs/errors.hpp"

namespace dfs {

/// Gamma function. Lanczos approximation with reflection for x < 0.5;
/// relative error below 1e-12 on (0, 170).
double gamma_fn(double x);

/// Order parameters of the generalized fractional derivative
/// D^delta f = Q rho^{1-delta} f' with Q = Gamma(gamma)/Gamma(gamma-delta+1).
/// delta = 1 gives Q = 1 for every admissible gamma (classical limit);
/// gamma = 1 gives the conformable-derivative factor 1/Gamma(2-delta).
struct FractionalConfig {
  double delta;        // order, in (0, 1]
  double gamma_param;  // auxiliary order, > 0 and right of the gamma pole
  double q;            // Gamma(gamma)/Gamma(gamma - delta + 1)
  double lambda;       // 1/q
};

/// Validates the orders and fills in the derived factors.
FractionalConfig make_config(double delta, double gamma_param = 1.0);

/// One term c * rho^p.
struct Monomial {
  double coeff;
  double power;
};

/// D^delta [c rho^p] = c Q p rho^{p - delta}.
inline Monomial gfd_monomial(Monomial m, const FractionalConfig& cfg) {
  return {m.coeff * cfg.q * m.power, m.power - cfg.delta};
}

}  // namespace dfs
