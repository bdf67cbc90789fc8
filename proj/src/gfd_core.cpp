#include "dfs/gfd_core.hpp"

#include <cmath>

namespace dfs {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kG = 4.7421875;
constexpr double kCoef[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double gamma_lanczos(double x) {
  // valid for x >= 0.5
  double ser = kCoef[0];
  for (int i = 1; i < 15; ++i) ser += kCoef[i] / (x - 1.0 + i);
  const double t = x + kG - 0.5;
  return std::sqrt(2.0 * kPi) * ser * std::exp((x - 0.5) * std::log(t) - t);
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw InvalidInput("gamma_fn: non-finite argument");
  if (x <= 0.0 && x == std::floor(x))
    throw PoleError("gamma_fn: pole at non-positive integer");
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return kPi / (std::sin(kPi * x) * gamma_lanczos(1.0 - x));
  }
  return gamma_lanczos(x);
}

FractionalConfig make_config(double delta, double gamma_param) {
  if (!(delta > 0.0) || !(delta <= 1.0))
    throw InvalidInput("make_config: delta must lie in (0, 1]");
  if (!(gamma_param > 0.0))
    throw InvalidInput("make_config: gamma must be positive");
  if (!(gamma_param - delta + 1.0 > 0.0))
    throw InvalidInput("make_config: gamma - delta + 1 must stay positive");
  if (delta == 1.0) return {1.0, gamma_param, 1.0, 1.0};  // classical limit
  const double q = gamma_fn(gamma_param) / gamma_fn(gamma_param - delta + 1.0);
  if (!(q > 0.0) || !std::isfinite(q))
    throw NumericalError("make_config: Q factor not finite/positive");
  return {delta, gamma_param, q, 1.0 / q};
}

}  // namespace dfs
