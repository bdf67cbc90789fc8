#pragma once

#include <utility>
#include <vector>

#include "dfs/nu_engine.hpp"

namespace dfs {

/// Radial eigenfunction in the variable rho = e^{-alpha r}:
///   F(rho) = rho^{exp_rho} (1 - rho^delta)^{exp_one_minus} * P(rho)
/// where P is the polynomial left over from the Rodrigues kernel after the
/// weight cancels (monomials in rho^delta, exactly n+1 of them), and
///   phi(r) = r^{-(N-1)/2} g_n F(rho(r)).
/// Magnitudes span hundreds of orders before normalization, so the
/// normalization constant is carried as log_g_n.
struct RadialWavefunction {
  PotentialSpec spec;
  QuantumState state;
  FractionalConfig cfg;
  EnergyResult level;
  double exp_rho;        // (Q delta - 1)/2 + sqrt(xi3 - epsilon)
  double exp_one_minus;  // 1/2 + (Lambda/delta) sqrt(S)
  std::vector<Monomial> series;  // P's terms; powers are multiples of delta
  double log_g_n = 0.0;
  bool experimental = false;  // true for delta < 1

  double g_n() const;
};

/// Exponents of chi(rho): (on rho, on (1 - rho^delta)).
std::pair<double, double> chi_exponents(const PotentialSpec& spec,
                                        const QuantumState& state,
                                        const FractionalConfig& cfg,
                                        double e_ev);

/// Weight omega(rho) = prefactor * rho^{exp_rho} (1-rho^delta)^{exp_one_minus}.
struct WeightFunction {
  double prefactor;  // Lambda
  double exp_rho;
  double exp_one_minus;
};

WeightFunction weight(const PotentialSpec& spec, const QuantumState& state,
                      const FractionalConfig& cfg, double e_ev);

/// Expands d^n/drho^n of the Rodrigues kernel and divides out the weight:
/// the n+1 surviving monomials of P (powers 0, delta, ..., n*delta), with
/// the Q^n factor folded in. Terms whose magnitude at rho(r_e) falls below
/// truncation_tol times the largest are dropped.
std::vector<Monomial> rodrigues_series(const PotentialSpec& spec,
                                       const QuantumState& state,
                                       const FractionalConfig& cfg,
                                       double e_ev,
                                       double truncation_tol = 1e-14);

/// Builds the (unnormalized, g_n = 1) wavefunction for the closed-form level.
RadialWavefunction make_wavefunction(const PotentialSpec& spec,
                                     const QuantumState& state,
                                     const FractionalConfig& cfg,
                                     double truncation_tol = 1e-14);

/// phi(r). Evaluated in log space; underflows far in the tails go to 0.
double evaluate(const RadialWavefunction& wf, double r);

/// Returns a copy with log_g_n set so that the integral of |phi|^2 r^{N-1}
/// over (0, r_cut], r_cut = r_e + 40/alpha, equals 1 (composite
/// Gauss-Legendre with `quadrature_points` nodes total).
RadialWavefunction normalize(const RadialWavefunction& wf,
                             int quadrature_points = 2048);

/// Strict sign changes of phi on a uniform grid, each confirmed by bisection.
int count_nodes(const RadialWavefunction& wf, double r_lo, double r_hi,
                int samples);

}  // namespace dfs
