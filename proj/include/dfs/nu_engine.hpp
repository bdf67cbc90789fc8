#pragma once

#include "dfs/gfd_core.hpp"
#include "dfs/molecule_db.hpp"

namespace dfs {

enum class PotentialVariant { DengFan, ShiftedDengFan, General };

/// A Deng-Fan-family potential V(r) = D_e (1 - b e^{-ar}/(1-e^{-ar}))^2 + V0
/// with b = e^{a r_e} - 1. DengFan has V0 = 0, ShiftedDengFan V0 = -D_e.
struct PotentialSpec {
  MoleculeParams molecule;
  PotentialVariant variant = PotentialVariant::DengFan;
  double v0 = 0.0;     // constant shift, eV
  double b = 0.0;      // e^{alpha r_e} - 1
  double de_ev = 0.0;  // dissociation energy in eV
  double kappa = 0.0;  // 2 mu c^2 / (alpha hbar c)^2, 1/eV

  static PotentialSpec deng_fan(const MoleculeParams& m);
  static PotentialSpec shifted_deng_fan(const MoleculeParams& m);
  static PotentialSpec general(const MoleculeParams& m, double v0_ev);
};

/// (n, l) in N spatial dimensions; eta = l + (N-2)/2 is the effective
/// angular number, equal eta means degenerate spectra.
struct QuantumState {
  int n = 0;
  int l = 0;
  int dim = 3;
  double eta = 0.5;

  static QuantumState make(int n, int l, int dim = 3);
};

struct XiCoefficients {
  double xi1, xi2, xi3;
  double s;  // xi1 + xi2 + xi3, independent of the energy and of V0
};

/// Energy-dependent pieces of the hypergeometric-type reduction at a trial
/// energy. The rho-dependent functions are linear in {1, rho^delta} (and the
/// quantization pieces carry rho^{delta-1}); only coefficients are stored.
struct NuIntermediates {
  double a_coef, b_coef, c_coef;   // -A rho^{2d} + B rho^d - C numerator
  double t1, t2, t3;               // T_i: xi_i with the energy folded in
  double k_minus;                  // coefficient of rho^{delta-1} in k_-
  double pi_const, pi_rho_delta;   // pi^-_GF = pi_const + pi_rho_delta rho^d
  double tau_const, tau_rho_delta; // tau_GF likewise
  double lambda_const;             // lambda(rho)   coefficient of rho^{d-1}
  double lambda_n_const;           // lambda_n(rho) coefficient of rho^{d-1}
};

struct EnergyResult {
  double e_ev;         // bound-state energy
  double epsilon;      // dimensionless: kappa * e_ev
  double sqrt_s;       // sqrt(xi1 + xi2 + xi3)
  double root;         // quantization quotient; root^2 = xi3 - epsilon
  double numerator;    // diagnostics: root = numerator / denominator
  double denominator;
};

/// V(r) in eV. Throws InvalidInput for r <= 0.
double potential_eval(const PotentialSpec& spec, double r);

/// Exponential-variable replacement for 1/r^2 (c0 = 1/12), in 1/Angstrom^2.
double pekeris_inverse_r2(double r, double alpha);

XiCoefficients xi_coefficients(const PotentialSpec& spec,
                               const QuantumState& state,
                               const FractionalConfig& cfg);

/// Closed-form bound-state energy. Throws NoBoundState when the discriminant
/// goes negative or the quantization root does.
EnergyResult energy(const PotentialSpec& spec, const QuantumState& state,
                    const FractionalConfig& cfg);

/// All intermediates at a trial energy e_ev (need not be an eigenvalue).
NuIntermediates nu_intermediates(const PotentialSpec& spec,
                                 const QuantumState& state,
                                 const FractionalConfig& cfg, double e_ev);

/// lambda_const - lambda_n_const at a trial energy; zero at the eigenvalue.
double nu_residual(const PotentialSpec& spec, const QuantumState& state,
                   const FractionalConfig& cfg, double e_ev);

/// Largest n with a bound state at this (l, dim). Throws NoBoundState when
/// even n = 0 is unbound.
int n_max(const PotentialSpec& spec, int l, int dim,
          const FractionalConfig& cfg);

/// epsilon = kappa * E and back.
double epsilon_of_energy(double e_ev, const PotentialSpec& spec);
double energy_of_epsilon(double epsilon, const PotentialSpec& spec);

}  // namespace dfs
