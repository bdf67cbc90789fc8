#pragma once

#include <cmath>

#include "dfs/errors.hpp"

namespace dfs::units {

/// Constants fixed to the values the reference tables were generated with.
/// Deliberately not CODATA: reproducing the published energies bit-for-bit
/// at the displayed precision is the contract here.
struct PhysicalConstants {
  double hbar_c;        // eV * Angstrom
  double cm_inv_to_ev;  // eV per cm^-1
  double amu_to_mev;    // MeV per amu
};

inline constexpr PhysicalConstants constants{1973.29, 1.239841875e-4,
                                             931.494028};

inline constexpr double hbar_c = constants.hbar_c;

inline double cm_inv_to_ev(double wavenumber) {
  if (!std::isfinite(wavenumber))
    throw InvalidInput("cm_inv_to_ev: non-finite wavenumber");
  return wavenumber * constants.cm_inv_to_ev;
}

inline double ev_to_cm_inv(double energy_ev) {
  if (!std::isfinite(energy_ev))
    throw InvalidInput("ev_to_cm_inv: non-finite energy");
  return energy_ev / constants.cm_inv_to_ev;
}

/// Reduced mass in amu -> rest energy mu*c^2 in eV.
inline double reduced_mass_to_ev(double mu_amu) {
  if (!(mu_amu > 0.0))
    throw InvalidInput("reduced_mass_to_ev: mass must be positive");
  return mu_amu * constants.amu_to_mev * 1e6;
}

}  // namespace dfs::units
