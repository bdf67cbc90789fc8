#pragma once

#include <vector>

#include "dfs/nu_engine.hpp"

namespace dfs {

/// Uniform radial grid with Dirichlet ends; `points` counts interior nodes.
struct GridSpec {
  double r_min;
  double r_max;
  int points;

  /// r_min = 1e-3/alpha, r_max = r_e + 30/alpha, 20000 interior points.
  static GridSpec defaults_for(const PotentialSpec& spec);
};

enum class CentrifugalMode { ExactCentrifugal, Pekeris };

struct OracleResult {
  std::vector<double> eigenvalues;  // ascending, eV
  CentrifugalMode mode = CentrifugalMode::Pekeris;
  GridSpec grid{};
  double estimated_error = 0.0;  // eV, from the half-spacing comparison
};

/// Lowest `count` eigenvalues of the symmetric tridiagonal matrix with the
/// given diagonal and one constant off-diagonal value, by Sturm-sequence
/// bisection. Deterministic; throws NumericalError if a bisection fails to
/// settle within 200 iterations.
std::vector<double> sturm_lowest_eigenvalues(const std::vector<double>& diag,
                                             double off, int count);

/// 3-point finite-difference spectrum of -F'' + U(r) F on the grid, U built
/// from the potential plus the centrifugal term in the chosen mode. Classical
/// (delta = 1) semantics. count <= 20.
OracleResult fd_spectrum(const PotentialSpec& spec, int l, int dim,
                         CentrifugalMode mode, const GridSpec& grid,
                         int count);

struct ComparisonRow {
  int n, l;
  double closed_ev;
  double fd_pekeris_ev;
  double fd_exact_ev;
  double delta_pekeris;  // closed - FD(Pekeris)
  double delta_exact;    // closed - FD(Exact)
};

/// Closed form vs both FD modes over n in [n_lo, n_hi] for each l.
std::vector<ComparisonRow> compare_with_closed_form(
    const PotentialSpec& spec, const std::vector<int>& l_values, int dim,
    int n_lo, int n_hi, const GridSpec& grid);

}  // namespace dfs
