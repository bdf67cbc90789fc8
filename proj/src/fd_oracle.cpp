#include "dfs/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dfs/units.hpp"

namespace dfs {

namespace {

// eigenvalues of the tridiagonal matrix strictly below x (Sturm count)
int count_below(const std::vector<double>& diag, double off_sq, double x) {
  const double tiny = std::numeric_limits<double>::min();
  double d = diag[0] - x;
  if (d == 0.0) d = -tiny;
  int count = d < 0.0 ? 1 : 0;
  for (size_t i = 1; i < diag.size(); ++i) {
    d = diag[i] - x - off_sq / d;
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> build_potential(const PotentialSpec& spec, int l, int dim,
                                    CentrifugalMode mode, const GridSpec& grid,
                                    double* out_w) {
  const auto state = QuantumState::make(0, l, dim);
  const double e2 = state.eta * state.eta - 0.25;
  const double hc = units::hbar_c;
  const double w = 2.0 * units::reduced_mass_to_ev(spec.molecule.mu) / (hc * hc);
  *out_w = w;
  const double h = (grid.r_max - grid.r_min) / (grid.points + 1);
  std::vector<double> u(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double r = grid.r_min + (i + 1) * h;
    double cf;
    if (mode == CentrifugalMode::Pekeris)
      cf = e2 * pekeris_inverse_r2(r, spec.molecule.alpha);
    else
      cf = e2 / (r * r);
    u[i] = w * potential_eval(spec, r) + cf;
  }
  return u;
}

std::vector<double> solve_grid(const PotentialSpec& spec, int l, int dim,
                               CentrifugalMode mode, const GridSpec& grid,
                               int count) {
  double w = 0.0;
  const auto u = build_potential(spec, l, dim, mode, grid, &w);
  const double h = (grid.r_max - grid.r_min) / (grid.points + 1);
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> diag(grid.points);
  for (int i = 0; i < grid.points; ++i) diag[i] = 2.0 * inv_h2 + u[i];
  auto vals = sturm_lowest_eigenvalues(diag, -inv_h2, count);
  for (double& v : vals) v /= w;
  return vals;
}

}  // namespace

GridSpec GridSpec::defaults_for(const PotentialSpec& spec) {
  const double alpha = spec.molecule.alpha;
  return {1e-3 / alpha, spec.molecule.r_e + 30.0 / alpha, 20000};
}

std::vector<double> sturm_lowest_eigenvalues(const std::vector<double>& diag,
                                             double off, int count) {
  if (diag.empty()) throw InvalidInput("sturm: empty matrix");
  if (count < 1 || count > static_cast<int>(diag.size()))
    throw InvalidInput("sturm: bad eigenvalue count");
  const double off_sq = off * off;
  const double abs_off = std::fabs(off);

  double lo = diag[0], hi = diag[0];
  for (size_t i = 0; i < diag.size(); ++i) {
    const double left = (i > 0) ? abs_off : 0.0;
    const double right = (i + 1 < diag.size()) ? abs_off : 0.0;
    lo = std::min(lo, diag[i] - left - right);
    hi = std::max(hi, diag[i] + left + right);
  }

  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    int it = 0;
    for (; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;  // interval at machine resolution
      if (count_below(diag, off_sq, mid) > k)
        b = mid;
      else
        a = mid;
      if ((b - a) <= 1e-14 * std::max(1.0, std::max(std::fabs(a), std::fabs(b))))
        break;
    }
    if (it >= 200)
      throw NumericalError("sturm: bisection did not settle in 200 iterations");
    out[k] = 0.5 * (a + b);
    lo = out[k];  // eigenvalues come out ascending
  }
  return out;
}

OracleResult fd_spectrum(const PotentialSpec& spec, int l, int dim,
                         CentrifugalMode mode, const GridSpec& grid,
                         int count) {
  if (!(grid.r_min > 0.0) || !(grid.r_min < grid.r_max) || grid.points < 100)
    throw InvalidInput("fd_spectrum: bad grid");
  if (count < 1 || count > 20)
    throw InvalidInput("fd_spectrum: count must be in [1, 20]");

  OracleResult res;
  res.mode = mode;
  res.grid = grid;
  res.eigenvalues = solve_grid(spec, l, dim, mode, grid, count);

  GridSpec fine{grid.r_min, grid.r_max, 2 * grid.points + 1};  // half spacing
  const auto check = solve_grid(spec, l, dim, mode, fine, count);
  double diff = 0.0;
  for (int k = 0; k < count; ++k)
    diff = std::max(diff, std::fabs(res.eigenvalues[k] - check[k]));
  // 1.5x the half-spacing difference bounds the coarse-grid error for any
  // convergence order down to ~1.6 (the scheme is second order)
  res.estimated_error = 1.5 * diff;
  return res;
}

std::vector<ComparisonRow> compare_with_closed_form(
    const PotentialSpec& spec, const std::vector<int>& l_values, int dim,
    int n_lo, int n_hi, const GridSpec& grid) {
  if (n_lo < 0 || n_hi < n_lo)
    throw InvalidInput("compare_with_closed_form: bad n range");
  const auto cfg = make_config(1.0);
  std::vector<ComparisonRow> rows;
  for (int l : l_values) {
    const auto pek = solve_grid(spec, l, dim, CentrifugalMode::Pekeris, grid,
                                n_hi + 1);
    const auto exact = solve_grid(spec, l, dim,
                                  CentrifugalMode::ExactCentrifugal, grid,
                                  n_hi + 1);
    for (int n = n_lo; n <= n_hi; ++n) {
      const auto closed = energy(spec, QuantumState::make(n, l, dim), cfg);
      ComparisonRow row;
      row.n = n;
      row.l = l;
      row.closed_ev = closed.e_ev;
      row.fd_pekeris_ev = pek[n];
      row.fd_exact_ev = exact[n];
      row.delta_pekeris = closed.e_ev - pek[n];
      row.delta_exact = closed.e_ev - exact[n];
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace dfs
