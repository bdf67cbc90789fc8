#include "dfs/calibrate.hpp"

#include <cmath>
#include <limits>

namespace dfs {

double calibration_rms(const MoleculeDb& db, const ReferenceTable& table,
                       double delta, double gamma_param) {
  double sum_sq = 0.0;
  int count = 0;
  for (const auto& row : table.rows) {
    if (row.delta != delta) continue;
    ++count;
    double dev;
    try {
      const auto& mol = db.at(row.params);
      const auto spec = (row.variant == PotentialVariant::ShiftedDengFan)
                            ? PotentialSpec::shifted_deng_fan(mol)
                            : PotentialSpec::deng_fan(mol);
      const auto cfg = make_config(row.delta, gamma_param);
      const double e =
          energy(spec, QuantumState::make(row.n, row.l, row.dim), cfg).e_ev;
      dev = e - row.expected_energy();
    } catch (const Error&) {
      dev = 1.0;  // unbound or invalid at this gamma: heavy penalty
    }
    sum_sq += dev * dev;
  }
  if (count == 0) throw InvalidInput("no rows at requested delta");
  return std::sqrt(sum_sq / count);
}

CalibrationResult calibrate_gamma(const MoleculeDb& db,
                                  const ReferenceTable& table, double delta,
                                  const CalibrationSettings& st) {
  CalibrationResult res;
  res.table = table.id;
  res.delta = delta;
  for (const auto& row : table.rows)
    if (row.delta == delta) ++res.rows;
  if (res.rows == 0) throw InvalidInput("no rows at requested delta");

  // admissible gammas keep gamma - delta + 1 off the pole
  const double lo_admissible =
      std::max(st.gamma_min, std::max(1e-6, delta - 1.0 + 1e-6));

  double best_gamma = lo_admissible;
  double best_rms = std::numeric_limits<double>::infinity();
  const int steps = static_cast<int>(
      std::floor((st.gamma_max - st.gamma_min) / st.step + 0.5));
  for (int i = 0; i <= steps; ++i) {
    const double g = st.gamma_min + i * st.step;
    if (g < lo_admissible) continue;
    const double rms = calibration_rms(db, table, delta, g);
    if (rms < best_rms) {
      best_rms = rms;
      best_gamma = g;
    }
  }

  // golden-section refinement around the best grid point
  double a = std::max(lo_admissible, best_gamma - st.step);
  double b = std::min(st.gamma_max, best_gamma + st.step);
  const double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = calibration_rms(db, table, delta, x1);
  double f2 = calibration_rms(db, table, delta, x2);
  while (b - a > st.refine_width) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = calibration_rms(db, table, delta, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = calibration_rms(db, table, delta, x2);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = calibration_rms(db, table, delta, mid);
  res.gamma_star = (fm <= best_rms) ? mid : best_gamma;
  res.rms_star = std::min(fm, best_rms);
  res.rms_at_gamma1 = calibration_rms(db, table, delta, 1.0);
  res.gamma1_within_2x = res.rms_at_gamma1 <= 2.0 * res.rms_star;
  return res;
}

}  // namespace dfs
