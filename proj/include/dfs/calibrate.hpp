#pragma once

#include "dfs/reference_tables.hpp"

namespace dfs {

/// Scan setup for recovering the auxiliary order gamma from a fractional
/// table column. Deterministic for fixed settings.
struct CalibrationSettings {
  double gamma_min = 0.05;
  double gamma_max = 5.0;
  double step = 1e-3;
  double refine_width = 1e-9;  // golden-section stop
};

struct CalibrationResult {
  std::string table;
  double delta = 0.0;
  int rows = 0;
  double gamma_star = 0.0;
  double rms_star = 0.0;
  double rms_at_gamma1 = 0.0;
  bool gamma1_within_2x = false;  // rms(1) <= 2 * rms(gamma_star)
};

/// RMS deviation of the recomputed delta-column against the printed values.
double calibration_rms(const MoleculeDb& db, const ReferenceTable& table,
                       double delta, double gamma_param);

/// Grid scan plus golden-section refinement of gamma. Throws InvalidInput
/// when the table has no rows at that delta.
CalibrationResult calibrate_gamma(const MoleculeDb& db,
                                  const ReferenceTable& table, double delta,
                                  const CalibrationSettings& settings = {});

}  // namespace dfs
