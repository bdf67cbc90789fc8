#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dfs/molecule_db.hpp"
#include "dfs/nu_engine.hpp"

namespace dfs {

/// One transcribed value from the published energy tables. SDFP rows store
/// the printed magnitude (-E); expected_energy() applies the sign.
struct ReferenceRow {
  std::string table;   // table id, e.g. "dfp_co"
  std::string label;   // molecule heading as printed
  std::string params;  // name of the constants set that reproduces the value
  PotentialVariant variant = PotentialVariant::DengFan;
  int n = 0, l = 0, dim = 3;
  double delta = 1.0;
  double value_printed = 0.0;

  double expected_energy() const {
    return variant == PotentialVariant::ShiftedDengFan ? -value_printed
                                                       : value_printed;
  }
};

struct ReferenceTable {
  std::string id;
  std::string caption;
  std::vector<ReferenceRow> rows;
};

/// Loads data/reference_tables.csv (columns
/// table,label,params,variant,n,l,dim,delta,value_ev).
std::vector<ReferenceTable> load_reference_tables(
    const std::filesystem::path& path);

/// Builtins plus the recovered constants sets from reference_params.csv.
MoleculeDb reference_molecule_db(const std::filesystem::path& params_csv);

struct RowCheck {
  const ReferenceRow* row;
  double expected = 0.0;
  double computed = 0.0;
  double deviation = 0.0;
  std::string error;  // nonempty if the computation failed
};

struct TableReport {
  std::string table;
  int delta1_rows = 0;
  int fractional_rows = 0;
  double max_dev_delta1 = 0.0;
  double max_dev_fractional = 0.0;
  std::vector<RowCheck> failures;  // rows beyond tolerance or errored
};

/// Recomputes every row of a table with the given gamma.
TableReport verify_table(const MoleculeDb& db, const ReferenceTable& table,
                         double tol, double gamma_param = 1.0);

}  // namespace dfs
