#include "dfs/reference_tables.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace dfs {

namespace {

const std::map<std::string, std::string>& captions() {
  static const std::map<std::string, std::string> c = {
      {"dfp_co", "DFP CO: fractional orders and dimensions"},
      {"dfp_i2", "DFP I2: fractional orders and dimensions"},
      {"dfp_no", "DFP NO: fractional orders and dimensions"},
      {"dfp_n2", "DFP N2: fractional orders and dimensions"},
      {"sdfp_co", "SDFP CO: fractional orders and dimensions (-E printed)"},
      {"sdfp_i2", "SDFP I2: fractional orders and dimensions (-E printed)"},
      {"sdfp_no", "SDFP NO: fractional orders and dimensions (-E printed)"},
      {"sdfp_n2", "SDFP N2: fractional orders and dimensions (-E printed)"},
      {"cmp_dfp_lih", "DFP LiH vs literature"},
      {"cmp_dfp_sch", "DFP ScH vs literature"},
      {"cmp_dfp_hcl", "DFP HCl vs literature"},
      {"cmp_dfp_co", "DFP CO vs literature"},
      {"cmp_dfp_hf", "DFP HF vs literature"},
      {"cmp_dfp_o2col", "DFP column printed as O2 (follows the H2 constants)"},
      {"cmp_dfp_h2col", "DFP column printed as H2 (follows O2-like constants)"},
      {"cmp_sdfp_co", "SDFP CO vs literature (-E printed)"},
      {"cmp_sdfp_hcl", "SDFP HCl vs literature (-E printed)"},
      {"cmp_sdfp_lih", "SDFP LiH vs literature (-E printed)"},
      {"cmp_sdfp_sch", "SDFP ScH vs literature (-E printed)"},
      {"cmp_sdfp_h2", "SDFP H2 vs literature (-E printed)"},
      {"cmp_sdfp_i2", "SDFP I2 vs literature (-E printed)"},
  };
  return c;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

std::vector<ReferenceTable> load_reference_tables(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open reference tables: " + path.string());

  std::vector<ReferenceTable> tables;
  auto table_of = [&](const std::string& id) -> ReferenceTable& {
    for (auto& t : tables)
      if (t.id == id) return t;
    ReferenceTable t;
    t.id = id;
    auto it = captions().find(id);
    t.caption = (it != captions().end()) ? it->second : id;
    tables.push_back(std::move(t));
    return tables.back();
  };

  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "table,label,params,variant,n,l,dim,delta,value_ev")
        throw ParseError(line_no, "unexpected reference-table header");
      header_seen = true;
      continue;
    }
    auto f = split_csv(line);
    if (f.size() != 9) throw ParseError(line_no, "expected 9 fields");
    ReferenceRow row;
    row.table = f[0];
    row.label = f[1];
    row.params = f[2];
    if (f[3] == "df")
      row.variant = PotentialVariant::DengFan;
    else if (f[3] == "sdf")
      row.variant = PotentialVariant::ShiftedDengFan;
    else
      throw ParseError(line_no, "variant must be df or sdf");
    try {
      row.n = std::stoi(f[4]);
      row.l = std::stoi(f[5]);
      row.dim = std::stoi(f[6]);
      row.delta = std::stod(f[7]);
      row.value_printed = std::stod(f[8]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "malformed numeric field");
    }
    table_of(row.table).rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError(1, "empty reference-table file");
  return tables;
}

MoleculeDb reference_molecule_db(const std::filesystem::path& params_csv) {
  MoleculeDb db = MoleculeDb::with_builtins();
  db.merge(load_molecules(params_csv));
  return db;
}

TableReport verify_table(const MoleculeDb& db, const ReferenceTable& table,
                         double tol, double gamma_param) {
  TableReport rep;
  rep.table = table.id;
  for (const auto& row : table.rows) {
    RowCheck chk;
    chk.row = &row;
    chk.expected = row.expected_energy();
    const bool is_delta1 = row.delta == 1.0;
    try {
      const auto& mol = db.at(row.params);
      const auto spec = (row.variant == PotentialVariant::ShiftedDengFan)
                            ? PotentialSpec::shifted_deng_fan(mol)
                            : PotentialSpec::deng_fan(mol);
      const auto cfg = make_config(row.delta, gamma_param);
      chk.computed = energy(spec, QuantumState::make(row.n, row.l, row.dim),
                            cfg).e_ev;
      chk.deviation = std::fabs(chk.computed - chk.expected);
    } catch (const Error& e) {
      chk.error = e.what();
      chk.deviation = std::numeric_limits<double>::infinity();
    }
    if (is_delta1) {
      ++rep.delta1_rows;
      rep.max_dev_delta1 = std::max(rep.max_dev_delta1, chk.deviation);
    } else {
      ++rep.fractional_rows;
      rep.max_dev_fractional = std::max(rep.max_dev_fractional, chk.deviation);
    }
    if (!chk.error.empty() || chk.deviation > tol)
      rep.failures.push_back(chk);
  }
  return rep;
}

}  // namespace dfs
