// df-spectra: ro-vibrational bound states of diatomic molecules in the
// (shifted) Deng-Fan potential, N dimensions, fractional order delta.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dfs/calibrate.hpp"
#include "dfs/fd_oracle.hpp"
#include "dfs/nu_engine.hpp"
#include "dfs/reference_tables.hpp"
#include "dfs/units.hpp"
#include "dfs/wavefunction.hpp"

namespace {

using dfs::PotentialSpec;
using dfs::PotentialVariant;
using dfs::QuantumState;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::stod(fmt12(v)); }

struct LookupFailure {
  std::string message;
};

dfs::MoleculeDb molecule_db(const std::string& extra_file) {
  auto db = dfs::MoleculeDb::with_builtins();
  if (const char* env = std::getenv("DF_SPECTRA_MOLECULES"))
    db.merge(dfs::load_molecules(env));
  if (!extra_file.empty()) db.merge(dfs::load_molecules(extra_file));
  return db;
}

PotentialSpec make_potential(const dfs::MoleculeDb& db,
                             const std::string& molecule,
                             const std::string& variant, double v0) {
  const auto* mol = db.find(molecule);
  if (!mol) throw LookupFailure{"unknown molecule '" + molecule + "'"};
  if (variant == "df") return PotentialSpec::deng_fan(*mol);
  if (variant == "sdf") return PotentialSpec::shifted_deng_fan(*mol);
  return PotentialSpec::general(*mol, v0);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw dfs::IoError("cannot open output file: " + path);
  return file;
}

const std::string kDeltaRangeMsg = "delta must lie in (0, 1]";

CLI::Validator delta_validator() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          const double v = std::stod(s);
          if (v > 0.0 && v <= 1.0) return {};
        } catch (...) {
        }
        return kDeltaRangeMsg;
      },
      "DELTA");
}

std::string variant_name(PotentialVariant v) {
  switch (v) {
    case PotentialVariant::DengFan: return "df";
    case PotentialVariant::ShiftedDengFan: return "sdf";
    default: return "general";
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "Bound-state energies and radial wavefunctions of diatomic molecules\n"
      "in the (shifted) Deng-Fan potential, for N dimensions and fractional\n"
      "order delta, with verification against embedded reference tables and\n"
      "an independent finite-difference eigensolver."};
  app.require_subcommand(1);

  std::string data_dir = DFS_DATA_DIR;
  app.add_option("--data", data_dir, "data directory (reference tables)")
      ->capture_default_str();

  // --- energy ---------------------------------------------------------
  auto* c_energy = app.add_subcommand("energy", "single bound-state energy");
  struct {
    std::string molecule, potential = "df", format = "text", mol_file;
    double v0 = 0.0, delta = 1.0, gamma = 1.0;
    int n = 0, l = 0, dim = 3;
  } eo;
  c_energy->add_option("--molecule", eo.molecule)->required();
  c_energy->add_option("--potential", eo.potential)
      ->check(CLI::IsMember({"df", "sdf", "general"}));
  c_energy->add_option("--v0", eo.v0, "constant shift in eV (general)");
  c_energy->add_option("--n", eo.n)->check(CLI::NonNegativeNumber);
  c_energy->add_option("--l", eo.l)->check(CLI::NonNegativeNumber);
  c_energy->add_option("--dim", eo.dim)->check(CLI::Range(2, 100));
  c_energy->add_option("--delta", eo.delta)->check(delta_validator());
  c_energy->add_option("--gamma", eo.gamma)->check(CLI::PositiveNumber);
  c_energy->add_option("--format", eo.format)
      ->check(CLI::IsMember({"text", "json", "csv"}));
  c_energy->add_option("--molecules-file", eo.mol_file);
  c_energy->callback([&] {
    const auto db = molecule_db(eo.mol_file);
    const auto spec = make_potential(db, eo.molecule, eo.potential, eo.v0);
    const auto cfg = dfs::make_config(eo.delta, eo.gamma);
    const auto res =
        dfs::energy(spec, QuantumState::make(eo.n, eo.l, eo.dim), cfg);
    if (eo.format == "text") {
      std::printf("%.8f\n", res.e_ev);
    } else if (eo.format == "csv") {
      std::printf("molecule,variant,n,l,dim,delta,gamma,e_ev,epsilon,sqrt_s,root\n");
      std::printf("%s,%s,%d,%d,%d,%s,%s,%s,%s,%s,%s\n", eo.molecule.c_str(),
                  eo.potential.c_str(), eo.n, eo.l, eo.dim,
                  fmt12(eo.delta).c_str(), fmt12(eo.gamma).c_str(),
                  fmt12(res.e_ev).c_str(), fmt12(res.epsilon).c_str(),
                  fmt12(res.sqrt_s).c_str(), fmt12(res.root).c_str());
    } else {
      nlohmann::json j{{"molecule", eo.molecule},
                       {"variant", eo.potential},
                       {"n", eo.n},
                       {"l", eo.l},
                       {"dim", eo.dim},
                       {"delta", round12(eo.delta)},
                       {"gamma", round12(eo.gamma)},
                       {"e_ev", round12(res.e_ev)},
                       {"epsilon", round12(res.epsilon)},
                       {"sqrt_s", round12(res.sqrt_s)},
                       {"root", round12(res.root)}};
      std::cout << j.dump(2) << "\n";
    }
  });

  // --- table ----------------------------------------------------------
  auto* c_table = app.add_subcommand(
      "table", "energy table over quantum numbers, dimensions and deltas");
  struct {
    std::vector<std::string> molecules;
    std::string potential = "df", out, mol_file;
    double v0 = 0.0, gamma = 1.0;
    int n_max = 3, l_max = 3;
    std::vector<int> dims{3};
    std::vector<double> deltas;
  } to;
  c_table->add_option("--molecule", to.molecules)->required();
  c_table->add_option("--potential", to.potential)
      ->check(CLI::IsMember({"df", "sdf", "general"}));
  c_table->add_option("--v0", to.v0);
  c_table->add_option("--n-max", to.n_max)->check(CLI::NonNegativeNumber);
  c_table->add_option("--l-max", to.l_max)->check(CLI::NonNegativeNumber);
  c_table->add_option("--dim", to.dims)->check(CLI::Range(2, 100));
  c_table->add_option("--delta", to.deltas)
      ->required()
      ->check(delta_validator());
  c_table->add_option("--gamma", to.gamma)->check(CLI::PositiveNumber);
  c_table->add_option("-o,--output", to.out);
  c_table->add_option("--molecules-file", to.mol_file);
  c_table->callback([&] {
    const auto db = molecule_db(to.mol_file);
    std::ofstream file;
    auto& os = open_output(file, to.out);
    auto dims = to.dims;
    auto deltas = to.deltas;
    std::sort(dims.begin(), dims.end());
    std::sort(deltas.begin(), deltas.end());
    os << "molecule,variant,n,l,dim,delta,e_ev\n";
    for (const auto& name : to.molecules) {
      const auto spec = make_potential(db, name, to.potential, to.v0);
      for (int n = 0; n <= to.n_max; ++n)
        for (int l = 0; l <= std::min(n, to.l_max); ++l)
          for (int dim : dims)
            for (double d : deltas) {
              const auto res = dfs::energy(
                  spec, QuantumState::make(n, l, dim),
                  dfs::make_config(d, to.gamma));
              os << name << ',' << to.potential << ',' << n << ',' << l << ','
                 << dim << ',' << fmt12(d) << ',' << fmt12(res.e_ev) << "\n";
            }
    }
  });

  // --- verify ---------------------------------------------------------
  auto* c_verify = app.add_subcommand(
      "verify", "recompute the embedded reference tables and report deviations");
  struct {
    std::vector<std::string> tables{"all"};
    double tol = 1e-6, gamma = 1.0;
    bool strict = false;
    bool delta_one_only = true;
  } vo;
  c_verify->add_option("--tables", vo.tables, "table ids or 'all'");
  c_verify->add_option("--tol", vo.tol)->check(CLI::PositiveNumber);
  c_verify->add_option("--gamma", vo.gamma)->check(CLI::PositiveNumber);
  c_verify->add_flag("--strict", vo.strict,
                     "fractional-delta rows also gate the exit code");
  c_verify->add_flag("--delta-one-only,!--include-fractional",
                     vo.delta_one_only,
                     "report only delta=1 rows (default on)");
  c_verify->callback([&] {
    const auto db =
        dfs::reference_molecule_db(data_dir + "/reference_params.csv");
    const auto tables =
        dfs::load_reference_tables(data_dir + "/reference_tables.csv");
    const bool all =
        std::find(vo.tables.begin(), vo.tables.end(), "all") != vo.tables.end();
    for (const auto& want : vo.tables) {
      if (want == "all") continue;
      if (std::none_of(tables.begin(), tables.end(),
                       [&](const auto& t) { return t.id == want; }))
        throw LookupFailure{"unknown table id '" + want + "'"};
    }
    bool pass = true;
    int checked = 0;
    for (const auto& t : tables) {
      if (!all && std::find(vo.tables.begin(), vo.tables.end(), t.id) ==
                      vo.tables.end())
        continue;
      ++checked;
      const auto rep = dfs::verify_table(db, t, vo.tol, vo.gamma);
      const bool d1_ok = rep.max_dev_delta1 <= vo.tol;
      const bool frac_ok = rep.fractional_rows == 0 ||
                           rep.max_dev_fractional <= vo.tol;
      bool table_pass = d1_ok && (!vo.strict || frac_ok);
      std::printf("%-16s delta1 rows %3d max|dev| %.3e %s", t.id.c_str(),
                  rep.delta1_rows, rep.max_dev_delta1, d1_ok ? "ok" : "FAIL");
      if (!vo.delta_one_only && rep.fractional_rows > 0)
        std::printf(" | fractional rows %3d max|dev| %.3e %s",
                    rep.fractional_rows, rep.max_dev_fractional,
                    frac_ok ? "ok" : (vo.strict ? "FAIL" : "warn"));
      std::printf("  -> %s\n", table_pass ? "PASS" : "FAIL");
      pass = pass && table_pass;
    }
    if (checked == 0) throw LookupFailure{"no tables selected"};
    std::printf("verify: %s\n", pass ? "PASS" : "FAIL");
    if (!pass) std::exit(1);
  });

  // --- calibrate ------------------------------------------------------
  auto* c_cal = app.add_subcommand(
      "calibrate", "recover gamma for a fractional column of a reference table");
  struct {
    std::string table, format = "text";
    double delta = 0.5;
    dfs::CalibrationSettings settings;
    bool all = false;
  } co;
  c_cal->add_option("--table", co.table, "table id (or use --all)");
  c_cal->add_flag("--all", co.all, "every fractional column of every table");
  c_cal->add_option("--delta", co.delta)->check(delta_validator());
  c_cal->add_option("--gamma-min", co.settings.gamma_min);
  c_cal->add_option("--gamma-max", co.settings.gamma_max);
  c_cal->add_option("--step", co.settings.step)->check(CLI::PositiveNumber);
  c_cal->add_option("--format", co.format)
      ->check(CLI::IsMember({"text", "csv"}));
  c_cal->callback([&] {
    const auto db =
        dfs::reference_molecule_db(data_dir + "/reference_params.csv");
    const auto tables =
        dfs::load_reference_tables(data_dir + "/reference_tables.csv");
    std::vector<dfs::CalibrationResult> results;
    if (co.all) {
      for (const auto& t : tables) {
        std::vector<double> deltas;
        for (const auto& r : t.rows)
          if (r.delta != 1.0 &&
              std::find(deltas.begin(), deltas.end(), r.delta) == deltas.end())
            deltas.push_back(r.delta);
        std::sort(deltas.begin(), deltas.end());
        for (double d : deltas)
          results.push_back(dfs::calibrate_gamma(db, t, d, co.settings));
      }
    } else {
      const auto it = std::find_if(tables.begin(), tables.end(),
                                   [&](const auto& t) { return t.id == co.table; });
      if (it == tables.end())
        throw LookupFailure{"unknown table id '" + co.table + "'"};
      try {
        results.push_back(dfs::calibrate_gamma(db, *it, co.delta, co.settings));
      } catch (const dfs::InvalidInput& e) {
        throw LookupFailure{e.what()};
      }
    }
    if (co.format == "csv") {
      std::printf("table,delta,rows,gamma_star,rms_star,rms_gamma1,gamma1_within_2x\n");
      for (const auto& r : results)
        std::printf("%s,%s,%d,%.9f,%.6e,%.6e,%d\n", r.table.c_str(),
                    fmt12(r.delta).c_str(), r.rows, r.gamma_star, r.rms_star,
                    r.rms_at_gamma1, r.gamma1_within_2x ? 1 : 0);
    } else {
      for (const auto& r : results)
        std::printf(
            "%-16s delta %-4s rows %2d  gamma* = %.9f  rms* = %.3e  "
            "rms(gamma=1) = %.3e  gamma=1 within 2x: %s\n",
            r.table.c_str(), fmt12(r.delta).c_str(), r.rows, r.gamma_star,
            r.rms_star, r.rms_at_gamma1, r.gamma1_within_2x ? "yes" : "no");
    }
  });

  // --- wavefunction ---------------------------------------------------
  auto* c_wf = app.add_subcommand("wavefunction",
                                  "sample a normalized radial eigenfunction");
  struct {
    std::string molecule, potential = "df", out, mol_file;
    double v0 = 0.0, delta = 1.0, gamma = 1.0, r_min = 0.0, r_max = 0.0;
    int n = 0, l = 0, dim = 3, samples = 400;
  } wo;
  c_wf->add_option("--molecule", wo.molecule)->required();
  c_wf->add_option("--potential", wo.potential)
      ->check(CLI::IsMember({"df", "sdf", "general"}));
  c_wf->add_option("--v0", wo.v0);
  c_wf->add_option("--n", wo.n)->check(CLI::NonNegativeNumber);
  c_wf->add_option("--l", wo.l)->check(CLI::NonNegativeNumber);
  c_wf->add_option("--dim", wo.dim)->check(CLI::Range(2, 100));
  c_wf->add_option("--delta", wo.delta)->check(delta_validator());
  c_wf->add_option("--gamma", wo.gamma)->check(CLI::PositiveNumber);
  c_wf->add_option("--r-min", wo.r_min)->check(CLI::PositiveNumber);
  c_wf->add_option("--r-max", wo.r_max)->check(CLI::PositiveNumber);
  c_wf->add_option("--samples", wo.samples)->check(CLI::Range(1, 1000000));
  c_wf->add_option("-o,--output", wo.out);
  c_wf->add_option("--molecules-file", wo.mol_file);
  c_wf->callback([&] {
    const auto db = molecule_db(wo.mol_file);
    const auto spec = make_potential(db, wo.molecule, wo.potential, wo.v0);
    const auto cfg = dfs::make_config(wo.delta, wo.gamma);
    auto wf = dfs::normalize(dfs::make_wavefunction(
        spec, QuantumState::make(wo.n, wo.l, wo.dim), cfg));
    const double alpha = spec.molecule.alpha;
    const double r_lo = wo.r_min > 0 ? wo.r_min
                                     : std::max(1e-3, 0.3 * spec.molecule.r_e);
    const double r_hi = wo.r_max > 0 ? wo.r_max
                                     : spec.molecule.r_e + 10.0 / alpha;
    std::ofstream file;
    auto& os = open_output(file, wo.out);
    if (wf.experimental)
      os << "# experimental: fractional order delta="
         << fmt12(wo.delta) << "; only construction, decay and realness "
         << "are validated\n";
    os << "r_angstrom,phi,F,rho\n";
    for (int i = 0; i < wo.samples; ++i) {
      const double r =
          wo.samples == 1
              ? r_lo
              : r_lo + (r_hi - r_lo) * i / double(wo.samples - 1);
      const double phi = dfs::evaluate(wf, r);
      const double big_f =
          phi * std::pow(r, 0.5 * (wo.dim - 1));
      os << fmt12(r) << ',' << fmt12(phi) << ',' << fmt12(big_f) << ','
         << fmt12(std::exp(-alpha * r)) << "\n";
    }
  });

  // --- potential ------------------------------------------------------
  auto* c_pot = app.add_subcommand("potential", "sample V(r) for plotting");
  struct {
    std::vector<std::string> molecules;
    std::string potential = "df", out, mol_file;
    double v0 = 0.0, r_min = 0.0, r_max = 0.0;
    int samples = 400;
  } po;
  c_pot->add_option("--molecule", po.molecules)->required();
  c_pot->add_option("--potential", po.potential)
      ->check(CLI::IsMember({"df", "sdf", "general"}));
  c_pot->add_option("--v0", po.v0);
  c_pot->add_option("--r-min", po.r_min)->check(CLI::PositiveNumber);
  c_pot->add_option("--r-max", po.r_max)->check(CLI::PositiveNumber);
  c_pot->add_option("--samples", po.samples)->check(CLI::Range(1, 1000000));
  c_pot->add_option("-o,--output", po.out);
  c_pot->add_option("--molecules-file", po.mol_file);
  c_pot->callback([&] {
    const auto db = molecule_db(po.mol_file);
    std::ofstream file;
    auto& os = open_output(file, po.out);
    os << "molecule,variant,r_angstrom,v_ev\n";
    for (const auto& name : po.molecules) {
      const auto spec = make_potential(db, name, po.potential, po.v0);
      const double r_lo =
          po.r_min > 0 ? po.r_min : 0.55 * spec.molecule.r_e;
      const double r_hi = po.r_max > 0
                              ? po.r_max
                              : spec.molecule.r_e + 8.0 / spec.molecule.alpha;
      for (int i = 0; i < po.samples; ++i) {
        const double r =
            po.samples == 1
                ? r_lo
                : r_lo + (r_hi - r_lo) * i / double(po.samples - 1);
        os << name << ',' << po.potential << ',' << fmt12(r) << ','
           << fmt12(dfs::potential_eval(spec, r)) << "\n";
      }
    }
  });

  // --- oracle ---------------------------------------------------------
  auto* c_or = app.add_subcommand(
      "oracle", "closed form vs finite-difference eigensolver (delta=1)");
  struct {
    std::string molecule, potential = "df", out, mol_file;
    double v0 = 0.0;
    std::vector<int> ls{0};
    int n_min = 0, n_max = 3, dim = 3, points = 20000;
  } oo;
  c_or->add_option("--molecule", oo.molecule)->required();
  c_or->add_option("--potential", oo.potential)
      ->check(CLI::IsMember({"df", "sdf", "general"}));
  c_or->add_option("--v0", oo.v0);
  c_or->add_option("--l", oo.ls)->check(CLI::NonNegativeNumber);
  c_or->add_option("--n-min", oo.n_min)->check(CLI::NonNegativeNumber);
  c_or->add_option("--n-max", oo.n_max)->check(CLI::NonNegativeNumber);
  c_or->add_option("--dim", oo.dim)->check(CLI::Range(2, 100));
  c_or->add_option("--grid-points", oo.points)->check(CLI::Range(100, 2000000));
  c_or->add_option("-o,--output", oo.out);
  c_or->add_option("--molecules-file", oo.mol_file);
  c_or->callback([&] {
    const auto db = molecule_db(oo.mol_file);
    const auto spec = make_potential(db, oo.molecule, oo.potential, oo.v0);
    auto grid = dfs::GridSpec::defaults_for(spec);
    grid.points = oo.points;
    const auto rows = dfs::compare_with_closed_form(spec, oo.ls, oo.dim,
                                                    oo.n_min, oo.n_max, grid);
    std::ofstream file;
    auto& os = open_output(file, oo.out);
    os << "molecule,n,l,closed_ev,fd_pekeris_ev,fd_exact_ev,delta_pekeris,"
          "delta_exact\n";
    for (const auto& r : rows)
      os << oo.molecule << ',' << r.n << ',' << r.l << ','
         << fmt12(r.closed_ev) << ',' << fmt12(r.fd_pekeris_ev) << ','
         << fmt12(r.fd_exact_ev) << ',' << fmt12(r.delta_pekeris) << ','
         << fmt12(r.delta_exact) << "\n";
  });

  // --- molecules ------------------------------------------------------
  auto* c_mol = app.add_subcommand("molecules", "list the molecule database");
  struct {
    std::string mol_file;
  } mo;
  c_mol->add_option("--file", mo.mol_file, "extra molecule file to merge");
  c_mol->callback([&] {
    const auto db = molecule_db(mo.mol_file);
    std::cout << dfs::serialize_molecules(db.all());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  } catch (const LookupFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const dfs::NoBoundState& e) {
    std::cerr << "no bound state: " << e.what() << "\n";
    return 3;
  } catch (const dfs::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dfs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dfs::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const dfs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
