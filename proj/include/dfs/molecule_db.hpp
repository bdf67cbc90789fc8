#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dfs/errors.hpp"

namespace dfs {

/// Spectroscopic constants of one diatomic molecule.
struct MoleculeParams {
  std::string name;
  double r_e;    // equilibrium bond length, Angstrom
  double alpha;  // screening parameter, 1/Angstrom
  double mu;     // reduced mass, amu
  double d_e;    // dissociation energy, cm^-1

  /// Throws InvalidInput unless all fields are positive and the name nonempty.
  void validate() const;
};

/// The ten embedded molecules (NO, CO, I2, N2, O2, H2, HF, LiH, ScH, HCl).
const std::vector<MoleculeParams>& builtin_molecules();

/// Parses a molecule file (see file format below). Throws IoError on a
/// missing/unreadable file and ParseError (with line number) on bad rows.
///
/// Format, UTF-8 text, '#' starts a comment line:
///   name,re_angstrom,alpha_per_angstrom,mu_amu,De_per_cm
///   CO,1.1282,2.2994,6.860586,87471.42567
std::vector<MoleculeParams> load_molecules(const std::filesystem::path& path);

/// Renders records in the same format load_molecules reads.
std::string serialize_molecules(const std::vector<MoleculeParams>& mols);

/// Immutable after construction; lookups are case-insensitive.
class MoleculeDb {
public:
  MoleculeDb() = default;
  static MoleculeDb with_builtins();

  /// Adds records, overriding any existing entry with the same name.
  void merge(const std::vector<MoleculeParams>& mols);

  const MoleculeParams* find(std::string_view name) const;

  /// find() or throw InvalidInput.
  const MoleculeParams& at(std::string_view name) const;

  const std::vector<MoleculeParams>& all() const { return mols_; }

private:
  std::vector<MoleculeParams> mols_;
};

}  // namespace dfs
