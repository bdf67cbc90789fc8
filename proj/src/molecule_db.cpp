#include "dfs/molecule_db.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dfs {

namespace {

const char* kHeader = "name,re_angstrom,alpha_per_angstrom,mu_amu,De_per_cm";

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

double parse_positive(const std::string& field, int line_no, const char* what) {
  double v = 0.0;
  auto first = field.data();
  auto last = field.data() + field.size();
  while (first != last && std::isspace(static_cast<unsigned char>(*first))) ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line_no, std::string("malformed number for ") + what);
  if (!(v > 0.0))
    throw ParseError(line_no, std::string(what) + " must be positive");
  return v;
}

}  // namespace

void MoleculeParams::validate() const {
  if (name.empty()) throw InvalidInput("molecule name must be nonempty");
  if (!(r_e > 0.0)) throw InvalidInput(name + ": r_e must be positive");
  if (!(alpha > 0.0)) throw InvalidInput(name + ": alpha must be positive");
  if (!(mu > 0.0)) throw InvalidInput(name + ": mu must be positive");
  if (!(d_e > 0.0)) throw InvalidInput(name + ": D_e must be positive");
}

const std::vector<MoleculeParams>& builtin_molecules() {
  static const std::vector<MoleculeParams> db = {
      {"NO", 1.1508, 2.7534, 7.468441, 64877.06229},
      {"CO", 1.1282, 2.2994, 6.860586, 87471.42567},
      {"I2", 2.6620, 1.8643, 63.452235, 12758.0129},
      {"N2", 1.0940, 2.6989, 7.00335, 96288.03528},
      {"O2", 1.2070, 2.6636, 7.997457504, 41591.26201},
      {"H2", 0.7416, 1.9426, 0.50391, 38267.78314},
      {"HF", 0.9170, 2.2266, 0.96367, 49382.0},
      {"LiH", 1.5956, 1.1280, 0.8801221, 20287.13295},
      {"ScH", 1.7080, 1.5068, 10.682771, 36778.8836},
      {"HCl", 1.2746, 1.8677, 0.9801045, 37255.24414},
  };
  return db;
}

std::vector<MoleculeParams> load_molecules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open molecule file: " + path.string());

  std::vector<MoleculeParams> out;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (!header_seen) {
      if (trimmed != kHeader)
        throw ParseError(line_no, "expected header '" + std::string(kHeader) + "'");
      header_seen = true;
      continue;
    }
    auto fields = split_csv(trimmed);
    if (fields.size() != 5)
      throw ParseError(line_no, "expected 5 comma-separated fields");
    MoleculeParams m;
    m.name = fields[0];
    if (m.name.empty()) throw ParseError(line_no, "empty molecule name");
    m.r_e = parse_positive(fields[1], line_no, "r_e");
    m.alpha = parse_positive(fields[2], line_no, "alpha");
    m.mu = parse_positive(fields[3], line_no, "mu");
    m.d_e = parse_positive(fields[4], line_no, "D_e");
    for (const auto& prev : out)
      if (lower(prev.name) == lower(m.name))
        throw ParseError(line_no, "duplicate molecule name '" + m.name + "'");
    out.push_back(std::move(m));
  }
  if (!header_seen && line_no > 0)
    throw ParseError(line_no, "missing header line");
  return out;
}

std::string serialize_molecules(const std::vector<MoleculeParams>& mols) {
  std::ostringstream os;
  os << kHeader << "\n";
  os.precision(17);
  for (const auto& m : mols)
    os << m.name << ',' << m.r_e << ',' << m.alpha << ',' << m.mu << ','
       << m.d_e << "\n";
  return os.str();
}

MoleculeDb MoleculeDb::with_builtins() {
  MoleculeDb db;
  db.merge(builtin_molecules());
  return db;
}

void MoleculeDb::merge(const std::vector<MoleculeParams>& mols) {
  for (const auto& m : mols) {
    m.validate();
    auto it = std::find_if(mols_.begin(), mols_.end(), [&](const auto& e) {
      return lower(e.name) == lower(m.name);
    });
    if (it != mols_.end())
      *it = m;
    else
      mols_.push_back(m);
  }
}

const MoleculeParams* MoleculeDb::find(std::string_view name) const {
  const std::string key = lower(name);
  for (const auto& m : mols_)
    if (lower(m.name) == key) return &m;
  return nullptr;
}

const MoleculeParams& MoleculeDb::at(std::string_view name) const {
  const auto* p = find(name);
  if (!p) throw InvalidInput("unknown molecule '" + std::string(name) + "'");
  return *p;
}

}  // namespace dfs
