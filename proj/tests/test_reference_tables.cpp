#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "dfs/calibrate.hpp"
#include "dfs/reference_tables.hpp"

using namespace dfs;

namespace {

const std::string kDataDir = DFS_DATA_DIR;

std::vector<ReferenceTable> tables() {
  return load_reference_tables(kDataDir + "/reference_tables.csv");
}

MoleculeDb ref_db() {
  return reference_molecule_db(kDataDir + "/reference_params.csv");
}

const ReferenceTable& table(const std::vector<ReferenceTable>& ts,
                            const std::string& id) {
  for (const auto& t : ts)
    if (t.id == id) return t;
  throw std::runtime_error("missing table " + id);
}

}  // namespace

TEST_CASE("reference data loads with the expected shape") {
  const auto ts = tables();
  CHECK(ts.size() == 21);
  size_t total = 0;
  for (const auto& t : ts) total += t.rows.size();
  CHECK(total == 761);

  const auto& co = table(ts, "dfp_co");
  CHECK(co.rows.size() == 70);
  std::set<double> deltas;
  std::set<int> dims;
  for (const auto& r : co.rows) {
    deltas.insert(r.delta);
    dims.insert(r.dim);
    CHECK(r.variant == PotentialVariant::DengFan);
  }
  CHECK(deltas == std::set<double>{0.2, 0.5, 0.8, 1.0});
  CHECK(dims == std::set<int>{3, 4, 5, 6});
}

TEST_CASE("SDFP rows store the printed magnitude and negate on expectation") {
  const auto ts = tables();
  const auto& sdfp = table(ts, "sdfp_co");
  for (const auto& r : sdfp.rows) {
    CHECK(r.value_printed > 0.0);
    CHECK(r.expected_energy() == -r.value_printed);
  }
  // ground-state row is present as printed
  const auto it = std::find_if(sdfp.rows.begin(), sdfp.rows.end(),
                               [](const ReferenceRow& r) {
                                 return r.n == 0 && r.l == 0 && r.dim == 3 &&
                                        r.delta == 1.0;
                               });
  REQUIRE(it != sdfp.rows.end());
  CHECK(it->value_printed == 10.7027043);
}

TEST_CASE("parameter sets resolve against the merged database") {
  const auto db = ref_db();
  for (const auto& t : tables())
    for (const auto& r : t.rows) CHECK(db.find(r.params) != nullptr);
  // builtins unchanged by the merge
  CHECK(db.at("I2").d_e == 12758.0129);
  CHECK(db.at("I2.tbl").d_e == doctest::Approx(12546.7612553415));
}

TEST_CASE("every delta=1 row reproduces within 1e-6") {
  const auto db = ref_db();
  for (const auto& t : tables()) {
    const auto rep = verify_table(db, t, 1e-6);
    INFO("table ", t.id);
    CHECK(rep.max_dev_delta1 <= 1e-6);
    CHECK(rep.delta1_rows > 0);
  }
}

TEST_CASE("fractional rows reproduce at gamma = 1") {
  const auto db = ref_db();
  for (const char* id : {"dfp_co", "dfp_i2", "dfp_no", "dfp_n2", "sdfp_co",
                         "sdfp_i2", "sdfp_no", "sdfp_n2"}) {
    const auto rep = verify_table(db, table(tables(), id), 1e-6);
    INFO("table ", id);
    CHECK(rep.fractional_rows == 30);
    CHECK(rep.max_dev_fractional <= 1e-6);
  }
}

TEST_CASE("rigid-shift cross-check between paired DFP/SDFP tables") {
  const auto db = ref_db();
  const auto ts = tables();
  for (const char* mol : {"co", "i2", "no", "n2"}) {
    const auto& dfp = table(ts, std::string("dfp_") + mol);
    const auto& sdfp = table(ts, std::string("sdfp_") + mol);
    REQUIRE(dfp.rows.size() == sdfp.rows.size());
    for (size_t i = 0; i < dfp.rows.size(); ++i) {
      const auto& a = dfp.rows[i];
      const auto& b = sdfp.rows[i];
      const auto& m = db.at(a.params);
      const auto cfg = make_config(a.delta, 1.0);
      const auto st = QuantumState::make(a.n, a.l, a.dim);
      const double e_df =
          energy(PotentialSpec::deng_fan(m), st, cfg).e_ev;
      const double e_sdf =
          energy(PotentialSpec::shifted_deng_fan(m), st, cfg).e_ev;
      const double de = PotentialSpec::deng_fan(m).de_ev;
      CHECK(std::fabs(e_sdf - (e_df - de)) <= 1e-9);
    }
  }
}

TEST_CASE("calibration pins gamma near 1 for a fractional column") {
  const auto db = ref_db();
  const auto ts = tables();
  CalibrationSettings fast;
  fast.gamma_min = 0.5;
  fast.gamma_max = 2.0;
  fast.step = 1e-2;
  const auto res = calibrate_gamma(db, table(ts, "dfp_co"), 0.5, fast);
  CHECK(res.rows == 10);
  CHECK(std::fabs(res.gamma_star - 1.0) < 1e-2);
  CHECK(res.rms_star < 1e-6);
  CHECK(res.gamma1_within_2x);
}

TEST_CASE("calibration at delta=1 is flat in gamma") {
  const auto db = ref_db();
  const auto ts = tables();
  const auto& t = table(ts, "dfp_no");
  const double a = calibration_rms(db, t, 1.0, 0.3);
  const double b = calibration_rms(db, t, 1.0, 1.0);
  const double c = calibration_rms(db, t, 1.0, 4.2);
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("calibration rejects an empty delta column") {
  const auto db = ref_db();
  const auto ts = tables();
  CHECK_THROWS_AS(calibrate_gamma(db, table(ts, "cmp_dfp_lih"), 0.5),
                  InvalidInput);
}

TEST_CASE("calibration is deterministic") {
  const auto db = ref_db();
  const auto ts = tables();
  CalibrationSettings fast;
  fast.gamma_min = 0.8;
  fast.gamma_max = 1.2;
  fast.step = 1e-2;
  const auto a = calibrate_gamma(db, table(ts, "dfp_i2"), 0.8, fast);
  const auto b = calibrate_gamma(db, table(ts, "dfp_i2"), 0.8, fast);
  CHECK(a.gamma_star == b.gamma_star);
  CHECK(a.rms_star == b.rms_star);
}
