#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "sqent/entanglement.hpp"
#include "sqent/error.hpp"
#include "sqent/reduced.hpp"
#include "sqent/sweep.hpp"

using namespace sqent;

namespace {

PointSpec point(double r, double n, Variant variant = Variant::kIdentical, Engine engine = Engine::kAnalytic) {
  PointSpec spec;
  spec.cfg.r12_over_lambda = r;
  spec.bath.n_mean = n;
  spec.variant = variant;
  spec.engine = engine;
  return spec;
}

std::string csv(const Table& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

std::size_t column_index(const Table& table, const std::string& name) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    if (table.header[i] == name) return i;
  FAIL("missing column " << name);
  return 0;
}

}  // namespace

TEST_CASE("enum names round-trip") {
  for (auto v : {Variant::kIdentical, Variant::kNonidentical, Variant::kFull}) CHECK(parse_variant(to_string(v)) == v);
  for (auto e : {Engine::kAnalytic, Engine::kReducedOde, Engine::kLiouvillian}) CHECK(parse_engine(to_string(e)) == e);
  CHECK_THROWS_AS(parse_variant("twin"), UsageError);
  CHECK_THROWS_AS(parse_engine("exact"), UsageError);
  CHECK_THROWS_AS(parse_initial_state("bell"), UsageError);
}

TEST_CASE("point: ordinary vacuum") {
  const ResultRow row = evaluate_point(point(0.05, 0.0));
  CHECK(row.concurrence == 0.0);
  CHECK(row.rho_gg == doctest::Approx(1.0));
  CHECK(std::isnan(row.tc));
}

TEST_CASE("point: secular Dicke limit") {
  PointSpec spec = point(0.05, 1.0, Variant::kNonidentical);
  spec.gamma12_override = 1.0;
  spec.cfg.delta_over_gamma = 50.0;
  spec.m_is_max = false;
  spec.bath.m_abs = std::sqrt(2.0);
  const ResultRow row = evaluate_point(spec);
  CHECK(row.concurrence == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
  CHECK(row.gamma12 == 1.0);
  CHECK(row.warnings.empty());
}

TEST_CASE("point: analytic and Liouvillian engines agree for identical atoms") {
  const ResultRow a = evaluate_point(point(0.05, 0.1));
  const ResultRow l = evaluate_point(point(0.05, 0.1, Variant::kIdentical, Engine::kLiouvillian));
  const ResultRow o = evaluate_point(point(0.05, 0.1, Variant::kIdentical, Engine::kReducedOde));
  for (const auto& name : result_columns()) {
    CHECK_MESSAGE(std::abs(column_value(a, name) - column_value(l, name)) < 1e-7, name);
    CHECK_MESSAGE(std::abs(column_value(a, name) - column_value(o, name)) < 1e-7, name);
  }
}

TEST_CASE("point: full variant requires the Liouvillian engine") {
  CHECK_THROWS_AS(evaluate_point(point(0.05, 0.1, Variant::kFull, Engine::kAnalytic)), UsageError);
  CHECK_THROWS_AS(evaluate_point(point(0.05, 0.1, Variant::kFull, Engine::kReducedOde)), UsageError);
  CHECK_NOTHROW(evaluate_point(point(0.05, 0.1, Variant::kFull, Engine::kLiouvillian)));
}

TEST_CASE("point: secular analytic result warns at small splitting") {
  PointSpec spec = point(0.2, 0.1, Variant::kNonidentical);
  spec.cfg.delta_over_gamma = 2.0;
  CHECK_FALSE(evaluate_point(spec).warnings.empty());
}

TEST_CASE("point: unphysical bath and bad geometry") {
  PointSpec spec = point(0.05, 0.1);
  spec.m_is_max = false;
  spec.bath.m_abs = 1.0;
  CHECK_THROWS_AS(evaluate_point(spec), UnphysicalBathError);
  CHECK_THROWS_AS(evaluate_point(point(-1.0, 0.1)), DomainError);
}

TEST_CASE("row labels follow the effective inputs") {
  PointSpec spec = point(0.05, 0.1);
  spec.cfg.delta_over_gamma = 7.0;
  const ResultRow row = evaluate_point(spec);
  CHECK(row.delta_over_gamma == 0.0);
  CHECK(row.m_abs == doctest::Approx(std::sqrt(0.11)));
  CHECK(row.tc == doctest::Approx(std::sqrt(11.0)));
  CHECK(std::isnan(evaluate_point(point(0.0, 0.1)).omega12));
}

TEST_CASE("axis parsing") {
  const Axis a = Axis::parse("n_mean:0.01:0.5:50");
  CHECK(a.parameter == Parameter::kNMean);
  CHECK(a.count == 50);
  CHECK_FALSE(a.log_spacing);
  const auto v = a.values();
  CHECK(v.front() == 0.01);
  CHECK(v.back() == 0.5);
  const Axis b = Axis::parse("delta_over_gamma:1:100:3:log");
  CHECK(b.values()[1] == doctest::Approx(10.0));
  CHECK_THROWS_AS(Axis::parse("n_mean:0.1:0.5"), UsageError);
  CHECK_THROWS_AS(Axis::parse("n_mean:0.5:0.1:4"), UsageError);
  CHECK_THROWS_AS(Axis::parse("n_mean:0.1:0.5:1"), UsageError);
  CHECK_THROWS_AS(Axis::parse("n_mean:0.1:0.5:2.5"), UsageError);
  CHECK_THROWS_AS(Axis::parse("n_mean:0:0.5:4:log"), UsageError);
  CHECK_THROWS_AS(Axis::parse("n_mean:0.1:0.5:4:cubic"), UsageError);
  CHECK_THROWS_AS(Axis::parse("gamma:0.1:0.5:4"), UsageError);
  CHECK_THROWS_AS(Axis::parse("n_mean:x:0.5:4"), UsageError);
}

TEST_CASE("sweep validation") {
  SweepSpec spec;
  spec.base = point(0.05, 0.1);
  CHECK_THROWS_AS(run_sweep(spec), UsageError);
  spec.axes = {Axis::parse("n_mean:0.1:0.2:2"), Axis::parse("n_mean:0.1:0.2:2")};
  CHECK_THROWS_AS(run_sweep(spec), UsageError);
  spec.axes = {Axis::parse("n_mean:0.1:0.2:2"), Axis::parse("phi_s:0:1:2"), Axis::parse("m_abs:0:0.1:2")};
  CHECK_THROWS_AS(run_sweep(spec), UsageError);
  spec.axes = {Axis::parse("n_mean:0.1:0.2:2")};
  spec.columns = {"n_mean", "entropy"};
  CHECK_THROWS_AS(run_sweep(spec), UsageError);
  spec.columns = {};
  spec.jobs = 0;
  CHECK_THROWS_AS(run_sweep(spec), UsageError);
}

TEST_CASE("2 x 2 grid gives four rows, outer axis major") {
  SweepSpec spec;
  spec.base = point(0.05, 0.1);
  spec.axes = {Axis::parse("r12_over_lambda:0.1:0.2:2"), Axis::parse("n_mean:0.01:0.02:2")};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].r12_over_lambda == 0.1);
  CHECK(rows[1].r12_over_lambda == 0.1);
  CHECK(rows[1].n_mean == 0.02);
  CHECK(rows[2].r12_over_lambda == 0.2);
  const std::string text = csv(to_table(rows, {}));
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.rfind("r12_over_lambda,mu_hat_dot_r_hat,delta_over_gamma,n_mean,m_abs,phi_s,", 0) == 0);
}

TEST_CASE("m_abs axis detaches |M| from N") {
  SweepSpec spec;
  spec.base = point(0.05, 0.5);
  spec.axes = {Axis::parse("m_abs:0:0.5:3")};
  const auto rows = run_sweep(spec);
  CHECK(rows[1].m_abs == 0.25);
  for (const auto& row : rows) CHECK(row.concurrence == 0.0);
}

TEST_CASE("sweep output does not depend on the worker count") {
  SweepSpec spec;
  spec.base = point(0.05, 0.1, Variant::kFull, Engine::kLiouvillian);
  spec.axes = {Axis::parse("delta_over_gamma:0:10:7"), Axis::parse("n_mean:0.01:1:5:log")};
  spec.jobs = 1;
  const std::string serial = csv(to_table(run_sweep(spec), {}));
  for (int jobs : {2, 3, 8}) {
    spec.jobs = jobs;
    CHECK(csv(to_table(run_sweep(spec), {})) == serial);
  }
}

TEST_CASE("sweep errors surface in grid order") {
  SweepSpec spec;
  spec.base = point(0.05, 0.1);
  spec.base.m_is_max = false;
  spec.axes = {Axis::parse("m_abs:0:2:5")};
  spec.jobs = 4;
  CHECK_THROWS_AS(run_sweep(spec), UnphysicalBathError);
}

TEST_CASE("analytic and Liouvillian sweeps agree on a 20 x 20 grid") {
  SweepSpec spec;
  spec.base = point(0.05, 0.1);
  spec.axes = {Axis::parse("r12_over_lambda:0.02:1.2:20"), Axis::parse("n_mean:0.005:1:20")};
  spec.jobs = 4;
  const auto analytic = run_sweep(spec);
  spec.base.engine = Engine::kLiouvillian;
  const auto full = run_sweep(spec);
  REQUIRE(analytic.size() == 400);
  for (std::size_t i = 0; i < analytic.size(); ++i) CHECK(std::abs(analytic[i].concurrence - full[i].concurrence) < 1e-6);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
  CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("csv file output") {
  const auto dir = std::filesystem::temp_directory_path() / "sqent_test_csv";
  std::filesystem::create_directories(dir);
  const Table table{{"a", "b"}, {{1.0, std::nan("")}, {0.25, -2.0}}};
  write_csv_file((dir / "out.csv").string(), table);
  std::ifstream in(dir / "out.csv", std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "a,b\n1,nan\n0.25,-2\n");
  CHECK_THROWS_AS(write_csv_file((dir / "missing" / "out.csv").string(), table), std::ios_base::failure);
  std::filesystem::remove_all(dir);
}

TEST_CASE("selectable columns") {
  ResultRow row;
  row.rho_ss = 0.1;
  row.rho_aa = 0.2;
  row.rho_gg = 0.5;
  row.rho_ee = 0.2;
  CHECK(column_value(row, "pop_sa") == doctest::Approx(0.3));
  CHECK(column_value(row, "pop_ge") == doctest::Approx(0.7));
  CHECK(result_columns().size() == 21);
  CHECK_THROWS_AS(column_value(row, "nope"), UsageError);
}

TEST_CASE("evolve: ground state in ordinary vacuum stays unentangled") {
  const Table t = evolve(point(0.05, 0.0, Variant::kFull, Engine::kLiouvillian), InitialState::kGround, 5.0, 11);
  REQUIRE(t.rows.size() == 11);
  CHECK(t.header.front() == "t");
  const auto c = column_index(t, "concurrence");
  for (const auto& row : t.rows) CHECK(row[c] == 0.0);
  CHECK(t.rows.back()[0] == 5.0);
}

TEST_CASE("evolve: independent atoms decay") {
  PointSpec spec = point(0.05, 0.0, Variant::kFull, Engine::kLiouvillian);
  spec.gamma12_override = 0.0;
  spec.omega12_override = 0.0;
  const Table t = evolve(spec, InitialState::kExcited, 2.0, 3);
  CHECK(t.rows[1][0] == 1.0);
  CHECK(t.rows[1][column_index(t, "rho_ee")] == doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
}

static void check_final_row(double t_max) {
  const PointSpec spec = point(0.05, 0.1);
  const double analytic = evaluate_point(spec).concurrence;
  const Table t = evolve(spec, InitialState::kGround, t_max, 11);
  CHECK(std::abs(t.rows.back()[column_index(t, "concurrence")] - analytic) < 1e-6);
}

// The antisymmetric state relaxes at (1 - gamma12)(2N + 1) ~ 0.024 Gamma at r = 0.05.
TEST_CASE("evolve: final row at t = 100 from the ground state" * doctest::should_fail()) { check_final_row(100.0); }

TEST_CASE("evolve: final row approaches the analytic steady state") { check_final_row(1000.0); }

TEST_CASE("evolve: argument checks") {
  const PointSpec spec = point(0.1, 0.1);
  CHECK_THROWS_AS(evolve(spec, InitialState::kGround, 0.0, 5), UsageError);
  CHECK_THROWS_AS(evolve(spec, InitialState::kGround, 1.0, 1), UsageError);
  CHECK(parse_initial_state("phi+") == InitialState::kBellPlus);
}

TEST_CASE("figure ids") {
  CHECK_THROWS_AS(figure_table(0), UsageError);
  CHECK_THROWS_AS(figure_table(6), UsageError);
}

TEST_CASE("figure 1 surface shape") {
  const Table t = figure_table(1, 4);
  REQUIRE(t.rows.size() == 120 * 100);
  const auto r = column_index(t, "r12_over_lambda");
  const auto n = column_index(t, "n_mean");
  const auto c = column_index(t, "concurrence");
  std::size_t best = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i][c] > t.rows[best][c]) best = i;
  CHECK(t.rows[best][r] == 0.01);
  CHECK(std::abs(t.rows[best][n] - 0.049) < 0.01);
  std::map<double, double> best_per_r;
  for (const auto& row : t.rows) best_per_r[row[r]] = std::max(best_per_r[row[r]], row[c]);
  double band_end = 0.0;
  for (const auto& [sep, value] : best_per_r)
    if (sep > 0.4 && sep < 0.6 && value == 0.0) band_end = sep;
  REQUIRE(band_end > 0.0);
  double revival = 0.0;
  for (const auto& [sep, value] : best_per_r)
    if (sep > band_end && sep < 1.0) revival = std::max(revival, value);
  CHECK(revival > 0.0);
}

TEST_CASE("figure 3 endpoints") {
  const Table t = figure_table(3, 4);
  REQUIRE(t.rows.size() == 201);
  const auto c = column_index(t, "concurrence");
  const double identical = evaluate_point(point(0.05, 0.1)).concurrence;
  CHECK(std::abs(t.rows.front()[c] - identical) < 1e-8);
  const auto sa = column_index(t, "pop_sa");
  const auto ge = column_index(t, "pop_ge");
  for (const auto& row : t.rows) CHECK(row[sa] + row[ge] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("figures 4 and 5 compare the two variants") {
  const Table purity = figure_table(4, 2);
  const Table fidelity = figure_table(5, 2);
  REQUIRE(purity.rows.size() == 200);
  CHECK(purity.header == std::vector<std::string>{"n_mean", "purity_identical", "purity_nonidentical"});
  for (std::size_t i = 0; i < purity.rows.size(); ++i) {
    const double n = purity.rows[i][0];
    if (n < 0.05 || n > 1.0) continue;
    CHECK(purity.rows[i][2] > purity.rows[i][1]);
    CHECK(fidelity.rows[i][2] >= fidelity.rows[i][1]);
  }
}
