#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqent/bath.hpp"
#include "sqent/density_matrix.hpp"
#include "sqent/geometry.hpp"

namespace sqent {

enum class Variant { kIdentical, kNonidentical, kFull };
enum class Engine { kAnalytic, kReducedOde, kLiouvillian };
enum class Parameter { kR12OverLambda, kNMean, kDeltaOverGamma, kMAbs, kPhiS };

Variant parse_variant(std::string_view text);
Engine parse_engine(std::string_view text);
Parameter parse_parameter(std::string_view text);
std::string_view to_string(Variant v);
std::string_view to_string(Engine e);
std::string_view to_string(Parameter p);

/// One evaluation request.
struct PointSpec {
  AtomPairConfig cfg;
  BathParams bath;
  /// Tie |M| to sqrt(N(N+1)) after any axis substitution.
  bool m_is_max = true;
  std::optional<double> gamma12_override;
  std::optional<double> omega12_override;
  Variant variant = Variant::kIdentical;
  Engine engine = Engine::kAnalytic;

  /// Throws UsageError for variant=full with a non-Liouvillian engine.
  void validate() const;
  /// Copy with `p` set to `value`. Setting |M| explicitly clears m_is_max.
  PointSpec with(Parameter p, double value) const;
};

struct Axis {
  Parameter parameter = Parameter::kNMean;
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  bool log_spacing = false;

  /// "name:min:max:count[:linear|log]"
  static Axis parse(std::string_view text);
  void validate() const;
  std::vector<double> values() const;
};

/// Full-width result of one evaluation; fields in CSV column order.
struct ResultRow {
  double r12_over_lambda = 0.0;
  double mu_hat_dot_r_hat = 0.0;
  double delta_over_gamma = 0.0;
  double n_mean = 0.0;
  double m_abs = 0.0;
  double phi_s = 0.0;
  double carrier_detuning_over_gamma = 0.0;
  double gamma12 = 0.0;
  double omega12 = 0.0;
  double rho_gg = 0.0;
  double rho_ee = 0.0;
  double rho_ss = 0.0;
  double rho_aa = 0.0;
  double rho_u = 0.0;
  double concurrence = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double f_plus = 0.0;
  double f_minus = 0.0;
  double purity = 0.0;
  double tc = 0.0;

  /// Soft diagnostics (e.g. secular approximation outside its regime).
  std::vector<std::string> warnings;
};

/// Names of the fixed ResultRow columns, in order.
const std::vector<std::string>& result_columns();
/// Fixed columns plus the derived block populations pop_sa (rho_ss + rho_aa)
/// and pop_ge (rho_gg + rho_ee).
const std::vector<std::string>& selectable_columns();
/// Throws UsageError for an unknown name.
double column_value(const ResultRow& row, std::string_view name);

/// Evaluates a single point with the requested variant and engine.
ResultRow evaluate_point(const PointSpec& spec);

/// ResultRow for an already computed state, labelled with the effective
/// inputs of `spec`.
ResultRow make_row(const PointSpec& spec, const DensityMatrix& rho);

/// Density matrix the engine produces for `spec`.
DensityMatrix steady_state_for(const PointSpec& spec);

struct SweepSpec {
  PointSpec base;
  std::vector<Axis> axes;
  /// Empty selects result_columns().
  std::vector<std::string> columns;
  int jobs = 1;

  /// At most two axes, distinct parameters, known columns, jobs >= 1.
  void validate() const;
};

/// Rows of the Cartesian grid, first axis outermost. Grid points run on
/// `spec.jobs` worker threads; the row order does not depend on it.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

/// Header plus numeric rows, the unit of CSV output.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table to_table(const std::vector<ResultRow>& rows, const std::vector<std::string>& columns);

/// 12 significant digits, "nan"/"inf"/"-inf" for non-finite values.
std::string format_number(double value);

/// Comma separated, header row, LF line endings.
void write_csv(std::ostream& out, const Table& table);
/// Throws std::ios_base::failure when the file cannot be written.
void write_csv_file(const std::string& path, const Table& table);

enum class InitialState { kGround, kExcited, kSymmetric, kAntisymmetric, kBellPlus, kBellMinus, kMixed };
InitialState parse_initial_state(std::string_view text);
DensityMatrix initial_density_matrix(InitialState state);

/// Time series of the Liouvillian dynamics at `samples` uniformly spaced
/// times in [0, t_max]. Columns: t followed by result_columns().
Table evolve(const PointSpec& spec, InitialState initial, double t_max, int samples);

/// Figure presets 1..5; throws UsageError for another id.
Table figure_table(int id, int jobs = 1);

}  // namespace sqent
