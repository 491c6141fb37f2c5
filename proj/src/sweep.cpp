#include "sqent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "sqent/entanglement.hpp"
#include "sqent/error.hpp"
#include "sqent/liouvillian.hpp"
#include "sqent/reduced.hpp"

namespace sqent {

namespace {

template <class Enum, std::size_t N>
Enum lookup(std::string_view text, const std::pair<std::string_view, Enum> (&table)[N], std::string_view what) {
  for (const auto& [name, value] : table) {
    if (name == text) return value;
  }
  throw UsageError("unknown " + std::string(what) + " '" + std::string(text) + "'");
}

template <class Enum, std::size_t N>
std::string_view name_of(Enum value, const std::pair<std::string_view, Enum> (&table)[N]) {
  for (const auto& [name, v] : table) {
    if (v == value) return name;
  }
  return "?";
}

constexpr std::pair<std::string_view, Variant> kVariants[] = {
    {"identical", Variant::kIdentical}, {"nonidentical", Variant::kNonidentical}, {"full", Variant::kFull}};
constexpr std::pair<std::string_view, Engine> kEngines[] = {
    {"analytic", Engine::kAnalytic}, {"reduced_ode", Engine::kReducedOde}, {"liouvillian", Engine::kLiouvillian}};
constexpr std::pair<std::string_view, Parameter> kParameters[] = {
    {"r12_over_lambda", Parameter::kR12OverLambda},
    {"n_mean", Parameter::kNMean},
    {"delta_over_gamma", Parameter::kDeltaOverGamma},
    {"m_abs", Parameter::kMAbs},
    {"phi_s", Parameter::kPhiS}};
constexpr std::pair<std::string_view, InitialState> kInitialStates[] = {
    {"gg", InitialState::kGround},        {"ee", InitialState::kExcited},
    {"s", InitialState::kSymmetric},      {"a", InitialState::kAntisymmetric},
    {"phi+", InitialState::kBellPlus},    {"phi-", InitialState::kBellMinus},
    {"mixed", InitialState::kMixed}};

double parse_double(std::string_view text, std::string_view what) {
  const std::string s(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad " + std::string(what) + " '" + s + "'");
  return value;
}

// Inputs as the engines actually see them.
PointSpec effective(const PointSpec& spec) {
  PointSpec out = spec;
  if (out.m_is_max) out.bath.m_abs = max_correlation(out.bath.n_mean);
  if (out.variant == Variant::kIdentical) out.cfg.delta_over_gamma = 0.0;
  if (out.variant != Variant::kFull) out.bath.carrier_detuning_over_gamma = 0.0;
  return out;
}

double gamma12_of(const PointSpec& spec) { return spec.gamma12_override.value_or(gamma12(spec.cfg)); }

double omega12_label(const PointSpec& spec) {
  if (spec.omega12_override) return *spec.omega12_override;
  return spec.cfg.r12_over_lambda > 0.0 ? omega12(spec.cfg) : std::numeric_limits<double>::quiet_NaN();
}

Couplings couplings_of(const PointSpec& spec) {
  Couplings c;
  c.gamma12 = gamma12_of(spec);
  c.omega12 = spec.omega12_override ? *spec.omega12_override : omega12(spec.cfg);
  const double carrier = spec.bath.carrier_detuning_over_gamma;
  c.detuning1 = -spec.cfg.delta_over_gamma - carrier;
  c.detuning2 = spec.cfg.delta_over_gamma - carrier;
  return c;
}

ReducedModel model_of(Variant v) {
  return v == Variant::kIdentical ? ReducedModel::kIdentical : ReducedModel::kNonidentical;
}

struct Evaluation {
  DensityMatrix rho;
  std::vector<std::string> warnings;
};

Evaluation solve(const PointSpec& eff) {
  eff.validate();
  eff.cfg.validate();
  eff.bath.validate();
  const double phi = eff.bath.phi_s;
  switch (eff.engine) {
    case Engine::kAnalytic: {
      const double g = gamma12_of(eff);
      if (eff.variant == Variant::kIdentical) return {steady_identical(g, eff.bath).to_density_matrix(phi), {}};
      auto secular = steady_nonidentical(g, eff.bath, eff.cfg.delta_over_gamma);
      Evaluation out{secular.populations.to_density_matrix(phi), {}};
      if (secular.warning) out.warnings.push_back(*secular.warning);
      return out;
    }
    case Engine::kReducedOde:
      return {relax_reduced(model_of(eff.variant), gamma12_of(eff), eff.bath).to_density_matrix(phi), {}};
    case Engine::kLiouvillian:
      return {steady_state(Liouvillian(couplings_of(eff), eff.bath)), {}};
  }
  throw UsageError("unknown engine");
}

}  // namespace

Variant parse_variant(std::string_view text) { return lookup(text, kVariants, "variant"); }
Engine parse_engine(std::string_view text) { return lookup(text, kEngines, "engine"); }
Parameter parse_parameter(std::string_view text) { return lookup(text, kParameters, "axis parameter"); }
InitialState parse_initial_state(std::string_view text) { return lookup(text, kInitialStates, "initial state"); }
std::string_view to_string(Variant v) { return name_of(v, kVariants); }
std::string_view to_string(Engine e) { return name_of(e, kEngines); }
std::string_view to_string(Parameter p) { return name_of(p, kParameters); }

void PointSpec::validate() const {
  if (variant == Variant::kFull && engine != Engine::kLiouvillian) {
    throw UsageError("variant 'full' requires engine 'liouvillian'");
  }
}

PointSpec PointSpec::with(Parameter p, double value) const {
  PointSpec out = *this;
  switch (p) {
    case Parameter::kR12OverLambda: out.cfg.r12_over_lambda = value; break;
    case Parameter::kNMean: out.bath.n_mean = value; break;
    case Parameter::kDeltaOverGamma: out.cfg.delta_over_gamma = value; break;
    case Parameter::kMAbs:
      out.bath.m_abs = value;
      out.m_is_max = false;
      break;
    case Parameter::kPhiS: out.bath.phi_s = value; break;
  }
  return out;
}

Axis Axis::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4 && parts.size() != 5) {
    throw UsageError("axis must look like name:min:max:count[:linear|log], got '" + std::string(text) + "'");
  }
  Axis axis;
  axis.parameter = parse_parameter(parts[0]);
  axis.min = parse_double(parts[1], "axis min");
  axis.max = parse_double(parts[2], "axis max");
  const double count = parse_double(parts[3], "axis count");
  if (count != std::floor(count) || count > 1e7) throw UsageError("axis count must be an integer");
  axis.count = static_cast<int>(count);
  if (parts.size() == 5) {
    if (parts[4] == "log") axis.log_spacing = true;
    else if (parts[4] != "linear") throw UsageError("axis spacing must be 'linear' or 'log'");
  }
  axis.validate();
  return axis;
}

void Axis::validate() const {
  if (count < 2) throw UsageError("axis count must be at least 2");
  if (!(min < max)) throw UsageError("axis min must be below max");
  if (log_spacing && !(min > 0.0)) throw UsageError("log-spaced axis needs a positive minimum");
}

std::vector<double> Axis::values() const {
  validate();
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    out[i] = log_spacing ? std::exp(std::log(min) + f * (std::log(max) - std::log(min))) : min + f * (max - min);
  }
  out.front() = min;
  out.back() = max;
  return out;
}

namespace {

using Accessor = double (*)(const ResultRow&);

const std::vector<std::pair<std::string, Accessor>>& accessors() {
  static const std::vector<std::pair<std::string, Accessor>> table = {
      {"r12_over_lambda", [](const ResultRow& r) { return r.r12_over_lambda; }},
      {"mu_hat_dot_r_hat", [](const ResultRow& r) { return r.mu_hat_dot_r_hat; }},
      {"delta_over_gamma", [](const ResultRow& r) { return r.delta_over_gamma; }},
      {"n_mean", [](const ResultRow& r) { return r.n_mean; }},
      {"m_abs", [](const ResultRow& r) { return r.m_abs; }},
      {"phi_s", [](const ResultRow& r) { return r.phi_s; }},
      {"carrier_detuning_over_gamma", [](const ResultRow& r) { return r.carrier_detuning_over_gamma; }},
      {"gamma12", [](const ResultRow& r) { return r.gamma12; }},
      {"omega12", [](const ResultRow& r) { return r.omega12; }},
      {"rho_gg", [](const ResultRow& r) { return r.rho_gg; }},
      {"rho_ee", [](const ResultRow& r) { return r.rho_ee; }},
      {"rho_ss", [](const ResultRow& r) { return r.rho_ss; }},
      {"rho_aa", [](const ResultRow& r) { return r.rho_aa; }},
      {"rho_u", [](const ResultRow& r) { return r.rho_u; }},
      {"concurrence", [](const ResultRow& r) { return r.concurrence; }},
      {"c1", [](const ResultRow& r) { return r.c1; }},
      {"c2", [](const ResultRow& r) { return r.c2; }},
      {"f_plus", [](const ResultRow& r) { return r.f_plus; }},
      {"f_minus", [](const ResultRow& r) { return r.f_minus; }},
      {"purity", [](const ResultRow& r) { return r.purity; }},
      {"tc", [](const ResultRow& r) { return r.tc; }},
      // derived
      {"pop_sa", [](const ResultRow& r) { return r.rho_ss + r.rho_aa; }},
      {"pop_ge", [](const ResultRow& r) { return r.rho_gg + r.rho_ee; }},
  };
  return table;
}

constexpr std::size_t kFixedColumns = 21;

}  // namespace

const std::vector<std::string>& result_columns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < kFixedColumns; ++i) out.push_back(accessors()[i].first);
    return out;
  }();
  return names;
}

const std::vector<std::string>& selectable_columns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : accessors()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

double column_value(const ResultRow& row, std::string_view name) {
  for (const auto& [key, get] : accessors()) {
    if (key == name) return get(row);
  }
  throw UsageError("unknown column '" + std::string(name) + "'");
}

ResultRow make_row(const PointSpec& spec, const DensityMatrix& rho) {
  const PointSpec eff = effective(spec);
  ResultRow row;
  row.r12_over_lambda = eff.cfg.r12_over_lambda;
  row.mu_hat_dot_r_hat = eff.cfg.mu_hat_dot_r_hat;
  row.delta_over_gamma = eff.cfg.delta_over_gamma;
  row.n_mean = eff.bath.n_mean;
  row.m_abs = eff.bath.m_abs;
  row.phi_s = eff.bath.phi_s;
  row.carrier_detuning_over_gamma = eff.bath.carrier_detuning_over_gamma;
  row.gamma12 = gamma12_of(eff);
  row.omega12 = omega12_label(eff);
  row.rho_gg = rho.rho_gg();
  row.rho_ee = rho.rho_ee();
  row.rho_ss = rho.rho_ss();
  row.rho_aa = rho.rho_aa();
  row.rho_u = rho.rho_u(eff.bath.phi_s);
  const EntanglementReport report = analyze(rho, eff.bath);
  row.concurrence = report.concurrence;
  row.c1 = report.c1;
  row.c2 = report.c2;
  row.f_plus = report.fidelity_plus;
  row.f_minus = report.fidelity_minus;
  row.purity = report.purity;
  row.tc = report.tc;
  return row;
}

DensityMatrix steady_state_for(const PointSpec& spec) { return solve(effective(spec)).rho; }

ResultRow evaluate_point(const PointSpec& spec) {
  Evaluation eval = solve(effective(spec));
  ResultRow row = make_row(spec, eval.rho);
  row.warnings = std::move(eval.warnings);
  return row;
}

void SweepSpec::validate() const {
  base.validate();
  if (axes.empty() || axes.size() > 2) throw UsageError("a sweep needs one or two axes");
  if (axes.size() == 2 && axes[0].parameter == axes[1].parameter) throw UsageError("sweep axes must differ");
  for (const Axis& axis : axes) axis.validate();
  for (const std::string& c : columns) {
    const auto& known = selectable_columns();
    if (std::find(known.begin(), known.end(), c) == known.end()) throw UsageError("unknown column '" + c + "'");
  }
  if (jobs < 1) throw UsageError("jobs must be at least 1");
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<PointSpec> points;
  const std::vector<double> outer = spec.axes[0].values();
  const std::vector<double> inner = spec.axes.size() == 2 ? spec.axes[1].values() : std::vector<double>{0.0};
  for (double a : outer) {
    const PointSpec row_base = spec.base.with(spec.axes[0].parameter, a);
    for (double b : inner) {
      points.push_back(spec.axes.size() == 2 ? row_base.with(spec.axes[1].parameter, b) : row_base);
    }
  }

  std::vector<ResultRow> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = evaluate_point(points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(spec.jobs, points.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

Table to_table(const std::vector<ResultRow>& rows, const std::vector<std::string>& columns) {
  Table table;
  table.header = columns.empty() ? result_columns() : columns;
  table.rows.reserve(rows.size());
  for (const ResultRow& row : rows) {
    std::vector<double> values;
    values.reserve(table.header.size());
    for (const std::string& c : table.header) values.push_back(column_value(row, c));
    table.rows.push_back(std::move(values));
  }
  return table;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const Table& table) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  write_csv(file, table);
  file.flush();
  if (!file) throw std::ios_base::failure("failed writing '" + path + "'");
}

DensityMatrix initial_density_matrix(InitialState state) {
  switch (state) {
    case InitialState::kGround: return DensityMatrix::basis_state(kGround);
    case InitialState::kExcited: return DensityMatrix::basis_state(kExcited);
    case InitialState::kSymmetric: return DensityMatrix::symmetric();
    case InitialState::kAntisymmetric: return DensityMatrix::antisymmetric();
    case InitialState::kBellPlus: return DensityMatrix::bell_phi_plus();
    case InitialState::kBellMinus: return DensityMatrix::bell_phi_minus();
    case InitialState::kMixed: return DensityMatrix::maximally_mixed();
  }
  throw UsageError("unknown initial state");
}

Table evolve(const PointSpec& spec, InitialState initial, double t_max, int samples) {
  if (!(t_max > 0.0)) throw UsageError("t_max must be positive");
  if (samples < 2) throw UsageError("samples must be at least 2");
  const PointSpec eff = effective(spec);
  eff.cfg.validate();
  const Liouvillian L(couplings_of(eff), eff.bath);

  Table table;
  table.header.push_back("t");
  for (const auto& c : result_columns()) table.header.push_back(c);

  DensityMatrix rho = initial_density_matrix(initial);
  double t = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double target = t_max * k / (samples - 1);
    rho = propagate(L, rho, target - t);
    t = target;
    const ResultRow row = make_row(spec, rho);
    std::vector<double> values{t};
    for (const auto& c : result_columns()) values.push_back(column_value(row, c));
    table.rows.push_back(std::move(values));
  }
  return table;
}

namespace {

constexpr double kFigureSeparation = 0.05;
constexpr double kFigurePhotonNumber = 0.1;
constexpr double kSecularSplitting = 50.0;

SweepSpec surface_preset(Variant variant, int jobs) {
  SweepSpec spec;
  spec.base.variant = variant;
  spec.base.engine = Engine::kAnalytic;
  spec.base.cfg.delta_over_gamma = variant == Variant::kNonidentical ? kSecularSplitting : 0.0;
  spec.axes = {Axis{Parameter::kR12OverLambda, 0.01, 1.2, 120, false}, Axis{Parameter::kNMean, 0.005, 0.5, 100, false}};
  spec.columns = {"r12_over_lambda", "n_mean", "gamma12", "concurrence"};
  spec.jobs = jobs;
  return spec;
}

Table photon_number_preset(const std::string& column, int jobs) {
  Table merged;
  merged.header = {"n_mean", column + "_identical", column + "_nonidentical"};
  std::vector<std::vector<ResultRow>> parts;
  for (Variant v : {Variant::kIdentical, Variant::kNonidentical}) {
    SweepSpec spec;
    spec.base.variant = v;
    spec.base.engine = Engine::kAnalytic;
    spec.base.cfg.r12_over_lambda = kFigureSeparation;
    spec.base.cfg.delta_over_gamma = v == Variant::kNonidentical ? kSecularSplitting : 0.0;
    spec.axes = {Axis{Parameter::kNMean, 0.01, 2.0, 200, false}};
    spec.jobs = jobs;
    parts.push_back(run_sweep(spec));
  }
  for (std::size_t i = 0; i < parts[0].size(); ++i) {
    merged.rows.push_back(
        {parts[0][i].n_mean, column_value(parts[0][i], column), column_value(parts[1][i], column)});
  }
  return merged;
}

}  // namespace

Table figure_table(int id, int jobs) {
  switch (id) {
    case 1: {
      const SweepSpec spec = surface_preset(Variant::kIdentical, jobs);
      return to_table(run_sweep(spec), spec.columns);
    }
    case 2: {
      const SweepSpec spec = surface_preset(Variant::kNonidentical, jobs);
      return to_table(run_sweep(spec), spec.columns);
    }
    case 3: {
      SweepSpec spec;
      spec.base.variant = Variant::kFull;
      spec.base.engine = Engine::kLiouvillian;
      spec.base.cfg.r12_over_lambda = kFigureSeparation;
      spec.base.bath.n_mean = kFigurePhotonNumber;
      spec.axes = {Axis{Parameter::kDeltaOverGamma, 0.0, 20.0, 201, false}};
      spec.columns = {"delta_over_gamma", "concurrence", "pop_sa", "pop_ge"};
      spec.jobs = jobs;
      return to_table(run_sweep(spec), spec.columns);
    }
    case 4: return photon_number_preset("purity", jobs);
    case 5: return photon_number_preset("f_plus", jobs);
    default: throw UsageError("unknown figure id " + std::to_string(id) + " (expected 1..5)");
  }
}

}  // namespace sqent
