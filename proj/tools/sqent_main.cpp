// sqent: steady-state entanglement of two atoms in a squeezed vacuum.
//
//   sqent point   --n 0.1 --r12 0.05 --variant identical --engine analytic
//   sqent sweep   --axis n_mean:0.01:0.5:50 --axis r12_over_lambda:0.01:1.2:60 --out grid.csv
//   sqent evolve  --rho0 gg --t-max 100 --samples 101
//   sqent figure  3 --out fig3.csv
//
// Exit codes: 0 success, 2 usage, 3 I/O, 4 numerical failure.

#include <cmath>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqent/config.hpp"
#include "sqent/error.hpp"
#include "sqent/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;

struct CommonFlags {
  double r12 = 0, n = 0, phi_s = 0, delta = 0, mu = 0, carrier = 0, gamma12 = 0, omega12 = 0;
  std::string m, variant, engine, config, out;
  int jobs = 1;

  CLI::Option* r12_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* phi_opt = nullptr;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* carrier_opt = nullptr;
  CLI::Option* gamma12_opt = nullptr;
  CLI::Option* omega12_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* variant_opt = nullptr;
  CLI::Option* engine_opt = nullptr;
  CLI::Option* config_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;

  void attach(CLI::App* app) {
    r12_opt = app->add_option("--r12", r12, "Separation r12/lambda");
    n_opt = app->add_option("--n", n, "Mean photon number N");
    m_opt = app->add_option("--m", m, "Two-photon correlation |M|, a number or 'max' for sqrt(N(N+1))");
    phi_opt = app->add_option("--phi-s", phi_s, "Squeezing phase");
    delta_opt = app->add_option("--delta", delta, "Half frequency splitting Delta/Gamma");
    mu_opt = app->add_option("--mu-dot-r", mu, "cos(angle) between dipole and pair axis");
    carrier_opt = app->add_option("--carrier-detuning", carrier, "(w_s - w0)/Gamma, variant=full only");
    gamma12_opt = app->add_option("--gamma12", gamma12, "Override the geometric Gamma12/Gamma");
    omega12_opt = app->add_option("--omega12", omega12, "Override the geometric Omega12/Gamma");
    variant_opt = app->add_option("--variant", variant, "identical | nonidentical | full");
    engine_opt = app->add_option("--engine", engine, "analytic | reduced_ode | liouvillian");
    jobs_opt = app->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--out", out, "Output CSV path (stdout when omitted or '-')");
    config_opt = app->add_option("--config", config, "key = value config file; flags override it");
  }

  sqent::RunConfig resolve() const {
    sqent::RunConfig rc;
    if (config_opt->count()) rc = sqent::load_config(config);
    auto& p = rc.point;
    if (r12_opt->count()) p.cfg.r12_over_lambda = r12;
    if (mu_opt->count()) p.cfg.mu_hat_dot_r_hat = mu;
    if (delta_opt->count()) p.cfg.delta_over_gamma = delta;
    if (n_opt->count()) p.bath.n_mean = n;
    if (phi_opt->count()) p.bath.phi_s = phi_s;
    if (carrier_opt->count()) p.bath.carrier_detuning_over_gamma = carrier;
    if (m_opt->count()) {
      if (m == "max") {
        p.m_is_max = true;
      } else {
        try {
          std::size_t used = 0;
          p.bath.m_abs = std::stod(m, &used);
          if (used != m.size()) throw std::invalid_argument(m);
        } catch (const std::exception&) {
          throw sqent::UsageError("--m expects a number or 'max', got '" + m + "'");
        }
        p.m_is_max = false;
      }
    }
    if (gamma12_opt->count()) p.gamma12_override = gamma12;
    if (omega12_opt->count()) p.omega12_override = omega12;
    if (variant_opt->count()) p.variant = sqent::parse_variant(variant);
    if (engine_opt->count()) p.engine = sqent::parse_engine(engine);
    if (jobs_opt->count()) rc.jobs = jobs;
    return rc;
  }

  void emit(const sqent::Table& table) const {
    if (out.empty() || out == "-") {
      sqent::write_csv(std::cout, table);
      std::cout.flush();
      if (!std::cout) throw std::ios_base::failure("failed writing to stdout");
    } else {
      sqent::write_csv_file(out, table);
    }
  }
};

void report_warnings(const std::vector<sqent::ResultRow>& rows) {
  std::set<std::string> seen;
  for (const auto& row : rows) {
    for (const auto& w : row.warnings) {
      if (seen.insert(w).second) std::cerr << "warning: " << w << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state entanglement of two atoms in a broadband squeezed vacuum"};
  app.require_subcommand(1);

  CommonFlags point_flags;
  auto* point = app.add_subcommand("point", "Evaluate a single parameter point");
  point_flags.attach(point);

  CommonFlags sweep_flags;
  std::vector<std::string> axes;
  std::string columns;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a 1-D or 2-D parameter grid");
  sweep_flags.attach(sweep);
  sweep->add_option("--axis", axes, "name:min:max:count[:linear|log]; repeat for a second axis");
  sweep->add_option("--columns", columns, "Comma separated output columns");

  CommonFlags evolve_flags;
  std::string rho0 = "gg";
  double t_max = 10.0;
  int samples = 101;
  auto* evolve = app.add_subcommand("evolve", "Time evolution under the full master equation");
  evolve_flags.attach(evolve);
  evolve->add_option("--rho0", rho0, "gg | ee | s | a | phi+ | phi- | mixed")->capture_default_str();
  evolve->add_option("--t-max", t_max, "Final time in units of 1/Gamma")->capture_default_str();
  evolve->add_option("--samples", samples, "Number of uniformly spaced output times")->capture_default_str();

  int figure_id = 0;
  int figure_jobs = 1;
  std::string figure_out;
  auto* figure = app.add_subcommand("figure", "Figure presets 1..5");
  figure->add_option("id,--id", figure_id, "Figure id")->required();
  figure->add_option("--jobs", figure_jobs, "Worker threads")->check(CLI::PositiveNumber);
  figure->add_option("--out", figure_out, "Output CSV path (stdout when omitted or '-')");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (point->parsed()) {
      const sqent::RunConfig rc = point_flags.resolve();
      const sqent::ResultRow row = sqent::evaluate_point(rc.point);
      report_warnings({row});
      point_flags.emit(sqent::to_table({row}, rc.columns));
    } else if (sweep->parsed()) {
      sqent::RunConfig rc = sweep_flags.resolve();
      if (!axes.empty()) {
        rc.axes.clear();
        for (const auto& a : axes) rc.axes.push_back(sqent::Axis::parse(a));
      }
      if (!columns.empty()) rc.columns = sqent::split_list(columns);
      sqent::SweepSpec spec{rc.point, rc.axes, rc.columns, rc.jobs.value_or(1)};
      const auto rows = sqent::run_sweep(spec);
      report_warnings(rows);
      sweep_flags.emit(sqent::to_table(rows, spec.columns));
    } else if (evolve->parsed()) {
      const sqent::RunConfig rc = evolve_flags.resolve();
      evolve_flags.emit(sqent::evolve(rc.point, sqent::parse_initial_state(rho0), t_max, samples));
    } else if (figure->parsed()) {
      CommonFlags sink;
      sink.out = figure_out;
      sink.emit(sqent::figure_table(figure_id, figure_jobs));
    }
  } catch (const sqent::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sqent::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const sqent::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
