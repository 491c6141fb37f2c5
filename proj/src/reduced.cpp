#include "sqent/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "ode.hpp"
#include "sqent/error.hpp"

namespace sqent {

CollectivePopulations CollectivePopulations::from(const DensityMatrix& rho, double phi_s) {
  return {rho.rho_ee(), rho.rho_ss(), rho.rho_aa(), rho.rho_u(phi_s)};
}

DensityMatrix CollectivePopulations::to_density_matrix(double phi_s) const {
  Matrix4c m = Matrix4c::Zero();
  m(kGround, kGround) = rho_gg();
  m(kExcited, kExcited) = rho_ee;
  const Complex eg = 0.5 * rho_u * std::polar(1.0, phi_s);
  m(kExcited, kGround) = eg;
  m(kGround, kExcited) = std::conj(eg);
  const double block = 0.5 * (rho_ss + rho_aa);
  const double exchange = 0.5 * (rho_ss - rho_aa);
  m(kG1E2, kG1E2) = block;
  m(kE1G2, kE1G2) = block;
  m(kG1E2, kE1G2) = exchange;
  m(kE1G2, kG1E2) = exchange;
  return DensityMatrix(m);
}

CollectivePopulations rhs_identical(const CollectivePopulations& x, double g, const BathParams& bath) {
  const double n = bath.n_mean;
  const double m = bath.m_abs;
  CollectivePopulations d;
  d.rho_ee = -2.0 * (n + 1.0) * x.rho_ee + n * ((1.0 + g) * x.rho_ss + (1.0 - g) * x.rho_aa) + g * m * x.rho_u;
  d.rho_ss = (1.0 + g) * (n - (3.0 * n + 1.0) * x.rho_ss - n * x.rho_aa + x.rho_ee - m * x.rho_u);
  d.rho_aa = (1.0 - g) * (n - (3.0 * n + 1.0) * x.rho_aa - n * x.rho_ss + x.rho_ee + m * x.rho_u);
  d.rho_u = 2.0 * g * m - (2.0 * n + 1.0) * x.rho_u -
            2.0 * m * ((1.0 + 2.0 * g) * x.rho_ss - (1.0 - 2.0 * g) * x.rho_aa);
  return d;
}

CollectivePopulations rhs_nonidentical(const CollectivePopulations& x, double g, const BathParams& bath) {
  const double n = bath.n_mean;
  const double m = bath.m_abs;
  CollectivePopulations d;
  d.rho_ee = -2.0 * (n + 1.0) * x.rho_ee + n * (x.rho_ss + x.rho_aa) + g * m * x.rho_u;
  d.rho_ss = (n - (3.0 * n + 1.0) * x.rho_ss - n * x.rho_aa + x.rho_ee) - g * m * x.rho_u;
  d.rho_aa = (n - (3.0 * n + 1.0) * x.rho_aa - n * x.rho_ss + x.rho_ee) - g * m * x.rho_u;
  d.rho_u = 2.0 * g * m - (2.0 * n + 1.0) * x.rho_u - 4.0 * g * m * (x.rho_ss + x.rho_aa);
  return d;
}

CollectivePopulations steady_identical(double g, const BathParams& bath) {
  bath.validate();
  const double n = bath.n_mean;
  const double m2 = bath.m_abs * bath.m_abs;
  const double p = 2.0 * n + 1.0;
  const double squeeze_gap = p * p - 4.0 * m2;
  const double denom = p * p * p * p - 4.0 * m2 * (p * p - g * g);
  if (!(denom > 0.0)) throw DomainError("identical-atom steady state: non-positive denominator");
  CollectivePopulations s;
  s.rho_ee = (n * n * squeeze_gap + m2 * g * g) / denom;
  s.rho_ss = (n * (n + 1.0) * squeeze_gap + m2 * g * (g - 2.0)) / denom;
  s.rho_aa = (n * (n + 1.0) * squeeze_gap + m2 * g * (g + 2.0)) / denom;
  s.rho_u = 2.0 * p * bath.m_abs * g / denom;
  return s;
}

CollectivePopulations steady_nonidentical(double g, const BathParams& bath) {
  bath.validate();
  const double n = bath.n_mean;
  const double p = 2.0 * n + 1.0;
  const double denom = p * p - 4.0 * bath.m_abs * bath.m_abs * g * g;
  if (!(denom > 0.0)) throw DomainError("nonidentical-atom steady state: non-positive denominator");
  CollectivePopulations s;
  s.rho_ee = 0.25 * ((2.0 * n - 1.0) / p + 1.0 / denom);
  s.rho_ss = 0.25 * (1.0 - 1.0 / denom);
  s.rho_aa = s.rho_ss;
  s.rho_u = 2.0 * bath.m_abs * g / (p * denom);
  return s;
}

SecularSteadyState steady_nonidentical(double gamma12, const BathParams& bath, double delta_over_gamma) {
  SecularSteadyState out{steady_nonidentical(gamma12, bath), std::nullopt};
  if (delta_over_gamma < kSecularDeltaThreshold) {
    out.warning = "secular approximation assumes Delta >> Gamma; Delta/Gamma = " + std::to_string(delta_over_gamma);
  }
  return out;
}

namespace {

CollectivePopulations evaluate(ReducedModel model, const CollectivePopulations& x, double g, const BathParams& bath) {
  return model == ReducedModel::kIdentical ? rhs_identical(x, g, bath) : rhs_nonidentical(x, g, bath);
}

}  // namespace

AffineSystem affine_system(ReducedModel model, double g, const BathParams& bath) {
  AffineSystem sys;
  sys.b = evaluate(model, {}, g, bath).as_array();
  for (int col = 0; col < 4; ++col) {
    std::array<double, 4> unit{};
    unit[col] = 1.0;
    const auto column = evaluate(model, CollectivePopulations::from_array(unit), g, bath).as_array();
    for (int row = 0; row < 4; ++row) sys.a[row][col] = column[row] - sys.b[row];
  }
  return sys;
}

CollectivePopulations integrate_reduced(ReducedModel model, const CollectivePopulations& initial, double g,
                                        const BathParams& bath, double t, const RelaxationOptions& options) {
  if (!(t >= 0.0)) throw DomainError("integration time must be non-negative");
  using State = std::array<double, 4>;
  State state = initial.as_array();
  auto system = [&](const State& x, State& dxdt, double) {
    dxdt = evaluate(model, CollectivePopulations::from_array(x), g, bath).as_array();
  };
  detail::integrate_dopri5(system, state, 0.0, t, options.rel_tol, options.abs_tol, 1e-3, 1e-14);
  return CollectivePopulations::from_array(state);
}

CollectivePopulations relax_reduced(ReducedModel model, double g, const BathParams& bath,
                                    const RelaxationOptions& options) {
  bath.validate();
  const AffineSystem sys = affine_system(model, g, bath);
  Eigen::Matrix4d a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = sys.a[r][c];
  const Eigen::Vector4cd eigenvalues = a.eigenvalues();
  double slowest = std::numeric_limits<double>::infinity();
  for (const auto& lambda : eigenvalues) slowest = std::min(slowest, -lambda.real());
  if (!(slowest > 0.0)) throw DomainError("reduced model has no attracting fixed point");
  const double horizon = options.relaxation_times / slowest;
  if (horizon > options.max_time) {
    throw DomainError("relaxation horizon " + std::to_string(horizon) + " exceeds the configured maximum");
  }
  return integrate_reduced(model, CollectivePopulations{}, g, bath, horizon, options);
}

}  // namespace sqent
