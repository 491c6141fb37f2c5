#include "sqent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sqent/error.hpp"

namespace sqent {

namespace {

constexpr double kPsdTolerance = 1e-9;
constexpr double kXTolerance = 1e-9;

// sigma_y (x) sigma_y maps gg -> -ee, ee -> -gg, g1e2 <-> e1g2.
Matrix4c spin_flip(const Matrix4c& rho) {
  static constexpr int flip[4] = {kExcited, kGround, kE1G2, kG1E2};
  static constexpr double sign[4] = {-1.0, -1.0, 1.0, 1.0};
  Matrix4c out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = sign[i] * sign[j] * std::conj(rho(flip[i], flip[j]));
  return out;
}

}  // namespace

double concurrence_general(const DensityMatrix& rho) {
  const Matrix4c herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> state(herm);
  if (state.eigenvalues().minCoeff() < -kPsdTolerance) {
    throw DomainError("concurrence: density matrix is not positive semidefinite");
  }
  const Eigen::Vector4d roots = state.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix4c sqrt_rho = state.eigenvectors() * roots.asDiagonal() * state.eigenvectors().adjoint();

  // sqrt(rho) rho~ sqrt(rho) is Hermitian and isospectral with rho rho~.
  Matrix4c r = sqrt_rho * spin_flip(herm) * sqrt_rho;
  r = 0.5 * (r + r.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> flipped(r, Eigen::EigenvaluesOnly);
  Eigen::Vector4d lambda = flipped.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

ConcurrenceCandidates concurrence_candidates(const DensityMatrix& rho) {
  const auto p = [&](int i, int j) { return rho(i, j); };
  const double outer = std::sqrt(std::max(0.0, p(kG1E2, kG1E2).real() * p(kE1G2, kE1G2).real()));
  const double inner = std::sqrt(std::max(0.0, p(kGround, kGround).real() * p(kExcited, kExcited).real()));
  return {2.0 * (std::abs(p(kGround, kExcited)) - outer), 2.0 * (std::abs(p(kG1E2, kE1G2)) - inner)};
}

double concurrence_xstate(const DensityMatrix& rho) {
  if (!rho.is_x_structured(kXTolerance)) {
    throw StructureError("density matrix is not X-shaped; use concurrence_general");
  }
  const auto [c1, c2] = concurrence_candidates(rho);
  return std::max({0.0, c1, c2});
}

double c1_identical(double gamma12, const BathParams& bath) {
  const CollectivePopulations s = steady_identical(gamma12, bath);
  return std::abs(s.rho_u) - (s.rho_ss + s.rho_aa);
}

double c1_nonidentical(double gamma12, const BathParams& bath) {
  const CollectivePopulations s = steady_nonidentical(gamma12, bath);
  return std::abs(s.rho_u) - (s.rho_ss + s.rho_aa);
}

double c1_identical_max_squeezing(double gamma12, double n_mean) {
  const double nn = n_mean * (n_mean + 1.0);
  const double root = std::sqrt(nn);
  const double g = std::abs(gamma12);
  return 2.0 * root * ((2.0 * n_mean + 1.0) * g - root * (1.0 + g * g)) / (1.0 + 4.0 * nn * (1.0 + g * g));
}

double c1_nonidentical_max_squeezing(double gamma12, double n_mean) {
  const double nn = n_mean * (n_mean + 1.0);
  const double root = std::sqrt(nn);
  const double p = 2.0 * n_mean + 1.0;
  const double g = std::abs(gamma12);
  return 2.0 * root * (g - p * root * (1.0 - g * g)) / (p * (1.0 + 4.0 * nn * (1.0 - g * g)));
}

BellFidelities fidelities(const DensityMatrix& rho, double phi_s) {
  const double block = rho.rho_gg() + rho.rho_ee();
  const double u = rho.rho_u(phi_s);
  return {0.5 * (block + u), 0.5 * (block - u)};
}

double purity(const DensityMatrix& rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

double tc_parameter(const BathParams& bath) {
  if (bath.n_mean == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return bath.m_abs / bath.n_mean;
}

EntanglementReport analyze(const DensityMatrix& rho, const BathParams& bath) {
  EntanglementReport report{};
  const auto [c1, c2] = concurrence_candidates(rho);
  report.c1 = c1;
  report.c2 = c2;
  report.concurrence = rho.is_x_structured(kXTolerance) ? std::max({0.0, c1, c2}) : concurrence_general(rho);
  const BellFidelities f = fidelities(rho, bath.phi_s);
  report.fidelity_plus = f.plus;
  report.fidelity_minus = f.minus;
  report.purity = purity(rho);
  report.tc = tc_parameter(bath);
  return report;
}

std::pair<double, double> golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                                  double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

std::pair<double, double> optimal_photon_number(ReducedModel model, double gamma12, double lo, double hi) {
  auto objective = [&](double n) {
    const BathParams bath = BathParams::maximally_squeezed(n);
    return model == ReducedModel::kIdentical ? c1_identical(gamma12, bath) : c1_nonidentical(gamma12, bath);
  };
  return golden_section_maximize(objective, lo, hi);
}

}  // namespace sqent
