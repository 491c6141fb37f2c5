#include "sqent/geometry.hpp"

#include <cmath>
#include <numbers>

#include "sqent/error.hpp"

namespace sqent {

void AtomPairConfig::validate() const {
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  if (!(r12_over_lambda >= 0.0)) throw DomainError("r12_over_lambda must be non-negative");
  if (!(std::abs(mu_hat_dot_r_hat) <= 1.0)) throw DomainError("|mu_hat_dot_r_hat| must not exceed 1");
  if (!(delta_over_gamma >= 0.0)) throw DomainError("delta_over_gamma must be non-negative");
}

namespace {

// Below this kr the radiative series is evaluated by its Taylor expansion;
// the closed form loses all digits to cancellation in cos/x^2 - sin/x^3.
constexpr double kSmallKr = 1e-3;

struct Angular {
  double transverse;    // 1 - (mu.r)^2
  double longitudinal;  // 1 - 3 (mu.r)^2
};

Angular angular(double mu_dot_r) {
  const double c2 = mu_dot_r * mu_dot_r;
  return {1.0 - c2, 1.0 - 3.0 * c2};
}

}  // namespace

double gamma12(const AtomPairConfig& cfg) {
  cfg.validate();
  const auto [a, b] = angular(cfg.mu_hat_dot_r_hat);
  const double x = 2.0 * std::numbers::pi * cfg.r12_over_lambda;
  if (x < kSmallKr) {
    // sin x/x = 1 - x^2/6 + x^4/120, cos/x^2 - sin/x^3 = -1/3 + x^2/30 - x^4/840
    const double x2 = x * x;
    const double s = 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    const double t = -1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0;
    return 1.5 * (a * s + b * t);
  }
  const double sx = std::sin(x);
  const double cx = std::cos(x);
  return 1.5 * (a * sx / x + b * (cx / (x * x) - sx / (x * x * x)));
}

double omega12(const AtomPairConfig& cfg) {
  cfg.validate();
  if (cfg.r12_over_lambda == 0.0) {
    throw DomainError("dipole-dipole shift diverges at zero separation");
  }
  const auto [a, b] = angular(cfg.mu_hat_dot_r_hat);
  const double x = 2.0 * std::numbers::pi * cfg.r12_over_lambda;
  const double sx = std::sin(x);
  const double cx = std::cos(x);
  return 0.75 * (-a * cx / x + b * (sx / (x * x) + cx / (x * x * x)));
}

}  // namespace sqent
