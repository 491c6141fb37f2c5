#pragma once

#include <array>
#include <optional>
#include <string>

#include "sqent/bath.hpp"
#include "sqent/density_matrix.hpp"

namespace sqent {

/// Collective-basis variables of the reduced equations of motion.
/// rho_u = rho_eg exp(-i phi_s) + rho_ge exp(i phi_s) is real and may be
/// negative when gamma12 < 0.
struct CollectivePopulations {
  double rho_ee = 0.0;
  double rho_ss = 0.0;
  double rho_aa = 0.0;
  double rho_u = 0.0;

  double rho_gg() const { return 1.0 - rho_ee - rho_ss - rho_aa; }

  std::array<double, 4> as_array() const { return {rho_ee, rho_ss, rho_aa, rho_u}; }
  static CollectivePopulations from_array(const std::array<double, 4>& v) { return {v[0], v[1], v[2], v[3]}; }

  /// Reads the reduced variables off a full density matrix.
  static CollectivePopulations from(const DensityMatrix& rho, double phi_s);

  /// X-structured density matrix with rho_sa = 0 and the two-photon
  /// coherence aligned with the squeezing phase.
  DensityMatrix to_density_matrix(double phi_s) const;
};

/// Time derivatives of the identical-atom (Delta = 0, w_s = w0) system.
CollectivePopulations rhs_identical(const CollectivePopulations& state, double gamma12, const BathParams& bath);

/// Time derivatives of the secular nonidentical-atom system (Delta >> Gamma,
/// w_s = (w1 + w2) / 2).
CollectivePopulations rhs_nonidentical(const CollectivePopulations& state, double gamma12, const BathParams& bath);

/// Closed-form stationary solution of the identical-atom system. Throws
/// DomainError when the common denominator is not positive.
CollectivePopulations steady_identical(double gamma12, const BathParams& bath);

/// Closed-form stationary solution of the secular system (rho_ss = rho_aa).
CollectivePopulations steady_nonidentical(double gamma12, const BathParams& bath);

/// Below this splitting the secular approximation is flagged.
inline constexpr double kSecularDeltaThreshold = 10.0;

struct SecularSteadyState {
  CollectivePopulations populations;
  std::optional<std::string> warning;
};

/// steady_nonidentical with a soft validity flag for Delta/Gamma below
/// kSecularDeltaThreshold.
SecularSteadyState steady_nonidentical(double gamma12, const BathParams& bath, double delta_over_gamma);

enum class ReducedModel { kIdentical, kNonidentical };

/// Constant-coefficient form d x/dt = A x + b of a reduced model, with
/// x = (rho_ee, rho_ss, rho_aa, rho_u).
struct AffineSystem {
  std::array<std::array<double, 4>, 4> a;
  std::array<double, 4> b;
};
AffineSystem affine_system(ReducedModel model, double gamma12, const BathParams& bath);

struct RelaxationOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  /// Integration horizon in units of the slowest relaxation time.
  double relaxation_times = 40.0;
  /// Hard cap on the horizon, in units of 1/Gamma.
  double max_time = 1e6;
};

/// Integrates a reduced model from `initial` over `t` (units of 1/Gamma).
CollectivePopulations integrate_reduced(ReducedModel model, const CollectivePopulations& initial, double gamma12,
                                        const BathParams& bath, double t, const RelaxationOptions& options = {});

/// Long-time limit of the reduced model started from the ground state. The
/// horizon is chosen from the slowest decay rate of the affine system.
CollectivePopulations relax_reduced(ReducedModel model, double gamma12, const BathParams& bath,
                                    const RelaxationOptions& options = {});

}  // namespace sqent
