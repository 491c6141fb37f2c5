#pragma once

namespace sqent {

/// Geometry and spectroscopy of the atom pair. Rates are in units of the
/// single-atom decay rate; `gamma` is carried only for labelling output.
struct AtomPairConfig {
  double gamma = 1.0;
  double r12_over_lambda = 0.05;
  /// cos of the angle between the (common) dipole moment and the pair axis.
  double mu_hat_dot_r_hat = 0.0;
  /// Half splitting (w2 - w1) / 2 in units of gamma.
  double delta_over_gamma = 0.0;

  /// Throws DomainError on a negative separation, |mu.r| > 1 or gamma <= 0.
  void validate() const;
};

/// Collective damping rate Gamma12 / Gamma. Returns the Dicke limit 1 at zero
/// separation.
double gamma12(const AtomPairConfig& cfg);

/// Dipole-dipole shift Omega12 / Gamma. Diverges as r^-3; zero separation
/// throws DomainError.
double omega12(const AtomPairConfig& cfg);

}  // namespace sqent
