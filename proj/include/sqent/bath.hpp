#pragma once

#include <complex>

namespace sqent {

/// Broadband squeezed-vacuum reservoir, M = |M| exp(i phi_s).
struct BathParams {
  double n_mean = 0.0;
  double m_abs = 0.0;
  double phi_s = 0.0;
  /// (w_s - w0) / Gamma, w0 the mean atomic frequency.
  double carrier_detuning_over_gamma = 0.0;

  /// Minimum-uncertainty squeezed vacuum, |M| = sqrt(N(N+1)).
  static BathParams maximally_squeezed(double n_mean, double phi_s = 0.0);

  std::complex<double> m() const { return std::polar(m_abs, phi_s); }

  /// Throws UnphysicalBathError when |M|^2 > N(N+1) (beyond roundoff) or on
  /// negative N, |M|.
  void validate() const;
};

/// sqrt(N(N+1)), the largest |M| a squeezed vacuum admits.
double max_correlation(double n_mean);

}  // namespace sqent
