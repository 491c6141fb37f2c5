#include "sqent/bath.hpp"

#include <cmath>

#include "sqent/error.hpp"

namespace sqent {

double max_correlation(double n_mean) { return std::sqrt(n_mean * (n_mean + 1.0)); }

BathParams BathParams::maximally_squeezed(double n_mean, double phi_s) {
  BathParams bath;
  bath.n_mean = n_mean;
  bath.m_abs = max_correlation(n_mean);
  bath.phi_s = phi_s;
  return bath;
}

void BathParams::validate() const {
  if (!(n_mean >= 0.0) || !std::isfinite(n_mean)) throw UnphysicalBathError("n_mean must be finite and non-negative");
  if (!(m_abs >= 0.0) || !std::isfinite(m_abs)) throw UnphysicalBathError("m_abs must be finite and non-negative");
  if (!std::isfinite(phi_s)) throw UnphysicalBathError("phi_s must be finite");
  const double bound = n_mean * (n_mean + 1.0);
  // sqrt(N(N+1)) squared back is not always exactly N(N+1).
  if (m_abs * m_abs > bound * (1.0 + 1e-12) + 1e-300) {
    throw UnphysicalBathError("|M|^2 exceeds N(N+1)");
  }
}

}  // namespace sqent
