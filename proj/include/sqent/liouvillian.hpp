#pragma once

#include <complex>

#include <Eigen/Dense>

#include "sqent/bath.hpp"
#include "sqent/density_matrix.hpp"
#include "sqent/geometry.hpp"

namespace sqent {

using Matrix16c = Eigen::Matrix<Complex, 16, 16>;
using Vector16c = Eigen::Matrix<Complex, 16, 1>;

/// Rates and frequencies entering the generator, all in units of Gamma.
/// Detunings are measured from the squeezing carrier w_s.
struct Couplings {
  double gamma12 = 0.0;
  double omega12 = 0.0;
  double detuning1 = 0.0;
  double detuning2 = 0.0;

  /// Collective rates from the geometry; detunings w_i - w_s with
  /// w_{1,2} = w0 -/+ Delta.
  static Couplings from(const AtomPairConfig& cfg, const BathParams& bath);
};

/// Master-equation generator in the frame rotating at the squeezing carrier.
/// Acts on column-stacked density matrices: vec(rho)[i + 4 j] = rho(i, j).
class Liouvillian {
 public:
  Liouvillian(const Couplings& couplings, const BathParams& bath);

  const Matrix16c& matrix() const { return matrix_; }
  const Couplings& couplings() const { return couplings_; }
  const BathParams& bath() const { return bath_; }

  /// d rho / dt
  Matrix4c apply(const Matrix4c& rho) const;

 private:
  Couplings couplings_;
  BathParams bath_;
  Matrix16c matrix_;
};

Vector16c vectorize(const Matrix4c& rho);
Matrix4c unvectorize(const Vector16c& v);

/// Throws UnphysicalBathError for |M|^2 > N(N+1) and DomainError for an
/// invalid geometry (including zero separation, where Omega12 diverges).
Liouvillian build_liouvillian(const AtomPairConfig& cfg, const BathParams& bath);
Liouvillian build_liouvillian(const Couplings& couplings, const BathParams& bath);

struct PropagationOptions {
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  double initial_step = 1e-3;
  /// Steps below this size abort with IntegrationError.
  double min_step = 1e-14;
};

/// Time evolution over duration t (units of 1/Gamma) by adaptive
/// Dormand-Prince integration.
DensityMatrix propagate(const Liouvillian& L, const DensityMatrix& rho0, double t,
                        const PropagationOptions& options = {});

/// Unique trace-one null vector of L, obtained from the smallest right
/// singular vector. Throws AmbiguityError when the null space is degenerate.
DensityMatrix steady_state(const Liouvillian& L);

}  // namespace sqent
