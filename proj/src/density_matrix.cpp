#include "sqent/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sqent {

DensityMatrix DensityMatrix::projector(const Vector4c& psi) {
  const Vector4c unit = psi.normalized();
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::basis_state(ProductState state) {
  Vector4c psi = Vector4c::Zero();
  psi(state) = 1.0;
  return projector(psi);
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(Matrix4c::Identity() * 0.25); }

DensityMatrix DensityMatrix::bell_phi_plus() {
  Vector4c psi = Vector4c::Zero();
  psi(kGround) = 1.0;
  psi(kExcited) = 1.0;
  return projector(psi);
}

DensityMatrix DensityMatrix::bell_phi_minus() {
  Vector4c psi = Vector4c::Zero();
  psi(kGround) = -1.0;
  psi(kExcited) = 1.0;
  return projector(psi);
}

DensityMatrix DensityMatrix::symmetric() { return projector(collective_basis().col(2)); }

DensityMatrix DensityMatrix::antisymmetric() { return projector(collective_basis().col(3)); }

double DensityMatrix::rho_ss() const {
  return 0.5 * (rho_(kG1E2, kG1E2) + rho_(kE1G2, kE1G2) + rho_(kG1E2, kE1G2) + rho_(kE1G2, kG1E2)).real();
}

double DensityMatrix::rho_aa() const {
  return 0.5 * (rho_(kG1E2, kG1E2) + rho_(kE1G2, kE1G2) - rho_(kG1E2, kE1G2) - rho_(kE1G2, kG1E2)).real();
}

Complex DensityMatrix::rho_sa() const {
  return 0.5 * (rho_(kG1E2, kE1G2) - rho_(kG1E2, kG1E2) + rho_(kE1G2, kE1G2) - rho_(kE1G2, kG1E2));
}

double DensityMatrix::rho_u(double phi_s) const {
  const Complex phase = std::polar(1.0, -phi_s);
  return (rho_(kExcited, kGround) * phase + rho_(kGround, kExcited) * std::conj(phase)).real();
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix4c herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double DensityMatrix::hermiticity_defect() const { return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::x_structure_defect() const {
  double defect = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool upper_block = i < 2 && j < 2;
      const bool lower_block = i >= 2 && j >= 2;
      if (!upper_block && !lower_block) defect = std::max(defect, std::abs(rho_(i, j)));
    }
  }
  return defect;
}

Matrix4c collective_basis() {
  const double h = 1.0 / std::numbers::sqrt2;
  Matrix4c u = Matrix4c::Zero();
  u(kGround, 0) = 1.0;
  u(kExcited, 1) = 1.0;
  u(kG1E2, 2) = h;
  u(kE1G2, 2) = h;
  u(kG1E2, 3) = -h;
  u(kE1G2, 3) = h;
  return u;
}

Matrix4c to_collective(const Matrix4c& product) {
  const Matrix4c u = collective_basis();
  return u.adjoint() * product * u;
}

Matrix4c to_product(const Matrix4c& collective) {
  const Matrix4c u = collective_basis();
  return u * collective * u.adjoint();
}

}  // namespace sqent
