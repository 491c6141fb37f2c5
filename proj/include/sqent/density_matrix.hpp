#pragma once

#include <complex>

#include <Eigen/Dense>

namespace sqent {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Vector4c = Eigen::Matrix<Complex, 4, 1>;

/// Product basis of the two atoms, atom 1 being the first tensor factor.
enum ProductState : int {
  kGround = 0,   // |g1 g2>
  kExcited = 1,  // |e1 e2>
  kG1E2 = 2,     // |g1 e2>
  kE1G2 = 3,     // |e1 g2>
};

/// Two-atom density matrix stored in the product basis. The collective
/// one-excitation states are |s> = (|g1e2> + |e1g2>)/sqrt2 and
/// |a> = -(|g1e2> - |e1g2>)/sqrt2.
class DensityMatrix {
 public:
  DensityMatrix() : rho_(Matrix4c::Zero()) {}
  explicit DensityMatrix(const Matrix4c& rho) : rho_(rho) {}

  static DensityMatrix projector(const Vector4c& psi);
  static DensityMatrix basis_state(ProductState state);
  static DensityMatrix maximally_mixed();
  /// (|gg> + |ee>)/sqrt2
  static DensityMatrix bell_phi_plus();
  /// -(|gg> - |ee>)/sqrt2
  static DensityMatrix bell_phi_minus();
  static DensityMatrix symmetric();
  static DensityMatrix antisymmetric();

  const Matrix4c& matrix() const { return rho_; }
  Matrix4c& matrix() { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }

  double rho_gg() const { return rho_(kGround, kGround).real(); }
  double rho_ee() const { return rho_(kExcited, kExcited).real(); }
  double rho_ss() const;
  double rho_aa() const;
  Complex rho_sa() const;
  /// <e|rho|g>, the two-photon coherence.
  Complex rho_eg() const { return rho_(kExcited, kGround); }
  /// rho_eg exp(-i phi_s) + rho_ge exp(i phi_s).
  double rho_u(double phi_s) const;

  double trace() const { return rho_.trace().real(); }
  double min_eigenvalue() const;
  /// max |rho_ij - conj(rho_ji)|
  double hermiticity_defect() const;
  /// Largest modulus among the entries outside the {gg,ee} and {g1e2,e1g2} blocks.
  double x_structure_defect() const;
  bool is_x_structured(double tol = 1e-9) const { return x_structure_defect() <= tol; }

 private:
  Matrix4c rho_;
};

/// Unitary whose columns are |g>, |e>, |s>, |a> expressed in the product basis.
Matrix4c collective_basis();

/// Element-wise conversion between the product and collective bases.
Matrix4c to_collective(const Matrix4c& product);
Matrix4c to_product(const Matrix4c& collective);

}  // namespace sqent
