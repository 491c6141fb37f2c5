#include "sqent/liouvillian.hpp"

#include <array>

#include <unsupported/Eigen/KroneckerProduct>

#include "ode.hpp"
#include "sqent/error.hpp"

namespace sqent {

namespace {

struct AtomOperators {
  std::array<Matrix4c, 2> lower;
  std::array<Matrix4c, 2> raise;
  std::array<Matrix4c, 2> sz;
};

AtomOperators atom_operators() {
  AtomOperators ops;
  for (auto& m : ops.lower) m.setZero();
  // atom 1: e1 -> g1
  ops.lower[0](kG1E2, kExcited) = 1.0;
  ops.lower[0](kGround, kE1G2) = 1.0;
  // atom 2: e2 -> g2
  ops.lower[1](kE1G2, kExcited) = 1.0;
  ops.lower[1](kGround, kG1E2) = 1.0;
  for (int i = 0; i < 2; ++i) {
    ops.raise[i] = ops.lower[i].adjoint();
    ops.sz[i] = 0.5 * (ops.raise[i] * ops.lower[i] - ops.lower[i] * ops.raise[i]);
  }
  return ops;
}

const Matrix4c& identity4() {
  static const Matrix4c id = Matrix4c::Identity();
  return id;
}

// vec(X rho)
Matrix16c left(const Matrix4c& x) { return Eigen::kroneckerProduct(identity4(), x); }
// vec(rho X)
Matrix16c right(const Matrix4c& x) { return Eigen::kroneckerProduct(x.transpose(), identity4()); }
// vec(X rho Y)
Matrix16c sandwich(const Matrix4c& x, const Matrix4c& y) { return Eigen::kroneckerProduct(y.transpose(), x); }

// rho A B + A B rho - 2 B rho A
Matrix16c dissipator(const Matrix4c& a, const Matrix4c& b) {
  const Matrix4c ab = a * b;
  return right(ab) + left(ab) - 2.0 * sandwich(b, a);
}

}  // namespace

Couplings Couplings::from(const AtomPairConfig& cfg, const BathParams& bath) {
  Couplings c;
  c.gamma12 = sqent::gamma12(cfg);
  c.omega12 = sqent::omega12(cfg);
  c.detuning1 = -cfg.delta_over_gamma - bath.carrier_detuning_over_gamma;
  c.detuning2 = cfg.delta_over_gamma - bath.carrier_detuning_over_gamma;
  return c;
}

Liouvillian::Liouvillian(const Couplings& couplings, const BathParams& bath)
    : couplings_(couplings), bath_(bath) {
  bath_.validate();
  const AtomOperators ops = atom_operators();
  const Complex i_unit(0.0, 1.0);
  const double n = bath_.n_mean;
  const Complex m = bath_.m();
  const double rates[2][2] = {{1.0, couplings_.gamma12}, {couplings_.gamma12, 1.0}};

  matrix_.setZero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double g = rates[i][j];
      matrix_ -= 0.5 * g * (1.0 + n) * dissipator(ops.raise[i], ops.lower[j]);
      matrix_ -= 0.5 * g * n * dissipator(ops.lower[i], ops.raise[j]);
      matrix_ += 0.5 * g * m * dissipator(ops.raise[i], ops.raise[j]);
      matrix_ += 0.5 * g * std::conj(m) * dissipator(ops.lower[i], ops.lower[j]);
    }
  }

  const Matrix4c hamiltonian = couplings_.detuning1 * ops.sz[0] + couplings_.detuning2 * ops.sz[1] +
                               couplings_.omega12 * (ops.raise[0] * ops.lower[1] + ops.raise[1] * ops.lower[0]);
  matrix_ += -i_unit * (left(hamiltonian) - right(hamiltonian));
}

Matrix4c Liouvillian::apply(const Matrix4c& rho) const { return unvectorize(matrix_ * vectorize(rho)); }

Vector16c vectorize(const Matrix4c& rho) { return Eigen::Map<const Vector16c>(rho.data()); }

Matrix4c unvectorize(const Vector16c& v) { return Eigen::Map<const Matrix4c>(v.data()); }

Liouvillian build_liouvillian(const AtomPairConfig& cfg, const BathParams& bath) {
  bath.validate();
  return Liouvillian(Couplings::from(cfg, bath), bath);
}

Liouvillian build_liouvillian(const Couplings& couplings, const BathParams& bath) {
  return Liouvillian(couplings, bath);
}

DensityMatrix propagate(const Liouvillian& L, const DensityMatrix& rho0, double t, const PropagationOptions& options) {
  if (!(t >= 0.0)) throw DomainError("propagation time must be non-negative");
  if (t == 0.0) return rho0;

  using State = std::array<Complex, 16>;
  State state;
  const Vector16c v0 = vectorize(rho0.matrix());
  std::copy(v0.begin(), v0.end(), state.begin());

  const Matrix16c& generator = L.matrix();
  auto system = [&generator](const State& x, State& dxdt, double) {
    Eigen::Map<const Vector16c> in(x.data());
    Eigen::Map<Vector16c> out(dxdt.data());
    out.noalias() = generator * in;
  };
  detail::integrate_dopri5(system, state, 0.0, t, options.rel_tol, options.abs_tol, options.initial_step,
                           options.min_step);
  return DensityMatrix(unvectorize(Eigen::Map<const Vector16c>(state.data())));
}

DensityMatrix steady_state(const Liouvillian& L) {
  Eigen::JacobiSVD<Matrix16c> svd(L.matrix(), Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  if (!(sigma(14) > 1e-8 * sigma(0))) {
    throw AmbiguityError("steady state is not unique: second-smallest singular value vanishes");
  }
  Matrix4c rho = unvectorize(svd.matrixV().col(15));
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-300) throw AmbiguityError("null vector has zero trace");
  rho /= tr;
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

}  // namespace sqent
