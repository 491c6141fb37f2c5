#pragma once

#include <functional>
#include <utility>

#include "sqent/bath.hpp"
#include "sqent/density_matrix.hpp"
#include "sqent/reduced.hpp"

namespace sqent {

/// Wootters concurrence of an arbitrary two-qubit state, from the eigenvalues
/// of rho (sy.sy) rho* (sy.sy). On X-shaped states this equals the sx.sx form. Throws DomainError if rho is not positive
/// semidefinite within 1e-9.
double concurrence_general(const DensityMatrix& rho);

/// The two signed candidates of the X-state concurrence,
/// c1 = 2(|rho_12| - sqrt(rho_33 rho_44)) and c2 = 2(|rho_34| - sqrt(rho_11 rho_22)).
struct ConcurrenceCandidates {
  double c1;
  double c2;
};
ConcurrenceCandidates concurrence_candidates(const DensityMatrix& rho);

/// max(0, c1, c2). Throws StructureError when rho is not X-shaped within 1e-9.
double concurrence_xstate(const DensityMatrix& rho);

/// c1 = |rho_u| - (rho_ss + rho_aa) on the identical-atom steady state.
double c1_identical(double gamma12, const BathParams& bath);

/// c1 on the secular nonidentical-atom steady state.
double c1_nonidentical(double gamma12, const BathParams& bath);

/// Closed forms of c1 for the maximally squeezed vacuum |M| = sqrt(N(N+1)).
double c1_identical_max_squeezing(double gamma12, double n_mean);
double c1_nonidentical_max_squeezing(double gamma12, double n_mean);

struct BellFidelities {
  double plus;
  double minus;
};

/// Overlaps with (|gg> +- |ee>)/sqrt2 expressed through rho_u, which for
/// a steady state carries the squeezing phase.
BellFidelities fidelities(const DensityMatrix& rho, double phi_s = 0.0);

/// Tr(rho^2)
double purity(const DensityMatrix& rho);

/// |M| / N. NaN at N = 0, where the ratio is undefined.
double tc_parameter(const BathParams& bath);

struct EntanglementReport {
  double concurrence;
  double c1;
  double c2;
  double fidelity_plus;
  double fidelity_minus;
  double purity;
  double tc;
};

/// All metrics of a state. Uses the X-state closed form when rho is
/// X-shaped and the general eigenvalue method otherwise.
EntanglementReport analyze(const DensityMatrix& rho, const BathParams& bath);

/// Golden-section search for the maximizer of a unimodal function on
/// [lo, hi]. Returns (argmax, max).
std::pair<double, double> golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                                  double tol = 1e-10);

/// Photon number maximizing c1 for a maximally squeezed bath at fixed
/// collective damping, searched over N in [lo, hi].
std::pair<double, double> optimal_photon_number(ReducedModel model, double gamma12, double lo = 1e-6,
                                                double hi = 2.0);

}  // namespace sqent
