#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "sqent/error.hpp"

namespace sqent::detail {

/// Advances `state` from t0 to t1 with a controlled Dormand-Prince 5(4)
/// stepper. Ends exactly at t1; throws IntegrationError if the step size
/// collapses below `min_step`.
template <class State, class System>
void integrate_dopri5(System&& system, State& state, double t0, double t1, double rel_tol, double abs_tol,
                      double initial_step, double min_step) {
  namespace odeint = boost::numeric::odeint;
  using Stepper = odeint::runge_kutta_dopri5<State, double, State, double>;
  auto stepper = odeint::make_controlled<Stepper>(abs_tol, rel_tol);

  double t = t0;
  double dt = std::min(initial_step, t1 - t0);
  const double end_slack = 1e-14 * std::max(1.0, std::abs(t1));
  while (t1 - t > end_slack) {
    dt = std::min(dt, t1 - t);
    if (stepper.try_step(system, state, t, dt) == odeint::fail) {
      if (dt < min_step) {
        throw IntegrationError("step size underflow at t = " + std::to_string(t), t);
      }
    }
  }
}

}  // namespace sqent::detail
