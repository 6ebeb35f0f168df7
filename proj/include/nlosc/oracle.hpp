#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "nlosc/models.hpp"

// Two independent period references that never touch the trial-function
// machinery: an energy-integral quadrature and an adaptive Runge-Kutta
// integration of the equation of motion.

namespace nlosc {

struct TrajectorySample {
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;  // du/dt
};

struct Trajectory {
  ForceModel model;
  double amplitude = 0.0;
  std::vector<TrajectorySample> samples;  // strictly increasing t, starts at t = 0

  double energy_at(std::size_t i) const;  // v^2/2 + V(u)
};

// Quarter-period energy integral with the substitution u = A sin(theta):
//   T = 4 * int_0^{pi/2} A cos(theta) / sqrt(2 (V(A) - V(A sin(theta)))) dtheta.
// The potential difference is factored as (1 - sin(theta)) * W(sin(theta))
// per family, which removes the endpoint cancellation analytically; the
// integrand stays finite at theta = pi/2 where it equals sqrt(A / f(A)).
double exact_period_energy(const ForceModel& model, double amplitude, double tol = 1e-12);

// The factored energy integrand g(theta); exposed so its endpoint behavior
// and smoothness can be checked directly.
double energy_integrand(const ForceModel& model, double amplitude, double theta);

// Dormand-Prince 5(4) integration of u'' + f(u) = 0 from (A, 0) to t_end,
// recording every accepted step (last sample lands exactly on t_end). Throws
// std::runtime_error "step underflow" if error control drives the step below
// floating-point resolution.
Trajectory integrate_ode(const ForceModel& model, double amplitude, double t_end,
                         double tol = 1e-10);

// States at caller-chosen times (monotone increasing, >= 0), one integration.
std::vector<TrajectorySample> ode_states_at(const ForceModel& model, double amplitude,
                                            const std::vector<double>& times, double tol = 1e-10);

// Period via the first zero crossing of u: integrate until the sign change,
// bisect the crossing time on re-integration, return 4 * t_cross. Throws
// std::runtime_error "no crossing" if none occurs within ten linearized
// periods.
double period_from_ode(const ForceModel& model, double amplitude, double tol = 1e-10);

// max_i |E_i - E_0| / max(1, |E_0|) over the trajectory samples.
double energy_drift(const Trajectory& trajectory);

// Strong-coupling limit of phi(rho) = sqrt(rho) * period_fn(rho) evaluated on
// an increasing sequence (>= 3 points). Duffing limits are Richardson-
// extrapolated in 1/rho; QuadraticAbs uses the converged tail directly.
// Throws std::runtime_error "not converged" when the tail still moves by more
// than 1e-3.
double scaled_limit(Family family, const std::function<double(double)>& period_fn,
                    const std::vector<double>& rho_seq = {1e4, 1e6, 1e8});

// Periods of the pure strong-coupling equations at unit amplitude:
// u'' + u^3 = 0 and u'' + u|u| = 0. Computed by the same factored energy
// integral; these pin down what the scaled limits converge to.
double exact_duffing_limit(double tol = 1e-12);
double exact_quadratic_limit(double tol = 1e-12);

}  // namespace nlosc
