#pragma once

#include <optional>
#include <vector>

#include "nlosc/models.hpp"
#include "nlosc/numerics.hpp"

// Trial-function period approximations. A cosine trial is pushed through the
// double-integration improvement map
//   u_impr(t) = A - int_0^t (t - s) f(u_trial(s)) ds,
// and the frequency is tuned so the improved trajectory crosses zero at the
// quarter period. The first-order trial is A cos(w t); the second-order trial
// A1 cos(w t) + A2 cos(3 w t) fixes A2 by matching the initial curvature of
// the trial to the equation of motion, leaving w as the only unknown.

namespace nlosc {

enum class TrialOrder { First, Second };

struct TrialFunction {
  TrialOrder order = TrialOrder::First;
  double amplitude = 1.0;
  double omega = 1.0;
  double a1 = 1.0;  // cos(w t) coefficient
  double a2 = 0.0;  // cos(3 w t) coefficient; a1 + a2 == amplitude

  static TrialFunction first_order(double amplitude, double omega);
  static TrialFunction second_order(double amplitude, double a2, double omega);

  double operator()(double t) const;
};

enum class PeriodMethod { FirstOrder, SecondOrder, ClosedFormT1, PolynomialT2, SignumExact };

struct PeriodResult {
  double period = 0.0;
  PeriodMethod method = PeriodMethod::FirstOrder;
  double residual = 0.0;           // |u_impr(T/4)| at the solution
  std::optional<double> a2 = {};   // second-order harmonic weight, when present
};

enum class LimitKind { FirstOrderAnalytic, SecondOrderPolynomial, Exact };

// Strong-coupling limit of sqrt(rho) * T(rho).
struct AsymptoticResult {
  Family family = Family::Duffing;
  LimitKind kind = LimitKind::Exact;
  double t_inf = 0.0;
};

// Reference limit constants for the scaled period as rho -> infinity.
inline constexpr double kDuffingLimitRef = 7.416298709;
inline constexpr double kQuadraticLimitRef = 6.868663935;

// Improved trajectory at time t >= 0 (quadrature tolerance tol).
double improve_trajectory(const ForceModel& model, const TrialFunction& trial, double t,
                          double tol = 1e-12);

// Solve u_impr(T/4) = 0 for the trial frequency. Requires an odd force and
// amplitude > 0. Throws std::runtime_error "no bracket" if no sign change is
// found, "not odd" if the parity check fails.
PeriodResult first_order_period(const ForceModel& model, double amplitude, double tol = 1e-12);
PeriodResult second_order_period(const ForceModel& model, double amplitude, double tol = 1e-12);

// First-order frequencies in closed form, parameterized by the reduced
// nonlinearity rho (epsilon folded into rho; see reduced_parameter).
double duffing_T1_closed(double rho);
double quadratic_T1_closed(double omega0, double rho);

// Second-order period polynomials in s = T^2 (smallest positive root is the
// physical period) and their strong-coupling limit forms.
EvenPolynomial duffing_T2_polynomial(double rho);
EvenPolynomial duffing_T2_limit_polynomial();
AsymptoticResult duffing_T2_limit();
EvenPolynomial quadratic_T2_polynomial(double omega0, double rho);
EvenPolynomial quadratic_T2_limit_polynomial();
AsymptoticResult quadratic_T2_limit();

// Signum oscillator period 4*sqrt(2 A / epsilon): parabolic arcs make this
// exact, so it doubles as a calibration target for the iterative solvers.
PeriodResult signum_exact_period(double epsilon, double amplitude);

// The six strong-coupling limits: first-order analytic, second-order
// polynomial root, and reference exact constant for each cubic-type family.
std::vector<AsymptoticResult> asymptotic_table();

}  // namespace nlosc
