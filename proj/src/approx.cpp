#include "nlosc/approx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nlosc {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

TrialFunction make_trial(const ForceModel& model, TrialOrder order, double amplitude,
                         double omega) {
  if (order == TrialOrder::First) return TrialFunction::first_order(amplitude, omega);
  // Match the trial's initial curvature to u'' = -f(A):
  //   -w^2 (a1 + 9 a2) = -f(A) with a1 + a2 = A  =>  a2 = (f(A)/w^2 - A) / 8.
  const double a2 = (force_eval(model, amplitude) / (omega * omega) - amplitude) / 8.0;
  return TrialFunction::second_order(amplitude, a2, omega);
}

PeriodResult solve_period(const ForceModel& model, double amplitude, double tol,
                          TrialOrder order) {
  const char* who =
      order == TrialOrder::First ? "first_order_period" : "second_order_period";
  require(std::isfinite(amplitude) && amplitude > 0.0 && tol > 0.0,
          "period solve: requires amplitude > 0 and tol > 0");
  if (!parity_check(model, amplitude)) {
    throw std::runtime_error(std::string(who) + ": not odd");
  }
  const double f_at_a = force_eval(model, amplitude);
  require(f_at_a > 0.0, "period solve: force must be restoring at the amplitude");

  // Quadrature kept below the solver tolerance, floored above the GK rounding
  // level so large-amplitude integrands cannot starve convergence.
  const double quad_tol = std::max(1e-13, std::min(tol, 1e-12));
  auto quarter_residual = [&](double omega) {
    const TrialFunction trial = make_trial(model, order, amplitude, omega);
    return improve_trajectory(model, trial, 0.5 * kPi / omega, quad_tol);
  };

  // The quarter-point value rises with frequency (shorter integration leg),
  // so expand geometrically toward the sign change from the linearized seed.
  const double omega_seed = std::sqrt(f_at_a / amplitude);
  double lo = omega_seed, hi = omega_seed;
  double h_lo = quarter_residual(omega_seed), h_hi = h_lo;
  constexpr int max_doublings = 60;
  if (h_lo > 0.0) {
    int k = 0;
    do {
      if (++k > max_doublings) throw std::runtime_error(std::string(who) + ": no bracket");
      hi = lo;
      h_hi = h_lo;
      lo *= 0.5;
      h_lo = quarter_residual(lo);
    } while (h_lo > 0.0);
  } else if (h_lo < 0.0) {
    int k = 0;
    do {
      if (++k > max_doublings) throw std::runtime_error(std::string(who) + ": no bracket");
      lo = hi;
      h_lo = h_hi;
      hi *= 2.0;
      h_hi = quarter_residual(hi);
    } while (h_hi < 0.0);
  }

  double omega = omega_seed;
  if (lo != hi) {
    omega = find_root_bracketed(quarter_residual, Bracket{lo, hi, h_lo, h_hi}, tol);
  }
  PeriodResult result;
  result.period = 2.0 * kPi / omega;
  result.method = order == TrialOrder::First ? PeriodMethod::FirstOrder : PeriodMethod::SecondOrder;
  result.residual = std::abs(quarter_residual(omega));
  if (order == TrialOrder::Second) {
    result.a2 = make_trial(model, order, amplitude, omega).a2;
  }
  return result;
}

}  // namespace

TrialFunction TrialFunction::first_order(double amplitude, double omega) {
  if (!(std::isfinite(amplitude) && amplitude > 0.0 && std::isfinite(omega) && omega > 0.0)) {
    throw std::invalid_argument("TrialFunction: requires amplitude > 0 and omega > 0");
  }
  return {TrialOrder::First, amplitude, omega, amplitude, 0.0};
}

TrialFunction TrialFunction::second_order(double amplitude, double a2, double omega) {
  if (!(std::isfinite(amplitude) && amplitude > 0.0 && std::isfinite(omega) && omega > 0.0 &&
        std::isfinite(a2))) {
    throw std::invalid_argument("TrialFunction: requires amplitude > 0 and omega > 0");
  }
  return {TrialOrder::Second, amplitude, omega, amplitude - a2, a2};
}

double TrialFunction::operator()(double t) const {
  return a1 * std::cos(omega * t) + a2 * std::cos(3.0 * omega * t);
}

double improve_trajectory(const ForceModel& model, const TrialFunction& trial, double t,
                          double tol) {
  require(std::isfinite(t) && t >= 0.0, "improve_trajectory: t must be >= 0");
  if (t == 0.0) return trial.amplitude;
  const double integral = integrate_adaptive(
      [&](double s) { return (t - s) * force_eval(model, trial(s)); }, 0.0, t, tol);
  return trial.amplitude - integral;
}

PeriodResult first_order_period(const ForceModel& model, double amplitude, double tol) {
  return solve_period(model, amplitude, tol, TrialOrder::First);
}

PeriodResult second_order_period(const ForceModel& model, double amplitude, double tol) {
  return solve_period(model, amplitude, tol, TrialOrder::Second);
}

double duffing_T1_closed(double rho) {
  require(std::isfinite(rho) && rho >= 0.0, "duffing_T1_closed: rho must be >= 0");
  return 2.0 * kPi / std::sqrt(1.0 + 7.0 * rho / 9.0);
}

double quadratic_T1_closed(double omega0, double rho) {
  require(std::isfinite(omega0) && omega0 > 0.0, "quadratic_T1_closed: omega0 must be > 0");
  require(std::isfinite(rho) && rho >= 0.0, "quadratic_T1_closed: rho must be >= 0");
  return 2.0 * kPi / std::sqrt(omega0 * omega0 + (4.0 + kPi * kPi) * rho / 16.0);
}

EvenPolynomial duffing_T2_polynomial(double rho) {
  require(std::isfinite(rho) && rho >= 0.0, "duffing_T2_polynomial: rho must be >= 0");
  const double p2 = kPi * kPi;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  const double p8 = p4 * p4;
  const double r1 = rho + 1.0;
  return EvenPolynomial{{12700800.0 * p8,
                         -64.0 * p6 * (48851.0 * rho + 55125.0),
                         120.0 * p4 * r1 * (1607.0 * rho + 735.0),
                         -7656.0 * p2 * rho * r1 * r1,
                         125.0 * rho * r1 * r1 * r1}};
}

EvenPolynomial duffing_T2_limit_polynomial() {
  const double p2 = kPi * kPi;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  const double p8 = p4 * p4;
  return EvenPolynomial{{12700800.0 * p8, -3126464.0 * p6, 192840.0 * p4, -7656.0 * p2, 125.0}};
}

AsymptoticResult duffing_T2_limit() {
  const double root = positive_T_roots(duffing_T2_limit_polynomial()).front();
  return {Family::Duffing, LimitKind::SecondOrderPolynomial, root};
}

EvenPolynomial quadratic_T2_polynomial(double omega0, double rho) {
  require(std::isfinite(omega0) && omega0 > 0.0, "quadratic_T2_polynomial: omega0 must be > 0");
  require(std::isfinite(rho) && rho >= 0.0, "quadratic_T2_polynomial: rho must be >= 0");
  const double p2 = kPi * kPi;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  const double w2 = omega0 * omega0;
  const double w4 = w2 * w2;
  return EvenPolynomial{
      {-294912.0 * p6,
       16.0 * p4 * (5120.0 * w2 + rho * (369.0 * p2 + 1136.0)),
       -8.0 * p2 * (256.0 * w4 + 15.0 * w2 * rho * (3.0 * p2 + 16.0) + rho * rho * (45.0 * p2 - 16.0)),
       rho * (w2 + rho) * (w2 + rho) * (9.0 * p2 - 16.0)}};
}

EvenPolynomial quadratic_T2_limit_polynomial() {
  const double p2 = kPi * kPi;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  return EvenPolynomial{{-294912.0 * p6,
                         16.0 * p4 * (369.0 * p2 + 1136.0),
                         8.0 * p2 * (16.0 - 45.0 * p2),
                         9.0 * p2 - 16.0}};
}

AsymptoticResult quadratic_T2_limit() {
  const double root = positive_T_roots(quadratic_T2_limit_polynomial()).front();
  return {Family::QuadraticAbs, LimitKind::SecondOrderPolynomial, root};
}

PeriodResult signum_exact_period(double epsilon, double amplitude) {
  require(std::isfinite(epsilon) && epsilon > 0.0, "signum_exact_period: epsilon must be > 0");
  require(std::isfinite(amplitude) && amplitude > 0.0,
          "signum_exact_period: amplitude must be > 0");
  PeriodResult result;
  result.period = 4.0 * std::sqrt(2.0 * amplitude / epsilon);
  result.method = PeriodMethod::SignumExact;
  result.residual = 0.0;
  return result;
}

std::vector<AsymptoticResult> asymptotic_table() {
  std::vector<AsymptoticResult> table;
  table.push_back({Family::Duffing, LimitKind::FirstOrderAnalytic, 6.0 * kPi / std::sqrt(7.0)});
  table.push_back(duffing_T2_limit());
  table.push_back({Family::Duffing, LimitKind::Exact, kDuffingLimitRef});
  table.push_back({Family::QuadraticAbs, LimitKind::FirstOrderAnalytic,
                   8.0 * kPi / std::sqrt(4.0 + kPi * kPi)});
  table.push_back(quadratic_T2_limit());
  table.push_back({Family::QuadraticAbs, LimitKind::Exact, kQuadraticLimitRef});
  return table;
}

}  // namespace nlosc
