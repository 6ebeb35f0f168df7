#include "nlosc/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "nlosc/numerics.hpp"

namespace nlosc {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// W(s) with V(A) - V(A s) = (1 - s) * W(s) for s in [0, 1]. Factoring the
// drop analytically is what keeps the energy integrand finite at the turning
// point; note W(1) = A * f(A).
double potential_drop_factor(const ForceModel& model, double amplitude, double s) {
  const double a2 = amplitude * amplitude;
  switch (model.family) {
    case Family::Harmonic:
      return 0.5 * a2 * (1.0 + s);
    case Family::Duffing:
      return 0.5 * a2 * (1.0 + s) + 0.25 * model.epsilon * a2 * a2 * (1.0 + s) * (1.0 + s * s);
    case Family::Signum:
      return model.epsilon * amplitude;
    case Family::QuadraticAbs:
      return 0.5 * model.omega0 * model.omega0 * a2 * (1.0 + s) +
             model.epsilon * a2 * amplitude * (1.0 + s + s * s) / 3.0;
  }
  throw std::logic_error("potential_drop_factor: unknown family");
}

// Period of the linearized-at-amplitude oscillator; sets ODE step scales.
double linearized_period(const ForceModel& model, double amplitude) {
  const double f_at_a = force_eval(model, amplitude);
  require(f_at_a > 0.0, "oracle: force must be restoring at the amplitude");
  return 2.0 * kPi * std::sqrt(amplitude / f_at_a);
}

// Families whose force loses smoothness at u = 0; steps that straddle the
// origin for these would silently drop the integrator below design order.
bool force_nonsmooth_at_zero(const ForceModel& model) {
  return model.family == Family::Signum || model.family == Family::QuadraticAbs;
}

// Dormand-Prince 5(4) stepper with FSAL reuse and PI-free step control. When
// the force has a kink or jump at u = 0, accepted steps that would straddle
// the origin are shortened (regula falsi on the endpoint displacements) so
// each step sees a smooth right-hand side; u_floor is the |u| level at which
// a step is considered to start on the kink and may pass through it.
struct Dopri5 {
  const ForceModel& model;
  double tol;
  double h_max;
  double u_floor;
  double t;
  Eigen::Vector2d y;   // (u, v)
  Eigen::Vector2d k1;  // cached slope at (t, y)
  double h;

  Dopri5(const ForceModel& m, double tol_, double t0, const Eigen::Vector2d& y0, double h0,
         double h_max_, double u_scale)
      : model(m),
        tol(tol_),
        h_max(h_max_),
        u_floor(force_nonsmooth_at_zero(m) ? 1e-11 * u_scale : 0.0),
        t(t0),
        y(y0),
        k1(rhs(y0)),
        h(h0) {}

  Eigen::Vector2d rhs(const Eigen::Vector2d& s) const {
    return {s[1], -force_eval(model, s[0])};
  }

  // Advance to t_target; on_step(t, y) runs after each accepted step and may
  // return false to stop early.
  template <class CB>
  void advance_to(double t_target, CB&& on_step) {
    constexpr double a21 = 1.0 / 5.0;
    constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                     a54 = -212.0 / 729.0;
    constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                     a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
    constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                     b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    // Difference between the 5th- and embedded 4th-order weights.
    constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                     e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

    const double eps = std::numeric_limits<double>::epsilon();
    long steps = 0;
    int retargets = 0;
    double h_resume = 0.0;
    while (t < t_target) {
      if (++steps > 20'000'000) {
        throw std::runtime_error("integrate_ode: step limit exceeded");
      }
      const bool final_step = h >= t_target - t;
      const double hs = final_step ? t_target - t : h;

      const Eigen::Vector2d k2 = rhs(y + hs * (a21 * k1));
      const Eigen::Vector2d k3 = rhs(y + hs * (a31 * k1 + a32 * k2));
      const Eigen::Vector2d k4 = rhs(y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
      const Eigen::Vector2d k5 = rhs(y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const Eigen::Vector2d k6 =
          rhs(y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const Eigen::Vector2d y5 =
          y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const Eigen::Vector2d k7 = rhs(y5);
      const Eigen::Vector2d ev =
          hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      double err = 0.0;
      for (int i = 0; i < 2; ++i) {
        const double sc = tol + tol * std::max(std::abs(y[i]), std::abs(y5[i]));
        const double r = ev[i] / sc;
        err += r * r;
      }
      err = std::sqrt(0.5 * err);

      if (err <= 1.0) {
        if (u_floor > 0.0 && y[0] * y5[0] < 0.0 && std::abs(y[0]) > u_floor && retargets < 8) {
          // The step crossed the kink: shorten it to land on the crossing and
          // redo it. Remember the controller's suggestion for afterwards.
          if (retargets == 0) {
            h_resume = std::min(
                hs * (err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0)),
                h_max);
          }
          ++retargets;
          const double frac = std::abs(y[0]) / (std::abs(y[0]) + std::abs(y5[0]));
          h = std::max(hs * std::max(frac, 1e-3), 32.0 * eps * std::max(1.0, std::abs(t)));
          continue;
        }
        t = final_step ? t_target : t + hs;
        y = y5;
        k1 = k7;
        if (u_floor > 0.0 && std::abs(y[0]) <= u_floor && y[1] != 0.0) {
          // Restart on the kink with the outgoing side's one-sided slope;
          // sgn(0) would otherwise poison the cached first stage.
          k1 = {y[1], -force_eval(model, std::copysign(u_floor, y[1]))};
        }
        const double factor =
            err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h = std::min(hs * factor, h_max);
        if (retargets > 0) {
          h = h_resume;
          retargets = 0;
        }
        if (!on_step(t, y)) return;
      } else {
        const double factor = std::isfinite(err) ? std::max(0.1, 0.9 * std::pow(err, -0.2)) : 0.1;
        h = hs * factor;
        if (h < 16.0 * eps * std::max(1.0, std::abs(t))) {
          throw std::runtime_error("integrate_ode: step underflow");
        }
      }
    }
  }
};

}  // namespace

double Trajectory::energy_at(std::size_t i) const {
  const TrajectorySample& s = samples.at(i);
  return 0.5 * s.v * s.v + potential_eval(model, s.u);
}

double energy_integrand(const ForceModel& model, double amplitude, double theta) {
  const double s = std::sin(theta);
  const double w = potential_drop_factor(model, amplitude, s);
  return amplitude * std::sqrt((1.0 + s) / (2.0 * w));
}

double exact_period_energy(const ForceModel& model, double amplitude, double tol) {
  require(std::isfinite(amplitude) && amplitude > 0.0 && tol > 0.0,
          "exact_period_energy: requires amplitude > 0 and tol > 0");
  if (!parity_check(model, amplitude)) {
    throw std::runtime_error("exact_period_energy: not odd");
  }
  double prev = 0.0;
  for (int i = 1; i <= 32; ++i) {
    const double v = potential_eval(model, amplitude * i / 32.0);
    if (!(v > prev)) throw std::runtime_error("exact_period_energy: non-monotone potential");
    prev = v;
  }
  return 4.0 * integrate_adaptive(
                   [&](double theta) { return energy_integrand(model, amplitude, theta); }, 0.0,
                   0.5 * kPi, tol);
}

Trajectory integrate_ode(const ForceModel& model, double amplitude, double t_end, double tol) {
  require(std::isfinite(amplitude) && amplitude > 0.0, "integrate_ode: amplitude must be > 0");
  require(std::isfinite(t_end) && t_end > 0.0, "integrate_ode: t_end must be > 0");
  require(tol > 0.0, "integrate_ode: tol must be > 0");

  const double t_lin = linearized_period(model, amplitude);
  Dopri5 stepper(model, tol, 0.0, {amplitude, 0.0}, std::min(t_lin / 200.0, t_end),
                 t_lin / 16.0, amplitude);
  Trajectory trajectory{model, amplitude, {}};
  trajectory.samples.push_back({0.0, amplitude, 0.0});
  stepper.advance_to(t_end, [&](double t, const Eigen::Vector2d& y) {
    trajectory.samples.push_back({t, y[0], y[1]});
    return true;
  });
  return trajectory;
}

std::vector<TrajectorySample> ode_states_at(const ForceModel& model, double amplitude,
                                            const std::vector<double>& times, double tol) {
  require(std::isfinite(amplitude) && amplitude > 0.0, "ode_states_at: amplitude must be > 0");
  require(tol > 0.0, "ode_states_at: tol must be > 0");
  for (std::size_t i = 0; i < times.size(); ++i) {
    require(std::isfinite(times[i]) && times[i] >= 0.0 && (i == 0 || times[i] >= times[i - 1]),
            "ode_states_at: times must be non-decreasing and >= 0");
  }

  std::vector<TrajectorySample> out;
  out.reserve(times.size());
  const double t_lin = linearized_period(model, amplitude);
  Dopri5 stepper(model, tol, 0.0, {amplitude, 0.0}, t_lin / 200.0, t_lin / 16.0, amplitude);
  for (double target : times) {
    if (target > stepper.t) {
      stepper.advance_to(target, [](double, const Eigen::Vector2d&) { return true; });
    }
    out.push_back({target, stepper.y[0], stepper.y[1]});
  }
  return out;
}

double period_from_ode(const ForceModel& model, double amplitude, double tol) {
  require(std::isfinite(amplitude) && amplitude > 0.0, "period_from_ode: amplitude must be > 0");
  require(tol > 0.0, "period_from_ode: tol must be > 0");
  if (!parity_check(model, amplitude)) {
    throw std::runtime_error("period_from_ode: not odd");
  }

  const double t_lin = linearized_period(model, amplitude);
  const double horizon = 10.0 * t_lin;
  Dopri5 stepper(model, tol, 0.0, {amplitude, 0.0}, t_lin / 200.0, t_lin / 16.0, amplitude);

  double t_lo = 0.0;
  Eigen::Vector2d y_lo(amplitude, 0.0);
  double t_hi = -1.0;
  stepper.advance_to(horizon, [&](double t, const Eigen::Vector2d& y) {
    if (y[0] <= 0.0) {
      t_hi = t;
      return false;
    }
    t_lo = t;
    y_lo = y;
    return true;
  });
  if (t_hi < 0.0) throw std::runtime_error("period_from_ode: no crossing");

  // Bisect the crossing time, re-integrating from the frozen pre-crossing
  // state for each probe so every evaluation is independent of the last.
  auto u_at = [&](double tq) {
    Dopri5 probe(model, tol, t_lo, y_lo, std::max((tq - t_lo) / 8.0, 1e-300), t_lin / 16.0,
                 amplitude);
    probe.advance_to(tq, [](double, const Eigen::Vector2d&) { return true; });
    return probe.y[0];
  };
  double lo = t_lo, hi = t_hi;
  const double eps = std::numeric_limits<double>::epsilon();
  const double width_goal = std::max(0.25 * tol * std::max(1.0, hi), 64.0 * eps * hi);
  while (hi - lo > width_goal) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (u_at(mid) > 0.0 ? lo : hi) = mid;
  }
  return 4.0 * 0.5 * (lo + hi);
}

double energy_drift(const Trajectory& trajectory) {
  if (trajectory.samples.empty()) {
    throw std::invalid_argument("energy_drift: empty trajectory");
  }
  const double e0 = trajectory.energy_at(0);
  double worst = 0.0;
  for (std::size_t i = 1; i < trajectory.samples.size(); ++i) {
    worst = std::max(worst, std::abs(trajectory.energy_at(i) - e0));
  }
  return worst / std::max(1.0, std::abs(e0));
}

double scaled_limit(Family family, const std::function<double(double)>& period_fn,
                    const std::vector<double>& rho_seq) {
  if (family != Family::Duffing && family != Family::QuadraticAbs) {
    throw std::invalid_argument("scaled_limit: family has no reduced-parameter limit");
  }
  if (rho_seq.size() < 3) {
    throw std::invalid_argument("scaled_limit: need at least 3 rho values");
  }
  for (std::size_t i = 0; i < rho_seq.size(); ++i) {
    require(std::isfinite(rho_seq[i]) && rho_seq[i] > 0.0 &&
                (i == 0 || rho_seq[i] > rho_seq[i - 1]),
            "scaled_limit: rho values must be positive and increasing");
  }

  std::vector<double> phi;
  phi.reserve(rho_seq.size());
  for (double rho : rho_seq) phi.push_back(std::sqrt(rho) * period_fn(rho));

  const std::size_t n = phi.size();
  const double tail_diff = std::abs(phi[n - 1] - phi[n - 2]);
  if (!(tail_diff <= 1e-3)) throw std::runtime_error("scaled_limit: not converged");

  if (family == Family::QuadraticAbs) return phi[n - 1];
  // Duffing closed forms approach the limit like c / rho; one Richardson step
  // in x = 1/rho removes that leading term.
  const double x1 = 1.0 / rho_seq[n - 2];
  const double x2 = 1.0 / rho_seq[n - 1];
  return phi[n - 1] + (phi[n - 1] - phi[n - 2]) * x2 / (x1 - x2);
}

double exact_duffing_limit(double tol) {
  // u'' + u^3 = 0 at unit amplitude: W(s) = (1+s)(1+s^2)/4.
  return 4.0 * integrate_adaptive(
                   [](double theta) {
                     const double s = std::sin(theta);
                     return std::sqrt(2.0 / (1.0 + s * s));
                   },
                   0.0, 0.5 * kPi, tol);
}

double exact_quadratic_limit(double tol) {
  // u'' + u|u| = 0 at unit amplitude: W(s) = (1+s+s^2)/3.
  return 4.0 * integrate_adaptive(
                   [](double theta) {
                     const double s = std::sin(theta);
                     return std::sqrt(3.0 * (1.0 + s) / (2.0 * (1.0 + s + s * s)));
                   },
                   0.0, 0.5 * kPi, tol);
}

}  // namespace nlosc
