#pragma once

#include <functional>

// Conservative oscillator force models: u'' + f(u) = 0 with u(0) = A, u'(0) = 0.
// Every family is an odd restoring force, so the motion is periodic and
// symmetric about the quarter period.

namespace nlosc {

enum class Family { Harmonic, Duffing, Signum, QuadraticAbs };

// Parameterized force family. Use the named constructors; they validate.
//   Harmonic      f(u) = u
//   Duffing       f(u) = u + epsilon*u^3
//   Signum        f(u) = epsilon*sgn(u)
//   QuadraticAbs  f(u) = omega0^2*u + epsilon*u*|u|
struct ForceModel {
  Family family = Family::Harmonic;
  double epsilon = 0.0;
  double omega0 = 1.0;

  static ForceModel harmonic();
  static ForceModel duffing(double epsilon);
  static ForceModel signum(double epsilon);
  static ForceModel quadratic_abs(double omega0, double epsilon);
};

const char* family_name(Family family);

double force_eval(const ForceModel& model, double u);

// Potential V with V(0) = 0, V'(u) = f(u).
double potential_eval(const ForceModel& model, double u);

// Dimensionless nonlinearity strength at amplitude A:
//   Harmonic -> 0, Duffing -> epsilon*A^2, QuadraticAbs -> epsilon*A.
// Throws std::invalid_argument for Signum ("no reduced parameter").
double reduced_parameter(const ForceModel& model, double amplitude);

// True when f is odd on [-A, A] (sampled); all built-in families pass.
bool parity_check(const ForceModel& model, double amplitude, int n_samples = 16);

namespace detail {
// Sampled oddness test for an arbitrary force; used by parity_check.
bool odd_on(const std::function<double(double)>& f, double amplitude, int n_samples);
}  // namespace detail

}  // namespace nlosc
