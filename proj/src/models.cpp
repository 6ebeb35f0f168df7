#include "nlosc/models.hpp"

#include <cmath>
#include <stdexcept>

namespace nlosc {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

ForceModel ForceModel::harmonic() { return {Family::Harmonic, 0.0, 1.0}; }

ForceModel ForceModel::duffing(double epsilon) {
  require(std::isfinite(epsilon) && epsilon >= 0.0, "ForceModel::duffing: epsilon must be >= 0");
  return {Family::Duffing, epsilon, 1.0};
}

ForceModel ForceModel::signum(double epsilon) {
  require(std::isfinite(epsilon) && epsilon > 0.0, "ForceModel::signum: epsilon must be > 0");
  return {Family::Signum, epsilon, 0.0};
}

ForceModel ForceModel::quadratic_abs(double omega0, double epsilon) {
  require(std::isfinite(omega0) && omega0 > 0.0, "ForceModel::quadratic_abs: omega0 must be > 0");
  require(std::isfinite(epsilon) && epsilon >= 0.0,
          "ForceModel::quadratic_abs: epsilon must be >= 0");
  return {Family::QuadraticAbs, epsilon, omega0};
}

const char* family_name(Family family) {
  switch (family) {
    case Family::Harmonic: return "harmonic";
    case Family::Duffing: return "duffing";
    case Family::Signum: return "signum";
    case Family::QuadraticAbs: return "quadratic-abs";
  }
  return "unknown";
}

double force_eval(const ForceModel& model, double u) {
  switch (model.family) {
    case Family::Harmonic: return u;
    case Family::Duffing: return u + model.epsilon * u * u * u;
    case Family::Signum: return model.epsilon * sgn(u);
    case Family::QuadraticAbs: return model.omega0 * model.omega0 * u + model.epsilon * u * std::abs(u);
  }
  throw std::logic_error("force_eval: unknown family");
}

double potential_eval(const ForceModel& model, double u) {
  switch (model.family) {
    case Family::Harmonic: return 0.5 * u * u;
    case Family::Duffing: return 0.5 * u * u + 0.25 * model.epsilon * u * u * u * u;
    case Family::Signum: return model.epsilon * std::abs(u);
    case Family::QuadraticAbs: {
      const double w2 = model.omega0 * model.omega0;
      return 0.5 * w2 * u * u + model.epsilon * u * u * std::abs(u) / 3.0;
    }
  }
  throw std::logic_error("potential_eval: unknown family");
}

double reduced_parameter(const ForceModel& model, double amplitude) {
  require(std::isfinite(amplitude) && amplitude > 0.0,
          "reduced_parameter: amplitude must be > 0");
  switch (model.family) {
    case Family::Harmonic: return 0.0;
    case Family::Duffing: return model.epsilon * amplitude * amplitude;
    case Family::QuadraticAbs: return model.epsilon * amplitude;
    case Family::Signum:
      throw std::invalid_argument("reduced_parameter: no reduced parameter for signum family");
  }
  throw std::logic_error("reduced_parameter: unknown family");
}

bool parity_check(const ForceModel& model, double amplitude, int n_samples) {
  return detail::odd_on([&](double u) { return force_eval(model, u); }, amplitude, n_samples);
}

namespace detail {

bool odd_on(const std::function<double(double)>& f, double amplitude, int n_samples) {
  if (!(amplitude > 0.0) || n_samples < 1) {
    throw std::invalid_argument("odd_on: amplitude must be > 0 and n_samples >= 1");
  }
  for (int i = 1; i <= n_samples; ++i) {
    const double u = amplitude * static_cast<double>(i) / n_samples;
    const double fp = f(u);
    const double fm = f(-u);
    const double scale = std::max({1.0, std::abs(fp), std::abs(fm)});
    if (std::abs(fp + fm) > 1e-12 * scale) return false;
  }
  return true;
}

}  // namespace detail

}  // namespace nlosc
