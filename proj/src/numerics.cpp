#include "nlosc/numerics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace nlosc {

namespace {

// Real roots of the deflated polynomial in s, unfiltered for sign.
std::vector<double> real_s_roots(const std::vector<double>& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<double> roots;
  if (deg <= 0) return roots;
  if (deg == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }
  if (deg == 2) {
    const double a = c[2], b = c[1], cc = c[0];
    const double disc = b * b - 4.0 * a * cc;
    if (disc < 0.0) return roots;
    // Citardauq pairing avoids cancellation in the smaller root.
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    if (q != 0.0) {
      roots.push_back(q / a);
      roots.push_back(cc / q);
    } else {
      roots.push_back(0.0);
      roots.push_back(0.0);
    }
    return roots;
  }

  // Degrees 3-4: eigenvalues of the monic companion matrix.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 0; i < deg; ++i) {
    companion(i, deg - 1) = -c[i] / c[deg];
    if (i + 1 < deg) companion(i + 1, i) = 1.0;
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  const auto values = solver.eigenvalues();
  for (int i = 0; i < values.size(); ++i) {
    const double re = values[i].real();
    const double im = values[i].imag();
    if (std::abs(im) <= 1e-7 * std::max(1.0, std::abs(re))) roots.push_back(re);
  }
  return roots;
}

// Newton polish in s; falls back to the seed if iteration wanders.
double polish_root(const EvenPolynomial& poly, double s0) {
  double s = s0;
  for (int iter = 0; iter < 60; ++iter) {
    const double p = poly.eval(s);
    const double dp = poly.eval_deriv(s);
    if (dp == 0.0 || !std::isfinite(dp)) break;
    const double step = p / dp;
    const double next = s - step;
    if (!std::isfinite(next)) break;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(s))) {
      s = next;
      break;
    }
    s = next;
  }
  if (!std::isfinite(s) || std::abs(poly.eval(s)) > std::abs(poly.eval(s0))) return s0;
  return s;
}

}  // namespace

std::vector<double> positive_T_roots(const EvenPolynomial& poly) {
  std::vector<double> c = poly.coeffs;
  if (c.empty()) throw std::invalid_argument("positive_T_roots: empty polynomial");
  double max_coeff = 0.0;
  for (double ck : c) {
    if (!std::isfinite(ck)) throw std::invalid_argument("positive_T_roots: non-finite coefficient");
    max_coeff = std::max(max_coeff, std::abs(ck));
  }
  if (max_coeff == 0.0) throw std::invalid_argument("positive_T_roots: zero polynomial");
  while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * max_coeff) c.pop_back();
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg > 4) throw std::invalid_argument("positive_T_roots: degree exceeds 4");

  const EvenPolynomial deflated{c};
  std::vector<double> ts;
  for (double s0 : real_s_roots(c)) {
    if (!(s0 > 0.0) || !std::isfinite(s0)) continue;
    const double s = polish_root(deflated, s0);
    if (!(s > 0.0)) continue;
    const double bound = 1e-9 * max_coeff * std::pow(std::max(1.0, s), deg);
    if (std::abs(deflated.eval(s)) > bound) continue;
    ts.push_back(std::sqrt(s));
  }
  std::sort(ts.begin(), ts.end());
  // Collapse duplicates from conjugate pairs that straddle the real axis.
  std::vector<double> unique_ts;
  for (double t : ts) {
    if (unique_ts.empty() || t - unique_ts.back() > 1e-9 * std::max(1.0, t)) {
      unique_ts.push_back(t);
    }
  }
  if (unique_ts.empty()) throw std::runtime_error("positive_T_roots: no positive root");
  return unique_ts;
}

}  // namespace nlosc
