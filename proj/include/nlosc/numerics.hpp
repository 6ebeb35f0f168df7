#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

// Shared numerical kernels: adaptive quadrature, bracketed root finding, and
// positive roots of low-degree polynomials in T^2.

namespace nlosc {

namespace detail {

struct GkEstimate {
  double value;
  double error;
};

// 15-point Kronrod / 7-point Gauss rule on [a, b]. Error model follows the
// classic QUADPACK scaling so the estimate stays meaningful near kinks.
template <class F>
GkEstimate gauss_kronrod_15(F&& g, double a, double b) {
  static constexpr double xgk[8] = {
      0.991455371120812639206854697526329,
      0.949107912342758524526189684047851,
      0.864864423359769072789712788640926,
      0.741531185599394439863864773280788,
      0.586087235467691130294144838258730,
      0.405845151377397166906606412076961,
      0.207784955007898467600689403773245,
      0.000000000000000000000000000000000};
  static constexpr double wgk[8] = {
      0.022935322010529224963732008058970,
      0.063092092629978553290700663189204,
      0.104790010322250183839876322541518,
      0.140653259715525918745189590510238,
      0.169004726639267902826583426598550,
      0.190350578064785409913256402421014,
      0.204432940075298892414161999234649,
      0.209482141084727828012999174891714};
  static constexpr double wg[4] = {
      0.129484966168869693270611432679082,
      0.279705391489276667901467771423780,
      0.381830050505118944950369775488975,
      0.417959183673469387755102040816327};

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = g(center);

  double fv1[7], fv2[7];
  double resk = wgk[7] * fc;
  double resg = wg[3] * fc;
  double resabs = std::abs(resk);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * xgk[i];
    fv1[i] = g(center - dx);
    fv2[i] = g(center + dx);
    const double fsum = fv1[i] + fv2[i];
    resk += wgk[i] * fsum;
    if (i % 2 == 1) resg += wg[(i - 1) / 2] * fsum;
    resabs += wgk[i] * (std::abs(fv1[i]) + std::abs(fv2[i]));
  }
  const double reskh = 0.5 * resk;
  double resasc = wgk[7] * std::abs(fc - reskh);
  for (int i = 0; i < 7; ++i) {
    resasc += wgk[i] * (std::abs(fv1[i] - reskh) + std::abs(fv2[i] - reskh));
  }

  const double value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double tiny = std::numeric_limits<double>::min();
  if (resabs > tiny / (50.0 * eps)) {
    err = std::max(eps * 50.0 * resabs, err);
  }
  if (!std::isfinite(value)) {
    err = std::numeric_limits<double>::infinity();
  }
  return {value, err};
}

}  // namespace detail

// Integrates g over [a, b] to |error| <= tol * max(1, |integral|) by globally
// adaptive 15-point Gauss-Kronrod bisection: the segment with the largest
// error estimate is split first, so isolated kinks (e.g. a signum force under
// a trial that crosses zero) localize quickly. Throws std::runtime_error
// "no convergence" if the segment budget or floating-point resolution is
// exhausted first.
template <class F>
double integrate_adaptive(F&& g, double a, double b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tol must be > 0");
  if (!(a <= b)) throw std::invalid_argument("integrate_adaptive: requires a <= b");
  if (a == b) return 0.0;

  struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
  };

  constexpr std::size_t max_segments = 4096;
  std::vector<Segment> heap;
  heap.reserve(256);
  {
    const auto e = detail::gauss_kronrod_15(g, a, b);
    heap.push_back({a, b, e.value, e.error});
  }
  double total = heap[0].value;
  double err_total = heap[0].error;

  auto resum = [&heap](double& v, double& e) {
    v = 0.0;
    e = 0.0;
    for (const auto& s : heap) {
      v += s.value;
      e += s.error;
    }
  };

  auto converged = [&] {
    return std::isfinite(total) && std::isfinite(err_total) &&
           err_total <= tol * std::max(1.0, std::abs(total));
  };

  std::size_t splits = 0;
  while (!converged()) {
    if (heap.size() >= max_segments) {
      throw std::runtime_error("integrate_adaptive: no convergence");
    }
    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      throw std::runtime_error("integrate_adaptive: no convergence");
    }
    const auto left = detail::gauss_kronrod_15(g, worst.a, mid);
    const auto right = detail::gauss_kronrod_15(g, mid, worst.b);
    heap.push_back({worst.a, mid, left.value, left.error});
    std::push_heap(heap.begin(), heap.end());
    heap.push_back({mid, worst.b, right.value, right.error});
    std::push_heap(heap.begin(), heap.end());

    total += left.value + right.value - worst.value;
    err_total += left.error + right.error - worst.error;
    // Periodic exact resummation keeps incremental drift out of the gate.
    if (++splits % 64 == 0) resum(total, err_total);
  }
  resum(total, err_total);
  return total;
}

// Sign-changing interval with both endpoint values already evaluated.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

// Brent-style bracketed root solve: inverse-quadratic/secant steps guarded by
// bisection. Terminates when the bracket width is <= tol * max(1, |x|).
// Throws std::invalid_argument "invalid bracket" unless lo < hi and the
// endpoint values have opposite (or zero) sign. The iterate never leaves the
// initial bracket.
template <class F>
double find_root_bracketed(F&& h, const Bracket& bracket, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("find_root_bracketed: tol must be > 0");
  if (!(bracket.lo < bracket.hi) || !std::isfinite(bracket.f_lo) || !std::isfinite(bracket.f_hi) ||
      (bracket.f_lo > 0.0) == (bracket.f_hi > 0.0)) {
    if (bracket.f_lo == 0.0) return bracket.lo;
    if (bracket.f_hi == 0.0) return bracket.hi;
    throw std::invalid_argument("find_root_bracketed: invalid bracket");
  }
  if (bracket.f_lo == 0.0) return bracket.lo;
  if (bracket.f_hi == 0.0) return bracket.hi;

  const double eps = std::numeric_limits<double>::epsilon();
  double a = bracket.lo, b = bracket.hi, c = bracket.lo;
  double fa = bracket.f_lo, fb = bracket.f_hi, fc = bracket.f_lo;
  double d = b - a, e = b - a;

  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 0.5 * std::max(tol * std::max(1.0, std::abs(b)), 4.0 * eps * std::abs(b));
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Attempt inverse quadratic interpolation (secant when a == c).
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = h(b);
    if (fb == 0.0) return b;
  }
  return b;
}

// Polynomial P(s) = sum_k coeffs[k] * s^k evaluated at s = T^2; degree <= 4.
struct EvenPolynomial {
  std::vector<double> coeffs;  // ascending powers of s = T^2

  double eval(double s) const {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * s + coeffs[k];
    return acc;
  }
  double eval_deriv(double s) const {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
      acc = acc * s + static_cast<double>(k) * coeffs[k];
    }
    return acc;
  }
  double eval_at_period(double T) const { return eval(T * T); }
};

// All positive T with P(T^2) = 0, ascending. Near-zero leading coefficients
// are deflated, degree <= 2 is solved in closed form, degrees 3-4 go through
// the Eigen companion matrix; every candidate is Newton-polished and kept only
// if its residual passes a coefficient-scaled bound. Throws std::runtime_error
// "no positive root" when none survives.
std::vector<double> positive_T_roots(const EvenPolynomial& poly);

}  // namespace nlosc
