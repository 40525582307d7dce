#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>

namespace cylbif::analysis {

/// Thrown when an iterative method fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ScalarFn = std::function<double(double)>;

/// Sign-change interval [lo, hi] with cached endpoint values.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;

  /// Evaluates f at both ends; throws std::invalid_argument unless lo < hi and f changes sign.
  static Bracket make(const ScalarFn& f, double lo, double hi);
  bool valid() const { return lo < hi && f_lo * f_hi < 0; }
};

/// Brent's method. Result lies in the bracket; its width at exit is <= tol
/// (or f vanished exactly). Throws ConvergenceError after 200 iterations.
double find_root(const ScalarFn& f, const Bracket& bracket, double tol);

/// Adaptive Simpson with Richardson correction; tol is absolute.
double integrate(const ScalarFn& f, double a, double b, double tol);

/// Adaptive Gauss-Kronrod (7/15) quadrature. Never evaluates f at a or b.
double integrate_open(const ScalarFn& f, double a, double b, double tol);

/// The sin^2 substitution x = a + (b - a) sin^2(theta), theta in [0, pi/2].
/// The returned integrand g(theta) = f(x(theta)) dx/dtheta is bounded when f
/// has inverse square-root singularities at a and/or b.
ScalarFn sin2_substituted(ScalarFn f, double a, double b);
double sin2_point(double a, double b, double theta);

/// Integral of f over [a, b] where f ~ C/sqrt(x - a) and C'/sqrt(b - x) at
/// the ends. Throws std::domain_error when f is not finite in the interior.
double integrate_inv_sqrt(const ScalarFn& f, double a, double b);

/// index-th positive zero (index 1 or 2) of J_nu, nu >= 0, to ~1e-13.
double bessel_zero(double nu, int index);

/// Classical fixed-step fourth-order Runge-Kutta from r0 to r1.
/// Throws std::domain_error for steps < 1 and ConvergenceError when the state
/// stops being finite.
template <std::size_t N, class Field>
std::array<double, N> ode_rk4(Field&& field, double r0, std::array<double, N> y, double r1, int steps) {
  if (steps < 1) throw std::domain_error("ode_rk4: steps must be >= 1");
  const double h = (r1 - r0) / steps;
  auto axpy = [](const std::array<double, N>& base, double a, const std::array<double, N>& k) {
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = base[i] + a * k[i];
    return out;
  };
  for (int s = 0; s < steps; ++s) {
    const double r = r0 + s * h;
    const std::array<double, N> k1 = field(r, y);
    const std::array<double, N> k2 = field(r + 0.5 * h, axpy(y, 0.5 * h, k1));
    const std::array<double, N> k3 = field(r + 0.5 * h, axpy(y, 0.5 * h, k2));
    const std::array<double, N> k4 = field(r + h, axpy(y, h, k3));
    for (std::size_t i = 0; i < N; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(y[i])) throw ConvergenceError("ode_rk4: state became non-finite");
    }
  }
  return y;
}

}  // namespace cylbif::analysis
