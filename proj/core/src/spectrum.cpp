#include "cylbif/spectrum.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cylbif/analysis.hpp"
#include "cylbif/specfun.hpp"

namespace cylbif::spectrum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMuWindow = 1e-9;
constexpr double kFrobeniusStart = 1e-4;

void check_dimension(int n, const char* who) {
  if (n < 1) throw std::domain_error(std::string(who) + ": dimension n must be >= 1");
}

EigenData make_n1() {
  EigenData d{};
  d.nu = -0.5;
  d.n = 1;
  d.j_nu = 0.5 * kPi;
  d.lambda_nu = 0.25 * kPi * kPi;
  // phi_1 = kappa s^{1/2} J_{-1/2}(s) = kappa sqrt(2/pi) cos(s) with kappa = 1/2.
  d.kappa_n = 0.5;
  d.log_kappa_n = std::log(0.5);
  d.phi1_prime_at_1 = -std::sqrt(kPi / 8.0);
  d.phi1_second_at_1 = 0.0;
  d.mu = 4.0;
  return d;
}

// With J~_t(s) = Gamma(t+1) (2/s)^t J_t(s):
//   s^{-2 nu} J_nu(s)^2 = J~_nu(s)^2 / (Gamma(nu+1)^2 4^nu)
//   J_{nu+1}(j) = (j/2)^{nu+1} J~_{nu+1}(j) / Gamma(nu+2)
// so kappa and phi_1'(1) are assembled in logs and never overflow before the end.
EigenData make_bessel(int n) {
  EigenData d{};
  const double nu = 0.5 * (n - 2);
  d.nu = nu;
  d.n = n;
  d.j_nu = analysis::bessel_zero(nu, 1);
  d.lambda_nu = d.j_nu * d.j_nu;
  d.mu = 2.0 * kPi / d.j_nu;

  const double j = d.j_nu;
  constexpr double kFloor = 1e-8;
  const double at_floor = specfun::bessel_j_scaled(nu, kFloor);
  if (!std::isfinite(at_floor)) throw std::runtime_error("eigen_data: normalisation integrand not finite near 0");
  auto integrand = [nu](double s) {
    const double v = specfun::bessel_j_scaled(nu, s);
    return v * v;
  };
  // The integrand equals 1 + O(s^2) on [0, kFloor]; split where J changes method.
  double reduced = kFloor * at_floor * at_floor;
  const double split = specfun::bessel_j_series_limit(nu);
  if (split < j) {
    reduced += analysis::integrate(integrand, kFloor, split, 1e-12) + analysis::integrate(integrand, split, j, 1e-12);
  } else {
    reduced += analysis::integrate(integrand, kFloor, j, 1e-12);
  }

  const double lg1 = specfun::log_gamma(nu + 1);
  const double log_vol = std::log(2.0) + (nu + 1) * std::log(kPi) - lg1;  // |S^{n-1}|
  const double log_kappa2 =
      std::log(j) - std::log(2.0 * kPi) - log_vol + 2.0 * lg1 + 2.0 * nu * std::log(2.0) - std::log(reduced);
  d.log_kappa_n = 0.5 * log_kappa2;
  d.kappa_n = std::exp(d.log_kappa_n);

  const double jt_next = specfun::bessel_j_scaled(nu + 1, j);
  const double log_a = d.log_kappa_n + 2.0 * std::log(j) - (nu + 1) * std::log(2.0) + std::log(jt_next) -
                       specfun::log_gamma(nu + 2);
  d.phi1_prime_at_1 = -std::exp(log_a);
  d.phi1_second_at_1 = -(2.0 * nu + 1.0) * d.phi1_prime_at_1;
  return d;
}

double sigma1_n1(const EigenData& d, double T) {
  const double a = -d.phi1_prime_at_1;
  const double omega = 2.0 * kPi / T;
  const double q = omega * omega - d.lambda_nu;
  if (T < d.mu) {
    const double xi = std::sqrt(q);
    return a * xi * std::tanh(xi);
  }
  const double rho = std::sqrt(-q);
  if (rho >= 0.5 * kPi - 1e-12) throw std::range_error("sigma1: tangent argument too close to pi/2");
  return -a * rho * std::tan(rho);
}

// Regular solution of c'' + (n-1)/r c' = q c written in x = ln r:
// c_xx + (n-2) c_x = q e^{2x} c. Returns (c(1), c'(1)).
std::array<double, 2> radial_solution(int n, double q, int steps) {
  const double d = kFrobeniusStart;
  const double d2 = d * d;
  const double c0 = 1.0 + q * d2 / (2.0 * n) + q * q * d2 * d2 / (8.0 * n * (n + 2));
  const double cr0 = q * d / n + q * q * d2 * d / (2.0 * n * (n + 2));
  auto field = [n, q](double x, const std::array<double, 2>& y) -> std::array<double, 2> {
    return {y[1], q * std::exp(2.0 * x) * y[0] - (n - 2) * y[1]};
  };
  return analysis::ode_rk4<2>(field, std::log(d), {c0, d * cr0}, 0.0, steps);
}

}  // namespace

const EigenData& eigen_data(int n) {
  check_dimension(n, "eigen_data");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const EigenData>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto fresh = std::make_unique<const EigenData>(n == 1 ? make_n1() : make_bessel(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(fresh));
  return *it->second;
}

double sigma1(const EigenData& d, double T) {
  if (!(T > 0) || !std::isfinite(T)) throw std::domain_error("sigma1: T must be positive");
  if (d.n == 1) return sigma1_n1(d, T);

  const double a = -d.phi1_prime_at_1;
  const double nu = d.nu;
  const double base = 2.0 * nu + 1.0;
  if (std::fabs(T - d.mu) < kMuWindow) return a * base;

  const double omega = 2.0 * kPi / T;
  if (T < d.mu) {
    const double xi = std::sqrt(omega * omega - d.lambda_nu);
    return a * (base + xi * specfun::bessel_i_ratio(nu, xi));
  }
  const double rho = std::sqrt(d.lambda_nu - omega * omega);
  const double ratio =
      rho * rho / (2.0 * (nu + 1)) * specfun::bessel_j_scaled(nu + 1, rho) / specfun::bessel_j_scaled(nu, rho);
  return a * (base - ratio);
}

double sigma1(int n, double T) { return sigma1(eigen_data(n), T); }

double sigma_k(int n, int k, double T) {
  if (k < 1) throw std::domain_error("sigma_k: k must be >= 1");
  if (!(T > 0)) throw std::domain_error("sigma_k: T must be positive");
  return sigma1(n, T / k);
}

double sigma1_via_ode(int n, double T, int steps) {
  check_dimension(n, "sigma1_via_ode");
  if (!(T > 0) || !std::isfinite(T)) throw std::domain_error("sigma1_via_ode: T must be positive");
  if (steps < 1000) throw std::domain_error("sigma1_via_ode: steps must be >= 1000");
  const EigenData& d = eigen_data(n);
  const double omega = 2.0 * kPi / T;
  const auto end = radial_solution(n, omega * omega - d.lambda_nu, steps);
  if (!(std::fabs(end[0]) > 1e-12)) {
    throw analysis::ConvergenceError("sigma1_via_ode: c(1) vanishes; cannot normalise");
  }
  return -d.phi1_prime_at_1 * end[1] / end[0] + d.phi1_second_at_1;
}

double lambda1_via_shooting(int n, double tol) {
  if (n < 2) throw std::domain_error("lambda1_via_shooting: n must be >= 2");
  if (!(tol > 0)) throw std::domain_error("lambda1_via_shooting: tol must be positive");
  constexpr int kSteps = 20000;
  auto end_value = [n](double lambda) { return radial_solution(n, -lambda, kSteps)[0]; };

  // phi(1) > 0 for lambda below the first eigenvalue and changes sign there.
  const double step = 0.5;
  const double limit = 4.0 * (n + 10.0) * (n + 10.0);
  double lo = 0.0;
  double hi = step;
  while (end_value(hi) > 0) {
    lo = hi;
    hi += step;
    if (hi > limit) throw analysis::ConvergenceError("lambda1_via_shooting: no sign change found");
  }
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (end_value(mid) > 0 ? lo : hi) = mid;
  }
  if (hi - lo > tol) throw analysis::ConvergenceError("lambda1_via_shooting: bisection did not converge");
  return 0.5 * (lo + hi);
}

}  // namespace cylbif::spectrum
