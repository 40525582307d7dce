#include "cylbif/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cylbif/analysis.hpp"
#include "cylbif/specfun.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif::bifurcation {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRootTol = 1e-13;

double period_from(double j, double rho) { return 2.0 * kPi / std::sqrt((j - rho) * (j + rho)); }

}  // namespace

double rho_nu(double nu) {
  if (!(nu >= 0)) throw std::domain_error("rho_nu: nu must be >= 0");
  const double j = analysis::bessel_zero(nu, 1);

  if (nu >= 1) {
    // Same zero as s J_{nu-1} + J_nu, by J_{nu-1} + J_{nu+1} = (2 nu / s) J_nu.
    const analysis::ScalarFn g = [nu](double s) {
      return s * specfun::bessel_j(nu + 1, s) - (2.0 * nu + 1.0) * specfun::bessel_j(nu, s);
    };
    const double lo = analysis::bessel_zero(nu - 1, 1) + 1e-9;
    const double hi = j - 1e-9;
    const double g_lo = g(lo), g_hi = g(hi);
    if (!(g_lo * g_hi < 0)) throw analysis::ConvergenceError("rho_nu: no sign change on (j_{nu-1}, j_nu)");
    return analysis::find_root(g, analysis::Bracket{lo, hi, g_lo, g_hi}, kRootTol);
  }

  const analysis::ScalarFn g = [nu](double s) { return s * specfun::bessel_j(nu - 1, s) + specfun::bessel_j(nu, s); };
  constexpr int kScan = 64;
  const double start = 1e-3;
  const double step = (j - start) / kScan;
  double x = start;
  double gx = g(x);
  for (int i = 1; i <= kScan; ++i) {
    const double next = i == kScan ? j - 1e-12 : start + i * step;
    const double gn = g(next);
    if (gx * gn < 0) return analysis::find_root(g, analysis::Bracket{x, next, gx, gn}, kRootTol);
    x = next;
    gx = gn;
  }
  throw analysis::ConvergenceError("rho_nu: no sign change on (0, j_nu)");
}

BifurcationPoint t_nu(int n) {
  if (n < 1) throw std::domain_error("t_nu: n must be >= 1");
  BifurcationPoint p{};
  p.n = n;
  p.nu = 0.5 * (n - 2);
  if (n == 1) {
    p.T_nu = 4.0;
    p.mu = 4.0;
    return p;
  }
  const spectrum::EigenData& d = spectrum::eigen_data(n);
  const double rho = rho_nu(p.nu);
  p.j_nu = d.j_nu;
  p.rho_nu = rho;
  p.mu = d.mu;
  p.T_nu = period_from(d.j_nu, rho);
  if (p.nu >= 1) {
    const double jm = analysis::bessel_zero(p.nu - 1, 1);
    p.rho_minus = jm + 1.0 / (jm + 2.0);
    p.rho_plus = jm + 1.0 / jm;
  }
  if (p.nu >= 10) {
    p.T_lower = period_from(d.j_nu, *p.rho_minus);
    p.T_upper = period_from(d.j_nu, *p.rho_plus);
  }
  return p;
}

std::pair<double, double> t_bounds(double nu) {
  if (!(nu >= 10)) throw std::domain_error("t_bounds: bounds are only established for nu >= 10");
  const double j = analysis::bessel_zero(nu, 1);
  const double jm = analysis::bessel_zero(nu - 1, 1);
  return {period_from(j, jm + 1.0 / (jm + 2.0)), period_from(j, jm + 1.0 / jm)};
}

double asymptotic_tnu(double nu) {
  if (!(nu > 0)) throw std::domain_error("asymptotic_tnu: nu must be positive");
  return std::numbers::sqrt2 * kPi / std::sqrt(nu);
}

std::vector<BifurcationPoint> table(std::span<const int> two_nu) {
  std::vector<BifurcationPoint> rows;
  rows.reserve(two_nu.size());
  for (int v : two_nu) {
    if (v < 0) throw std::domain_error("table: 2 nu must be >= 0");
    rows.push_back(t_nu(v + 2));
  }
  return rows;
}

CrReport check_cr_hypotheses(int n, int k_max) {
  if (k_max < 2) throw std::domain_error("check_cr_hypotheses: k_max must be >= 2");
  const BifurcationPoint p = t_nu(n);
  const spectrum::EigenData& d = spectrum::eigen_data(n);
  CrReport r{};
  r.n = n;
  r.T = p.T_nu;
  for (int k = 1; k <= k_max; ++k) r.sigma.push_back(spectrum::sigma_k(n, k, r.T));
  constexpr double h = 1e-5;
  r.sigma1_derivative = (spectrum::sigma1(d, r.T + h) - spectrum::sigma1(d, r.T - h)) / (2.0 * h);

  const double zero_tol = 1e-8 * std::max(1.0, std::fabs(d.phi1_prime_at_1));
  r.kernel_ok = std::fabs(r.sigma[0]) <= zero_tol;
  if (!r.kernel_ok) {
    std::ostringstream msg;
    msg << "sigma_1(T) = " << r.sigma[0] << " exceeds " << zero_tol;
    r.failures.push_back(msg.str());
  }
  r.nondegenerate_ok = true;
  for (int k = 2; k <= k_max; ++k) {
    if (!(std::fabs(r.sigma[k - 1]) > 1e-6)) {
      r.nondegenerate_ok = false;
      std::ostringstream msg;
      msg << "sigma_" << k << "(T) = " << r.sigma[k - 1] << " is not bounded away from 0";
      r.failures.push_back(msg.str());
    }
  }
  r.transversal_ok = r.sigma1_derivative < 0;
  if (!r.transversal_ok) {
    std::ostringstream msg;
    msg << "sigma_1'(T) = " << r.sigma1_derivative << " is not negative";
    r.failures.push_back(msg.str());
  }
  return r;
}

DomainProfile profile(int n, double s, int periods, int samples_per_period) {
  if (!(std::fabs(s) < 1)) throw std::domain_error("profile: |s| must be < 1");
  if (periods < 1) throw std::domain_error("profile: periods must be >= 1");
  if (samples_per_period < 8) throw std::domain_error("profile: samples_per_period must be >= 8");
  const double T = t_nu(n).T_nu;
  DomainProfile out{n, s, T, {}};
  const int count = periods * samples_per_period;
  out.samples.reserve(count + 1);
  for (int i = 0; i <= count; ++i) {
    const double phase = 2.0 * kPi * static_cast<double>(i % samples_per_period) / samples_per_period;
    out.samples.push_back({T * i / samples_per_period, 1.0 + s * std::cos(phase)});
  }
  return out;
}

}  // namespace cylbif::bifurcation
