#include "cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "cli/ranges.hpp"
#include "cli/reference.hpp"
#include "cylbif/analysis.hpp"
#include "cylbif/bifurcation.hpp"
#include "cylbif/delaunay.hpp"
#include "cylbif/pdecheck.hpp"
#include "cylbif/specfun.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using specfun::bessel_i;
using specfun::bessel_i_prime;
using specfun::bessel_j;
using specfun::bessel_j_prime;

CheckResult at_most(std::string suite, std::string property, double value, double limit, std::string detail = {}) {
  return {std::move(suite), std::move(property), value <= limit, value, limit, std::move(detail)};
}

CheckResult at_least(std::string suite, std::string property, double value, double limit, std::string detail = {}) {
  return {std::move(suite), std::move(property), value > limit, value, limit, std::move(detail)};
}

std::vector<double> half_integers(double lo, double hi) {
  std::vector<double> out;
  for (double v = lo; v <= hi + 1e-12; v += 0.5) out.push_back(v);
  return out;
}

double relative_residual(double lhs, double rhs, std::initializer_list<double> terms) {
  double scale = 0.0;
  for (double t : terms) scale = std::max(scale, std::fabs(t));
  return scale == 0.0 ? 0.0 : std::fabs(lhs - rhs) / scale;
}

// ---------------------------------------------------------------- specfun

std::vector<CheckResult> specfun_suite() {
  const std::string S = "specfun";
  std::vector<CheckResult> out;

  double worst_j = 0.0, worst_i = 0.0;
  for (double t : half_integers(0.0, 10.0)) {
    for (int q = 1; q <= 120; ++q) {
      const double s = 0.25 * q;
      const double jm = bessel_j(t - 1, s), j0 = bessel_j(t, s), jp = bessel_j(t + 1, s), jd = bessel_j_prime(t, s);
      worst_j = std::max({worst_j, relative_residual(jm + jp, 2 * t / s * j0, {jm, jp, 2 * t / s * j0}),
                          relative_residual(jm - jp, 2 * jd, {jm, jp, 2 * jd}),
                          relative_residual(s * jd + t * j0, s * jm, {s * jd, t * j0, s * jm}),
                          relative_residual(s * jd - t * j0, -s * jp, {s * jd, t * j0, s * jp})});
      const double im = bessel_i(t - 1, s), i0 = bessel_i(t, s), ip = bessel_i(t + 1, s), id = bessel_i_prime(t, s);
      worst_i = std::max({worst_i, relative_residual(im - ip, 2 * t / s * i0, {im, ip, 2 * t / s * i0}),
                          relative_residual(im + ip, 2 * id, {im, ip, 2 * id}),
                          relative_residual(s * id + t * i0, s * im, {s * id, t * i0, s * im}),
                          relative_residual(s * id - t * i0, s * ip, {s * id, t * i0, s * ip})});
    }
  }
  out.push_back(at_most(S, "J recurrence residuals", worst_j, 1e-10, "tau = 0..10 step 1/2, s = 0.25..30"));
  out.push_back(at_most(S, "I recurrence residuals", worst_i, 1e-10, "tau = 0..10 step 1/2, s = 0.25..30"));

  double turan_i = kInf, turan_j = kInf, j_pos = kInf;
  for (double nu : half_integers(0.0, 10.0)) {
    for (int q = 1; q <= 120; ++q) {
      const double s = 0.25 * q;
      const double i0 = bessel_i(nu, s);
      turan_i = std::min(turan_i, (i0 * i0 - bessel_i(nu - 1, s) * bessel_i(nu + 1, s)) / (i0 * i0));
    }
    const double j = analysis::bessel_zero(nu, 1);
    for (int q = 1; q < 200; ++q) {
      const double s = j * q / 200.0;
      const double j0 = bessel_j(nu, s);
      turan_j = std::min(turan_j, (j0 * j0 - bessel_j(nu - 1, s) * bessel_j(nu + 1, s)) / (j0 * j0));
      j_pos = std::min(j_pos, j0 / bessel_j(nu, 0.5 * j));
    }
  }
  out.push_back(at_least(S, "Turan inequality for I", turan_i, 0.0, "min (I^2 - I_- I_+)/I^2"));
  out.push_back(at_least(S, "Turan inequality for J below j_nu", turan_j, 0.0, "min (J^2 - J_- J_+)/J^2"));
  out.push_back(at_least(S, "J_nu > 0 on (0, j_nu)", j_pos, 0.0, "min J_nu(s)/J_nu(j/2)"));

  double gap = kInf;
  for (double nu : half_integers(1.0, 20.0)) {
    const double j = analysis::bessel_zero(nu, 1);
    gap = std::min({gap, analysis::bessel_zero(nu + 1, 1) - j, analysis::bessel_zero(nu - 1, 2) - j,
                    j - analysis::bessel_zero(nu - 1, 1)});
  }
  out.push_back(at_least(S, "zero interlacing", gap, 0.0, "j_{nu-1} < j_nu < j_{nu+1}, j_nu < j^(2)_{nu-1}"));

  const double a = -(-2.338107410459767) / std::cbrt(2.0);
  const double b = 0.15 * 2.338107410459767 * 2.338107410459767 * std::cbrt(2.0);
  double margin = kInf;
  for (double nu : {10.0, 15.0, 20.0, 50.0, 100.0, 500.0, 1000.0}) {
    const double c3 = std::cbrt(nu);
    const double upper = nu + a * c3 + b / c3;
    const double j = analysis::bessel_zero(nu, 1);
    margin = std::min({margin, upper - j, j - (upper - 1.0 / (16.0 * nu))});
  }
  out.push_back(at_least(S, "j_nu envelope for nu >= 10", margin, 0.0, "min distance inside the envelope"));

  const double g = std::max({std::fabs(specfun::gamma(1.0) - 1.0), std::fabs(specfun::gamma(0.5) / std::sqrt(kPi) - 1.0),
                             std::fabs(specfun::gamma(5.0) / 24.0 - 1.0)});
  out.push_back(at_most(S, "Gamma at 1, 1/2, 5", g, 1e-13));
  return out;
}

// ---------------------------------------------------------------- spectrum

const std::vector<int> kBesselDims{2, 3, 4, 5, 10};

std::vector<CheckResult> spectrum_suite() {
  const std::string S = "spectrum";
  std::vector<CheckResult> out;

  double pos = kInf;
  for (int n : {1, 2, 3, 4, 5, 10}) {
    const auto& d = spectrum::eigen_data(n);
    for (int i = 1; i <= 200; ++i) pos = std::min(pos, spectrum::sigma1(d, d.mu * i / 201.0));
  }
  out.push_back(at_least(S, "sigma_1 > 0 on (0, mu)", pos, 0.0, "n = 1,2,3,4,5,10"));

  double cont_ratio = 0.0;
  bool cont_monotone = true;
  for (int n : kBesselDims) {
    const auto& d = spectrum::eigen_data(n);
    const double at = spectrum::sigma1(d, d.mu);
    for (int side : {-1, 1}) {
      double prev = kInf, first = 0.0, last = 0.0;
      for (int e = 2; e <= 6; ++e) {
        const double diff = std::fabs(spectrum::sigma1(d, d.mu + side * std::pow(10.0, -e)) - at);
        if (e == 2) first = diff;
        if (!(diff < prev)) cont_monotone = false;
        prev = last = diff;
      }
      cont_ratio = std::max(cont_ratio, last / first);
    }
  }
  out.push_back({S, "branch continuity at mu", cont_monotone && cont_ratio <= 1e-3, cont_ratio, 1e-3,
                 "|sigma(mu +- 1e-6) - sigma(mu)| / |sigma(mu +- 1e-2) - sigma(mu)|, gaps shrink monotonically"});

  double worst_step = -kInf;
  for (int n = 1; n <= 10; ++n) {
    const auto& d = spectrum::eigen_data(n);
    double prev = spectrum::sigma1(d, 0.05);
    for (int i = 1; i <= 300; ++i) {
      const double T = 0.05 * std::pow(2000.0, i / 300.0);
      const double cur = spectrum::sigma1(d, T);
      worst_step = std::max(worst_step, cur - prev);
      prev = cur;
    }
  }
  out.push_back({S, "sigma_1 strictly decreasing", worst_step < 0, worst_step, 0.0,
                 "n = 1..10, 300 log-spaced T in [0.05, 100]; value = largest step"});

  double deriv = -kInf;
  for (int n : kBesselDims) {
    const auto& d = spectrum::eigen_data(n);
    deriv = std::max(deriv, (spectrum::sigma1(d, d.mu + 1e-5) - spectrum::sigma1(d, d.mu - 1e-5)) / 2e-5);
  }
  out.push_back({S, "sigma_1'(mu) < 0", deriv < 0, deriv, 0.0, "central difference, h = 1e-5"});

  double grow = kInf, fall = kInf;
  bool negative = true;
  for (int n : kBesselDims) {
    const auto& d = spectrum::eigen_data(n);
    const double at = spectrum::sigma1(d, d.mu);
    // Leading order sigma_1(T) / sigma_1(mu) ~ 2 pi / (T (2 nu + 1)); aim at 2000.
    grow = std::min(grow, spectrum::sigma1(d, 2.0 * kPi / (2000.0 * (2.0 * d.nu + 1.0))) / at);
    const double big = spectrum::sigma1(d, 1e3);
    negative = negative && big < 0;
    fall = std::min(fall, std::fabs(big) / at);
  }
  out.push_back(at_least(S, "sigma_1 -> +inf as T -> 0", grow, 1e3, "sigma_1(T)/sigma_1(mu) at T = 2 pi/(2000 (2nu+1))"));
  out.push_back({S, "sigma_1(1e3) large and negative", negative && fall > 1e3, fall, 1e3, "|sigma_1(1e3)|/sigma_1(mu)"});

  double oracle = 0.0;
  for (int n : {1, 2, 3, 4, 5, 10}) {
    for (int i = 0; i < 50; ++i) {
      const double T = 0.3 * std::pow(100.0, i / 49.0);
      oracle = std::max(oracle, std::fabs(spectrum::sigma1(n, T) - spectrum::sigma1_via_ode(n, T, 100000)));
    }
  }
  out.push_back(at_most(S, "closed form vs ODE oracle", oracle, 1e-6, "n = 1,2,3,4,5,10, 50 log-spaced T in [0.3, 30]"));

  double shoot = 0.0;
  for (int n = 2; n <= 8; ++n) {
    shoot = std::max(shoot, std::fabs(spectrum::lambda1_via_shooting(n, 1e-10) - spectrum::eigen_data(n).lambda_nu));
  }
  out.push_back(at_most(S, "shooting eigenvalue = j_nu^2", shoot, 1e-6, "n = 2..8"));
  return out;
}

// ---------------------------------------------------------------- bifurcation

std::vector<CheckResult> bifurcation_suite() {
  const std::string S = "bifurcation";
  std::vector<CheckResult> out;

  double excess = 0.0;
  std::ostringstream off;
  for (const auto& p : kPublishedPeriods) {
    const double T = bifurcation::t_nu(p.two_nu + 2).T_nu;
    const double err = std::fabs(T - p.T);
    excess = std::max(excess, err / published_tolerance(p));
    if (err > published_tolerance(p)) off << (off.tellp() > 0 ? " " : "") << "2nu=" << p.two_nu << ":" << err;
  }
  out.push_back(at_most(S, "published table", excess, 1.0,
                        off.tellp() > 0 ? "error/tolerance; rows off: " + off.str() : "error/tolerance"));

  std::vector<int> grid;
  for (int v = 0; v <= 40; ++v) grid.push_back(v);
  const auto rows = bifurcation::table(grid);
  double step = -kInf;
  for (std::size_t i = 1; i < rows.size(); ++i) step = std::max(step, rows[i].T_nu - rows[i - 1].T_nu);
  out.push_back({S, "T_nu strictly decreasing", step < 0, step, 0.0, "2nu = 0..40; value = largest step"});

  double inside = kInf;
  for (const auto& r : rows) {
    if (r.nu < 10) continue;
    inside = std::min({inside, r.T_nu - *r.T_lower, *r.T_upper - r.T_nu, r.rho_nu.value() - *r.rho_minus,
                       *r.rho_plus - r.rho_nu.value()});
  }
  out.push_back(at_least(S, "rigorous bounds bracket T_nu", inside, 0.0, "2nu = 20..40; min margin"));

  double rho_margin = kInf;
  for (const auto& r : rows) {
    const double lo = r.nu >= 1 ? analysis::bessel_zero(r.nu - 1, 1) : 0.0;
    rho_margin = std::min({rho_margin, *r.rho_nu - lo, *r.j_nu - *r.rho_nu});
  }
  out.push_back(at_least(S, "j_{nu-1} < rho_nu < j_nu", rho_margin, 0.0, "2nu = 0..40"));

  bool cr_ok = true;
  double worst_sigma = 0.0;
  std::ostringstream cr_detail;
  for (int n = 1; n <= 12; ++n) {
    const auto report = bifurcation::check_cr_hypotheses(n, 10);
    const double scale = std::max(1.0, std::fabs(spectrum::eigen_data(n).phi1_prime_at_1));
    worst_sigma = std::max(worst_sigma, std::fabs(report.sigma[0]) / scale);
    if (!report.passed()) {
      cr_ok = false;
      for (const auto& f : report.failures) cr_detail << "n=" << n << ": " << f << "; ";
    }
  }
  out.push_back({S, "Crandall-Rabinowitz hypotheses", cr_ok, worst_sigma, 1e-8,
                 cr_ok ? "n = 1..12, k_max = 10; value = max |sigma_1(T_nu)|" : cr_detail.str()});

  double scaling = 0.0;
  for (int n = 1; n <= 12; ++n) {
    const double T = bifurcation::t_nu(n).T_nu;
    const double scale = std::max(1.0, std::fabs(spectrum::eigen_data(n).phi1_prime_at_1));
    for (int k : {2, 3}) scaling = std::max(scaling, std::fabs(spectrum::sigma_k(n, k, k * T)) / scale);
  }
  out.push_back(at_most(S, "sigma_k(k T_nu) = 0", scaling, 1e-8, "n = 1..12, k = 2, 3"));

  double ratio = 0.0;
  std::ostringstream ratios;
  for (double nu : {50.0, 100.0, 500.0, 1000.0}) {
    const double T = bifurcation::t_nu(static_cast<int>(2 * nu + 2)).T_nu;
    const double r = std::fabs(T - bifurcation::asymptotic_tnu(nu)) * std::pow(nu, 7.0 / 6.0);
    ratio = std::max(ratio, r);
    ratios << (nu == 50.0 ? "" : " ") << r;
  }
  out.push_back(at_most(S, "T_nu - sqrt(2) pi nu^{-1/2} = O(nu^{-7/6})", ratio, 6.0,
                        "|gap| nu^{7/6} at nu = 50,100,500,1000: " + ratios.str()));
  return out;
}

// ---------------------------------------------------------------- delaunay

std::vector<CheckResult> delaunay_suite() {
  const std::string S = "delaunay";
  std::vector<CheckResult> out;

  const auto cyl = delaunay::delaunay_profile(1.0, 64);
  double cyl_dev = 0.0;
  for (const auto& s : cyl.samples) cyl_dev = std::max({cyl_dev, std::fabs(s.y - 1.0), std::fabs(s.z - s.t)});
  out.push_back(at_most(S, "sigma = 1 is the unit cylinder", cyl_dev, 1e-12));
  out.push_back(at_most(S, "H = 1 on the cylinder", delaunay::mean_curvature_check(cyl), 1e-10));

  const auto half = delaunay::delaunay_profile(0.5, 1024);
  out.push_back(at_most(S, "H = 1 for sigma = 0.5, 1024 samples", delaunay::mean_curvature_check(half), 1e-4));

  const double coarse = delaunay::mean_curvature_check(delaunay::delaunay_profile(0.9, 512));
  const double fine = delaunay::mean_curvature_check(delaunay::delaunay_profile(0.9, 1024));
  const double rate = coarse / fine;
  out.push_back({S, "H error second order (sigma = 0.9)", rate > 3.5 && rate < 4.5, rate, 4.0,
                 "error ratio 512 -> 1024 samples, accepted in (3.5, 4.5)"});

  double speed = 0.0, turning = 0.0;
  for (double sigma : {0.1, 0.5, 0.9}) {
    const auto p = delaunay::delaunay_profile(sigma, 257);
    for (const auto& s : p.samples) speed = std::max(speed, std::fabs(s.dy * s.dy + s.dz * s.dz - s.y * s.y));
    turning = std::max({turning, std::fabs(p.y_min - (1.0 - std::sqrt(1.0 - sigma))),
                        std::fabs(p.y_max - (1.0 + std::sqrt(1.0 - sigma))), std::fabs(p.samples.front().y - p.y_min),
                        std::fabs(p.samples[128].y - p.y_max)});
  }
  out.push_back(at_most(S, "y'^2 + z'^2 = y^2", speed, 1e-6, "sigma = 0.1, 0.5, 0.9"));
  out.push_back(at_most(S, "turning points 1 -+ sqrt(1 - sigma)", turning, 1e-12));

  double zero = 0.0;
  for (double T : {0.5, 1.0, 3.0, 2.0 * kPi, 17.0}) zero = std::max(zero, std::fabs(delaunay::jacobi_sigma(1, 0, T)));
  for (int k = 1; k <= 5; ++k) zero = std::max(zero, std::fabs(delaunay::jacobi_sigma(0, k, 2.0 * kPi * k)));
  out.push_back(at_most(S, "sigma_{1,0} = 0 and sigma_{0,k}(2 pi k) = 0", zero, 1e-14));

  const double below = delaunay::jacobi_sigma(0, 1, 2.0 * kPi - 0.1);
  const double above = delaunay::jacobi_sigma(0, 1, 2.0 * kPi + 0.1);
  out.push_back({S, "sigma_{0,1} changes sign at 2 pi", below * above < 0, below * above, 0.0, "product at 2 pi -+ 0.1"});

  double pos = kInf;
  for (int j = 2; j <= 6; ++j)
    for (int k = 0; k <= 6; ++k)
      for (double T : {0.1, 1.0, 10.0, 100.0}) pos = std::min(pos, delaunay::jacobi_sigma(j, k, T));
  out.push_back(at_least(S, "sigma_{j,k} > 0 for j >= 2", pos, 0.0));
  return out;
}

// ---------------------------------------------------------------- pde

std::vector<CheckResult> pde_suite() {
  const std::string S = "pde";
  std::vector<CheckResult> out;
  using pdecheck::MeridianGrid;

  const double exact2 = spectrum::eigen_data(2).lambda_nu;
  const double e32 = std::fabs(pdecheck::first_eigenpair(MeridianGrid::cosine(2, 3.0, 0.0, 1, 32, 32)).lambda - exact2);
  const double e64 = std::fabs(pdecheck::first_eigenpair(MeridianGrid::cosine(2, 3.0, 0.0, 1, 64, 64)).lambda - exact2);
  out.push_back({S, "v = 0 eigenvalue second order (n = 2)", e32 / e64 > 3.5 && e32 / e64 < 4.5, e32 / e64, 4.0,
                 "error ratio 32^2 -> 64^2, accepted in (3.5, 4.5)"});

  double flat = 0.0;
  for (auto [n, T] : {std::pair{1, 4.0}, std::pair{3, 2.0}}) {
    const double lam = pdecheck::first_eigenpair(MeridianGrid::cosine(n, T, 0.0, 1, 64, 64)).lambda;
    flat = std::max(flat, std::fabs(lam / spectrum::eigen_data(n).lambda_nu - 1.0));
  }
  out.push_back(at_most(S, "v = 0 eigenvalue for n = 1, 3", flat, 1e-3, "relative error on 64^2"));

  const MeridianGrid straight = MeridianGrid::cosine(2, 3.0, 0.0, 1, 48, 48);
  const auto base = pdecheck::first_eigenpair(straight);
  double f0 = 0.0;
  for (double v : pdecheck::neumann_data(straight, base).value) f0 = std::max(f0, std::fabs(v));
  out.push_back(at_most(S, "F(0, T) = 0", f0, 1e-10));

  const double T0 = bifurcation::t_nu(2).T_nu;
  const MeridianGrid wavy = MeridianGrid::cosine(2, T0, 1e-2, 1, 48, 48);
  auto pair = pdecheck::first_eigenpair(wavy);
  pdecheck::normalize(wavy, pair);
  double min_u = kInf;
  for (int i = 0; i < wavy.nr(); ++i)
    for (int j = 0; j < wavy.nt(); ++j) min_u = std::min(min_u, pair.at(wavy, i, j));
  out.push_back(at_least(S, "eigenfunction positive inside", min_u, 0.0));

  const auto F = pdecheck::neumann_data(wavy, pair);
  double asym = 0.0;
  for (int j = 1; j < wavy.nt(); ++j) asym = std::max(asym, std::fabs(F.value[j] - F.value[wavy.nt() - j]));
  out.push_back(at_most(S, "F(v) even in t", asym, 1e-10));

  const auto c_before = pdecheck::cosine_coefficients(wavy, F.value, 4);
  for (double& v : pair.u) v *= 3.7;
  pdecheck::normalize(wavy, pair);
  const auto c_after = pdecheck::cosine_coefficients(wavy, pdecheck::neumann_data(wavy, pair).value, 4);
  double inv = 0.0;
  for (int m = 0; m <= 4; ++m) inv = std::max(inv, std::fabs(c_after[m] - c_before[m]));
  out.push_back(at_most(S, "invariance under rescaling u", inv, 1e-10));

  const double s2 = spectrum::sigma_k(2, 2, T0);
  const auto r1 = pdecheck::linearized_response(2, 1, T0, 1e-3, 96, 96);
  const auto r2 = pdecheck::linearized_response(2, 2, T0, 1e-3, 96, 96);
  std::ostringstream norm;
  norm << "normalisation factor " << r2.normalization;
  out.push_back(at_most(S, "mode 1 at T_0 vanishes", std::fabs(r1.coefficient) / std::fabs(s2), 0.05,
                        "|coefficient| / |sigma_2(T_0)|, 96^2, eps = 1e-3"));
  out.push_back(at_most(S, "mode 2 at T_0 matches sigma_2", std::fabs(r2.coefficient / s2 - 1.0), 0.05,
                        "relative error, 96^2, eps = 1e-3; " + norm.str()));

  double leak = 0.0;
  for (std::size_t m = 1; m < r2.modes.size(); ++m)
    if (m != 2) leak = std::max(leak, std::fabs(r2.modes[m]) / std::fabs(r2.coefficient));
  out.push_back(at_most(S, "no leakage into other modes", leak, 0.05, "max |mode j| / |mode 2|"));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"specfun", "spectrum", "bifurcation", "delaunay", "pde"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  using Suite = std::function<std::vector<CheckResult>()>;
  static const std::vector<std::pair<std::string, Suite>> suites{{"specfun", specfun_suite},
                                                                  {"spectrum", spectrum_suite},
                                                                  {"bifurcation", bifurcation_suite},
                                                                  {"delaunay", delaunay_suite},
                                                                  {"pde", pde_suite}};
  std::vector<CheckResult> out;
  for (const auto& [suite_name, run] : suites) {
    if (name != "all" && name != suite_name) continue;
    auto part = run();
    out.insert(out.end(), part.begin(), part.end());
  }
  if (out.empty()) throw UsageError("unknown suite '" + name + "'");
  return out;
}

}  // namespace cylbif::cli
