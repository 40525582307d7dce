#include "cylbif/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cylbif::specfun {

namespace {

using ld = long double;

constexpr ld kPi = std::numbers::pi_v<long double>;
constexpr double kMaxOrder = 1001.0;

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(x) for x >= 0.5.
ld lanczos_log_gamma(ld x) {
  x -= 1;
  ld a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<ld>(i));
  const ld t = x + kLanczosG + 0.5L;
  return 0.5L * std::log(2 * kPi) + (x + 0.5L) * std::log(t) - t + std::log(a);
}

// Stirling series; truncation error below 1e-17 for x >= 10.
ld stirling_log_gamma(ld x) {
  constexpr std::array<ld, 7> kCoeff = {1.0L / 12,          -1.0L / 360, 1.0L / 1260, -1.0L / 1680,
                                        1.0L / 1188,        -691.0L / 360360, 1.0L / 156};
  const ld inv = 1 / x;
  const ld inv2 = inv * inv;
  ld corr = 0;
  ld pw = inv;
  for (ld c : kCoeff) {
    corr += c * pw;
    pw *= inv2;
  }
  return (x - 0.5L) * std::log(x) - x + 0.5L * std::log(2 * kPi) + corr;
}

ld log_gamma_ld(ld x) {
  if (!(x > 0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x >= 10) return stirling_log_gamma(x);
  if (x < 0.5L) return lanczos_log_gamma(x + 1) - std::log(x);
  return lanczos_log_gamma(x);
}

void check_argument(double s, const char* who) {
  if (!(s > 0) || !std::isfinite(s)) throw std::domain_error(std::string(who) + ": argument must be positive");
}

void check_order(double order, double lowest, const char* who) {
  if (!(order >= lowest) || order > kMaxOrder) {
    throw std::domain_error(std::string(who) + ": order " + std::to_string(order) + " out of range");
  }
}

bool is_integer(double x) { return std::floor(x) == x; }

// Neumaier-compensated running sum.
struct CompensatedSum {
  ld sum = 0;
  ld comp = 0;
  void add(ld x) {
    const ld t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  ld value() const { return sum + comp; }
};

// sum_m sign^m (s/2)^{2m} / (m! (tau+1)_m), i.e. the power series with its
// leading factor (s/2)^tau / Gamma(tau+1) removed. sign = -1 for J, +1 for I.
// Requires tau > -1.
ld reduced_series(ld tau, ld s, int sign) {
  const ld q = 0.25L * s * s;
  CompensatedSum acc;
  ld term = 1;
  acc.add(term);
  constexpr ld kTiny = 1e-22L;
  for (int m = 1; m < 100000; ++m) {
    term *= sign * q / (static_cast<ld>(m) * (tau + m));
    acc.add(term);
    // Terms decrease monotonically once m (tau + m) exceeds q.
    if (static_cast<ld>(m) * (tau + m) > q && std::fabs(term) <= kTiny * std::fabs(acc.value())) break;
  }
  return acc.value();
}

// log of (s/2)^tau / Gamma(tau+1); tau > -1.
ld log_leading(ld tau, ld s) { return tau * std::log(0.5L * s) - log_gamma_ld(tau + 1); }

bool j_series_is_safe(double tau, double s) { return s <= bessel_j_series_limit(tau); }

// J_nu = j * kRescale^{-rescales}.
struct JY {
  ld j;
  ld y;
  int rescales;
};

constexpr ld kRescale = 1e300L;
const ld kLogRescale = std::log(kRescale);

// Steed's method (continued fractions CF1/CF2 with downward recurrence and
// Wronskian normalisation) for J_nu(x), Y_nu(x), nu >= 0, x >= 2.
JY bessel_jy_steed(ld nu, ld x) {
  constexpr int kMaxIt = 200000;
  constexpr ld kEps = 5e-19L;
  constexpr ld kFpMin = std::numeric_limits<ld>::min() / kEps;

  const int nl = std::max(0, static_cast<int>(nu - x + 1.5L));
  const ld mu = nu - nl;
  const ld xi = 1 / x;
  const ld xi2 = 2 * xi;
  const ld w = xi2 / kPi;

  // CF1: J'_nu / J_nu.
  int isign = 1;
  ld h = std::max(nu * xi, kFpMin);
  ld b = xi2 * nu;
  ld d = 0;
  ld c = h;
  int it = 0;
  for (; it < kMaxIt; ++it) {
    b += xi2;
    d = b - d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b - 1 / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1 / d;
    const ld del = c * d;
    h *= del;
    if (d < 0) isign = -isign;
    if (std::fabs(del - 1) < kEps) break;
  }
  if (it == kMaxIt) throw std::runtime_error("bessel_j: continued fraction CF1 did not converge");

  // Downward recurrence nu -> mu on an unnormalised solution.
  ld rjl = isign * kFpMin;
  ld rjpl = h * rjl;
  int rescales = 0;
  ld fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const ld tmp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * tmp - rjl;
    rjl = tmp;
    if (std::fabs(rjl) > kRescale) {
      rjl /= kRescale;
      rjpl /= kRescale;
      ++rescales;
    }
  }
  if (rjl == 0) rjl = kEps;
  const ld f = rjpl / rjl;

  // CF2: p + iq = (J'_mu + i Y'_mu) / (J_mu + i Y_mu).
  ld a = 0.25L - mu * mu;
  ld p = -0.5L * xi;
  ld q = 1;
  const ld br = 2 * x;
  ld bi = 2;
  fact = a * xi / (p * p + q * q);
  ld cr = br + q * fact;
  ld ci = bi + p * fact;
  ld den = br * br + bi * bi;
  ld dr = br / den;
  ld di = -bi / den;
  ld dlr = cr * dr - ci * di;
  ld dli = cr * di + ci * dr;
  ld tmp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = tmp;
  for (it = 2; it < kMaxIt; ++it) {
    a += 2 * (it - 1);
    bi += 2;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::fabs(dr) + std::fabs(di) < kFpMin) dr = kFpMin;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::fabs(cr) + std::fabs(ci) < kFpMin) cr = kFpMin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    tmp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = tmp;
    if (std::fabs(dlr - 1) + std::fabs(dli) < kEps) break;
  }
  if (it == kMaxIt) throw std::runtime_error("bessel_j: continued fraction CF2 did not converge");

  const ld gam = (p - f) / q;
  ld rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  ld rymu = rjmu * gam;
  const ld rymup = rymu * (p + q / gam);
  ld ry1 = mu * xi * rymu - rymup;

  const ld jnu = isign * kFpMin * (rjmu / rjl);
  for (int i = 1; i <= nl; ++i) {
    const ld t = (mu + i) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = t;
  }
  return {jnu, rymu, rescales};
}

// J_nu / exp(log_divisor), combined in logs since jy.j alone can sit near the bottom of the exponent range.
ld unscale(const JY& jy, ld log_divisor) {
  if (jy.j == 0) return 0;
  return std::copysign(std::exp(std::log(std::fabs(jy.j)) - jy.rescales * kLogRescale - log_divisor), jy.j);
}

// J_tau(s) in extended precision for tau >= -1.
ld bessel_j_ld(double tau, double s) {
  if (tau < 0 && is_integer(tau)) return -bessel_j_ld(-tau, s);  // J_{-1} = -J_1
  if (j_series_is_safe(tau, s)) {
    return std::exp(log_leading(tau, s)) * reduced_series(tau, s, -1);
  }
  if (tau >= 0) {
    const JY jy = bessel_jy_steed(tau, s);
    return unscale(jy, 0);
  }
  // J_{-a} = cos(a pi) J_a - sin(a pi) Y_a for 0 < a < 1.
  const ld a = -static_cast<ld>(tau);
  const JY jy = bessel_jy_steed(a, s);
  return std::cos(a * kPi) * jy.j - std::sin(a * kPi) * jy.y;
}

ld bessel_i_ld(double tau, double s) {
  if (tau < 0 && is_integer(tau)) return bessel_i_ld(-tau, s);  // I_{-1} = I_1
  return std::exp(log_leading(tau, s)) * reduced_series(tau, s, +1);
}

double to_double_checked(ld v, const char* who) {
  if (std::fabs(v) > std::numeric_limits<double>::max()) {
    throw std::range_error(std::string(who) + ": result overflows double precision");
  }
  return static_cast<double>(v);
}

}  // namespace

Order::Order(double nu) : nu_(nu), n_(0) {
  if (!(nu >= 0)) throw std::domain_error("Order: nu must be >= 0");
  if (is_integer(2 * nu)) n_ = static_cast<int>(2 * nu) + 2;
}

Order Order::from_dimension(int n) {
  if (n < 1) throw std::domain_error("Order: dimension must be >= 1");
  return Order(0.5 * (n - 2), n);
}

double bessel_j_series_limit(double order) { return std::max(8.0, std::sqrt(20.0 * std::max(order + 1.0, 0.0))); }

double gamma(double x) {
  if (!(x > 0)) throw std::domain_error("gamma: argument must be positive");
  const ld value = std::exp(log_gamma_ld(x));
  return to_double_checked(value, "gamma");
}

double log_gamma(double x) { return static_cast<double>(log_gamma_ld(x)); }

double bessel_j(double order, double s) {
  check_order(order, -1.0, "bessel_j");
  check_argument(s, "bessel_j");
  return static_cast<double>(bessel_j_ld(order, s));
}

double bessel_j(const Order& order, double s) { return bessel_j(order.nu(), s); }

double bessel_j_prime(double order, double s) {
  check_order(order, 0.0, "bessel_j_prime");
  check_argument(s, "bessel_j_prime");
  return static_cast<double>(0.5L * (bessel_j_ld(order - 1, s) - bessel_j_ld(order + 1, s)));
}

double bessel_i(double order, double s) {
  check_order(order, -1.0, "bessel_i");
  check_argument(s, "bessel_i");
  return to_double_checked(bessel_i_ld(order, s), "bessel_i");
}

double bessel_i(const Order& order, double s) { return bessel_i(order.nu(), s); }

double bessel_i_prime(double order, double s) {
  check_order(order, 0.0, "bessel_i_prime");
  check_argument(s, "bessel_i_prime");
  return to_double_checked(0.5L * (bessel_i_ld(order - 1, s) + bessel_i_ld(order + 1, s)), "bessel_i_prime");
}

double bessel_j_scaled(double order, double s) {
  check_order(order, 0.0, "bessel_j_scaled");
  check_argument(s, "bessel_j_scaled");
  if (j_series_is_safe(order, s)) return static_cast<double>(reduced_series(order, s, -1));
  const JY jy = bessel_jy_steed(order, s);
  return static_cast<double>(unscale(jy, log_leading(order, s)));
}

double bessel_i_ratio(double order, double s) {
  check_order(order, 0.0, "bessel_i_ratio");
  check_argument(s, "bessel_i_ratio");
  // I_{t+1}/I_t = 1 / g with g = b_1 + 1/(b_2 + 1/(b_3 + ...)), b_m = 2(t+m)/s; modified Lentz on g.
  constexpr ld kTiny = 1e-300L;
  constexpr ld kEps = 1e-18L;
  auto b = [order, s](int m) { return 2 * (static_cast<ld>(order) + m) / static_cast<ld>(s); };
  ld g = b(1);
  ld c = g;
  ld d = 0;
  for (int m = 2; m < 10000000; ++m) {
    d = b(m) + d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b(m) + 1 / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1 / d;
    const ld delta = c * d;
    g *= delta;
    if (std::fabs(delta - 1) < kEps) return static_cast<double>(1 / g);
  }
  throw std::runtime_error("bessel_i_ratio: continued fraction did not converge");
}

double bessel_i_scaled(double order, double s) {
  check_order(order, 0.0, "bessel_i_scaled");
  check_argument(s, "bessel_i_scaled");
  return to_double_checked(reduced_series(order, s, +1), "bessel_i_scaled");
}

}  // namespace cylbif::specfun
