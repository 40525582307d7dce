#include "cylbif/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "cylbif/specfun.hpp"

namespace cylbif::analysis {

namespace {

constexpr int kMaxRootIterations = 200;
constexpr int kMaxQuadratureDepth = 50;

double simpson_step(const ScalarFn& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // The second test stops refinement once the estimate is at rounding level.
  if (std::fabs(delta) <= 15.0 * tol || std::fabs(delta) <= 1e-15 * std::fabs(left + right)) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) throw ConvergenceError("integrate: maximum subdivision depth reached");
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

std::pair<double, double> gauss_kronrod15(const ScalarFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double sum = f(c - dx) + f(c + dx);
    kronrod += kWgk[i] * sum;
    if (i % 2 == 1) gauss += kWg[i / 2] * sum;
  }
  return {kronrod * h, std::fabs((kronrod - gauss) * h)};
}

double gk_step(const ScalarFn& f, double a, double b, double tol, int depth) {
  const auto [value, err] = gauss_kronrod15(f, a, b);
  if (err <= tol) return value;
  if (depth <= 0) throw ConvergenceError("integrate_open: maximum subdivision depth reached");
  const double m = 0.5 * (a + b);
  return gk_step(f, a, m, 0.5 * tol, depth - 1) + gk_step(f, m, b, 0.5 * tol, depth - 1);
}

// Airy-zero envelope coefficients for j_nu: a = -a1 / 2^{1/3}, b = (3/20) a1^2 2^{1/3}.
constexpr double kAiryZero = -2.338107410459767;
const double kEnvA = -kAiryZero / std::cbrt(2.0);
const double kEnvB = 0.15 * kAiryZero * kAiryZero * std::cbrt(2.0);

double scan_for_sign_change(const ScalarFn& f, double from, double step, double limit, double* f_from) {
  double x = from;
  double fx = f(x);
  while (x < limit) {
    const double next = x + step;
    const double fn = f(next);
    if (fx * fn < 0) {
      *f_from = fx;
      return x;
    }
    x = next;
    fx = fn;
  }
  throw ConvergenceError("bessel_zero: no sign change found while scanning");
}

}  // namespace

Bracket Bracket::make(const ScalarFn& f, double lo, double hi) {
  Bracket b{lo, hi, f(lo), f(hi)};
  if (!b.valid()) throw std::invalid_argument("Bracket: endpoints must satisfy lo < hi and f(lo) f(hi) < 0");
  return b;
}

double find_root(const ScalarFn& f, const Bracket& bracket, double tol) {
  if (!bracket.valid()) throw std::invalid_argument("find_root: invalid bracket");
  if (!(tol > 0)) throw std::invalid_argument("find_root: tol must be positive");

  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  double c = a, fc = fa;
  double d = b - a, e = d;
  constexpr double kEps = 2.220446049250313e-16;

  for (int it = 0; it < kMaxRootIterations; ++it) {
    if (fb * fc > 0) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * kEps * std::fabs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;

    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
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
    b += (std::fabs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw ConvergenceError("find_root: no convergence within 200 iterations");
}

double integrate(const ScalarFn& f, double a, double b, double tol) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (!(tol > 0)) throw std::invalid_argument("integrate: tol must be positive");
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, kMaxQuadratureDepth);
}

double integrate_open(const ScalarFn& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  if (!(a < b)) throw std::invalid_argument("integrate_open: requires a <= b");
  if (!(tol > 0)) throw std::invalid_argument("integrate_open: tol must be positive");
  return gk_step(f, a, b, tol, kMaxQuadratureDepth);
}

double sin2_point(double a, double b, double theta) {
  const double s = std::sin(theta);
  return a + (b - a) * s * s;
}

ScalarFn sin2_substituted(ScalarFn f, double a, double b) {
  return [f = std::move(f), a, b](double theta) {
    const double x = sin2_point(a, b, theta);
    return f(x) * 2.0 * (b - a) * std::sin(theta) * std::cos(theta);
  };
}

double integrate_inv_sqrt(const ScalarFn& f, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("integrate_inv_sqrt: requires a < b");
  const ScalarFn g = sin2_substituted(
      [&f](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) {
          throw std::domain_error("integrate_inv_sqrt: integrand not finite at x = " + std::to_string(x));
        }
        return v;
      },
      a, b);
  return integrate_open(g, 0.0, 0.5 * std::numbers::pi, 1e-12);
}

double bessel_zero(double nu, int index) {
  if (!(nu >= 0)) throw std::domain_error("bessel_zero: nu must be >= 0");
  if (index != 1 && index != 2) throw std::domain_error("bessel_zero: index must be 1 or 2");
  const ScalarFn j = [nu](double s) { return specfun::bessel_j(nu, s); };
  constexpr double kTol = 1e-14;

  double first;
  if (nu >= 10) {
    const double c3 = std::cbrt(nu);
    const double upper = nu + kEnvA * c3 + kEnvB / c3;
    const double lower = upper - 0.0625 / nu;
    first = find_root(j, Bracket::make(j, lower - 0.1, upper + 0.1), kTol);
  } else {
    const double start = std::max(nu, 0.1);
    double f_lo = 0;
    const double lo = scan_for_sign_change(j, start, 0.25, nu + 3.0 * std::cbrt(nu) + 6.0, &f_lo);
    first = find_root(j, Bracket{lo, lo + 0.25, f_lo, j(lo + 0.25)}, kTol);
  }
  if (index == 1) return first;

  // The next zero lies roughly pi further on.
  double f_lo = 0;
  const double lo = scan_for_sign_change(j, first + 1e-3, 0.25, first + 10.0 + 2.0 * std::cbrt(nu), &f_lo);
  return find_root(j, Bracket{lo, lo + 0.25, f_lo, j(lo + 0.25)}, kTol);
}

}  // namespace cylbif::analysis
