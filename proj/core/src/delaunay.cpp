#include "cylbif/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cylbif/analysis.hpp"

namespace cylbif::delaunay {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadTol = 1e-13;

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// y(theta) = y_min + (y_max - y_min) sin^2(theta) for theta in [0, pi/2]. The
// factor (y - y_min)(y_max - y) of y'^2 cancels against dy/dtheta, leaving
//   dt/dtheta = 4 / sqrt(y^2 + 2y + sigma),   dz/dtheta = (y^2 + sigma)/2 dt/dtheta.
class HalfPeriod {
 public:
  HalfPeriod(double sigma, double y_min, double y_max) : sigma_(sigma), y_min_(y_min), y_max_(y_max) {}

  double y(double theta) const { return analysis::sin2_point(y_min_, y_max_, theta); }
  double dt(double theta) const {
    const double v = y(theta);
    return 4.0 / std::sqrt(v * v + 2.0 * v + sigma_);
  }
  double dz(double theta) const {
    const double v = y(theta);
    return 0.5 * (v * v + sigma_) * dt(theta);
  }
  double t_at(double theta) const {
    if (theta <= 0) return 0.0;
    return analysis::integrate([this](double th) { return dt(th); }, 0.0, theta, kQuadTol);
  }
  double z_at(double theta) const {
    if (theta <= 0) return 0.0;
    return analysis::integrate([this](double th) { return dz(th); }, 0.0, theta, kQuadTol);
  }
  double theta_for(double t, double half) const {
    if (t <= 0) return 0.0;
    if (t >= half) return 0.5 * kPi;
    const analysis::ScalarFn g = [this, t](double th) { return t_at(th) - t; };
    return analysis::find_root(g, analysis::Bracket{0.0, 0.5 * kPi, -t, half - t}, 1e-14);
  }

 private:
  double sigma_, y_min_, y_max_;
};

}  // namespace

double jacobi_sigma(int j, int k, double T) {
  if (j < 0 || k < 0) throw std::domain_error("jacobi_sigma: j and k must be >= 0");
  if (!(T > 0)) throw std::domain_error("jacobi_sigma: T must be positive");
  const double w = 2.0 * kPi * k / T;
  return 0.5 * (static_cast<double>(j) * j - 1.0 + w * w);
}

DelaunayProfile delaunay_profile(double sigma, int samples) {
  if (!(sigma > 0 && sigma <= 1)) throw std::domain_error("delaunay_profile: sigma must lie in (0, 1]");
  if (samples < 3) throw std::domain_error("delaunay_profile: samples must be >= 3");
  const double root = std::sqrt(1.0 - sigma);
  DelaunayProfile out{sigma, 1.0 - root, 1.0 + root, 0.0, {}};
  out.samples.resize(samples);
  const int last = samples - 1;

  if (sigma == 1.0) {
    out.period = 2.0 * kPi;
    for (int i = 0; i <= last; ++i) {
      const double t = out.period * i / last;
      out.samples[i] = {t, 1.0, t, 0.0, 1.0};
    }
    return out;
  }

  const HalfPeriod half(sigma, out.y_min, out.y_max);
  const double t_half = half.t_at(0.5 * kPi);
  const double z_half = half.z_at(0.5 * kPi);
  out.period = 2.0 * t_half;

  auto rhs = [sigma](double y) {
    const double w = 0.5 * (y * y + sigma);
    return std::sqrt(std::max(0.0, y * y - w * w));
  };
  for (int i = 0; 2 * i <= last; ++i) {
    const double t = out.period * i / last;
    const double theta = half.theta_for(t, t_half);
    const double y = half.y(theta);
    out.samples[i] = {t, y, half.z_at(theta), rhs(y), 0.5 * (y * y + sigma)};
  }
  // y(t) = y(P - t) and z(t) = 2 z(P/2) - z(P - t).
  for (int i = last; 2 * i > last; --i) {
    const auto& m = out.samples[last - i];
    const double t = out.period * i / last;
    out.samples[i] = {t, m.y, 2.0 * z_half - m.z, -m.dy, m.dz};
  }
  return out;
}

double mean_curvature_check(const DelaunayProfile& profile) {
  const auto& s = profile.samples;
  if (s.size() < 3) throw std::domain_error("mean_curvature_check: need at least 3 samples");
  const double h = s[1].t - s[0].t;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double y = s[i].y;
    const double yt = (s[i + 1].y - s[i - 1].y) / (2.0 * h);
    const double zt = (s[i + 1].z - s[i - 1].z) / (2.0 * h);
    const double ytt = (s[i + 1].y - 2.0 * y + s[i - 1].y) / (h * h);
    const double ztt = (s[i + 1].z - 2.0 * s[i].z + s[i - 1].z) / (h * h);

    // X(theta, t) = (y cos theta, y sin theta, z), evaluated at theta = 0.
    const Vec3 x_th{0.0, y, 0.0};
    const Vec3 x_t{yt, 0.0, zt};
    const Vec3 x_thth{-y, 0.0, 0.0};
    const Vec3 x_tht{0.0, yt, 0.0};
    const Vec3 x_tt{ytt, 0.0, ztt};
    Vec3 nrm = cross(x_t, x_th);  // points towards the axis
    const double len = std::sqrt(dot(nrm, nrm));
    for (double& c : nrm) c /= len;

    const double E = dot(x_th, x_th), F = dot(x_th, x_t), G = dot(x_t, x_t);
    const double L = dot(x_thth, nrm), M = dot(x_tht, nrm), N = dot(x_tt, nrm);
    const double H = (E * N - 2.0 * F * M + G * L) / (E * G - F * F);
    worst = std::max(worst, std::fabs(H - 1.0));
  }
  return worst;
}

}  // namespace cylbif::delaunay
