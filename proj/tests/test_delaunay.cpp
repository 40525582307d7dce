#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cylbif/analysis.hpp"
#include "cylbif/delaunay.hpp"

namespace dl = cylbif::delaunay;
namespace an = cylbif::analysis;
constexpr double kPi = std::numbers::pi;

TEST(JacobiSigma, ZeroStructure) {
  for (double T : {0.3, 1.0, 7.5}) EXPECT_EQ(dl::jacobi_sigma(1, 0, T), 0.0);
  for (int k = 1; k <= 4; ++k) EXPECT_NEAR(dl::jacobi_sigma(0, k, 2 * kPi * k), 0.0, 1e-15);
  EXPECT_LT(dl::jacobi_sigma(0, 1, 2 * kPi + 0.1) * dl::jacobi_sigma(0, 1, 2 * kPi - 0.1), 0.0);
  EXPECT_DOUBLE_EQ(dl::jacobi_sigma(2, 0, 1.0), 1.5);
  EXPECT_THROW(dl::jacobi_sigma(-1, 0, 1.0), std::domain_error);
  EXPECT_THROW(dl::jacobi_sigma(0, 0, 0.0), std::domain_error);
}

TEST(DelaunayProfile, CylinderIsExact) {
  const auto p = dl::delaunay_profile(1.0, 64);
  ASSERT_EQ(p.samples.size(), 64u);
  for (const auto& s : p.samples) {
    EXPECT_EQ(s.y, 1.0);
    EXPECT_DOUBLE_EQ(s.z, s.t);
  }
  EXPECT_LT(dl::mean_curvature_check(p), 1e-10);
}

TEST(DelaunayProfile, TurningPoints) {
  const auto p = dl::delaunay_profile(0.5, 65);
  EXPECT_NEAR(p.y_min, 1 - std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(p.y_max, 1 + std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(p.samples.front().y, p.y_min, 1e-15);
  EXPECT_NEAR(p.samples[32].y, p.y_max, 1e-12);
  EXPECT_NEAR(p.samples.back().y, p.y_min, 1e-15);
}

TEST(DelaunayProfile, SphereChainLimit) {
  const auto p = dl::delaunay_profile(1e-6, 33);
  EXPECT_LT(p.y_min, 1e-3);
  EXPECT_NEAR(p.y_max, 2.0, 1e-3);
}

TEST(DelaunayProfile, PeriodFromQuadrature) {
  const double sigma = 0.5;
  const auto p = dl::delaunay_profile(sigma, 9);
  // y^2 - ((y^2 + sigma)/2)^2 = (y - y_min)(y_max - y)(y^2 + 2y + sigma) / 4.
  auto dt_dy = [&p, sigma](double y) {
    return 2.0 / std::sqrt((y - p.y_min) * (p.y_max - y) * (y * y + 2 * y + sigma));
  };
  const double half = an::integrate_inv_sqrt(dt_dy, p.y_min, p.y_max);
  EXPECT_GT(half, 0.0);
  EXPECT_NEAR(2 * half, p.period, 1e-9);
}

// Second-order form y'' = y - y (y^2 + sigma) / 2, z' = (y^2 + sigma) / 2, started at
// the neck with y' = 0 and integrated by RK4 between sample times.
TEST(DelaunayProfile, MatchesRk4Integration) {
  for (double sigma : {0.2, 0.5, 0.9}) {
    const auto p = dl::delaunay_profile(sigma, 129);
    auto field = [sigma](double, const std::array<double, 3>& u) -> std::array<double, 3> {
      return {u[1], u[0] - 0.5 * u[0] * (u[0] * u[0] + sigma), 0.5 * (u[0] * u[0] + sigma)};
    };
    std::array<double, 3> u{p.y_min, 0.0, 0.0};
    double worst = 0.0;
    for (std::size_t i = 1; i < p.samples.size(); ++i) {
      u = an::ode_rk4(field, p.samples[i - 1].t, u, p.samples[i].t, 200);
      const auto& s = p.samples[i];
      worst = std::max({worst, std::fabs(u[0] - s.y), std::fabs(u[1] - s.dy), std::fabs(u[2] - s.z)});
    }
    EXPECT_LT(worst, 1e-8) << "sigma = " << sigma;
  }
}

TEST(DelaunayProfile, FirstOrderIdentity) {
  const auto p = dl::delaunay_profile(0.3, 101);
  for (const auto& s : p.samples) EXPECT_NEAR(s.dy * s.dy + s.dz * s.dz, s.y * s.y, 1e-12);
}

TEST(DelaunayProfile, RejectsBadArguments) {
  EXPECT_THROW(dl::delaunay_profile(0.0, 16), std::domain_error);
  EXPECT_THROW(dl::delaunay_profile(1.5, 16), std::domain_error);
  EXPECT_THROW(dl::delaunay_profile(0.5, 2), std::domain_error);
}

TEST(MeanCurvature, SecondOrderConvergence) {
  EXPECT_LT(dl::mean_curvature_check(dl::delaunay_profile(0.5, 1024)), 1e-4);
  const double coarse = dl::mean_curvature_check(dl::delaunay_profile(0.9, 256));
  const double fine = dl::mean_curvature_check(dl::delaunay_profile(0.9, 512));
  EXPECT_GT(coarse / fine, 3.5);
  EXPECT_LT(coarse / fine, 4.5);
}
