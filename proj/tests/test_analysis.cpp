#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cylbif/analysis.hpp"
#include "cylbif/specfun.hpp"

namespace an = cylbif::analysis;
namespace sf = cylbif::specfun;
constexpr double kPi = std::numbers::pi;

TEST(FindRoot, Elementary) {
  auto sq = [](double s) { return s * s - 2.0; };
  EXPECT_NEAR(an::find_root(sq, an::Bracket::make(sq, 1, 2), 1e-12), std::sqrt(2.0), 1e-12);
  auto c = [](double s) { return std::cos(s); };
  EXPECT_NEAR(an::find_root(c, an::Bracket::make(c, 1, 2), 1e-12), kPi / 2, 1e-12);
}

TEST(FindRoot, BesselZero) {
  auto j0 = [](double s) { return sf::bessel_j(0.0, s); };
  EXPECT_NEAR(an::find_root(j0, an::Bracket::make(j0, 2, 3), 1e-13), 2.4048255577, 1e-10);
}

TEST(FindRoot, RejectsBadBracket) {
  auto sq = [](double s) { return s * s + 1.0; };
  EXPECT_THROW(an::Bracket::make(sq, 0, 1), std::invalid_argument);
  EXPECT_THROW(an::Bracket::make([](double s) { return s; }, 1, -1), std::invalid_argument);
}

TEST(Integrate, Polynomials) {
  EXPECT_NEAR(an::integrate([](double) { return 1.0; }, 0, 1, 1e-12), 1.0, 1e-12);
  EXPECT_NEAR(an::integrate([](double s) { return s * s; }, 0, 1, 1e-12), 1.0 / 3.0, 1e-12);
}

TEST(Integrate, BesselNormIdentity) {
  const double j = an::bessel_zero(0.0, 1);
  const double jp = sf::bessel_j_prime(0.0, j);
  // J is defined for s > 0 only; the integrand vanishes at the origin.
  auto f = [](double s) { return s > 0 ? s * std::pow(sf::bessel_j(0.0, s), 2) : 0.0; };
  const double got = an::integrate(f, 0, j, 1e-12);
  EXPECT_NEAR(got, j * j * jp * jp / 2.0, 1e-11);
}

TEST(IntegrateOpen, MatchesClosedRule) {
  auto f = [](double s) { return std::exp(-s) * std::sin(3 * s); };
  EXPECT_NEAR(an::integrate_open(f, 0, 4, 1e-13), an::integrate(f, 0, 4, 1e-13), 1e-12);
}

TEST(IntegrateInvSqrt, EndpointSingularities) {
  EXPECT_NEAR(an::integrate_inv_sqrt([](double x) { return 1.0 / std::sqrt(x * (1 - x)); }, 0, 1), kPi, 1e-10);
  EXPECT_NEAR(an::integrate_inv_sqrt([](double x) { return 1.0 / std::sqrt(1 - x * x); }, 0, 1), kPi / 2, 1e-10);
}

TEST(IntegrateInvSqrt, RejectsNonFiniteInterior) {
  EXPECT_THROW(an::integrate_inv_sqrt([](double x) { return x < 0.5 ? 1.0 : std::nan(""); }, 0, 1),
               std::domain_error);
}

TEST(Sin2Substitution, MapsEndpoints) {
  EXPECT_DOUBLE_EQ(an::sin2_point(2, 5, 0), 2.0);
  EXPECT_NEAR(an::sin2_point(2, 5, kPi / 2), 5.0, 1e-15);
  auto g = an::sin2_substituted([](double) { return 1.0; }, 0, 3);
  EXPECT_NEAR(an::integrate(g, 0, kPi / 2, 1e-12), 3.0, 1e-12);
}

TEST(BesselZero, KnownValues) {
  EXPECT_NEAR(an::bessel_zero(0.0, 1), 2.4048255577, 1e-10);
  EXPECT_NEAR(an::bessel_zero(0.5, 1), kPi, 1e-13);
  EXPECT_NEAR(an::bessel_zero(0.5, 2), 2 * kPi, 1e-12);
}

TEST(BesselZero, MatchesBoost) {
  for (double nu : {0.0, 0.5, 1.0, 3.5, 10.0, 37.5, 100.0, 1000.0}) {
    for (int k : {1, 2}) {
      const double ref = boost::math::cyl_bessel_j_zero(nu, k);
      EXPECT_NEAR(an::bessel_zero(nu, k), ref, 1e-13 * ref) << nu << " " << k;
    }
  }
}

TEST(BesselZero, EnvelopeAtTen) {
  const double nu = 10.0, c3 = std::cbrt(nu);
  const double upper = nu + 1.8557 * c3 + 1.0331 / c3;
  const double j = an::bessel_zero(nu, 1);
  EXPECT_LT(j, upper);
  EXPECT_GT(j, upper - 1.0 / (16.0 * nu));
}

TEST(BesselZero, RejectsBadArguments) {
  EXPECT_THROW(an::bessel_zero(-1.0, 1), std::domain_error);
  EXPECT_THROW(an::bessel_zero(1.0, 3), std::domain_error);
}

TEST(OdeRk4, Exponentials) {
  auto grow = [](double, const std::array<double, 1>& y) { return std::array<double, 1>{y[0]}; };
  auto decay = [](double, const std::array<double, 1>& y) { return std::array<double, 1>{-y[0]}; };
  EXPECT_NEAR(an::ode_rk4(grow, 0, std::array<double, 1>{1}, 1, 1000)[0], std::exp(1.0), 1e-10);
  EXPECT_NEAR(an::ode_rk4(decay, 0, std::array<double, 1>{1}, 1, 1000)[0], std::exp(-1.0), 1e-10);
}

TEST(OdeRk4, HarmonicQuarterPeriod) {
  auto osc = [](double, const std::array<double, 2>& y) { return std::array<double, 2>{y[1], -y[0]}; };
  const auto y = an::ode_rk4(osc, 0, std::array<double, 2>{1, 0}, kPi / 2, 1000);
  EXPECT_NEAR(y[0], 0.0, 1e-8);
  EXPECT_NEAR(y[1], -1.0, 1e-8);
}

TEST(OdeRk4, Errors) {
  auto grow = [](double, const std::array<double, 1>& y) { return std::array<double, 1>{y[0] * y[0]}; };
  EXPECT_THROW(an::ode_rk4(grow, 0, std::array<double, 1>{1}, 1, 0), std::domain_error);
  EXPECT_THROW(an::ode_rk4(grow, 0, std::array<double, 1>{1}, 5, 100), an::ConvergenceError);
}
