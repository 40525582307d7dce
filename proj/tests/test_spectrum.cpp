#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cylbif/spectrum.hpp"

namespace sp = cylbif::spectrum;
namespace bm = boost::math;
constexpr double kPi = std::numbers::pi;

namespace {

struct Reference {
  double kappa;
  double a;  // -phi_1'(1)
};

// phi_1(r) = kappa (j r)^{-nu} J_nu(j r) with int_0^1 phi_1^2 dr = 1 / (2 pi |S^{n-1}|),
// evaluated with Boost Bessel functions and Gauss-Kronrod quadrature.
Reference reference(int n) {
  const double nu = 0.5 * (n - 2);
  const double j = bm::cyl_bessel_j_zero(nu, 1);
  auto f = [nu](double s) { return std::pow(s, -2 * nu) * std::pow(bm::cyl_bessel_j(nu, s), 2); };
  const double integral = bm::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, j, 15, 1e-14);
  const double sphere = 2 * std::pow(kPi, nu + 1) / bm::tgamma(nu + 1);
  const double kappa = std::sqrt(j / (2 * kPi * sphere * integral));
  return {kappa, kappa * std::pow(j, 1 - nu) * bm::cyl_bessel_j(nu + 1, j)};
}

double reference_sigma1(int n, double T) {
  const double nu = 0.5 * (n - 2);
  const double j = bm::cyl_bessel_j_zero(nu, 1);
  const double a = reference(n).a;
  const double q = std::pow(2 * kPi / T, 2) - j * j;
  if (q > 0) {
    const double xi = std::sqrt(q);
    return a * (2 * nu + 1 + xi * bm::cyl_bessel_i(nu + 1, xi) / bm::cyl_bessel_i(nu, xi));
  }
  const double rho = std::sqrt(-q);
  return a * (2 * nu + 1 - rho * bm::cyl_bessel_j(nu + 1, rho) / bm::cyl_bessel_j(nu, rho));
}

}  // namespace

TEST(EigenData, DimensionOne) {
  const auto& d = sp::eigen_data(1);
  EXPECT_DOUBLE_EQ(d.lambda_nu, kPi * kPi / 4);
  EXPECT_NEAR(d.phi1_prime_at_1, -std::sqrt(kPi / 8), 1e-15);
  EXPECT_DOUBLE_EQ(d.mu, 4.0);
}

TEST(EigenData, LowDimensions) {
  EXPECT_NEAR(sp::eigen_data(2).j_nu, 2.4048255577, 1e-10);
  EXPECT_NEAR(sp::eigen_data(2).lambda_nu, 5.7831859629, 1e-9);
  EXPECT_NEAR(sp::eigen_data(3).j_nu, kPi, 1e-14);
  EXPECT_NEAR(sp::eigen_data(3).lambda_nu, kPi * kPi, 1e-12);
}

TEST(EigenData, NormalisationMatchesQuadratureReference) {
  for (int n : {2, 3, 4, 5, 6, 8, 10, 14}) {
    const auto& d = sp::eigen_data(n);
    const Reference r = reference(n);
    EXPECT_NEAR(d.kappa_n / r.kappa, 1.0, 1e-10) << "n = " << n;
    EXPECT_NEAR(-d.phi1_prime_at_1 / r.a, 1.0, 1e-10) << "n = " << n;
    EXPECT_NEAR(d.phi1_second_at_1, (2 * d.nu + 1) * r.a, 1e-9 * r.a) << "n = " << n;
  }
}

TEST(EigenData, LargeDimensionStaysFinite) {
  const auto& d = sp::eigen_data(202);
  EXPECT_TRUE(std::isfinite(d.kappa_n));
  EXPECT_TRUE(std::isfinite(d.phi1_prime_at_1));
  EXPECT_LT(d.phi1_prime_at_1, 0.0);
  EXPECT_TRUE(std::isfinite(sp::eigen_data(2002).log_kappa_n));
  EXPECT_THROW(sp::eigen_data(0), std::domain_error);
}

TEST(Sigma1, DimensionOneZeroAtFour) {
  EXPECT_NEAR(sp::sigma1(1, 4.0), 0.0, 1e-15);
  const double h = 1e-5;
  const double deriv = (sp::sigma1(1, 4 + h) - sp::sigma1(1, 4 - h)) / (2 * h);
  EXPECT_NEAR(deriv, -std::sqrt(kPi / 8) * kPi * kPi / 8, 1e-6);
}

TEST(Sigma1, PositiveAtMu) {
  for (int n = 2; n <= 12; ++n) EXPECT_GT(sp::sigma1(n, sp::eigen_data(n).mu), 0.0);
}

TEST(Sigma1, VanishesNearPublishedPeriod) { EXPECT_NEAR(sp::sigma1(2, 3.06362), 0.0, 1e-4); }

TEST(Sigma1, MatchesBoostClosedForm) {
  for (int n : {2, 3, 4, 7, 10}) {
    for (double T : {0.2, 0.7, 1.5, 2.2, 3.0, 4.5, 9.0, 40.0}) {
      const double ref = reference_sigma1(n, T);
      EXPECT_NEAR(sp::sigma1(n, T), ref, 1e-10 * std::max(1.0, std::fabs(ref))) << n << " " << T;
    }
  }
}

TEST(Sigma1, ContinuousAcrossMu) {
  for (int n : {2, 5, 9}) {
    const auto& d = sp::eigen_data(n);
    const double at = sp::sigma1(d, d.mu);
    EXPECT_NEAR(sp::sigma1(d, d.mu * (1 - 1e-7)), at, 1e-6);
    EXPECT_NEAR(sp::sigma1(d, d.mu * (1 + 1e-7)), at, 1e-6);
  }
}

TEST(Sigma1, RejectsBadInput) {
  EXPECT_THROW(sp::sigma1(2, 0.0), std::domain_error);
  EXPECT_THROW(sp::sigma1(2, -1.0), std::domain_error);
  EXPECT_THROW(sp::sigma1(1, 1e9), std::range_error);
}

TEST(SigmaK, ScalingIdentity) {
  EXPECT_NEAR(sp::sigma_k(2, 2, 2 * 3.06362), 0.0, 1e-4);
  EXPECT_NEAR(sp::sigma_k(1, 3, 12.0), 0.0, 1e-14);
  EXPECT_DOUBLE_EQ(sp::sigma_k(4, 3, 5.1), sp::sigma1(4, 1.7));
}

TEST(Sigma1ViaOde, AgreesWithClosedForm) {
  EXPECT_NEAR(sp::sigma1_via_ode(2, 3.0636225550), 0.0, 1e-6);
  EXPECT_NEAR(sp::sigma1_via_ode(1, 4.0), 0.0, 1e-8);
  EXPECT_NEAR(sp::sigma1_via_ode(3, 1.0), sp::sigma1(3, 1.0), 1e-6);
  for (int n : {2, 4, 6})
    for (double T : {0.5, 2.0, 8.0}) EXPECT_NEAR(sp::sigma1_via_ode(n, T), sp::sigma1(n, T), 1e-6) << n << " " << T;
}

TEST(Lambda1ViaShooting, MatchesZeros) {
  EXPECT_NEAR(sp::lambda1_via_shooting(2), 5.7831859629, 1e-6);
  EXPECT_NEAR(sp::lambda1_via_shooting(3), kPi * kPi, 1e-8);
  EXPECT_NEAR(sp::lambda1_via_shooting(5), std::pow(bm::cyl_bessel_j_zero(1.5, 1), 2), 1e-6);
  EXPECT_THROW(sp::lambda1_via_shooting(1), std::domain_error);
}
