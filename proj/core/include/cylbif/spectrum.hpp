#pragma once

// Spectrum sigma_k(T) of the linearised Dirichlet-to-Neumann operator on the
// straight cylinder B^n x R/TZ, acting on cos(k t) modes.
//
// For n >= 2, with nu = (n-2)/2, j = j_nu, lambda = j^2 and mu = 2 pi / j:
//
//   sigma_1(T) = A ((2nu+1) + xi I_{nu+1}(xi) / I_nu(xi)),   xi  = sqrt((2pi/T)^2 - lambda),  T < mu
//   sigma_1(T) = A (2nu+1),                                                                    T = mu
//   sigma_1(T) = A ((2nu+1) - rho J_{nu+1}(rho) / J_nu(rho)), rho = sqrt(lambda - (2pi/T)^2), T > mu
//
// where A = -phi_1'(1) > 0 and phi_1 is the radial first Dirichlet
// eigenfunction of the unit ball normalised by
// int_0^1 phi_1(r)^2 dr = 1 / (2 pi |S^{n-1}|). For n = 1 the elementary
// tanh / tan forms are used, with lambda = pi^2/4 and T = 4 as the split.
// Higher modes follow from sigma_k(T) = sigma_1(T / k).

namespace cylbif::spectrum {

struct EigenData {
  double nu;
  int n;
  double j_nu;              ///< first zero of J_nu (pi/2 for n = 1)
  double lambda_nu;         ///< j_nu^2, first Dirichlet eigenvalue of the unit ball
  double kappa_n;           ///< normalisation constant; +inf once it leaves double range (n >~ 250)
  double log_kappa_n;
  double phi1_prime_at_1;   ///< < 0; -inf once it leaves double range (n >~ 300)
  double phi1_second_at_1;  ///< -(2nu+1) phi1_prime_at_1
  double mu;                ///< 2 pi / j_nu, the branch split period
};

/// Cached per n; safe to call concurrently.
const EigenData& eigen_data(int n);

/// Throws std::domain_error for T <= 0 and std::range_error where the n = 1
/// tangent branch would approach its pole.
double sigma1(const EigenData& data, double T);
double sigma1(int n, double T);
double sigma_k(int n, int k, double T);

/// Independent oracle: integrates the radial ODE for c with a regular start at
/// r = 1e-4, rescales to c(1) = -phi_1'(1) and returns c'(1) + phi_1''(1).
/// Uses no Bessel function evaluations in the ODE path.
double sigma1_via_ode(int n, double T, int steps = 100000);

/// First Dirichlet eigenvalue of the unit ball in R^n (n >= 2) by shooting on
/// phi'' + (n-1)/r phi' + lambda phi = 0 and bisecting phi(1) = 0 in lambda.
double lambda1_via_shooting(int n, double tol = 1e-10);

}  // namespace cylbif::spectrum
