#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cylbif::bifurcation {

struct BifurcationPoint {
  double nu;
  int n;
  double T_nu;
  double mu;
  /// Absent for n = 1, where T = 4 comes from the elementary solution.
  std::optional<double> j_nu;
  std::optional<double> rho_nu;
  /// j_{nu-1} + 1/(j_{nu-1}+2) and j_{nu-1} + 1/j_{nu-1}; present for nu >= 1.
  std::optional<double> rho_minus;
  std::optional<double> rho_plus;
  /// Rigorous period bounds; present for nu >= 10.
  std::optional<double> T_lower;
  std::optional<double> T_upper;
};

/// Unique zero of s J_{nu-1}(s) + J_nu(s) on (0, j_nu), nu >= 0.
double rho_nu(double nu);

/// n >= 1. T_nu = 2 pi / sqrt(j_nu^2 - rho_nu^2); exactly 4 for n = 1.
BifurcationPoint t_nu(int n);

/// (lower, upper) period bounds from rho_minus / rho_plus; nu >= 10.
std::pair<double, double> t_bounds(double nu);

/// Leading term sqrt(2) pi nu^{-1/2}.
double asymptotic_tnu(double nu);

/// One point per entry of two_nu (each >= 0), in input order.
std::vector<BifurcationPoint> table(std::span<const int> two_nu);

struct CrReport {
  int n;
  double T;
  std::vector<double> sigma;  ///< sigma_k(T) for k = 1..k_max
  double sigma1_derivative;   ///< central difference, h = 1e-5
  bool kernel_ok;             ///< sigma_1(T) vanishes
  bool nondegenerate_ok;      ///< |sigma_k(T)| > 1e-6 for k >= 2
  bool transversal_ok;        ///< sigma_1'(T) < 0
  std::vector<std::string> failures;
  bool passed() const { return kernel_ok && nondegenerate_ok && transversal_ok; }
};

/// Numerical Crandall-Rabinowitz checklist at T = T_nu. sigma_1(T) counts as
/// zero when |sigma_1| <= 1e-8 max(1, |phi_1'(1)|), since sigma scales with
/// phi_1'(1). k_max >= 2.
CrReport check_cr_hypotheses(int n, int k_max);

struct DomainProfile {
  struct Sample {
    double t;
    double R;
  };
  int n;
  double s;
  double T;
  std::vector<Sample> samples;
};

/// First-order boundary R(t) = 1 + s cos(2 pi t / T_nu) on
/// t = i T / samples_per_period, i = 0..periods * samples_per_period.
/// |s| < 1, periods >= 1, samples_per_period >= 8.
DomainProfile profile(int n, double s, int periods, int samples_per_period);

}  // namespace cylbif::bifurcation
