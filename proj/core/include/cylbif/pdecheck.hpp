#pragma once

#include <functional>
#include <vector>

// Axisymmetric first Dirichlet eigenpair on the wavy cylinder
// { (x, t) : |x| < R(t) } in R^n x R/TZ, discretised on the rectangle
// (rho, t) in [0, 1] x [0, T) through r = rho R(t), and the mean-free Neumann
// data that defines the Dirichlet-to-Neumann map.

namespace cylbif::pdecheck {

class MeridianGrid {
 public:
  using Profile = std::function<double(double)>;

  /// R, R', R'' as functions of t. nr >= 16 radial intervals, nt >= 4 even.
  MeridianGrid(int n, double T, int nr, int nt, const Profile& R, const Profile& dR, const Profile& d2R);

  /// R(t) = 1 + eps cos(2 pi k t / T).
  static MeridianGrid cosine(int n, double T, double eps, int k, int nr, int nt);

  int n() const { return n_; }
  double T() const { return T_; }
  int nr() const { return nr_; }
  int nt() const { return nt_; }
  double h() const { return 1.0 / nr_; }
  double dt() const { return T_ / nt_; }
  double t(int j) const { return dt() * j; }
  double R(int j) const { return R_[j]; }
  double dR(int j) const { return dR_[j]; }
  double d2R(int j) const { return d2R_[j]; }

 private:
  int n_;
  double T_;
  int nr_;
  int nt_;
  std::vector<double> R_, dR_, d2R_;
};

struct EigenPair {
  double lambda;
  /// (nr + 1) x nt values, u[i * nt + j] at rho = i h, t = j dt; row nr is 0.
  std::vector<double> u;
  int iterations;

  double at(const MeridianGrid& g, int i, int j) const { return u[static_cast<std::size_t>(i) * g.nt() + j]; }
};

/// Inverse power iteration on the second-order discretisation of
/// -(d_rr + (n-1)/r d_r + d_tt), sparse LU factorised once. Stops when the
/// eigenvalue estimate changes by less than tol. Throws analysis::ConvergenceError
/// on stagnation and std::runtime_error on a negative eigenvalue.
EigenPair first_eigenpair(const MeridianGrid& grid, double tol = 1e-12);

/// Rescales u to unit discrete L2 norm with weight r^{n-1} dr dt and makes it positive.
void normalize(const MeridianGrid& grid, EigenPair& pair);

struct NeumannData {
  std::vector<double> t;
  std::vector<double> value;  ///< outward normal derivative minus its boundary mean
  double mean;                ///< the subtracted mean, weighted by R^{n-1} sqrt(1 + R'^2)
};

NeumannData neumann_data(const MeridianGrid& grid, const EigenPair& pair);

/// Cosine coefficients (2/T) int f cos(2 pi m t / T) dt, m = 0..m_max, by the
/// periodic trapezoidal rule.
std::vector<double> cosine_coefficients(const MeridianGrid& grid, const std::vector<double>& f, int m_max);

struct LinearizedResponse {
  double coefficient;         ///< mode-k coefficient of F(v, T) / eps
  std::vector<double> modes;  ///< all modes 0..nt/2 of F(v, T) / eps
  /// Factor taking the unit-L2 eigenfunction to the closed-form normalisation,
  /// fixed by matching the v = 0 boundary derivative to phi_1'(1).
  double normalization;
  double lambda;              ///< discrete eigenvalue of the perturbed domain
  double lambda_straight;     ///< discrete eigenvalue for v = 0
};

/// F(v, T) / eps for v(tau) = eps cos(k tau), in the normalisation of
/// spectrum::sigma_k. eps in [1e-4, 1e-2], nt >= 16 k.
LinearizedResponse linearized_response(int n, int k, double T, double eps, int nr, int nt);
double linearized_coefficient(int n, int k, double T, double eps, int nr, int nt);

}  // namespace cylbif::pdecheck
