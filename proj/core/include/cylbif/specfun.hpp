#pragma once

// Real-order Bessel functions of the first kind (J, I), their derivatives,
// and the Gamma function.
//
// Supported range: orders in [-1, 1001], arguments in (0, ~1100] for J and
// (0, ~700] for I (beyond that I overflows a double). Accuracy is ~1e-13
// relative away from zeros of J.

namespace cylbif::specfun {

/// Family parameter nu = (n - 2) / 2 together with the dimension n it came from.
class Order {
 public:
  /// Throws std::domain_error for nu < 0.
  explicit Order(double nu);

  /// n >= 1; n = 1 yields nu = -1/2 (that branch never evaluates Bessel code).
  static Order from_dimension(int n);

  double nu() const { return nu_; }
  /// 2 nu + 2 when nu is a half-integer, otherwise 0.
  int dimension() const { return n_; }

 private:
  Order(double nu, int n) : nu_(nu), n_(n) {}
  double nu_;
  int n_;
};

double gamma(double x);
double log_gamma(double x);

double bessel_j(double order, double s);
double bessel_j(const Order& order, double s);
double bessel_j_prime(double order, double s);

double bessel_i(double order, double s);
double bessel_i(const Order& order, double s);
double bessel_i_prime(double order, double s);

/// I_{order+1}(s) / I_order(s) by continued fraction; order >= 0. Finite for
/// every s > 0, including where I itself overflows.
double bessel_i_ratio(double order, double s);

// Normalised forms Gamma(tau+1) (2/s)^tau J_tau(s) and Gamma(tau+1) (2/s)^tau I_tau(s).
// Both tend to 1 as s -> 0 and stay representable for large orders where
// J_tau and I_tau themselves underflow. Orders must be >= 0.
double bessel_j_scaled(double order, double s);

/// J switches from the ascending series to continued fractions above this
/// argument. The two agree to ~1e-13, so adaptive quadratures should split here.
double bessel_j_series_limit(double order);
double bessel_i_scaled(double order, double s);

}  // namespace cylbif::specfun
