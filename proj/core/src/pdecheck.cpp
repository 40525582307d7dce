#include "cylbif/pdecheck.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cylbif/analysis.hpp"
#include "cylbif/spectrum.hpp"

namespace cylbif::pdecheck {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxIterations = 2000;

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// Unknowns are rows i = 0..nr-1; row nr carries the Dirichlet condition.
SpMat assemble(const MeridianGrid& g) {
  const int nr = g.nr(), nt = g.nt(), n = g.n();
  const double h = g.h(), k = g.dt();
  const double h2 = h * h, k2 = k * k;
  auto index = [nt](int i, int j) { return i * nt + ((j % nt) + nt) % nt; };

  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(nr) * nt * 9);
  for (int j = 0; j < nt; ++j) {
    const double R = g.R(j), Rp = g.dR(j), Rpp = g.d2R(j);
    const double gr = Rp / R;
    const double gp = Rpp / R - gr * gr;
    for (int i = 0; i < nr; ++i) {
      const int row = index(i, j);
      auto add = [&](int ii, int jj, double value) {
        if (ii < nr) entries.emplace_back(row, index(ii, jj), -value);
      };
      add(i, j - 1, 1.0 / k2);
      add(i, j + 1, 1.0 / k2);
      add(i, j, -2.0 / k2);
      if (i == 0) {
        // Even reflection U_{-1} = U_1; the radial part tends to n U_rr.
        const double a = n / (R * R);
        add(0, j, -2.0 * a / h2);
        add(1, j, 2.0 * a / h2);
        continue;
      }
      const double rho = i * h;
      const double a = 1.0 / (R * R) + rho * rho * gr * gr;  // U_rho rho
      const double b = -2.0 * rho * gr;                       // U_rho t
      const double c = (n - 1) / (rho * R * R) + rho * (gr * gr - gp);  // U_rho
      add(i - 1, j, a / h2 - c / (2.0 * h));
      add(i + 1, j, a / h2 + c / (2.0 * h));
      add(i, j, -2.0 * a / h2);
      const double cross = b / (4.0 * h * k);
      add(i + 1, j + 1, cross);
      add(i + 1, j - 1, -cross);
      add(i - 1, j + 1, -cross);
      add(i - 1, j - 1, cross);
    }
  }
  SpMat A(nr * nt, nr * nt);
  A.setFromTriplets(entries.begin(), entries.end());
  A.makeCompressed();
  return A;
}

}  // namespace

MeridianGrid::MeridianGrid(int n, double T, int nr, int nt, const Profile& R, const Profile& dR, const Profile& d2R)
    : n_(n), T_(T), nr_(nr), nt_(nt) {
  if (n < 1) throw std::domain_error("MeridianGrid: n must be >= 1");
  if (!(T > 0)) throw std::domain_error("MeridianGrid: T must be positive");
  if (nr < 16) throw std::domain_error("MeridianGrid: nr must be >= 16");
  if (nt < 4 || nt % 2 != 0) throw std::domain_error("MeridianGrid: nt must be even and >= 4");
  R_.resize(nt);
  dR_.resize(nt);
  d2R_.resize(nt);
  for (int j = 0; j < nt; ++j) {
    const double t = T * j / nt;
    R_[j] = R(t);
    dR_[j] = dR(t);
    d2R_[j] = d2R(t);
    if (!(R_[j] > 0)) throw std::domain_error("MeridianGrid: R(t) must be positive");
  }
}

MeridianGrid MeridianGrid::cosine(int n, double T, double eps, int k, int nr, int nt) {
  const double w = 2.0 * kPi * k / T;
  return MeridianGrid(
      n, T, nr, nt, [=](double t) { return 1.0 + eps * std::cos(w * t); },
      [=](double t) { return -eps * w * std::sin(w * t); }, [=](double t) { return -eps * w * w * std::cos(w * t); });
}

void normalize(const MeridianGrid& g, EigenPair& pair) {
  const int nr = g.nr(), nt = g.nt(), n = g.n();
  const double h = g.h();
  double norm2 = 0.0;
  double total = 0.0;
  for (int j = 0; j < nt; ++j) {
    const double R = g.R(j);
    for (int i = 0; i < nr; ++i) {
      const double r = i * h * R;
      const double w = (i == 0 ? 0.5 : 1.0) * std::pow(r, n - 1) * R * h * g.dt();
      const double v = pair.at(g, i, j);
      norm2 += w * v * v;
      total += v;
    }
  }
  const double scale = (total < 0 ? -1.0 : 1.0) / std::sqrt(norm2);
  for (double& v : pair.u) v *= scale;
}

EigenPair first_eigenpair(const MeridianGrid& g, double tol) {
  if (!(tol > 0)) throw std::domain_error("first_eigenpair: tol must be positive");
  const int nr = g.nr(), nt = g.nt();
  const SpMat A = assemble(g);
  Eigen::SparseLU<SpMat> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) throw std::runtime_error("first_eigenpair: sparse LU factorisation failed");

  Eigen::VectorXd x(nr * nt);
  for (int i = 0; i < nr; ++i) {
    const double rho = i * g.h();
    x.segment(i * nt, nt).setConstant(1.0 - rho * rho);
  }
  x.normalize();

  double lambda = 0.0;
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    Eigen::VectorXd y = lu.solve(x);
    const double next = x.squaredNorm() / x.dot(y);
    x = y / y.norm();
    const bool done = it > 0 && std::fabs(next - lambda) < tol;
    lambda = next;
    if (done) break;
  }
  if (it == kMaxIterations) throw analysis::ConvergenceError("first_eigenpair: inverse iteration stagnated");
  if (!(lambda > 0)) throw std::runtime_error("first_eigenpair: computed eigenvalue is not positive");

  EigenPair pair{lambda, std::vector<double>(static_cast<std::size_t>(nr + 1) * nt, 0.0), it + 1};
  for (int q = 0; q < nr * nt; ++q) pair.u[q] = x[q];
  normalize(g, pair);
  return pair;
}

NeumannData neumann_data(const MeridianGrid& g, const EigenPair& pair) {
  const int nr = g.nr(), nt = g.nt(), n = g.n();
  const double h = g.h();
  NeumannData out{std::vector<double>(nt), std::vector<double>(nt), 0.0};
  double weight_sum = 0.0;
  double weighted = 0.0;
  for (int j = 0; j < nt; ++j) {
    const double R = g.R(j), Rp = g.dR(j);
    const double stretch = std::sqrt(1.0 + Rp * Rp);
    const double u_rho =
        (3.0 * pair.at(g, nr, j) - 4.0 * pair.at(g, nr - 1, j) + pair.at(g, nr - 2, j)) / (2.0 * h);
    out.t[j] = g.t(j);
    out.value[j] = u_rho * stretch / R;
    const double w = std::pow(R, n - 1) * stretch;
    weight_sum += w;
    weighted += w * out.value[j];
  }
  out.mean = weighted / weight_sum;
  for (double& v : out.value) v -= out.mean;
  return out;
}

std::vector<double> cosine_coefficients(const MeridianGrid& g, const std::vector<double>& f, int m_max) {
  const int nt = g.nt();
  if (static_cast<int>(f.size()) != nt) throw std::invalid_argument("cosine_coefficients: size mismatch");
  std::vector<double> c(m_max + 1, 0.0);
  for (int m = 0; m <= m_max; ++m) {
    double s = 0.0;
    for (int j = 0; j < nt; ++j) s += f[j] * std::cos(2.0 * kPi * m * j / nt);
    c[m] = 2.0 * s / nt;
  }
  return c;
}

LinearizedResponse linearized_response(int n, int k, double T, double eps, int nr, int nt) {
  if (k < 1) throw std::domain_error("linearized_response: k must be >= 1");
  if (!(eps >= 1e-4 && eps <= 1e-2)) throw std::domain_error("linearized_response: eps must lie in [1e-4, 1e-2]");
  if (nt < 16 * k) throw std::domain_error("linearized_response: nt must be >= 16 k");

  const MeridianGrid straight = MeridianGrid::cosine(n, T, 0.0, k, nr, nt);
  const EigenPair base = first_eigenpair(straight);
  const double factor = spectrum::eigen_data(n).phi1_prime_at_1 / neumann_data(straight, base).mean;

  const MeridianGrid wavy = MeridianGrid::cosine(n, T, eps, k, nr, nt);
  const EigenPair pair = first_eigenpair(wavy);
  const NeumannData F = neumann_data(wavy, pair);

  LinearizedResponse out{};
  out.modes = cosine_coefficients(wavy, F.value, nt / 2);
  for (double& c : out.modes) c *= factor / eps;
  out.coefficient = out.modes[k];
  out.normalization = factor;
  out.lambda = pair.lambda;
  out.lambda_straight = base.lambda;
  return out;
}

double linearized_coefficient(int n, int k, double T, double eps, int nr, int nt) {
  return linearized_response(n, k, T, eps, nr, nt).coefficient;
}

}  // namespace cylbif::pdecheck
