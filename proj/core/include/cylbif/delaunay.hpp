#pragma once

#include <vector>

namespace cylbif::delaunay {

/// Eigenvalue 1/2 (j^2 - 1 + (2 pi k / T)^2) of the Jacobi operator of the
/// unit-mean-curvature cylinder on the mode cos(j theta) cos(2 pi k t / T).
double jacobi_sigma(int j, int k, double T);

/// Generating curve (y(t), z(t)) of the Delaunay surface with parameter sigma:
///   y'^2 = y^2 - ((y^2 + sigma)/2)^2,   z' = (y^2 + sigma)/2.
struct DelaunayProfile {
  struct Sample {
    double t;
    double y;
    double z;
    double dy;  ///< y'(t) from the first-order equation
    double dz;  ///< z'(t)
  };
  double sigma;
  double y_min;
  double y_max;
  double period;
  std::vector<Sample> samples;  ///< t uniform on [0, period], y(0) = y_min, z(0) = 0
};

/// 0 < sigma <= 1, samples >= 3. Throws std::domain_error otherwise.
DelaunayProfile delaunay_profile(double sigma, int samples);

/// max |H - 1| over interior samples, with H the sum of principal curvatures
/// from fundamental forms assembled out of central differences of (y, z).
double mean_curvature_check(const DelaunayProfile& profile);

}  // namespace cylbif::delaunay
