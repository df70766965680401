#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "gms/legendre.hpp"

namespace gms {

using cplx = std::complex<double>;

// Raised when a grid cannot resolve a requested band limit. Aliasing is
// never silent: analysis beyond the supported band is an error.
class resolution_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SphericalGrid;
using GridPtr = std::shared_ptr<const SphericalGrid>;

// Quadrature grid on the unit sphere: Gauss-Legendre nodes in x = cos(theta)
// crossed with a uniform azimuthal grid. The poles are never nodes. The
// theta weights are the Gauss-Legendre weights of the x-substitution (they
// absorb the sin(theta) measure) and sum to 2.
class SphericalGrid {
 public:
  static GridPtr build(int n_theta, int n_phi);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }

  const std::vector<double>& theta() const { return theta_; }
  const std::vector<double>& cos_theta() const { return cos_theta_; }
  const std::vector<double>& sin_theta() const { return sin_theta_; }
  const std::vector<double>& theta_weight() const { return weight_; }
  const std::vector<double>& phi() const { return phi_; }
  double phi_weight() const { return 2.0 * M_PI / n_phi_; }

  // Largest band L for which analysis of a band-L function is exact:
  // products of two band-L harmonics are integrated exactly when
  // L <= n_theta - 1 and 2L + 1 <= n_phi.
  int max_band() const { return max_band_; }

  const LegendreTable& table() const { return *table_; }

 private:
  SphericalGrid() = default;
  int n_theta_ = 0, n_phi_ = 0, max_band_ = 0;
  std::vector<double> theta_, cos_theta_, sin_theta_, weight_, phi_;
  std::unique_ptr<LegendreTable> table_;
};

// Grid resolution for verifying identities up to band l_max with headroom
// for derivative chains and quadratic products.
GridPtr default_grid(int l_max);

// Samples of a function at the grid nodes, values(j,k) = f(theta_j, phi_k).
struct GridFunction {
  GridPtr grid;
  Eigen::MatrixXcd values;
};

GridFunction constant_function(const GridPtr& g, cplx value);

// Y_lm sampled at the nodes (exact table evaluation, no quadrature).
GridFunction basis_function(const GridPtr& g, int l, int m);

// Pointwise evaluation of an arbitrary callable f(theta, phi).
GridFunction sample_function(const GridPtr& g,
                             const std::function<cplx(double, double)>& f);

// sup over nodes of |f|, optionally restricted to theta in [lo, hi].
double sup_abs(const GridFunction& f);
double sup_abs_annulus(const GridFunction& f, double theta_lo, double theta_hi);

}  // namespace gms
