#include "gms/grid.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace gms {

GridPtr SphericalGrid::build(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1)
    throw std::invalid_argument("SphericalGrid: node counts must be >= 1");

  auto g = std::shared_ptr<SphericalGrid>(new SphericalGrid());
  g->n_theta_ = n_theta;
  g->n_phi_ = n_phi;

  const GaussLegendreRule rule = gauss_legendre(n_theta);
  g->theta_.resize(n_theta);
  g->cos_theta_.resize(n_theta);
  g->sin_theta_.resize(n_theta);
  g->weight_.resize(n_theta);
  // Ascending theta = descending x.
  for (int j = 0; j < n_theta; ++j) {
    const double x = rule.x[n_theta - 1 - j];
    g->theta_[j] = std::acos(x);
    g->cos_theta_[j] = x;
    g->sin_theta_[j] = std::sqrt(1.0 - x * x);
    g->weight_[j] = rule.w[n_theta - 1 - j];
  }

  g->phi_.resize(n_phi);
  for (int k = 0; k < n_phi; ++k) g->phi_[k] = 2.0 * M_PI * k / n_phi;

  g->max_band_ = std::min(n_theta - 1, (n_phi - 1) / 2);
  g->table_ = std::make_unique<LegendreTable>(g->max_band_, g->theta_);
  return g;
}

GridPtr default_grid(int l_max) {
  return SphericalGrid::build(l_max + 10, 2 * l_max + 21);
}

GridFunction constant_function(const GridPtr& g, cplx value) {
  GridFunction f;
  f.grid = g;
  f.values = Eigen::MatrixXcd::Constant(g->n_theta(), g->n_phi(), value);
  return f;
}

GridFunction basis_function(const GridPtr& g, int l, int m) {
  if (l < 0 || std::abs(m) > l)
    throw std::invalid_argument("basis_function: need l >= 0 and |m| <= l");
  if (l > g->max_band())
    throw resolution_error("basis_function: band " + std::to_string(l) +
                           " exceeds grid capability " +
                           std::to_string(g->max_band()));
  GridFunction f;
  f.grid = g;
  f.values.resize(g->n_theta(), g->n_phi());
  for (int j = 0; j < g->n_theta(); ++j) {
    const double lam = g->table().lambda(l, m, j);
    for (int k = 0; k < g->n_phi(); ++k) {
      const double ph = m * g->phi()[k];
      f.values(j, k) = lam * cplx(std::cos(ph), std::sin(ph));
    }
  }
  return f;
}

GridFunction sample_function(const GridPtr& g,
                             const std::function<cplx(double, double)>& f) {
  GridFunction out;
  out.grid = g;
  out.values.resize(g->n_theta(), g->n_phi());
  for (int j = 0; j < g->n_theta(); ++j)
    for (int k = 0; k < g->n_phi(); ++k)
      out.values(j, k) = f(g->theta()[j], g->phi()[k]);
  return out;
}

double sup_abs(const GridFunction& f) {
  return f.values.cwiseAbs().maxCoeff();
}

double sup_abs_annulus(const GridFunction& f, double lo, double hi) {
  double best = 0.0;
  const auto& th = f.grid->theta();
  for (int j = 0; j < f.grid->n_theta(); ++j) {
    if (th[j] < lo || th[j] > hi) continue;
    best = std::max(best, f.values.row(j).cwiseAbs().maxCoeff());
  }
  return best;
}

}  // namespace gms
