#include "gms/spectral.hpp"

#include <cmath>
#include <string>

namespace gms {

namespace {

void check_same_grid(const GridFunction& a, const GridFunction& b) {
  if (a.grid.get() != b.grid.get())
    throw std::invalid_argument("grid mismatch between operands");
}

void check_resolution(const GridPtr& g, int l_max) {
  if (g->n_theta() < l_max + 1 || g->n_phi() < 2 * l_max + 1)
    throw resolution_error(
        "grid (" + std::to_string(g->n_theta()) + "," +
        std::to_string(g->n_phi()) + ") cannot resolve band " +
        std::to_string(l_max) + "; need n_theta >= l_max+1 and n_phi >= 2*l_max+1");
}

// Fourier stage of analysis: F(j, m+l_max) = (2*pi/n_phi) sum_k f(j,k) e^{-i m phi_k}.
Eigen::MatrixXcd fourier_modes(const GridFunction& f, int l_max) {
  const auto& g = *f.grid;
  const int n_modes = 2 * l_max + 1;
  Eigen::MatrixXcd E(g.n_phi(), n_modes);
  for (int k = 0; k < g.n_phi(); ++k)
    for (int m = -l_max; m <= l_max; ++m) {
      const double ph = -m * g.phi()[k];
      E(k, m + l_max) = cplx(std::cos(ph), std::sin(ph));
    }
  return f.values * E * f.grid->phi_weight();
}

}  // namespace

SpectralCoeffs sh_analyze(const GridFunction& f, int l_max) {
  check_resolution(f.grid, l_max);
  const auto& g = *f.grid;
  const auto& tab = g.table();

  const Eigen::MatrixXcd F = fourier_modes(f, l_max);

  SpectralCoeffs out;
  out.l_max = l_max;
  out.c = Eigen::VectorXcd::Zero(sh_dim(l_max));
  for (int m = -l_max; m <= l_max; ++m) {
    for (int l = std::abs(m); l <= l_max; ++l) {
      cplx acc = 0.0;
      for (int j = 0; j < g.n_theta(); ++j)
        acc += g.theta_weight()[j] * tab.lambda(l, m, j) * F(j, m + l_max);
      out.c(sh_index(l, m)) = acc;
    }
  }
  return out;
}

GridFunction sh_synthesize(const SpectralCoeffs& c, const GridPtr& g) {
  return sh_synthesize_derivative(c, g, 0, 0);
}

GridFunction sh_synthesize_derivative(const SpectralCoeffs& c, const GridPtr& g,
                                      int theta_order, int phi_order) {
  if (theta_order < 0 || theta_order > 3)
    throw std::invalid_argument("sh_synthesize_derivative: theta_order must be 0..3");
  if (phi_order < 0)
    throw std::invalid_argument("sh_synthesize_derivative: phi_order must be >= 0");
  check_resolution(g, c.l_max);
  const auto& tab = g.table();
  const int L = c.l_max;

  // Legendre stage: G(j, m+L) = sum_l c_lm d^j lambda_lm(theta_j), with the
  // phi derivative applied as the (i m)^q mode factor.
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(g->n_theta(), 2 * L + 1);
  for (int m = -L; m <= L; ++m) {
    cplx mode_factor = 1.0;
    for (int q = 0; q < phi_order; ++q) mode_factor *= cplx(0.0, double(m));
    for (int l = std::abs(m); l <= L; ++l) {
      const cplx w = c.c(sh_index(l, m)) * mode_factor;
      if (w == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < g->n_theta(); ++j) {
        double lam = 0.0;
        switch (theta_order) {
          case 0: lam = tab.lambda(l, m, j); break;
          case 1: lam = tab.dlambda(l, m, j); break;
          case 2: lam = tab.d2lambda(l, m, j); break;
          case 3: lam = tab.d3lambda(l, m, j); break;
        }
        G(j, m + L) += w * lam;
      }
    }
  }

  Eigen::MatrixXcd E(2 * L + 1, g->n_phi());
  for (int m = -L; m <= L; ++m)
    for (int k = 0; k < g->n_phi(); ++k) {
      const double ph = m * g->phi()[k];
      E(m + L, k) = cplx(std::cos(ph), std::sin(ph));
    }

  GridFunction out;
  out.grid = g;
  out.values = G * E;
  return out;
}

cplx inner_product(const GridFunction& f, const GridFunction& g) {
  check_same_grid(f, g);
  const auto& grid = *f.grid;
  cplx acc = 0.0;
  for (int j = 0; j < grid.n_theta(); ++j)
    acc += grid.theta_weight()[j] *
           (f.values.row(j).conjugate().cwiseProduct(g.values.row(j))).sum();
  return acc * grid.phi_weight();
}

double norm(const GridFunction& f) {
  return std::sqrt(std::abs(inner_product(f, f)));
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  check_same_grid(a, b);
  return {a.grid, a.values + b.values};
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  check_same_grid(a, b);
  return {a.grid, a.values - b.values};
}

GridFunction operator*(cplx s, const GridFunction& a) {
  return {a.grid, s * a.values};
}

}  // namespace gms
