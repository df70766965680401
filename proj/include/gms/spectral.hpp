#pragma once

#include <Eigen/Dense>

#include "gms/grid.hpp"

namespace gms {

inline int sh_index(int l, int m) { return l * l + l + m; }
inline int sh_dim(int l_max) { return (l_max + 1) * (l_max + 1); }

// Coefficients over the orthonormal Y_lm basis, l-major with m ascending
// from -l to l: c(sh_index(l,m)).
struct SpectralCoeffs {
  int l_max = 0;
  Eigen::VectorXcd c;

  cplx at(int l, int m) const { return c(sh_index(l, m)); }
};

// Forward transform by quadrature, c_lm = <Y_lm, f>. Exact for band-limited
// f when n_theta >= l_max + 1 and n_phi >= 2*l_max + 1; a grid below that
// raises resolution_error rather than aliasing silently.
SpectralCoeffs sh_analyze(const GridFunction& f, int l_max);

// Inverse transform, f = sum c_lm Y_lm at the nodes.
GridFunction sh_synthesize(const SpectralCoeffs& c, const GridPtr& g);

// d^j/dtheta^j d^q/dphi^q of the band-limited function described by c,
// evaluated exactly at the nodes. theta_order <= 3 (higher orders come from
// the associated Legendre ODE, so no numerical differentiation is involved);
// phi_order adds a factor (i m)^q per mode.
GridFunction sh_synthesize_derivative(const SpectralCoeffs& c, const GridPtr& g,
                                      int theta_order, int phi_order);

// Quadrature inner product <f, g> (conjugate-linear in f).
cplx inner_product(const GridFunction& f, const GridFunction& g);

double norm(const GridFunction& f);

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(cplx s, const GridFunction& a);

}  // namespace gms
