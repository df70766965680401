#pragma once

#include <cstddef>
#include <vector>

namespace gms {

struct GaussLegendreRule {
  std::vector<double> x;  // nodes in (-1,1), ascending, roots of P_n
  std::vector<double> w;  // weights, sum exactly 2 up to rounding
};

// Gauss-Legendre rule with n nodes. Roots of P_n are found by Newton
// iteration on the three-term recurrence; every converged node satisfies
// |P_n(x)| < 1e-14.
GaussLegendreRule gauss_legendre(int n);

// Evaluate (P_n(x), P_n'(x)) by the standard recurrence.
void legendre_pn(int n, double x, double& pn, double& dpn);

// Tables of fully normalised associated Legendre functions on a fixed set of
// colatitudes, including the Condon-Shortley phase. lambda(l,m,j) is the
// theta part of the orthonormal spherical harmonic,
//
//   Y_lm(theta,phi) = lambda_lm(theta) * e^{i m phi},
//
// so that sum over the sphere of |Y_lm|^2 is 1. Negative m follows from
// lambda_{l,-m} = (-1)^m lambda_{l,m}. dlambda is the analytic d/dtheta,
// computed by the stable same-m recurrence, never by finite differences.
class LegendreTable {
 public:
  LegendreTable(int l_max, const std::vector<double>& theta);

  int l_max() const { return l_max_; }
  int n_theta() const { return n_theta_; }

  double lambda(int l, int m, int j) const;
  double dlambda(int l, int m, int j) const;

  // Second and third theta-derivatives from the associated Legendre ODE
  //   lambda'' = -cot(theta) lambda' - (l(l+1) - m^2/sin^2(theta)) lambda.
  double d2lambda(int l, int m, int j) const;
  double d3lambda(int l, int m, int j) const;

 private:
  int l_max_;
  int n_theta_;
  std::vector<double> cos_, sin_;
  std::vector<double> val_;   // [tri(l,m)*n_theta + j], m >= 0
  std::vector<double> dval_;

  static std::size_t tri(int l, int m) {
    return static_cast<std::size_t>(l) * (l + 1) / 2 + m;
  }
  std::size_t at(int l, int m, int j) const {
    return tri(l, m) * n_theta_ + j;
  }
};

}  // namespace gms
