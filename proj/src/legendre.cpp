#include "gms/legendre.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gms {

void legendre_pn(int n, double x, double& pn, double& dpn) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) {
    pn = 1.0;
    dpn = 0.0;
    return;
  }
  for (int l = 2; l <= n; ++l) {
    const double p2 = ((2 * l - 1) * x * p1 - (l - 1) * p0) / l;
    p0 = p1;
    p1 = p2;
  }
  pn = p1;
  dpn = n * (x * p1 - p0) / (x * x - 1.0);
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  rule.x.assign(n, 0.0);
  rule.w.assign(n, 0.0);

  const int half = (n + 1) / 2;
  for (int k = 0; k < half; ++k) {
    // Initial guess for the k-th root counted from x = +1 downwards.
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double pn = 0.0, dpn = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pn(n, x, pn, dpn);
      const double dx = -pn / dpn;
      x += dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_pn(n, x, pn, dpn);
    if (std::abs(pn) >= 1e-14)
      throw std::runtime_error("gauss_legendre: Newton residual " +
                               std::to_string(std::abs(pn)) +
                               " exceeds 1e-14 at node " + std::to_string(k));
    const double w = 2.0 / ((1.0 - x * x) * dpn * dpn);
    rule.x[n - 1 - k] = x;
    rule.w[n - 1 - k] = w;
    rule.x[k] = -x;
    rule.w[k] = w;
  }
  if (n % 2 == 1) rule.x[n / 2] = 0.0;
  return rule;
}

LegendreTable::LegendreTable(int l_max, const std::vector<double>& theta)
    : l_max_(l_max), n_theta_(static_cast<int>(theta.size())) {
  if (l_max < 0) throw std::invalid_argument("LegendreTable: l_max < 0");
  cos_.resize(n_theta_);
  sin_.resize(n_theta_);
  const std::size_t pairs = tri(l_max + 1, 0);  // number of (l, m>=0) pairs
  val_.assign(pairs * n_theta_, 0.0);
  dval_.assign(val_.size(), 0.0);

  for (int j = 0; j < n_theta_; ++j) {
    cos_[j] = std::cos(theta[j]);
    sin_[j] = std::sin(theta[j]);
    if (sin_[j] <= 0.0)
      throw std::invalid_argument("LegendreTable: node at a pole");
  }

  const double inv_sqrt4pi = 1.0 / std::sqrt(4.0 * M_PI);
  for (int j = 0; j < n_theta_; ++j) {
    const double ct = cos_[j];
    const double st = sin_[j];

    // Diagonal seed lambda_mm, then lambda_{m+1,m}, then the l-recurrence.
    val_[at(0, 0, j)] = inv_sqrt4pi;
    for (int m = 1; m <= l_max_; ++m)
      val_[at(m, m, j)] =
          -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * st * val_[at(m - 1, m - 1, j)];
    for (int m = 0; m < l_max_; ++m)
      val_[at(m + 1, m, j)] = std::sqrt(2.0 * m + 3.0) * ct * val_[at(m, m, j)];
    for (int m = 0; m <= l_max_; ++m) {
      for (int l = m + 2; l <= l_max_; ++l) {
        const double a =
            std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
        const double b = std::sqrt(
            ((double(l - 1) * (l - 1)) - double(m) * m) /
            (4.0 * double(l - 1) * (l - 1) - 1.0));
        val_[at(l, m, j)] =
            a * (ct * val_[at(l - 1, m, j)] - b * val_[at(l - 2, m, j)]);
      }
    }

    // d lambda_lm / d theta = (l cos(theta) lambda_lm
    //                          - (2l+1) c_lm lambda_{l-1,m}) / sin(theta),
    // c_lm = sqrt((l^2-m^2)/(4l^2-1)); the l = m case reduces to
    // m cot(theta) lambda_mm which is exact for the sin^m profile.
    for (int m = 0; m <= l_max_; ++m) {
      for (int l = m; l <= l_max_; ++l) {
        double low = 0.0;
        if (l > m) {
          const double c =
              std::sqrt((double(l) * l - double(m) * m) / (4.0 * l * l - 1.0));
          low = (2.0 * l + 1.0) * c * val_[at(l - 1, m, j)];
        }
        dval_[at(l, m, j)] = (l * ct * val_[at(l, m, j)] - low) / st;
      }
    }
  }
}

namespace {
inline double neg_m_sign(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }
}  // namespace

double LegendreTable::lambda(int l, int m, int j) const {
  const int am = m < 0 ? -m : m;
  const double s = m < 0 ? neg_m_sign(am) : 1.0;
  return s * val_[at(l, am, j)];
}

double LegendreTable::dlambda(int l, int m, int j) const {
  const int am = m < 0 ? -m : m;
  const double s = m < 0 ? neg_m_sign(am) : 1.0;
  return s * dval_[at(l, am, j)];
}

double LegendreTable::d2lambda(int l, int m, int j) const {
  const double ct = cos_[j], st = sin_[j];
  const double cot = ct / st;
  const double s2 = 1.0 / (st * st);
  const double lam = lambda(l, m, j);
  const double dlam = dlambda(l, m, j);
  return -cot * dlam - (double(l) * (l + 1) - double(m) * m * s2) * lam;
}

double LegendreTable::d3lambda(int l, int m, int j) const {
  const double ct = cos_[j], st = sin_[j];
  const double cot = ct / st;
  const double s2 = 1.0 / (st * st);
  const double lam = lambda(l, m, j);
  const double dlam = dlambda(l, m, j);
  const double d2 = d2lambda(l, m, j);
  const double lam_term = double(l) * (l + 1) - double(m) * m * s2;
  return s2 * dlam - cot * d2 - lam_term * dlam - 2.0 * double(m) * m * cot * s2 * lam;
}

}  // namespace gms
