#include "svarkit/rng.hpp"

#include <cmath>

#include "svarkit/errors.hpp"

namespace svarkit {

double Rng::uniform01_open() {
  double u;
  do {
    u = uniform01();
  } while (u <= 0.0);
  return u;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform01_open();
  double u2 = uniform01();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) fail(errc::invalid_argument, "gamma shape must be positive");
  if (shape < 1.0) {
    // Boost to shape+1 and correct with u^(1/shape).
    double u = uniform01_open();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = uniform01_open();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::student_t(double df) {
  if (!(df > 0.0)) fail(errc::invalid_argument, "student_t df must be positive");
  double z = normal();
  double chi2 = chi_squared(df);
  return z / std::sqrt(chi2 / df);
}

double Rng::student_t_unit_variance(double df) {
  if (!(df > 2.0)) fail(errc::invalid_argument, "unit-variance t requires df > 2");
  return student_t(df) * std::sqrt((df - 2.0) / df);
}

Eigen::MatrixXd Rng::haar_rotation(int k) {
  if (k < 1) fail(errc::invalid_argument, "rotation dimension must be >= 1");
  Eigen::MatrixXd g(k, k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) g(i, j) = normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the QR sign convention so the map is Haar, then force det +1.
  for (int j = 0; j < k; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  if (q.determinant() < 0.0) q.col(k - 1) = -q.col(k - 1);
  return q;
}

}  // namespace svarkit
