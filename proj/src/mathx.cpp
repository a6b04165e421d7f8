#include "svarkit/mathx.hpp"

#include <cmath>

#include "svarkit/errors.hpp"

namespace svarkit {

double digamma(double x) {
  if (!(x > 0.0)) fail(errc::invalid_argument, "digamma defined here for x > 0 only");
  double result = 0.0;
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv -
            inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
  return result;
}

double log_t_density(double x, double nu, double sigma) {
  double z = x / sigma;
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) - 0.5 * std::log(nu * M_PI) -
         std::log(sigma) - 0.5 * (nu + 1.0) * std::log1p(z * z / nu);
}

double unit_variance_t_scale(double nu) {
  if (!(nu > 2.0)) fail(errc::invalid_argument, "unit-variance t scale requires nu > 2");
  return std::sqrt((nu - 2.0) / nu);
}

}  // namespace svarkit
