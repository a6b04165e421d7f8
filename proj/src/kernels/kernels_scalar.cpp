#include <cmath>

#include "svarkit/kernels.hpp"

namespace svarkit::kernels {

double sum_log1p_sq_scalar(const double* x, std::size_t n, double a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::log1p(a * x[i] * x[i]);
  }
  return acc;
}

void log1p_sq_scalar(const double* x, std::size_t n, double a, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::log1p(a * x[i] * x[i]);
  }
}

}  // namespace svarkit::kernels
