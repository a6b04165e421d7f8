#pragma once

#include <cstddef>

namespace svarkit::kernels {

// The NGML objective spends nearly all its time summing Student-t log
// densities over the residual matrix. That reduces to sum_log1p_sq below,
// which ships as a scalar reference kernel plus an AVX2+FMA variant selected
// at runtime. The lanes are equivalence-tested against each other; everything
// else in the toolkit goes through Eigen and needs no hand-written SIMD.

enum class Lane { scalar, avx2 };

const char* lane_name(Lane lane) noexcept;
bool lane_supported(Lane lane) noexcept;

// Lane used by the dispatching entry points. Defaults to the widest supported
// one; force_lane pins it (throws Error(invalid_argument) if unsupported) and
// reset_lane restores auto-detection.
Lane active_lane() noexcept;
void force_lane(Lane lane);
void reset_lane() noexcept;

// sum_i log1p(a * x[i]^2), the tail term of a t log-likelihood. a > 0, x finite.
double sum_log1p_sq(const double* x, std::size_t n, double a);

// Elementwise out[i] = log1p(a * x[i]^2).
void log1p_sq(const double* x, std::size_t n, double a, double* out);

// Direct entry points for the equivalence tests.
double sum_log1p_sq_scalar(const double* x, std::size_t n, double a);
void log1p_sq_scalar(const double* x, std::size_t n, double a, double* out);
#if defined(__x86_64__)
double sum_log1p_sq_avx2(const double* x, std::size_t n, double a);
void log1p_sq_avx2(const double* x, std::size_t n, double a, double* out);
#endif

}  // namespace svarkit::kernels
