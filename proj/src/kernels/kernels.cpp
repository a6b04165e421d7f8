#include "svarkit/kernels.hpp"

#include <atomic>

#include "svarkit/errors.hpp"

namespace svarkit::kernels {

namespace {

Lane detect_lane() noexcept {
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Lane::avx2;
#endif
  return Lane::scalar;
}

std::atomic<Lane> g_lane{detect_lane()};

}  // namespace

const char* lane_name(Lane lane) noexcept {
  switch (lane) {
    case Lane::scalar: return "scalar";
    case Lane::avx2: return "avx2";
  }
  return "?";
}

bool lane_supported(Lane lane) noexcept {
  return lane == Lane::scalar || detect_lane() == lane;
}

Lane active_lane() noexcept { return g_lane.load(std::memory_order_relaxed); }

void force_lane(Lane lane) {
  if (!lane_supported(lane)) {
    fail(errc::invalid_argument, std::string("kernel lane not supported on this CPU: ") + lane_name(lane));
  }
  g_lane.store(lane, std::memory_order_relaxed);
}

void reset_lane() noexcept { g_lane.store(detect_lane(), std::memory_order_relaxed); }

double sum_log1p_sq(const double* x, std::size_t n, double a) {
#if defined(__x86_64__)
  if (active_lane() == Lane::avx2) return sum_log1p_sq_avx2(x, n, a);
#endif
  return sum_log1p_sq_scalar(x, n, a);
}

void log1p_sq(const double* x, std::size_t n, double a, double* out) {
#if defined(__x86_64__)
  if (active_lane() == Lane::avx2) {
    log1p_sq_avx2(x, n, a, out);
    return;
  }
#endif
  log1p_sq_scalar(x, n, a, out);
}

}  // namespace svarkit::kernels
