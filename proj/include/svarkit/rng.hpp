#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace svarkit {

// All randomness in the toolkit flows through this wrapper. The engine is
// std::mt19937_64 (bit-fixed by the C++ standard) and every transform below is
// implemented here rather than via std::*_distribution, whose output sequences
// are implementation-defined. Reports and manifests record generator_id().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static const char* generator_id() noexcept { return "mt19937_64"; }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1), never exactly zero (safe under log()).
  double uniform01_open();

  // Box-Muller; computes pairs, caches the second deviate.
  double normal();

  // Marsaglia-Tsang squeeze method, scale 1, any shape > 0.
  double gamma(double shape);

  double chi_squared(double df) { return 2.0 * gamma(df / 2.0); }

  // Standard Student-t with df > 0.
  double student_t(double df);

  // Student-t rescaled to unit variance; requires df > 2.
  double student_t_unit_variance(double df);

  // Haar-distributed rotation (orthogonal, det +1) via QR of a Gaussian draw.
  Eigen::MatrixXd haar_rotation(int k);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace svarkit
