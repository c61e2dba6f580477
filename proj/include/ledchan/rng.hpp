#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ledchan {

/// splitmix64 mixing step. Used to derive independent sub-seeds from a
/// master seed so that every sweep cell / trial gets its own stream.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                                    std::uint64_t c = 0) noexcept {
  std::uint64_t s = mix_seed(master ^ 0x6c62272e07bb0142ULL);
  s = mix_seed(s ^ a);
  s = mix_seed(s ^ b);
  s = mix_seed(s ^ c);
  return s;
}

/// Standard-normal sampler: Box-Muller over std::mt19937_64 uniforms.
/// std::normal_distribution is implementation-defined, so golden series
/// would not reproduce across standard libraries; this pairing is fully
/// specified and gives bit-identical streams everywhere.
class GaussianNoise {
 public:
  explicit GaussianNoise(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    if (u1 <= 0.0) u1 = 0x1p-53;  // log(0) guard
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }

  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ledchan
