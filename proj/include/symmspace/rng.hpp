#ifndef SYMMSPACE_RNG_HPP
#define SYMMSPACE_RNG_HPP

#include <cmath>
#include <cstdint>

namespace symmspace {

/// Counter-based generator built on the SplitMix64 output function.
///
/// A value is a pure function of (seed, stream, counter), so Monte Carlo
/// fan-out can hand every sample its own stream and the result does not
/// depend on how samples are distributed over threads.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) {
    state_ = mix(mix(seed) ^ mix(stream * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1); safe as a log() argument.
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double two_pi = 6.283185307179586476925286766559;
    double r = std::sqrt(-2.0 * std::log(uniform_open()));
    double t = two_pi * uniform();
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace symmspace

#endif
