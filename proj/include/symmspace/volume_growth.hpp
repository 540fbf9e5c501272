#ifndef SYMMSPACE_VOLUME_GROWTH_HPP
#define SYMMSPACE_VOLUME_GROWTH_HPP

#include <cstdint>
#include <vector>

#include "symmspace/invariants.hpp"

namespace symmspace {

struct VolumeEstimate {
  double log_volume = 0.0;
  double std_error = 0.0;
  long samples = 0;
  bool insufficient = false;
};

struct VolumeGrowthCurve {
  std::vector<double> radii;
  std::vector<double> log_volumes;
  long samples = 0;
  std::uint64_t seed = 0;
  double entropy = 0.0;
  double half_width = 0.0;
  bool insufficient = false;
};

/// Monte Carlo estimate of the log volume of the geodesic ball of the given
/// radius: uniform directions on the unit tangent sphere, Gauss-Legendre
/// integration of the Jacobian product in the radial variable, all
/// accumulation in log space. The per-sample generator stream depends only on
/// the sample index, so results are independent of the thread count.
VolumeEstimate ball_volume(const Space& sp, double radius, long samples, std::uint64_t seed,
                           int threads = 1);

/// Log volumes on a five-point radius grid from one shared direction sample,
/// with the growth rate read off the endpoint slope and an error bar from
/// eight batch replicates.
VolumeGrowthCurve entropy_curve(const Space& sp, double r1, double r2, long samples,
                                std::uint64_t seed, int threads = 1);

}  // namespace symmspace

#endif
