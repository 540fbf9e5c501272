#include "symmspace/volume_growth.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "symmspace/errors.hpp"
#include "symmspace/kernels.hpp"
#include "symmspace/linalg.hpp"
#include "symmspace/rng.hpp"

namespace symmspace {

namespace {

constexpr std::uint64_t kSampleStreamBase = 1ull << 32;
constexpr int kQuadratureNodes = 64;
constexpr int kBatches = 8;

/// log of the surface area of the unit sphere in m dimensions.
double log_sphere_area(int m) {
  return std::log(2.0) + 0.5 * m * std::log(M_PI) - std::lgamma(0.5 * m);
}

/// out(j, g) = log of the radial integral of the Jacobian product for sample
/// j and radius g. One curvature eigensolve per sample, shared by all radii;
/// the smallest eigenvalue (the radial zero) is dropped.
void sample_log_integrals(const Space& sp, const std::vector<double>& radii, long samples,
                          std::uint64_t seed, int threads, Eigen::MatrixXd& out) {
  const int m = sp.cartan.dim_p;
  const int nr = static_cast<int>(radii.size());
  out.resize(samples, nr);

  std::vector<linalg::Quadrature> quads;
  for (double r : radii) quads.push_back(linalg::gauss_legendre(kQuadratureNodes, 0.0, r));
  std::vector<Eigen::VectorXd> log_weights(nr);
  for (int g = 0; g < nr; ++g) log_weights[g] = quads[g].weights.array().log().matrix();

  auto worker = [&](long begin, long end) {
    Eigen::VectorXd direction(m);
    Eigen::VectorXd terms(kQuadratureNodes);
    for (long j = begin; j < end; ++j) {
      CounterRng rng(seed, kSampleStreamBase + static_cast<std::uint64_t>(j));
      for (;;) {
        for (int i = 0; i < m; ++i) direction[i] = rng.normal();
        const double n = direction.norm();
        if (n > 1e-6) {
          direction /= n;
          break;
        }
      }
      Eigen::VectorXd lambdas = curvature_eigenvalues_frame(sp, direction);
      for (int i = 0; i < lambdas.size(); ++i)
        if (std::abs(lambdas[i]) <= 1e-10) lambdas[i] = 0.0;
      for (int g = 0; g < nr; ++g) {
        for (int q = 0; q < kQuadratureNodes; ++q) {
          double lf = log_weights[g][q];
          const double t = quads[g].nodes[q];
          for (int i = 1; i < m; ++i) lf += log_sinh_ratio(lambdas[i], t);
          terms[q] = lf;
        }
        out(j, g) = linalg::log_sum_exp(terms);
      }
    }
  };

  if (threads <= 1) {
    worker(0, samples);
    return;
  }
  const long chunk = (samples + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    const long begin = t * chunk;
    const long end = std::min(samples, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(worker, begin, end);
  }
  for (auto& th : pool) th.join();
}

/// Mean over a sample column in log space plus the sphere-measure constant.
double column_log_volume(const Space& sp, const Eigen::MatrixXd& table, int col, long begin,
                         long end) {
  Eigen::VectorXd slice = table.col(col).segment(begin, end - begin);
  return log_sphere_area(sp.cartan.dim_p) + linalg::log_mean_exp(slice);
}

double batch_std_error(const std::vector<double>& batch_values, double center) {
  double ss = 0.0;
  for (double v : batch_values) ss += (v - center) * (v - center);
  const int b = static_cast<int>(batch_values.size());
  return std::sqrt(ss / (b - 1)) / std::sqrt(static_cast<double>(b));
}

}  // namespace

VolumeEstimate ball_volume(const Space& sp, double radius, long samples, std::uint64_t seed,
                           int threads) {
  if (!(radius > 0.0)) throw DomainError("ball radius must be positive");
  if (samples < 1000) throw DomainError("need at least 1000 samples");

  Eigen::MatrixXd table;
  sample_log_integrals(sp, {radius}, samples, seed, threads, table);

  VolumeEstimate est;
  est.samples = samples;
  est.log_volume = column_log_volume(sp, table, 0, 0, samples);

  const long per = samples / kBatches;
  std::vector<double> batch_means;
  for (int b = 0; b < kBatches; ++b)
    batch_means.push_back(column_log_volume(sp, table, 0, b * per, (b + 1) * per));
  double mean = 0.0;
  for (double v : batch_means) mean += v;
  mean /= kBatches;
  est.std_error = batch_std_error(batch_means, mean);
  est.insufficient = est.std_error > 0.5;
  return est;
}

VolumeGrowthCurve entropy_curve(const Space& sp, double r1, double r2, long samples,
                                std::uint64_t seed, int threads) {
  if (!(r1 >= 5.0) || !(r2 > r1)) throw DomainError("need 5 <= r1 < r2");
  if (samples < 1000) throw DomainError("need at least 1000 samples");

  VolumeGrowthCurve curve;
  curve.samples = samples;
  curve.seed = seed;
  const int nr = 5;
  for (int g = 0; g < nr; ++g) curve.radii.push_back(r1 + g * (r2 - r1) / (nr - 1));

  Eigen::MatrixXd table;
  sample_log_integrals(sp, curve.radii, samples, seed, threads, table);
  for (int g = 0; g < nr; ++g)
    curve.log_volumes.push_back(column_log_volume(sp, table, g, 0, samples));

  // growth rate from the endpoint slope; a regression would only shift the
  // subexponential correction terms around
  curve.entropy = (curve.log_volumes[nr - 1] - curve.log_volumes[0]) / (r2 - r1);

  const long per = samples / kBatches;
  std::vector<double> batch_slopes;
  std::vector<double> end_means;
  for (int b = 0; b < kBatches; ++b) {
    const double lo = column_log_volume(sp, table, 0, b * per, (b + 1) * per);
    const double hi = column_log_volume(sp, table, nr - 1, b * per, (b + 1) * per);
    batch_slopes.push_back((hi - lo) / (r2 - r1));
    end_means.push_back(hi);
  }
  double slope_mean = 0.0;
  for (double v : batch_slopes) slope_mean += v;
  slope_mean /= kBatches;
  curve.half_width = batch_std_error(batch_slopes, slope_mean);

  double end_mean = 0.0;
  for (double v : end_means) end_mean += v;
  end_mean /= kBatches;
  curve.insufficient = batch_std_error(end_means, end_mean) > 0.5;
  return curve;
}

}  // namespace symmspace
