#include "symmspace/spd_model.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "symmspace/errors.hpp"
#include "symmspace/kernels.hpp"
#include "symmspace/linalg.hpp"

namespace symmspace {
namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

/// Far ray point W diag(e^{2 k lambda}) W^T kept in column-scaled square root
/// form W diag(e^{k lambda}).  Distances to it factor through the singular
/// values of y^{-1/2} * scaled_frame, and one-sided Jacobi orthogonalization
/// recovers those with small relative error even when they spread over dozens
/// of decades, so the logs (the only part the metric sees) stay accurate.
struct FarPoint {
  Eigen::MatrixXd scaled_frame;
  double metric_factor = 0.0;  // sqrt(2 n): trace-form norm per unit Frobenius log
};

struct FarDistance {
  double distance = 0.0;
  Eigen::MatrixXd left;       // left singular vectors of y^{-1/2} * scaled_frame
  Eigen::VectorXd log_sigma;  // descending
};

FarDistance relative_position(const FarPoint& far, const Eigen::MatrixXd& y_inv_sqrt) {
  linalg::SvdResult svd = linalg::onesided_jacobi_svd(y_inv_sqrt * far.scaled_frame);
  FarDistance out;
  out.log_sigma = svd.sigma.array().log();
  out.left = std::move(svd.u);
  out.distance = far.metric_factor * out.log_sigma.norm();
  return out;
}

}  // namespace

void require_spd_point(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw NotSpd("point must be a square matrix of size at least 2");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (linalg::symmetry_defect(m) > 1e-12 * scale) {
    throw NotSpd("point matrix is not symmetric");
  }
  const linalg::EighResult eig = linalg::jacobi_eigh(symmetrized(m));
  if (eig.eigenvalues.minCoeff() <= 0.0) {
    throw NotSpd("point matrix has a nonpositive eigenvalue");
  }
  const Eigen::VectorXd logs = eig.eigenvalues.array().log();
  // unit determinant, tested on the log scale so huge condition numbers cannot
  // mask a genuinely wrong determinant
  if (std::abs(logs.sum()) > 1e-10 * std::max(1.0, logs.cwiseAbs().sum())) {
    throw NotSpd("point matrix does not have unit determinant");
  }
}

Eigen::MatrixXd spd_geodesic(const Eigen::MatrixXd& x, const Eigen::MatrixXd& u, double t) {
  require_spd_point(x);
  if (u.rows() != x.rows() || u.cols() != x.cols()) {
    throw DomainError("tangent matrix size does not match the point");
  }
  const double u_scale = std::max(1.0, u.cwiseAbs().maxCoeff());
  if (linalg::symmetry_defect(u) > 1e-10 * u_scale) {
    throw NotSymmetric("tangent matrix is not symmetric");
  }
  const Eigen::MatrixXd x_sqrt = linalg::spd_sqrt(x);
  const Eigen::MatrixXd x_inv_sqrt = linalg::spd_inv_sqrt(x);
  const Eigen::MatrixXd based = symmetrized(x_inv_sqrt * symmetrized(u) * x_inv_sqrt);
  if (std::abs(based.trace()) > 1e-10 * std::max(1.0, based.norm())) {
    throw NotTraceless("tangent matrix does not preserve the determinant");
  }
  // the realization doubles the geodesic parameter: g exp(t xi) acts on the
  // base point as the point g exp(2 t xi) g^T of this chart
  return symmetrized(x_sqrt * linalg::expm((2.0 * t) * based) * x_sqrt);
}

double spd_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  require_spd_point(a);
  require_spd_point(b);
  if (a.rows() != b.rows()) {
    throw NotSpd("points live in different size realizations");
  }
  const Eigen::MatrixXd a_inv_sqrt = linalg::spd_inv_sqrt(a);
  const linalg::EighResult rel = linalg::jacobi_eigh(symmetrized(a_inv_sqrt * b * a_inv_sqrt));
  if (rel.eigenvalues.minCoeff() <= 0.0) {
    throw NotSpd("relative position of the points lost positive definiteness");
  }
  const double n = static_cast<double>(a.rows());
  return std::sqrt(0.5 * n) * rel.eigenvalues.array().log().matrix().norm();
}

Eigen::MatrixXd spd_log(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  require_spd_point(a);
  require_spd_point(b);
  if (a.rows() != b.rows()) {
    throw NotSpd("points live in different size realizations");
  }
  const Eigen::MatrixXd a_sqrt = linalg::spd_sqrt(a);
  const Eigen::MatrixXd a_inv_sqrt = linalg::spd_inv_sqrt(a);
  const Eigen::MatrixXd rel = symmetrized(a_inv_sqrt * b * a_inv_sqrt);
  // halve the chart logarithm to undo the parameter doubling of spd_geodesic
  return symmetrized(0.5 * a_sqrt * linalg::logm_spd(rel) * a_sqrt);
}

BusemannProbe busemann_probe(const Space& sp, const AlgebraElement& direction,
                             const Eigen::MatrixXd& at, double ray_parameter, double step) {
  const LieAlgebra& alg = sp.algebra;
  if (alg.family() != Family::sl) {
    throw UnsupportedFamily(
        "horosphere probes run in the unit determinant matrix chart, which realizes the sl family "
        "only");
  }
  const int n = alg.rep_size();
  if (!(ray_parameter > 0.0)) {
    throw DomainError("ray parameter must be positive");
  }
  require_spd_point(at);
  if (at.rows() != n) {
    throw DomainError("point size does not match the matrix realization");
  }

  require_tangent(sp, direction);
  if (std::abs(alg.norm(direction) - 1.0) > 1e-8) {
    throw DomainError("ray direction must have unit norm");
  }
  const MaximalAbelian& ab = sp.abelian;
  Eigen::VectorXd a_coords(ab.rank);
  Eigen::VectorXd residual = direction.coeffs;
  for (int i = 0; i < ab.rank; ++i) {
    a_coords(i) = alg.inner(direction, ab.basis[i]);
    residual -= a_coords(i) * ab.basis[i].coeffs;
  }
  if (alg.norm(alg.element(residual)) > 1e-8) {
    throw DomainError("ray direction must lie in the maximal abelian subspace");
  }
  for (int idx : sp.roots.positive) {
    const Eigen::VectorXd& alpha = sp.roots.roots[idx].alpha;
    if (alpha.dot(a_coords) < -1e-10 * (1.0 + alpha.norm() * a_coords.norm())) {
      throw ChamberViolation("ray direction must lie in the closed positive chamber");
    }
  }

  const linalg::EighResult at_eig = linalg::jacobi_eigh(symmetrized(at));
  const double base_distance =
      std::sqrt(0.5 * n) * at_eig.eigenvalues.array().log().matrix().norm();
  if (base_distance > 0.25 * ray_parameter) {
    throw DomainError("probe point must stay within a quarter of the ray parameter from the base");
  }
  double h = step;
  if (h == 0.0) {
    h = std::clamp(1e-3 * (1.0 + base_distance), 1e-4, 1e-2);
  } else if (h < 1e-4 || h > 1e-2) {
    throw DomainError("finite difference step must lie in [1e-4, 1e-2]");
  }

  const linalg::EighResult ray_eig = linalg::jacobi_eigh(symmetrized(alg.to_matrix(direction)));
  if (ray_parameter * ray_eig.eigenvalues.cwiseAbs().maxCoeff() > 300.0) {
    throw DomainError("ray parameter exceeds the double precision scaling range");
  }
  FarPoint far;
  far.metric_factor = std::sqrt(2.0 * n);
  far.scaled_frame = ray_eig.eigenvectors;
  for (int j = 0; j < n; ++j) {
    far.scaled_frame.col(j) *= std::exp(ray_parameter * ray_eig.eigenvalues(j));
  }

  const Eigen::VectorXd at_sqrt_eigs = at_eig.eigenvalues.cwiseSqrt();
  const Eigen::MatrixXd x_sqrt = symmetrized(
      at_eig.eigenvectors * at_sqrt_eigs.asDiagonal() * at_eig.eigenvectors.transpose());
  const Eigen::MatrixXd x_inv_sqrt =
      symmetrized(at_eig.eigenvectors * at_sqrt_eigs.cwiseInverse().asDiagonal() *
                  at_eig.eigenvectors.transpose());

  const FarDistance center = relative_position(far, x_inv_sqrt);

  BusemannProbe probe;
  probe.ray_parameter = ray_parameter;
  probe.step = h;
  probe.busemann_value = center.distance - ray_parameter;
  probe.limit_laplacian = alg.inner(direction, sp.roots.root_sum);

  // radial direction at the probe point, conjugated back to the base point
  // where the curvature spectrum is evaluated (the curvature tensor is
  // invariant under the transitive isometries, so only the conjugated
  // direction matters)
  const Eigen::MatrixXd log_rel = symmetrized(
      center.left * (2.0 * center.log_sigma).asDiagonal() * center.left.transpose());
  const Eigen::MatrixXd radial = log_rel / (far.metric_factor * log_rel.norm());
  const CurvatureSpectrum radial_spec = curvature_spectrum(sp, alg.from_matrix(radial));
  // mean curvature of the distance sphere through the probe point: the radial
  // eigenvalue itself (always zero) is excluded, and flat transverse
  // directions contribute the Euclidean 1/radius term via the kernel's limit
  const double sphere_radius = probe.busemann_value + ray_parameter;
  double predicted = 0.0;
  for (int i = 1; i < radial_spec.eigenvalues.size(); ++i) {
    predicted += sqrt_coth(radial_spec.eigenvalues(i), sphere_radius);
  }
  probe.predicted_laplacian = predicted;

  std::vector<Eigen::MatrixXd> frame_mats;
  frame_mats.reserve(static_cast<size_t>(sp.cartan.dim_p));
  for (const AlgebraElement& e : sp.cartan.p_basis) {
    frame_mats.push_back(symmetrized(alg.to_matrix(e)));
  }
  const double f0 = center.distance;
  // sum of second differences along unit speed geodesics through the probe
  // point; geodesics have no acceleration, so the sum converges to the
  // Laplacian of the distance to the far ray point
  const auto laplacian_with_step = [&](double hh) {
    double acc = 0.0;
    for (const Eigen::MatrixXd& fm : frame_mats) {
      const Eigen::MatrixXd flow = linalg::expm((2.0 * hh) * fm);
      const double plus =
          relative_position(far, linalg::spd_inv_sqrt(symmetrized(x_sqrt * flow * x_sqrt)))
              .distance;
      const Eigen::MatrixXd back = linalg::expm((-2.0 * hh) * fm);
      const double minus =
          relative_position(far, linalg::spd_inv_sqrt(symmetrized(x_sqrt * back * x_sqrt)))
              .distance;
      acc += (plus + minus - 2.0 * f0) / (hh * hh);
    }
    return acc;
  };
  const double coarse = laplacian_with_step(h);
  const double fine = laplacian_with_step(0.5 * h);
  const double extrapolated = (4.0 * fine - coarse) / 3.0;
  if (std::abs(coarse - fine) > 1e-3 * std::max(1.0, std::abs(extrapolated))) {
    throw StepTooLarge("finite difference levels disagree; decrease the step");
  }
  probe.fd_laplacian = extrapolated;
  return probe;
}

}  // namespace symmspace
