#ifndef SYMMSPACE_SPD_MODEL_HPP
#define SYMMSPACE_SPD_MODEL_HPP

#include "symmspace/invariants.hpp"

namespace symmspace {

/// Concrete model for the sl family: points are unit-determinant symmetric
/// positive definite matrices, the base point is the identity, and a tangent
/// direction u at the base point reaches the point exp(2t*u) at distance
/// t*|u|. The factor two comes from representing the point g.o as g g^T, which
/// doubles the matrix logarithm relative to the geodesic parameter.

/// Throws NotSpd / DomainError unless m is symmetric positive definite with
/// unit determinant.
void require_spd_point(const Eigen::MatrixXd& m);

/// Geodesic through x with tangent u (symmetric, traceless against x) after
/// time t: x^{1/2} exp(2t x^{-1/2} u x^{-1/2}) x^{1/2}.
Eigen::MatrixXd spd_geodesic(const Eigen::MatrixXd& x, const Eigen::MatrixXd& u, double t);

/// Distance sqrt(n/2) * ||log(a^{-1/2} b a^{-1/2})||_F for n x n arguments,
/// the metric induced by the trace form of the defining representation.
double spd_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Tangent vector at a whose unit geodesic reaches b at time d(a,b):
/// (1/2) a^{1/2} log(a^{-1/2} b a^{-1/2}) a^{1/2}.
Eigen::MatrixXd spd_log(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// One finite-distance horosphere measurement: the normalized distance
/// function toward a far point on the ray through `direction`, probed at `at`
/// by central second differences over an orthonormal geodesic frame, compared
/// against the closed-form prediction from the radial curvature spectrum and
/// the infinite-distance limit.
struct BusemannProbe {
  double busemann_value = 0.0;
  double fd_laplacian = 0.0;
  double predicted_laplacian = 0.0;
  double limit_laplacian = 0.0;
  double step = 0.0;
  double ray_parameter = 0.0;
};

/// direction: unit element of the closed positive chamber; at: SPD point with
/// d(base, at) <= ray_parameter / 4; step in [1e-4, 1e-2] (0 picks
/// 1e-3 * (1 + d(base, at))). Distances to the far ray point go through a
/// column-scaled factorization and a one-sided Jacobi SVD, which keeps all
/// singular values accurate in relative terms despite the huge spread.
BusemannProbe busemann_probe(const Space& sp, const AlgebraElement& direction,
                             const Eigen::MatrixXd& at, double ray_parameter, double step = 0.0);

}  // namespace symmspace

#endif
