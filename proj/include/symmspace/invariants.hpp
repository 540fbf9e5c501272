#ifndef SYMMSPACE_INVARIANTS_HPP
#define SYMMSPACE_INVARIANTS_HPP

#include <cstdint>

#include "symmspace/root_system.hpp"

namespace symmspace {

/// Spectrum of the curvature operator along a unit direction: sorted ascending,
/// eigenvalues within 1e-10 of zero clamped to exactly zero.
struct CurvatureSpectrum {
  AlgebraElement direction;
  Eigen::VectorXd eigenvalues;
  int zero_count = 0;
};

/// Headline numbers of one space at a given metric scale (1 = the scale
/// induced by the trace form of the adjoint representation).
struct SpaceInvariants {
  int dimension = 0;
  int rank = 0;
  double root_sum_norm = 0.0;
  double isoperimetric = 0.0;
  double entropy = 0.0;
  double lambda0 = 0.0;
  double metric_scale = 1.0;
};

struct SupremumResult {
  double value = 0.0;
  AlgebraElement argmax;
};

/// Throws NotInTangentSpace unless the involution negates x (tolerance
/// relative to |x|).
void require_tangent(const Space& sp, const AlgebraElement& x);

/// Matrix of the squared adjoint of xi restricted to the tangent part, in the
/// orthonormal tangent frame; symmetric positive semidefinite. This is the
/// operator whose eigenvalues drive Jacobi fields along the ray through xi.
Eigen::MatrixXd curvature_operator(const Space& sp, const AlgebraElement& xi);

/// Same operator on the whole algebra frame (used by the half-trace identity
/// between the tangent restriction and the full operator).
Eigen::MatrixXd squared_adjoint_operator(const Space& sp, const AlgebraElement& xi);

/// Eigenvalues of curvature_operator along xi normalized to unit length.
CurvatureSpectrum curvature_spectrum(const Space& sp, const AlgebraElement& xi);

/// Ascending curvature eigenvalues for a direction given directly in tangent
/// frame coordinates, skipping validation; hot path for sampling loops.
Eigen::VectorXd curvature_eigenvalues_frame(const Space& sp, const Eigen::VectorXd& frame_coords);

/// Sum of square roots of the curvature eigenvalues, extended 1-homogeneously
/// to non-unit xi; equals the trace of the second fundamental form of the
/// horosphere orthogonal to xi.
double horosphere_mean_curvature(const Space& sp, const AlgebraElement& xi);

/// Sectional curvature of the plane spanned by two tangent vectors.
double sectional_curvature(const Space& sp, const AlgebraElement& x, const AlgebraElement& y);

/// Largest sectional curvature: 0 for rank >= 2 (flat planes exist), and the
/// closed-form -min alpha(xi)^2 over unit flat directions for rank one.
double max_sectional_curvature(const Space& sp);

/// Fills the record from the root data: isoperimetric constant = entropy =
/// |root sum|, bottom of spectrum = |root sum|^2 / 4.
SpaceInvariants space_invariants(const Space& sp);

/// Invariants after scaling the metric by factor: distances scale by
/// sqrt(factor), curvature by 1/factor.
SpaceInvariants rescale_invariants(const SpaceInvariants& inv, double factor);

/// Best value of horosphere_mean_curvature over random unit tangent
/// directions, refined by projected gradient ascent on the sphere.
SupremumResult mean_curvature_supremum(const Space& sp, long samples, std::uint64_t seed);

}  // namespace symmspace

#endif
