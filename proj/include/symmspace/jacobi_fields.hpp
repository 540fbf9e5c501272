#ifndef SYMMSPACE_JACOBI_FIELDS_HPP
#define SYMMSPACE_JACOBI_FIELDS_HPP

#include <cstdint>

#include "symmspace/invariants.hpp"

namespace symmspace {

/// Matrix solution of y'' = op * y with y(0) = 0, y'(0) = I after `steps` RK4
/// steps of size t_end/steps; op constant along the ray because the curvature
/// tensor is parallel.
Eigen::MatrixXd integrate_jacobi(const Eigen::MatrixXd& op, double t_end, int steps);

/// Max relative error, over curvature eigendirections and the RK4 time grid,
/// between the integrated Jacobi amplitude and the closed form
/// sinh(sqrt(lambda) t)/sqrt(lambda).
double jacobi_max_relative_error(const Space& sp, const AlgebraElement& xi, double t_max,
                                 int steps);

}  // namespace symmspace

#endif
