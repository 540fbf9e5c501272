#ifndef SYMMSPACE_KERNELS_HPP
#define SYMMSPACE_KERNELS_HPP

namespace symmspace {

/// sinh(sqrt(lambda) t) / sqrt(lambda), continued by its limit t at lambda=0;
/// the transverse Jacobi-field amplitude at curvature eigenvalue lambda.
double sinh_ratio(double lambda, double t);

/// log of sinh_ratio, overflow-free for large sqrt(lambda)*t.
double log_sinh_ratio(double lambda, double t);

/// sqrt(lambda) * coth(sqrt(lambda) s), continued by its limit 1/s at
/// lambda=0; the radial mean-curvature kernel of geodesic spheres.
double sqrt_coth(double lambda, double s);

}  // namespace symmspace

#endif
