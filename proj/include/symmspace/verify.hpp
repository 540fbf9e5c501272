#ifndef SYMMSPACE_VERIFY_HPP
#define SYMMSPACE_VERIFY_HPP

#include <cstdint>

#include "symmspace/report.hpp"
#include "symmspace/root_system.hpp"

namespace symmspace {

/// Knobs shared by the verification suites.  tol_override <= 0 keeps each
/// check's own default; a positive value replaces the default relative
/// tolerance of every two-sided comparison (one-sided structural slacks are
/// not affected).
struct VerifyOptions {
  std::uint64_t seed = 42;
  long samples = 100000;
  double r1 = 10.0;
  double r2 = 20.0;
  double tol_override = 0.0;
  int threads = 1;
};

/// Algebra, involution, root-space and chamber structure: bracket identities,
/// definiteness of the trace form, root pairing and multiplicities, grading,
/// dimension bookkeeping, and invariance of the weighted root sum norm.
VerificationReport verify_roots(const Space& sp, const VerifyOptions& opts);

/// Curvature spectra against root data, the half-trace identity, linearity of
/// the horosphere mean curvature on the closed chamber, sign and pinching
/// properties of sectional curvature, and scaling laws.
VerificationReport verify_curvature(const Space& sp, const VerifyOptions& opts);

/// Runge-Kutta integration of the constant-coefficient Jacobi system against
/// the closed-form amplitudes.
VerificationReport verify_jacobi(const Space& sp, const VerifyOptions& opts);

/// Monte Carlo volume growth against the weighted root sum norm.
VerificationReport verify_entropy(const Space& sp, const VerifyOptions& opts);

/// Finite-difference horosphere Laplacians in the matrix chart (sl family
/// only; throws UnsupportedFamily otherwise).
VerificationReport verify_busemann(const Space& sp, const VerifyOptions& opts);

/// The spectral sandwich between the isoperimetric constant and the growth
/// rate.
VerificationReport verify_cheeger(const Space& sp, const VerifyOptions& opts);

/// Random-restart supremum of the horosphere mean curvature over unit
/// directions against the weighted root sum norm.
VerificationReport verify_sup(const Space& sp, const VerifyOptions& opts);

/// Concatenation of every suite above; the horosphere chart suite is included
/// only for the sl family.
VerificationReport verify_all(const Space& sp, const VerifyOptions& opts);

}  // namespace symmspace

#endif
