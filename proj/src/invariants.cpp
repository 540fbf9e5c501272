#include "symmspace/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symmspace/errors.hpp"
#include "symmspace/linalg.hpp"
#include "symmspace/rng.hpp"

namespace symmspace {

namespace {

constexpr double kZeroClamp = 1e-10;

double clamped_sqrt_sum(const Eigen::VectorXd& eigenvalues) {
  double total = 0.0;
  for (int i = 0; i < eigenvalues.size(); ++i) {
    const double lam = eigenvalues[i];
    if (lam > kZeroClamp) total += std::sqrt(lam);
  }
  return total;
}

double frame_mean_curvature(const Space& sp, const Eigen::VectorXd& frame_coords) {
  return clamped_sqrt_sum(curvature_eigenvalues_frame(sp, frame_coords));
}

}  // namespace

Eigen::VectorXd curvature_eigenvalues_frame(const Space& sp,
                                            const Eigen::VectorXd& frame_coords) {
  const Eigen::MatrixXd p_cols = sp.cartan.p_cols();
  const Eigen::VectorXd coeffs = p_cols * frame_coords;
  const Eigen::MatrixXd ad_op = sp.algebra.ad(AlgebraElement{coeffs});
  Eigen::MatrixXd op =
      p_cols.transpose() * sp.algebra.metric_gram() * (ad_op * (ad_op * p_cols));
  op = 0.5 * (op + op.transpose());
  return linalg::jacobi_eigh(op).eigenvalues;
}

void require_tangent(const Space& sp, const AlgebraElement& x) {
  const Eigen::VectorXd defect = sp.algebra.involution_matrix() * x.coeffs + x.coeffs;
  if (defect.norm() > 1e-8 * (1.0 + x.coeffs.norm()))
    throw NotInTangentSpace("element has a component fixed by the involution");
}

Eigen::MatrixXd curvature_operator(const Space& sp, const AlgebraElement& xi) {
  require_tangent(sp, xi);
  const Eigen::MatrixXd p_cols = sp.cartan.p_cols();
  const Eigen::MatrixXd ad_op = sp.algebra.ad(xi);
  Eigen::MatrixXd op =
      p_cols.transpose() * sp.algebra.metric_gram() * (ad_op * (ad_op * p_cols));
  const double defect = linalg::symmetry_defect(op);
  if (defect > 1e-12 * (1.0 + op.norm()))
    throw Error("curvature operator lost symmetry in frame coordinates");
  return 0.5 * (op + op.transpose());
}

Eigen::MatrixXd squared_adjoint_operator(const Space& sp, const AlgebraElement& xi) {
  require_tangent(sp, xi);
  const Eigen::MatrixXd& frame = sp.cartan.frame_cols;
  const Eigen::MatrixXd ad_op = sp.algebra.ad(xi);
  Eigen::MatrixXd op = sp.cartan.to_frame * (ad_op * (ad_op * frame));
  return 0.5 * (op + op.transpose());
}

CurvatureSpectrum curvature_spectrum(const Space& sp, const AlgebraElement& xi) {
  const double len = sp.algebra.norm(xi);
  if (len <= 1e-12) throw DomainError("curvature spectrum needs a nonzero direction");
  CurvatureSpectrum cs;
  cs.direction = AlgebraElement{xi.coeffs / len};
  const auto eig = linalg::jacobi_eigh(curvature_operator(sp, cs.direction));
  cs.eigenvalues = eig.eigenvalues;
  for (int i = 0; i < cs.eigenvalues.size(); ++i) {
    if (cs.eigenvalues[i] < -kZeroClamp)
      throw Error("curvature operator has a significantly negative eigenvalue");
    if (std::abs(cs.eigenvalues[i]) <= kZeroClamp) {
      cs.eigenvalues[i] = 0.0;
      ++cs.zero_count;
    }
  }
  return cs;
}

double horosphere_mean_curvature(const Space& sp, const AlgebraElement& xi) {
  const double len = sp.algebra.norm(xi);
  if (len <= 1e-14) return 0.0;
  const CurvatureSpectrum cs = curvature_spectrum(sp, xi);
  return len * clamped_sqrt_sum(cs.eigenvalues);
}

double sectional_curvature(const Space& sp, const AlgebraElement& x, const AlgebraElement& y) {
  require_tangent(sp, x);
  require_tangent(sp, y);
  const double xx = sp.algebra.inner(x, x);
  const double yy = sp.algebra.inner(y, y);
  const double xy = sp.algebra.inner(x, y);
  const double area2 = xx * yy - xy * xy;
  if (area2 < 1e-12 * std::max(1.0, xx * yy))
    throw DegeneratePlane("tangent vectors are numerically dependent");
  const AlgebraElement b = sp.algebra.bracket(x, y);
  const double num = sp.algebra.inner(b, b);
  return -num / area2;
}

double max_sectional_curvature(const Space& sp) {
  if (sp.abelian.rank >= 2) return 0.0;
  // rank one: every unit flat direction is equivalent under the isotropy
  // group, so the extreme plane curvatures are -alpha(xi)^2 over the roots
  double min_sq = std::numeric_limits<double>::infinity();
  for (int idx : sp.roots.positive) {
    const double val = sp.roots.roots[idx].alpha[0];
    min_sq = std::min(min_sq, val * val);
  }
  if (!std::isfinite(min_sq)) throw Error("rank-one space with no roots");
  return -min_sq;
}

SpaceInvariants space_invariants(const Space& sp) {
  SpaceInvariants inv;
  inv.dimension = sp.cartan.dim_p;
  inv.rank = sp.abelian.rank;
  inv.root_sum_norm = sp.roots.root_sum_norm;
  inv.isoperimetric = inv.root_sum_norm;
  inv.entropy = inv.root_sum_norm;
  inv.lambda0 = 0.25 * inv.root_sum_norm * inv.root_sum_norm;
  inv.metric_scale = 1.0;
  return inv;
}

SpaceInvariants rescale_invariants(const SpaceInvariants& inv, double factor) {
  if (!(factor > 0.0)) throw NonpositiveScale("metric scale factor must be positive");
  SpaceInvariants out = inv;
  const double root = std::sqrt(factor);
  out.root_sum_norm = inv.root_sum_norm / root;
  out.isoperimetric = inv.isoperimetric / root;
  out.entropy = inv.entropy / root;
  out.lambda0 = inv.lambda0 / factor;
  out.metric_scale = inv.metric_scale * factor;
  return out;
}

SupremumResult mean_curvature_supremum(const Space& sp, long samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("supremum search needs at least one sample");
  const int m = sp.cartan.dim_p;
  CounterRng rng(seed, 7);

  auto random_unit = [&]() {
    Eigen::VectorXd v(m);
    for (;;) {
      for (int i = 0; i < m; ++i) v[i] = rng.normal();
      const double n = v.norm();
      if (n > 1e-6) return Eigen::VectorXd(v / n);
    }
  };

  Eigen::VectorXd best = random_unit();
  double best_val = frame_mean_curvature(sp, best);
  for (long s = 1; s < samples; ++s) {
    const Eigen::VectorXd v = random_unit();
    const double val = frame_mean_curvature(sp, v);
    if (val > best_val) {
      best_val = val;
      best = v;
    }
  }

  // local ascent on the unit sphere: finite-difference gradient projected to
  // the tangent plane, with a shrinking step
  const double fd_step = 1e-5;
  double step = 0.1;
  for (int iter = 0; iter < 50; ++iter) {
    Eigen::VectorXd grad(m);
    for (int i = 0; i < m; ++i) {
      Eigen::VectorXd probe = best;
      probe[i] += fd_step;
      probe.normalize();
      grad[i] = (frame_mean_curvature(sp, probe) - best_val) / fd_step;
    }
    grad -= grad.dot(best) * best;
    if (grad.norm() < 1e-14) break;
    Eigen::VectorXd cand = best + step * grad;
    cand.normalize();
    const double cand_val = frame_mean_curvature(sp, cand);
    if (cand_val > best_val) {
      best_val = cand_val;
      best = cand;
    } else {
      step *= 0.5;
      if (step < 1e-12) break;
    }
  }

  SupremumResult res;
  res.value = best_val;
  res.argmax = AlgebraElement{sp.cartan.p_cols() * best};
  return res;
}

}  // namespace symmspace
