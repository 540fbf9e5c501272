#include "symmspace/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "symmspace/errors.hpp"
#include "symmspace/invariants.hpp"
#include "symmspace/jacobi_fields.hpp"
#include "symmspace/kernels.hpp"
#include "symmspace/linalg.hpp"
#include "symmspace/rng.hpp"
#include "symmspace/spd_model.hpp"
#include "symmspace/volume_growth.hpp"

namespace symmspace {
namespace {

// generator stream labels; construction-time draws use 1..101 and the volume
// sampler hands out streams from 2^32, so the suites stay clear of both
constexpr std::uint64_t kPairStream = 201;
constexpr std::uint64_t kSpectrumStream = 211;
constexpr std::uint64_t kPlaneStream = 212;
constexpr std::uint64_t kIsotropyStream = 213;
constexpr std::uint64_t kRegularStream = 214;
constexpr std::uint64_t kChamberStream = 215;
constexpr std::uint64_t kJacobiStream = 221;
constexpr std::uint64_t kProbePointStream = 55;

// fixed step for the horosphere probes: large enough that second differences
// clear the rounding floor of the distance evaluations by two decades, small
// enough that the Richardson pair agrees to ~1e-8
constexpr double kProbeStep = 5e-3;
// slack for the "error shrinks with the ray parameter" chain once both tails
// sit on the finite-difference noise floor
constexpr double kMonotoneSlack = 5e-7;

// margin keeping sampled directions away from chamber walls, so no curvature
// eigenvalue lands inside the +-1e-10 clamp band around zero where square
// roots would amplify rounding
constexpr double kWallMargin = 1e-3;

double rel_or(const VerifyOptions& opts, double fallback) {
  return opts.tol_override > 0.0 ? opts.tol_override : fallback;
}

std::string space_label(const LieAlgebra& alg) {
  std::string out = family_name(alg.family()) + ":";
  for (size_t i = 0; i < alg.params().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(alg.params()[i]);
  }
  return out;
}

Eigen::VectorXd gaussian(CounterRng& rng, int d) {
  Eigen::VectorXd v(d);
  for (int i = 0; i < d; ++i) v[i] = rng.normal();
  return v;
}

AlgebraElement a_element(const Space& sp, const Eigen::VectorXd& coords) {
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(sp.algebra.dim());
  for (int i = 0; i < sp.abelian.rank; ++i) coeffs += coords[i] * sp.abelian.basis[i].coeffs;
  return sp.algebra.element(coeffs);
}

AlgebraElement p_element(const Space& sp, const Eigen::VectorXd& frame_coords) {
  return sp.algebra.element(sp.cartan.p_cols() * frame_coords);
}

AlgebraElement random_unit_p(const Space& sp, CounterRng& rng) {
  Eigen::VectorXd v = gaussian(rng, sp.cartan.dim_p);
  while (v.norm() < 1e-8) v = gaussian(rng, sp.cartan.dim_p);
  return p_element(sp, v.normalized());
}

/// Unit a-coordinates with alpha(c) >= margin on every positive root.
Eigen::VectorXd chamber_interior_coords(const Space& sp, CounterRng& rng, double margin) {
  for (int attempt = 0; attempt < 200000; ++attempt) {
    Eigen::VectorXd c = gaussian(rng, sp.abelian.rank);
    if (c.norm() < 1e-8) continue;
    c.normalize();
    bool ok = true;
    for (int idx : sp.roots.positive) {
      if (sp.roots.roots[idx].alpha.dot(c) < margin) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  throw Error("could not sample the interior of the positive chamber");
}

/// Unit a-coordinates with |alpha(c)| >= margin on every root.
Eigen::VectorXd regular_coords(const Space& sp, CounterRng& rng, double margin) {
  for (int attempt = 0; attempt < 200000; ++attempt) {
    Eigen::VectorXd c = gaussian(rng, sp.abelian.rank);
    if (c.norm() < 1e-8) continue;
    c.normalize();
    bool ok = true;
    for (const RestrictedRoot& root : sp.roots.roots) {
      if (std::abs(root.alpha.dot(c)) < margin) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  throw Error("could not sample a regular direction");
}

/// Orthogonal projections of the root sum onto each chamber wall, kept when
/// they stay inside the closed chamber and outside the clamp danger band.
std::vector<Eigen::VectorXd> wall_points(const Space& sp) {
  std::vector<Eigen::VectorXd> out;
  const Eigen::VectorXd& h = sp.roots.root_sum_a;
  for (int idx : sp.roots.positive) {
    const Eigen::VectorXd& alpha = sp.roots.roots[idx].alpha;
    Eigen::VectorXd cand = h - (alpha.dot(h) / alpha.squaredNorm()) * alpha;
    if (cand.norm() < 1e-8) continue;
    cand.normalize();
    bool ok = true;
    for (int j : sp.roots.positive) {
      const double v = sp.roots.roots[j].alpha.dot(cand);
      if (v < -1e-12 || (v > 1e-12 && v < kWallMargin)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

double sqrt_trace_clamped(const Eigen::VectorXd& eigs) {
  double s = 0.0;
  for (int i = 0; i < eigs.size(); ++i) {
    if (std::abs(eigs[i]) <= 1e-10) continue;
    s += std::sqrt(std::max(0.0, eigs[i]));
  }
  return s;
}

Eigen::MatrixXd space_cols(const LieAlgebra& alg, const RestrictedRoot& root) {
  Eigen::MatrixXd c(alg.dim(), root.multiplicity);
  for (int i = 0; i < root.multiplicity; ++i) c.col(i) = root.space_basis[i].coeffs;
  return c;
}

int find_root_index(const RootSystem& rs, const Eigen::VectorXd& target, double tol) {
  int best = -1;
  double best_dist = tol;
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    const double d = (rs.roots[i].alpha - target).norm();
    if (d <= best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

/// Norm of the component of `coeffs` outside the metric-orthonormal columns.
double projection_residual(const LieAlgebra& alg, const Eigen::MatrixXd& cols,
                           const Eigen::VectorXd& coeffs) {
  if (cols.cols() == 0) return alg.norm(alg.element(coeffs));
  const Eigen::VectorXd inside = cols * (cols.transpose() * alg.metric_gram() * coeffs);
  return alg.norm(alg.element(coeffs - inside));
}

void structural_checks(const Space& sp, const VerifyOptions& opts, VerificationReport& report) {
  const LieAlgebra& alg = sp.algebra;
  CounterRng rng(opts.seed, kPairStream);
  const int dim = alg.dim();

  double antisym = 0.0;
  double jacobi = 0.0;
  double automorphism = 0.0;
  for (int s = 0; s < 20; ++s) {
    const AlgebraElement x = alg.element(gaussian(rng, dim).normalized());
    const AlgebraElement y = alg.element(gaussian(rng, dim).normalized());
    const AlgebraElement z = alg.element(gaussian(rng, dim).normalized());
    antisym = std::max(
        antisym, alg.norm(alg.element(alg.bracket(x, y).coeffs + alg.bracket(y, x).coeffs)));
    const Eigen::VectorXd cyc = alg.bracket(x, alg.bracket(y, z)).coeffs +
                                alg.bracket(y, alg.bracket(z, x)).coeffs +
                                alg.bracket(z, alg.bracket(x, y)).coeffs;
    jacobi = std::max(jacobi, alg.norm(alg.element(cyc)));
    const Eigen::VectorXd morph = alg.involution(alg.bracket(x, y)).coeffs -
                                  alg.bracket(alg.involution(x), alg.involution(y)).coeffs;
    automorphism = std::max(automorphism, alg.norm(alg.element(morph)));
  }
  report.add_deficit("bracket_antisymmetry", antisym, 1e-12);
  report.add_deficit("jacobi_identity", jacobi, 1e-10);
  report.add_deficit("involution_automorphism", automorphism, 1e-10);

  const Eigen::MatrixXd& sigma = alg.involution_matrix();
  report.add_deficit("involution_squares_to_identity",
                     (sigma * sigma - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff(),
                     1e-12);

  const Eigen::MatrixXd& killing = alg.killing_gram();
  const double killing_scale = std::max(1.0, killing.cwiseAbs().maxCoeff());
  report.add_deficit("killing_form_symmetric",
                     linalg::symmetry_defect(killing) / killing_scale, 1e-12);
  report.add_deficit(
      "killing_involution_invariant",
      (sigma.transpose() * killing * sigma - killing).cwiseAbs().maxCoeff() / killing_scale,
      1e-10);

  const Eigen::MatrixXd t_cols = sp.cartan.t_cols();
  const Eigen::MatrixXd p_cols = sp.cartan.p_cols();
  const linalg::EighResult kt = linalg::jacobi_eigh(
      Eigen::MatrixXd(t_cols.transpose() * killing * t_cols));
  const linalg::EighResult kp = linalg::jacobi_eigh(
      Eigen::MatrixXd(p_cols.transpose() * killing * p_cols));
  report.add_deficit("killing_negative_on_compact_part",
                     std::max(0.0, kt.eigenvalues.maxCoeff()), 1e-12);
  report.add_deficit("killing_positive_on_tangent_part",
                     std::max(0.0, -kp.eigenvalues.minCoeff()), 1e-12);
  report.add_deficit(
      "cartan_parts_orthogonal",
      (t_cols.transpose() * alg.metric_gram() * p_cols).cwiseAbs().maxCoeff(), 1e-12);
}

void root_space_checks(const Space& sp, const VerifyOptions& opts, VerificationReport& report) {
  const LieAlgebra& alg = sp.algebra;
  const RootSystem& rs = sp.roots;
  const MaximalAbelian& ab = sp.abelian;

  double flat_commute = 0.0;
  for (size_t i = 0; i < ab.basis.size(); ++i) {
    for (size_t j = i + 1; j < ab.basis.size(); ++j) {
      flat_commute = std::max(flat_commute, alg.norm(alg.bracket(ab.basis[i], ab.basis[j])));
    }
  }
  report.add_deficit("flat_subspace_commutes", flat_commute, 1e-12);
  report.add_exact("centralizer_dimension_matches_rank",
                   static_cast<double>(centralizer_dimension(alg, sp.cartan, ab.basis)),
                   static_cast<double>(ab.rank));

  // opposite pairing and multiplicity bookkeeping
  double pair_dist = 0.0;
  for (const RestrictedRoot& root : rs.roots) {
    const int opp = find_root_index(rs, Eigen::VectorXd(-root.alpha), 1e-6);
    if (opp < 0) {
      pair_dist = std::max(pair_dist, 1.0);
    }
  }
  report.add_deficit("roots_come_in_opposite_pairs", pair_dist, 1e-6);
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    const int opp = find_root_index(rs, Eigen::VectorXd(-rs.roots[i].alpha), 1e-6);
    const double paired =
        opp >= 0 ? static_cast<double>(rs.roots[opp].multiplicity) : -1.0;
    report.add_exact("multiplicity_match_root_" + std::to_string(i), paired,
                     static_cast<double>(rs.roots[i].multiplicity));
  }
  report.add_exact("positive_half_count", 2.0 * static_cast<double>(rs.positive.size()),
                   static_cast<double>(rs.roots.size()));

  int mult_total = 0;
  for (const RestrictedRoot& root : rs.roots) mult_total += root.multiplicity;
  report.add_exact("dimension_sum_rule", static_cast<double>(mult_total + rs.dim_zero),
                   static_cast<double>(alg.dim()));

  // the involution exchanges the root spaces of alpha and -alpha
  double swap_residual = 0.0;
  for (const RestrictedRoot& root : rs.roots) {
    const int opp = find_root_index(rs, Eigen::VectorXd(-root.alpha), 1e-6);
    if (opp < 0) continue;
    const Eigen::MatrixXd target = space_cols(alg, rs.roots[opp]);
    for (const AlgebraElement& v : root.space_basis) {
      swap_residual = std::max(
          swap_residual, projection_residual(alg, target, alg.involution(v).coeffs));
    }
  }
  report.add_deficit("involution_swaps_root_spaces", swap_residual, 1e-8);

  // eigen-relation [h, v] = alpha(h) v over the abelian basis
  double eigen_residual = 0.0;
  for (const RestrictedRoot& root : rs.roots) {
    for (const AlgebraElement& v : root.space_basis) {
      for (int i = 0; i < ab.rank; ++i) {
        const Eigen::VectorXd lhs = alg.bracket(ab.basis[i], v).coeffs - root.alpha[i] * v.coeffs;
        eigen_residual = std::max(eigen_residual, alg.norm(alg.element(lhs)));
      }
    }
  }
  report.add_deficit("root_space_eigenvalue_residual", eigen_residual, 1e-8);

  // graded bracket: [g_alpha, g_beta] lands in g_{alpha+beta} (the joint
  // kernel when beta = -alpha, zero when alpha+beta is no root)
  double grading = 0.0;
  const double root_scale = rs.roots.empty() ? 1.0 : rs.roots.front().alpha.norm();
  for (const RestrictedRoot& ra : rs.roots) {
    for (const RestrictedRoot& rb : rs.roots) {
      const Eigen::VectorXd sum = ra.alpha + rb.alpha;
      Eigen::MatrixXd target;
      if (sum.norm() <= 1e-8 * root_scale) {
        target = rs.zero_space;
      } else {
        const int k = find_root_index(rs, sum, 1e-6);
        if (k >= 0) target = space_cols(alg, rs.roots[k]);
        else target = Eigen::MatrixXd(alg.dim(), 0);
      }
      for (const AlgebraElement& u : ra.space_basis) {
        for (const AlgebraElement& v : rb.space_basis) {
          grading = std::max(
              grading, projection_residual(alg, target, alg.bracket(u, v).coeffs));
        }
      }
    }
  }
  report.add_deficit("root_bracket_grading", grading, 1e-8);

  // root vectors represent their covector through the metric
  double dual_residual = 0.0;
  for (const RestrictedRoot& root : rs.roots) {
    for (int i = 0; i < ab.rank; ++i) {
      dual_residual = std::max(
          dual_residual, std::abs(alg.inner(root.dual, ab.basis[i]) - root.alpha[i]));
    }
  }
  report.add_deficit("root_vector_defining_property", dual_residual, 1e-12);

  double chamber_deficit = 0.0;
  for (int idx : rs.positive) {
    chamber_deficit = std::max(chamber_deficit, -rs.roots[idx].alpha.dot(rs.root_sum_a));
  }
  report.add_deficit("root_sum_in_closed_chamber", std::max(0.0, chamber_deficit), 1e-10);

  // chamber-choice invariance of the weighted root sum norm
  const double base_norm = rs.root_sum_norm;
  double norm_dev = 0.0;
  for (int w = 1; w <= 10; ++w) {
    RootSystem alt = rs;
    choose_positive(alt, std::nullopt, opts.seed + 7700 + static_cast<std::uint64_t>(w));
    positive_root_sum(alt, alg, ab);
    norm_dev = std::max(norm_dev, std::abs(alt.root_sum_norm - base_norm) / base_norm);
  }
  report.add_deficit("root_sum_norm_witness_invariant", norm_dev, rel_or(opts, 1e-10));

  RootSystem flipped = rs;
  choose_positive(flipped, std::optional<Eigen::VectorXd>(-rs.witness), opts.seed);
  positive_root_sum(flipped, alg, ab);
  const double flip_dev =
      std::max(std::abs(flipped.root_sum_norm - base_norm) / base_norm,
               alg.norm(alg.element(flipped.root_sum.coeffs + rs.root_sum.coeffs)));
  report.add_deficit("witness_negation_flips_chamber", flip_dev, 1e-10);

  // flat planes exactly in the higher-rank case
  if (ab.rank >= 2) {
    report.add_deficit("flat_plane_exists",
                       std::abs(sectional_curvature(sp, ab.basis[0], ab.basis[1])), 1e-12);
  } else {
    CounterRng rng(opts.seed, kPlaneStream + 1);
    const double bound = max_sectional_curvature(sp);
    double worst = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < 100; ++s) {
      const AlgebraElement x = random_unit_p(sp, rng);
      const AlgebraElement y = random_unit_p(sp, rng);
      try {
        worst = std::max(worst, sectional_curvature(sp, x, y));
      } catch (const DegeneratePlane&) {
      }
    }
    report.add_deficit("no_flat_planes", std::max(0.0, worst - bound), 1e-10);
    report.add_deficit("negative_upper_curvature_bound", std::max(0.0, bound), 0.0);
  }
}

}  // namespace

VerificationReport verify_roots(const Space& sp, const VerifyOptions& opts) {
  VerificationReport report;
  report.space = space_label(sp.algebra);
  report.seed = opts.seed;
  structural_checks(sp, opts, report);
  root_space_checks(sp, opts, report);
  return report;
}

VerificationReport verify_curvature(const Space& sp, const VerifyOptions& opts) {
  VerificationReport report;
  report.space = space_label(sp.algebra);
  report.seed = opts.seed;
  const LieAlgebra& alg = sp.algebra;
  const int rank = sp.abelian.rank;
  const int dim_p = sp.cartan.dim_p;

  // dual-route spectrum and the half-trace identity on regular directions
  {
    CounterRng rng(opts.seed, kSpectrumStream);
    double spectrum_dev = 0.0;
    double half_trace_dev = 0.0;
    for (int s = 0; s < 200; ++s) {
      const Eigen::VectorXd c = regular_coords(sp, rng, kWallMargin);
      const AlgebraElement xi = a_element(sp, c);
      const CurvatureSpectrum cs = curvature_spectrum(sp, xi);
      std::vector<double> predicted;
      predicted.reserve(static_cast<size_t>(dim_p));
      for (int z = 0; z < rank; ++z) predicted.push_back(0.0);
      for (int idx : sp.roots.positive) {
        const RestrictedRoot& root = sp.roots.roots[idx];
        const double v = root.alpha.dot(c);
        for (int m = 0; m < root.multiplicity; ++m) predicted.push_back(v * v);
      }
      std::sort(predicted.begin(), predicted.end());
      for (int i = 0; i < dim_p; ++i) {
        spectrum_dev = std::max(spectrum_dev, std::abs(cs.eigenvalues[i] - predicted[i]));
      }
      const double lhs = sqrt_trace_clamped(cs.eigenvalues);
      const linalg::EighResult full =
          linalg::jacobi_eigh(squared_adjoint_operator(sp, xi));
      const double rhs = 0.5 * sqrt_trace_clamped(full.eigenvalues);
      half_trace_dev = std::max(half_trace_dev, std::abs(lhs - rhs));
    }
    report.add_deficit("curvature_spectrum_matches_roots", spectrum_dev, rel_or(opts, 1e-9));
    report.add_deficit("half_trace_identity", half_trace_dev, rel_or(opts, 1e-9));
  }

  // operator-level structure on generic tangent directions
  {
    CounterRng rng(opts.seed, kRegularStream);
    double psd = 0.0;
    double kernel = 0.0;
    double even = 0.0;
    double zero_counts = 0.0;
    for (int s = 0; s < 20; ++s) {
      const AlgebraElement xi = random_unit_p(sp, rng);
      const Eigen::MatrixXd op = curvature_operator(sp, xi);
      const linalg::EighResult eig = linalg::jacobi_eigh(op);
      psd = std::max(psd, -eig.eigenvalues.minCoeff());
      const Eigen::VectorXd frame = (sp.cartan.to_frame * xi.coeffs).tail(dim_p);
      kernel = std::max(kernel, (op * frame).norm());
      const AlgebraElement neg = alg.element(Eigen::VectorXd(-xi.coeffs));
      even = std::max(even, (curvature_spectrum(sp, xi).eigenvalues -
                             curvature_spectrum(sp, neg).eigenvalues)
                                .cwiseAbs()
                                .maxCoeff());
      // regular flat directions see exactly `rank` flat transverse dimensions
      const Eigen::VectorXd reg = regular_coords(sp, rng, kWallMargin);
      const int zc = curvature_spectrum(sp, a_element(sp, reg)).zero_count;
      zero_counts = std::max(zero_counts, std::abs(static_cast<double>(zc - rank)));
    }
    report.add_deficit("curvature_operator_psd", std::max(0.0, psd - 1e-10), 1e-12);
    report.add_deficit("radial_direction_in_kernel", kernel, 1e-10);
    report.add_deficit("spectrum_even_in_direction", even, 1e-12);
    report.add_exact("regular_direction_zero_count", zero_counts, 0.0);
  }

  // isotropy invariance of spectra
  {
    CounterRng rng(opts.seed, kIsotropyStream);
    double dev = 0.0;
    for (int s = 0; s < 20; ++s) {
      Eigen::VectorXd tc = gaussian(rng, sp.cartan.dim_t);
      if (tc.norm() < 1e-8) continue;
      tc.normalize();
      const AlgebraElement t = alg.element(sp.cartan.t_cols() * tc);
      const Eigen::MatrixXd rot = linalg::expm(alg.ad(t));
      const AlgebraElement xi = random_unit_p(sp, rng);
      const AlgebraElement moved = alg.element(rot * xi.coeffs);
      dev = std::max(dev, (curvature_spectrum(sp, xi).eigenvalues -
                           curvature_spectrum(sp, moved).eigenvalues)
                              .cwiseAbs()
                              .maxCoeff());
    }
    report.add_deficit("isotropy_spectrum_invariance", dev, 1e-8);
  }

  // the horosphere mean curvature is the root-sum pairing on the closed chamber
  {
    CounterRng rng(opts.seed, kChamberStream);
    double dev = 0.0;
    std::vector<Eigen::VectorXd> samples;
    for (int s = 0; s < 100; ++s) {
      samples.push_back(chamber_interior_coords(sp, rng, kWallMargin));
    }
    for (const Eigen::VectorXd& w : wall_points(sp)) samples.push_back(w);
    for (const Eigen::VectorXd& c : samples) {
      const AlgebraElement xi = a_element(sp, c);
      const double linear = alg.inner(xi, sp.roots.root_sum);
      dev = std::max(dev, std::abs(horosphere_mean_curvature(sp, xi) - linear));
    }
    report.add_deficit("mean_curvature_linear_on_chamber", dev, rel_or(opts, 1e-10));
  }

  // sectional curvature: sign, pinching, scaling laws
  {
    CounterRng rng(opts.seed, kPlaneStream);
    double max_kappa = -std::numeric_limits<double>::infinity();
    double min_kappa = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 100; ++s) {
      const AlgebraElement x = random_unit_p(sp, rng);
      const AlgebraElement y = random_unit_p(sp, rng);
      try {
        const double kappa = sectional_curvature(sp, x, y);
        max_kappa = std::max(max_kappa, kappa);
        min_kappa = std::min(min_kappa, kappa);
      } catch (const DegeneratePlane&) {
      }
    }
    report.add_deficit("sectional_curvature_nonpositive", std::max(0.0, max_kappa), 1e-12);

    if (rank == 1) {
      // deterministic extreme planes from the root decomposition
      const AlgebraElement a_unit = sp.abelian.basis[0];
      for (int idx : sp.roots.positive) {
        const RestrictedRoot& root = sp.roots.roots[idx];
        const AlgebraElement v = root.space_basis[0];
        const AlgebraElement w =
            alg.element(v.coeffs - alg.involution(v).coeffs);
        if (alg.norm(w) < 1e-8) continue;
        const double kappa = sectional_curvature(sp, a_unit, w);
        max_kappa = std::max(max_kappa, kappa);
        min_kappa = std::min(min_kappa, kappa);
      }
      const double expected_ratio = alg.family() == Family::su ? 4.0 : 1.0;
      report.add_relative("pinch_ratio", min_kappa / max_kappa, expected_ratio,
                          rel_or(opts, 0.01));
      if (alg.family() == Family::so || alg.family() == Family::sl ||
          alg.family() == Family::sp) {
        report.add_deficit("curvature_spread_constant", max_kappa - min_kappa, 1e-10);
      }
      const double bound = max_sectional_curvature(sp);
      const double yau = (dim_p - 1) * std::sqrt(std::max(0.0, -bound));
      const double iso = sp.roots.root_sum_norm;
      report.add_deficit("yau_lower_bound", std::max(0.0, yau - iso), 1e-9);
      if (alg.family() == Family::so) {
        report.add_relative("yau_equality_constant_curvature", iso, yau, rel_or(opts, 1e-9));
      }
    }
  }

  // rescaling the metric moves every invariant the right way
  {
    const SpaceInvariants inv = space_invariants(sp);
    const SpaceInvariants twice = rescale_invariants(inv, 2.0);
    const SpaceInvariants quad = rescale_invariants(inv, 4.0);
    double grow = std::max({twice.isoperimetric - inv.isoperimetric,
                            twice.entropy - inv.entropy, twice.lambda0 - inv.lambda0,
                            quad.isoperimetric - twice.isoperimetric,
                            quad.entropy - twice.entropy, quad.lambda0 - twice.lambda0});
    report.add_deficit("rescale_strictly_decreasing", grow + 1e-12, 1e-12);
    const SpaceInvariants back = rescale_invariants(twice, 0.5);
    const double round_trip =
        std::max({std::abs(back.isoperimetric - inv.isoperimetric),
                  std::abs(back.entropy - inv.entropy), std::abs(back.lambda0 - inv.lambda0),
                  std::abs(back.metric_scale - inv.metric_scale)});
    report.add_deficit("rescale_round_trip", round_trip, 1e-12);
  }

  return report;
}

VerificationReport verify_jacobi(const Space& sp, const VerifyOptions& opts) {
  VerificationReport report;
  report.space = space_label(sp.algebra);
  report.seed = opts.seed;
  CounterRng rng(opts.seed, kJacobiStream);
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    const AlgebraElement xi = random_unit_p(sp, rng);
    worst = std::max(worst, jacobi_max_relative_error(sp, xi, 5.0, 5000));
  }
  report.add_deficit("jacobi_closed_form_max_rel_error", worst, rel_or(opts, 1e-5));
  return report;
}

VerificationReport verify_entropy(const Space& sp, const VerifyOptions& opts) {
  VerificationReport report;
  report.space = space_label(sp.algebra);
  report.seed = opts.seed;
  const VolumeGrowthCurve curve =
      entropy_curve(sp, opts.r1, opts.r2, opts.samples, opts.seed, opts.threads);
  const double target = sp.roots.root_sum_norm;
  const double rel = rel_or(opts, sp.abelian.rank >= 2 ? 0.10 : 0.05);
  report.add_relative("entropy_matches_isoperimetric", curve.entropy, target, rel);

  double not_increasing = 0.0;
  double slope_deficit = 0.0;
  for (size_t i = 0; i + 1 < curve.radii.size(); ++i) {
    const double slope = (curve.log_volumes[i + 1] - curve.log_volumes[i]) /
                         (curve.radii[i + 1] - curve.radii[i]);
    not_increasing =
        std::max(not_increasing, curve.log_volumes[i] - curve.log_volumes[i + 1]);
    slope_deficit = std::max(slope_deficit, 0.95 * target - slope);
  }
  report.add_deficit("log_volume_increasing", std::max(0.0, not_increasing), 1e-12);
  report.add_deficit("tail_slope_lower_bound", std::max(0.0, slope_deficit), 1e-9);
  report.add_exact("sampling_sufficient", curve.insufficient ? 1.0 : 0.0, 0.0);
  return report;
}

VerificationReport verify_busemann(const Space& sp, const VerifyOptions& opts) {
  VerificationReport report;
  report.space = space_label(sp.algebra);
  report.seed = opts.seed;
  const LieAlgebra& alg = sp.algebra;
  if (alg.family() != Family::sl) {
    throw UnsupportedFamily(
        "horosphere probes run in the unit determinant matrix chart, which realizes the sl family "
        "only");
  }

  const AlgebraElement ray =
      alg.element(sp.roots.root_sum.coeffs / sp.roots.root_sum_norm);
  CounterRng rng(opts.seed, kProbePointStream);
  const AlgebraElement offset = random_unit_p(sp, rng);
  const int n = alg.rep_size();
  const Eigen::MatrixXd base = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd x = spd_geodesic(base, alg.to_matrix(offset), 1.0);

  const std::vector<double> rays = {10.0, 20.0, 50.0, 100.0};
  std::vector<BusemannProbe> probes;
  for (double k : rays) probes.push_back(busemann_probe(sp, ray, x, k, kProbeStep));

  double bound_violation = 0.0;
  double increase = 0.0;
  double error_growth = 0.0;
  for (size_t i = 0; i < probes.size(); ++i) {
    bound_violation = std::max(bound_violation, std::abs(probes[i].busemann_value) - 1.0);
    if (i > 0) {
      increase = std::max(increase, probes[i].busemann_value - probes[i - 1].busemann_value);
      const double prev =
          std::abs(probes[i - 1].fd_laplacian - probes[i - 1].limit_laplacian);
      const double next = std::abs(probes[i].fd_laplacian - probes[i].limit_laplacian);
      error_growth = std::max(error_growth, next - prev);
    }
  }
  report.add_deficit("busemann_value_bounded", std::max(0.0, bound_violation), 1e-9);
  report.add_deficit("busemann_value_nonincreasing", std::max(0.0, increase), 1e-9);
  report.add_relative("finite_horosphere_match_k50", probes[2].fd_laplacian,
                      probes[2].predicted_laplacian, rel_or(opts, 1e-3));
  report.add_relative("laplacian_limit_match_k100", probes[3].fd_laplacian,
                      probes[3].limit_laplacian, rel_or(opts, 0.02));
  report.add_deficit("laplacian_error_monotone", std::max(0.0, error_growth), kMonotoneSlack);

  const BusemannProbe at_base = busemann_probe(sp, ray, base, 10.0, kProbeStep);
  report.add_deficit("busemann_base_value", std::abs(at_base.busemann_value), 1e-10);
  return report;
}

VerificationReport verify_cheeger(const Space& sp, const VerifyOptions& opts) {
  VerificationReport report;
  report.space = space_label(sp.algebra);
  report.seed = opts.seed;
  const SpaceInvariants inv = space_invariants(sp);
  report.add_relative("isoperimetric_equals_entropy", inv.isoperimetric, inv.entropy,
                      rel_or(opts, 1e-12));
  report.add_relative("lambda0_equals_quarter_isoperimetric_sq", inv.lambda0,
                      0.25 * inv.isoperimetric * inv.isoperimetric, rel_or(opts, 1e-12));
  report.add_relative("lambda0_equals_quarter_entropy_sq", inv.lambda0,
                      0.25 * inv.entropy * inv.entropy, rel_or(opts, 1e-12));
  report.add_deficit("spectral_lower_bound",
                     std::max(0.0, 0.25 * inv.isoperimetric * inv.isoperimetric - inv.lambda0),
                     1e-12);
  report.add_deficit("spectral_upper_bound",
                     std::max(0.0, inv.lambda0 - 0.25 * inv.entropy * inv.entropy), 1e-12);
  return report;
}

VerificationReport verify_sup(const Space& sp, const VerifyOptions& opts) {
  VerificationReport report;
  report.space = space_label(sp.algebra);
  report.seed = opts.seed;
  const double target = sp.roots.root_sum_norm;
  const SupremumResult sup = mean_curvature_supremum(sp, opts.samples, opts.seed);
  report.add_deficit("supremum_within_upper_bound",
                     std::max(0.0, sup.value - (1.0 + 1e-9) * target), 0.0);
  if (opts.samples >= 10000) {
    report.add_deficit("supremum_reaches_lower_bound",
                       std::max(0.0, 0.999 * target - sup.value), 0.0);
  }
  report.add_relative("argmax_unit_norm", sp.algebra.norm(sup.argmax), 1.0, 1e-9);
  report.add_relative("argmax_attains_supremum",
                      horosphere_mean_curvature(sp, sup.argmax), sup.value, 1e-12);
  return report;
}

VerificationReport verify_all(const Space& sp, const VerifyOptions& opts) {
  VerificationReport report;
  report.space = space_label(sp.algebra);
  report.seed = opts.seed;
  const auto absorb = [&](const VerificationReport& part) {
    report.checks.insert(report.checks.end(), part.checks.begin(), part.checks.end());
  };
  absorb(verify_roots(sp, opts));
  absorb(verify_curvature(sp, opts));
  absorb(verify_jacobi(sp, opts));
  absorb(verify_entropy(sp, opts));
  if (sp.algebra.family() == Family::sl) {
    absorb(verify_busemann(sp, opts));
  }
  absorb(verify_cheeger(sp, opts));
  absorb(verify_sup(sp, opts));
  return report;
}

}  // namespace symmspace
