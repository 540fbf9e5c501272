#include "symmspace/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "symmspace/errors.hpp"
#include "symmspace/linalg.hpp"
#include "symmspace/rng.hpp"

namespace symmspace {

namespace {

Eigen::MatrixXd unit(int d, int i, int j) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

/// ad of an element as an operator on basis coefficients.
Eigen::MatrixXd ad_operator(const LieAlgebra& alg, const Eigen::VectorXd& coeffs) {
  const int n = alg.dim();
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) op += coeffs[i] * alg.ad_basis()[i];
  return op;
}

Eigen::VectorXd random_unit_vector(CounterRng& rng, int d) {
  Eigen::VectorXd v(d);
  for (;;) {
    for (int i = 0; i < d; ++i) v[i] = rng.normal();
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

}  // namespace

namespace detail {

ClusterResult cluster_sorted_values(const Eigen::VectorXd& sorted_values, double gap,
                                    double ambiguity_factor) {
  ClusterResult res;
  const int n = static_cast<int>(sorted_values.size());
  if (n == 0) return res;
  std::vector<int> current{0};
  for (int k = 1; k < n; ++k) {
    const double diff = sorted_values[k] - sorted_values[k - 1];
    if (diff > gap) {
      if (diff < ambiguity_factor * gap) res.ambiguous = true;
      res.groups.push_back(current);
      current = {k};
    } else {
      current.push_back(k);
    }
  }
  res.groups.push_back(current);
  // a chain of nearby values can stretch a single group past the gap even
  // though consecutive differences stay below it; that is just as ambiguous
  for (const auto& g : res.groups) {
    const double spread = sorted_values[g.back()] - sorted_values[g.front()];
    if (spread > gap) res.ambiguous = true;
  }
  return res;
}

}  // namespace detail

MaximalAbelian maximal_abelian(const LieAlgebra& alg, const CartanDecomposition& dec) {
  const auto& params = alg.params();
  const int d = alg.rep_size();
  std::vector<Eigen::MatrixXd> mats;
  switch (alg.family()) {
    case Family::sl: {
      const int n = params[0];
      for (int k = 0; k + 1 < n; ++k) mats.push_back(unit(n, k, k) - unit(n, k + 1, k + 1));
      break;
    }
    case Family::so: {
      const int p = params[0], q = params[1];
      for (int i = 0; i < q; ++i) mats.push_back(unit(d, i, p + i) + unit(d, p + i, i));
      break;
    }
    case Family::su: {
      const int p = params[0], q = params[1];
      const int m = p + q;
      for (int i = 0; i < q; ++i) {
        Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(m, m);
        z(i, p + i) = 1.0;
        z(p + i, i) = 1.0;
        mats.push_back(realify(z));
      }
      break;
    }
    case Family::sp: {
      const int n = params[0];
      for (int a = 0; a < n; ++a) mats.push_back(unit(d, a, a) - unit(d, n + a, n + a));
      break;
    }
  }

  std::vector<Eigen::VectorXd> raw;
  for (const auto& m : mats) {
    AlgebraElement e = alg.from_matrix(m);
    const Eigen::VectorXd sigma_defect = alg.involution_matrix() * e.coeffs + e.coeffs;
    if (sigma_defect.norm() > 1e-8 * (1.0 + e.coeffs.norm()))
      throw MaximalityFailure("canonical flat generator is not in the tangent part");
    raw.push_back(e.coeffs);
  }
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      const Eigen::MatrixXd c = mats[i] * mats[j] - mats[j] * mats[i];
      if (c.norm() > 1e-10 * (1.0 + mats[i].norm() * mats[j].norm()))
        throw MaximalityFailure("canonical flat generators do not commute");
    }

  Eigen::MatrixXd cols(alg.dim(), static_cast<int>(raw.size()));
  for (std::size_t i = 0; i < raw.size(); ++i) cols.col(static_cast<int>(i)) = raw[i];
  const Eigen::MatrixXd ortho = linalg::orthonormalize(cols, alg.metric_gram());
  if (ortho.cols() != cols.cols())
    throw MaximalityFailure("canonical flat generators are linearly dependent");

  MaximalAbelian ab;
  ab.rank = static_cast<int>(ortho.cols());
  for (int i = 0; i < ab.rank; ++i) ab.basis.push_back(AlgebraElement{ortho.col(i)});

  const int cdim = centralizer_dimension(alg, dec, ab.basis);
  if (cdim != ab.rank) {
    std::ostringstream os;
    os << "abelian subspace is not maximal: centralizer dimension " << cdim << " != rank "
       << ab.rank;
    throw MaximalityFailure(os.str());
  }
  return ab;
}

int centralizer_dimension(const LieAlgebra& alg, const CartanDecomposition& dec,
                          const std::vector<AlgebraElement>& elements) {
  const Eigen::MatrixXd p_cols = dec.p_cols();
  Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(dec.dim_p, dec.dim_p);
  for (const auto& e : elements) {
    const Eigen::MatrixXd restricted = ad_operator(alg, e.coeffs) * p_cols;
    normal += restricted.transpose() * restricted;
  }
  const auto eig = linalg::jacobi_eigh(normal);
  const double scale = std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
  int kernel = 0;
  for (int i = 0; i < eig.eigenvalues.size(); ++i)
    if (std::abs(eig.eigenvalues[i]) <= 1e-8 * scale) ++kernel;
  return kernel;
}

RootSystem restricted_roots(const LieAlgebra& alg, const CartanDecomposition& dec,
                            const MaximalAbelian& ab, std::uint64_t seed) {
  const int n = alg.dim();
  const int rank = ab.rank;
  const Eigen::MatrixXd q = dec.frame_cols;

  // ad over the flat in orthonormal-frame coordinates; symmetric because the
  // operators are self-adjoint for the chosen inner product
  std::vector<Eigen::MatrixXd> ops;
  for (int i = 0; i < rank; ++i) {
    Eigen::MatrixXd m = dec.to_frame * ad_operator(alg, ab.basis[i].coeffs) * q;
    const double defect = linalg::symmetry_defect(m);
    if (defect > 1e-8 * (1.0 + m.norm()))
      throw ClusteringAmbiguity("flat action is not self-adjoint in frame coordinates");
    ops.push_back(0.5 * (m + m.transpose()));
  }

  struct Attempt {
    Eigen::MatrixXd vectors;
    std::vector<std::vector<int>> groups;
    std::vector<Eigen::VectorXd> alphas;
    bool ok = false;
  };

  const double op_scale = [&] {
    double s = 1.0;
    for (const auto& m : ops) s = std::max(s, m.cwiseAbs().maxCoeff());
    return s;
  }();
  const double gap = 1e-7 * op_scale;

  auto attempt = [&](std::uint64_t stream) -> Attempt {
    Attempt a;
    CounterRng rng(seed, stream);
    const Eigen::VectorXd w = random_unit_vector(rng, rank);
    Eigen::MatrixXd combined = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < rank; ++i) combined += w[i] * ops[i];
    auto eig = linalg::jacobi_eigh(combined);
    auto clusters = detail::cluster_sorted_values(eig.eigenvalues, gap);
    if (clusters.ambiguous) return a;

    Eigen::MatrixXd vectors = eig.eigenvectors;
    std::vector<std::vector<int>> groups = clusters.groups;
    // one refinement pass per generator splits anything the random
    // combination failed to separate
    for (int i = 0; i < rank; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& g : groups) {
        if (g.size() == 1) {
          next.push_back(g);
          continue;
        }
        const int gs = static_cast<int>(g.size());
        Eigen::MatrixXd vg(n, gs);
        for (int c = 0; c < gs; ++c) vg.col(c) = vectors.col(g[c]);
        Eigen::MatrixXd sub = vg.transpose() * ops[i] * vg;
        sub = 0.5 * (sub + sub.transpose());
        auto se = linalg::jacobi_eigh(sub);
        auto sc = detail::cluster_sorted_values(se.eigenvalues, gap);
        if (sc.ambiguous) return a;
        vg = vg * se.eigenvectors;
        for (int c = 0; c < gs; ++c) vectors.col(g[c]) = vg.col(c);
        for (const auto& sg : sc.groups) {
          std::vector<int> mapped;
          for (int local : sg) mapped.push_back(g[local]);
          next.push_back(mapped);
        }
      }
      groups = next;
    }

    // joint eigenvalues per group, with a residual check that each group
    // really is a simultaneous eigenspace
    for (const auto& g : groups) {
      const int gs = static_cast<int>(g.size());
      Eigen::MatrixXd vg(n, gs);
      for (int c = 0; c < gs; ++c) vg.col(c) = vectors.col(g[c]);
      Eigen::VectorXd alpha(rank);
      for (int i = 0; i < rank; ++i) {
        const Eigen::MatrixXd block = vg.transpose() * ops[i] * vg;
        alpha[i] = block.trace() / gs;
        const double resid = (ops[i] * vg - alpha[i] * vg).norm();
        if (resid > 1e-8 * op_scale * std::sqrt(static_cast<double>(gs))) return a;
      }
      a.alphas.push_back(alpha);
    }
    a.vectors = vectors;
    a.groups = groups;
    a.ok = true;
    return a;
  };

  Attempt chosen;
  for (std::uint64_t stream = 1; stream <= 20; ++stream) {
    chosen = attempt(stream);
    if (chosen.ok) break;
  }
  if (!chosen.ok)
    throw ClusteringAmbiguity("could not separate the joint eigenspaces of the flat action");

  RootSystem rs;
  std::vector<int> zero_groups;
  const double zero_tol = 1e-7 * op_scale;
  for (std::size_t gi = 0; gi < chosen.groups.size(); ++gi) {
    const auto& g = chosen.groups[gi];
    const Eigen::VectorXd& alpha = chosen.alphas[gi];
    if (alpha.cwiseAbs().maxCoeff() <= zero_tol) {
      zero_groups.push_back(static_cast<int>(gi));
      continue;
    }
    RestrictedRoot root;
    root.alpha = alpha;
    root.multiplicity = static_cast<int>(g.size());
    for (int col : g) root.space_basis.push_back(AlgebraElement{q * chosen.vectors.col(col)});
    root.dual = root_vector(alg, ab, alpha);
    rs.roots.push_back(std::move(root));
  }

  int dim_zero = 0;
  for (int gi : zero_groups) dim_zero += static_cast<int>(chosen.groups[gi].size());
  rs.zero_space.resize(n, dim_zero);
  int zc = 0;
  for (int gi : zero_groups)
    for (int col : chosen.groups[gi]) rs.zero_space.col(zc++) = q * chosen.vectors.col(col);
  rs.dim_zero = dim_zero;

  int covered = dim_zero;
  for (const auto& r : rs.roots) covered += r.multiplicity;
  if (covered != n)
    throw ClusteringAmbiguity("joint eigenspaces do not fill the algebra");

  // roots must close under negation with matching multiplicities
  for (const auto& r : rs.roots) {
    bool paired = false;
    for (const auto& s : rs.roots)
      if ((r.alpha + s.alpha).norm() <= 1e-6 * std::max(1.0, r.alpha.norm()) &&
          r.multiplicity == s.multiplicity) {
        paired = true;
        break;
      }
    if (!paired) throw ClusteringAmbiguity("restricted roots fail to pair under negation");
  }

  return rs;
}

void choose_positive(RootSystem& rs, std::optional<Eigen::VectorXd> witness, std::uint64_t seed) {
  const int rank = rs.roots.empty() ? 0 : static_cast<int>(rs.roots.front().alpha.size());
  auto separated = [&](const Eigen::VectorXd& w) {
    for (const auto& r : rs.roots)
      if (std::abs(r.alpha.dot(w)) <= 1e-6 * r.alpha.norm() * w.norm()) return false;
    return true;
  };

  Eigen::VectorXd w;
  if (witness) {
    if (static_cast<int>(witness->size()) != rank)
      throw DomainError("chamber witness has wrong dimension");
    if (!separated(*witness))
      throw DegenerateWitness("chamber witness vanishes on a restricted root");
    w = *witness;
  } else {
    CounterRng rng(seed, 101);
    bool found = false;
    for (int tries = 0; tries < 100 && !found; ++tries) {
      w = random_unit_vector(rng, rank);
      found = separated(w);
    }
    if (!found) throw DegenerateWitness("no generic chamber witness found");
  }

  rs.witness = w;
  rs.positive.clear();
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (rs.roots[i].alpha.dot(w) > 0.0) rs.positive.push_back(static_cast<int>(i));
  if (2 * rs.positive.size() != rs.roots.size())
    throw DegenerateWitness("chamber witness does not split the roots in half");
}

AlgebraElement root_vector(const LieAlgebra& alg, const MaximalAbelian& ab,
                           const Eigen::VectorXd& alpha) {
  // alpha is expressed against an orthonormal flat basis, but solve through
  // the Gram matrix anyway so the formula stays honest
  const int r = ab.rank;
  Eigen::MatrixXd gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gram(i, j) = alg.inner(ab.basis[i], ab.basis[j]);
  const Eigen::VectorXd c = gram.ldlt().solve(alpha);
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(alg.dim());
  for (int i = 0; i < r; ++i) coeffs += c[i] * ab.basis[i].coeffs;
  return AlgebraElement{coeffs};
}

void positive_root_sum(RootSystem& rs, const LieAlgebra& alg, const MaximalAbelian& ab) {
  const int rank = ab.rank;
  Eigen::VectorXd total = Eigen::VectorXd::Zero(rank);
  for (int idx : rs.positive) total += rs.roots[idx].multiplicity * rs.roots[idx].alpha;

  for (int idx : rs.positive) {
    const auto& r = rs.roots[idx];
    if (r.alpha.dot(total) < -1e-10 * (1.0 + r.alpha.norm() * total.norm()))
      throw ChamberViolation("positive root sum escapes the closed positive chamber");
  }

  rs.root_sum_a = total;
  rs.root_sum = root_vector(alg, ab, total);
  rs.root_sum_norm = alg.norm(rs.root_sum);
}

Space Space::build(Family family, const std::vector<int>& params, std::uint64_t seed,
                   std::optional<Eigen::VectorXd> witness) {
  Space s{LieAlgebra::build(family, params), {}, {}, {}};
  s.cartan = cartan_decompose(s.algebra);
  s.abelian = maximal_abelian(s.algebra, s.cartan);
  s.roots = restricted_roots(s.algebra, s.cartan, s.abelian, seed);
  choose_positive(s.roots, std::move(witness), seed);
  positive_root_sum(s.roots, s.algebra, s.abelian);
  return s;
}

}  // namespace symmspace
