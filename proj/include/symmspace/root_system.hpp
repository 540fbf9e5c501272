#ifndef SYMMSPACE_ROOT_SYSTEM_HPP
#define SYMMSPACE_ROOT_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "symmspace/lie_algebra.hpp"

namespace symmspace {

/// Orthonormal basis of a maximal abelian subspace of the tangent part.
struct MaximalAbelian {
  std::vector<AlgebraElement> basis;
  int rank = 0;
};

/// Canonical maximal abelian subspace for the algebra's family, verified to be
/// maximal by a centralizer dimension count.
MaximalAbelian maximal_abelian(const LieAlgebra& alg, const CartanDecomposition& dec);

/// Dimension of the centralizer of the given commuting elements inside the
/// tangent part (equals the subspace dimension iff the subspace is maximal
/// abelian).
int centralizer_dimension(const LieAlgebra& alg, const CartanDecomposition& dec,
                          const std::vector<AlgebraElement>& elements);

/// One restricted root: the covector (coordinates over the abelian basis), its
/// metric dual inside the abelian subspace, the multiplicity, and an
/// orthonormal basis of the joint eigenspace.
struct RestrictedRoot {
  Eigen::VectorXd alpha;
  AlgebraElement dual;
  int multiplicity = 0;
  std::vector<AlgebraElement> space_basis;
};

struct RootSystem {
  std::vector<RestrictedRoot> roots;
  /// Orthonormal coefficient columns of the joint kernel (centralizer of the
  /// abelian subspace).
  Eigen::MatrixXd zero_space;
  int dim_zero = 0;

  /// Indices into roots, filled by choose_positive.
  std::vector<int> positive;
  /// Chamber witness over the abelian basis.
  Eigen::VectorXd witness;

  /// Multiplicity-weighted sum of the positive root duals, filled by
  /// positive_root_sum; its norm equals both the isoperimetric constant and
  /// the volume entropy of the space.
  AlgebraElement root_sum;
  Eigen::VectorXd root_sum_a;
  double root_sum_norm = 0.0;
};

/// Simultaneous diagonalization of ad over the abelian subspace: eigenvalue
/// clustering on a random generic combination, refined per generator.
RootSystem restricted_roots(const LieAlgebra& alg, const CartanDecomposition& dec,
                            const MaximalAbelian& ab, std::uint64_t seed);

/// Splits the roots into positive/negative halves by the sign on a generic
/// witness (drawn from the seed when not supplied).
void choose_positive(RootSystem& rs, std::optional<Eigen::VectorXd> witness, std::uint64_t seed);

/// Metric dual of a covector inside the abelian subspace.
AlgebraElement root_vector(const LieAlgebra& alg, const MaximalAbelian& ab,
                           const Eigen::VectorXd& alpha);

/// Fills root_sum = sum of multiplicity * dual over the positive roots and
/// checks it lies in the (closed) positive chamber.
void positive_root_sum(RootSystem& rs, const LieAlgebra& alg, const MaximalAbelian& ab);

/// Everything needed to evaluate invariants of one symmetric space.
struct Space {
  LieAlgebra algebra;
  CartanDecomposition cartan;
  MaximalAbelian abelian;
  RootSystem roots;

  static Space build(Family family, const std::vector<int>& params, std::uint64_t seed = 42,
                     std::optional<Eigen::VectorXd> witness = std::nullopt);
};

namespace detail {
/// Groups sorted values into clusters separated by more than gap; flags
/// distinct clusters closer than ambiguity_factor * gap.
struct ClusterResult {
  std::vector<std::vector<int>> groups;
  bool ambiguous = false;
};
ClusterResult cluster_sorted_values(const Eigen::VectorXd& sorted_values, double gap,
                                    double ambiguity_factor = 10.0);
}  // namespace detail

}  // namespace symmspace

#endif
