#ifndef SYMMSPACE_LIE_ALGEBRA_HPP
#define SYMMSPACE_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace symmspace {

enum class Family { sl, so, su, sp };

std::string family_name(Family f);

/// Element of a Lie algebra, stored as coefficients over the algebra's basis.
struct AlgebraElement {
  Eigen::VectorXd coeffs;
};

/// Matrix realization of a noncompact real semisimple Lie algebra together
/// with its structure constants, Killing form, Cartan involution and the
/// positive definite inner product -B(sigma x, y).
///
/// Supported families: sl(n,R) for n >= 2, so(p,q) for p >= q >= 1 and
/// p + q >= 3, su(p,q) (realified) for p >= q >= 1, sp(n,R) for n >= 1.
class LieAlgebra {
public:
  static LieAlgebra build(Family family, const std::vector<int>& params);

  Family family() const { return family_; }
  const std::vector<int>& params() const { return params_; }
  /// Size of the defining matrix realization (matrices are rep_size x rep_size).
  int rep_size() const { return rep_size_; }
  /// Dimension of the algebra as a real vector space.
  int dim() const { return dim_; }

  const Eigen::MatrixXd& basis_matrix(int i) const { return basis_[i]; }
  Eigen::MatrixXd to_matrix(const AlgebraElement& x) const;
  /// Expands a realization matrix over the basis; rejects matrices outside the
  /// span (relative residual above tol).
  AlgebraElement from_matrix(const Eigen::MatrixXd& m, double tol = 1e-8) const;

  AlgebraElement element(const Eigen::VectorXd& coeffs) const;
  AlgebraElement zero() const;

  /// Lie bracket, computed on the matrix side and re-expanded over the basis.
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  /// Matrix of ad(x): coeffs(y) -> coeffs([x, y]), from the structure constants.
  Eigen::MatrixXd ad(const AlgebraElement& x) const;
  /// Killing form B(x, y) = tr(ad x . ad y), from the structure constants.
  double killing(const AlgebraElement& x, const AlgebraElement& y) const;
  /// Cartan involution sigma(X) = -X^T (transpose in the realization).
  AlgebraElement involution(const AlgebraElement& x) const;
  /// Positive definite inner product <x, y> = -B(sigma x, y).
  double inner(const AlgebraElement& x, const AlgebraElement& y) const;
  double norm(const AlgebraElement& x) const;

  /// Gram matrix of the Killing form over the basis.
  const Eigen::MatrixXd& killing_gram() const { return killing_gram_; }
  /// Gram matrix of <.,.> over the basis.
  const Eigen::MatrixXd& metric_gram() const { return metric_gram_; }
  /// Coefficient matrix of the involution over the basis.
  const Eigen::MatrixXd& involution_matrix() const { return involution_; }
  /// ad matrices of the basis elements; ad_basis()[i](k, j) is the structure
  /// constant c_{ij}^k.
  const std::vector<Eigen::MatrixXd>& ad_basis() const { return ad_basis_; }

private:
  LieAlgebra() = default;

  void build_basis();
  void compute_structure();
  void validate_structure() const;

  Family family_ = Family::sl;
  std::vector<int> params_;
  int rep_size_ = 0;
  int dim_ = 0;

  std::vector<Eigen::MatrixXd> basis_;
  std::vector<Eigen::MatrixXd> ad_basis_;
  Eigen::MatrixXd involution_;
  Eigen::MatrixXd killing_gram_;
  Eigen::MatrixXd metric_gram_;

  // Gram matrix of tr(b_i^T b_j) over the basis, used to expand realization
  // matrices before the Killing form exists.
  Eigen::LLT<Eigen::MatrixXd> frob_llt_;
};

/// Orthonormal (w.r.t. <.,.>) bases of the +1/-1 eigenspaces of the involution:
/// t is the compact part, p realizes the tangent space of the symmetric space.
struct CartanDecomposition {
  std::vector<AlgebraElement> t_basis;
  std::vector<AlgebraElement> p_basis;
  int dim_t = 0;
  int dim_p = 0;
  /// Coefficient columns of t_basis | p_basis; an orthonormal frame of the algebra.
  Eigen::MatrixXd frame_cols;
  /// Maps coefficient vectors to frame coordinates (frame_cols * frame_coords = coeffs).
  Eigen::MatrixXd to_frame;

  Eigen::MatrixXd t_cols() const { return frame_cols.leftCols(dim_t); }
  Eigen::MatrixXd p_cols() const { return frame_cols.rightCols(dim_p); }
};

CartanDecomposition cartan_decompose(const LieAlgebra& alg);

/// Real 2m x 2m image [[Re, -Im], [Im, Re]] of a complex m x m matrix; used by
/// the families whose natural representation is complex.
Eigen::MatrixXd realify(const Eigen::MatrixXcd& m);

}  // namespace symmspace

#endif
