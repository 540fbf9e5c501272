#ifndef SYMMSPACE_LINALG_HPP
#define SYMMSPACE_LINALG_HPP

#include <Eigen/Dense>
#include <vector>

namespace symmspace {
namespace linalg {

struct EighResult {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns, orthonormal
};

/// Symmetric eigensolve by cyclic Jacobi rotations.
///
/// Stops once the off-diagonal Frobenius norm drops below off_tol times the
/// matrix norm (or when a full sweep performs no rotation).  Rotations are
/// skipped when an entry is already negligible relative to sqrt(|a_pp a_qq|),
/// which keeps small eigenvalues of graded positive definite matrices
/// accurate in the relative sense.
EighResult jacobi_eigh(Eigen::MatrixXd a, double off_tol = 1e-12, int max_sweeps = 64);

struct SvdResult {
  Eigen::MatrixXd u;       // columns, orthonormal
  Eigen::VectorXd sigma;   // descending, nonnegative
};

/// One-sided (Hestenes) Jacobi SVD: orthogonalizes columns by plane rotations.
///
/// For inputs of the form (well conditioned) * (diagonal) the singular values
/// come out with small *relative* error even when they spread over many orders
/// of magnitude, which plain eigendecomposition of the Gram matrix cannot do.
SvdResult onesided_jacobi_svd(Eigen::MatrixXd a, int max_sweeps = 64);

/// Matrix exponential: scaling and squaring with the degree-13 Pade approximant.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// Principal square root of a symmetric positive definite matrix (eigendecomposition).
Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& a);

/// Inverse principal square root of a symmetric positive definite matrix.
Eigen::MatrixXd spd_inv_sqrt(const Eigen::MatrixXd& a);

/// One Denman-Beavers square root step sequence for a symmetric positive definite matrix.
Eigen::MatrixXd denman_beavers_sqrt(const Eigen::MatrixXd& a, int max_iter = 64);

/// Logarithm of a symmetric positive definite matrix by inverse scaling and
/// squaring: repeated Denman-Beavers square roots until the iterate is close
/// to the identity, then an eigendecomposition-based log, then doubling.
Eigen::MatrixXd logm_spd(const Eigen::MatrixXd& a);

/// Modified Gram-Schmidt (two passes) with respect to the inner product
/// x^T gram y.  Returns orthonormal columns spanning the input columns;
/// columns whose norm collapses below drop_tol times their input norm are
/// dropped.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& cols, const Eigen::MatrixXd& gram,
                               double drop_tol = 1e-10);

struct Quadrature {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Legendre nodes and weights on [a, b].
Quadrature gauss_legendre(int n, double a, double b);

/// Pairwise (cascade) summation; the reduction order is fixed by the element
/// order, never by thread scheduling.
double pairwise_sum(const std::vector<double>& xs);

/// log(sum exp(x_i)) with max shift.
double log_sum_exp(const std::vector<double>& xs);
double log_sum_exp(const Eigen::VectorXd& xs);

/// log(mean exp(x_i)) with max shift.
double log_mean_exp(const std::vector<double>& xs);
double log_mean_exp(const Eigen::VectorXd& xs);

/// Max-norm symmetry defect ||a - a^T||_inf.
double symmetry_defect(const Eigen::MatrixXd& a);

}  // namespace linalg
}  // namespace symmspace

#endif
