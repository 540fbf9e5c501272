#include "symmspace/jacobi_fields.hpp"

#include <cmath>

#include "symmspace/errors.hpp"
#include "symmspace/kernels.hpp"
#include "symmspace/linalg.hpp"

namespace symmspace {

Eigen::MatrixXd integrate_jacobi(const Eigen::MatrixXd& op, double t_end, int steps) {
  if (!(t_end > 0.0) || steps < 1) throw DomainError("bad integration window");
  const int m = static_cast<int>(op.rows());
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(m, m);
  const double h = t_end / steps;
  for (int s = 0; s < steps; ++s) {
    const Eigen::MatrixXd k1y = v;
    const Eigen::MatrixXd k1v = op * y;
    const Eigen::MatrixXd k2y = v + 0.5 * h * k1v;
    const Eigen::MatrixXd k2v = op * (y + 0.5 * h * k1y);
    const Eigen::MatrixXd k3y = v + 0.5 * h * k2v;
    const Eigen::MatrixXd k3v = op * (y + 0.5 * h * k2y);
    const Eigen::MatrixXd k4y = v + h * k3v;
    const Eigen::MatrixXd k4v = op * (y + h * k3y);
    y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return y;
}

double jacobi_max_relative_error(const Space& sp, const AlgebraElement& xi, double t_max,
                                 int steps) {
  if (!(t_max > 0.0)) throw DomainError("t_max must be positive");
  if (steps < 100) throw DomainError("need at least 100 integration steps");
  const double len = sp.algebra.norm(xi);
  if (len <= 1e-12) throw DomainError("need a nonzero direction");
  const AlgebraElement unit{xi.coeffs / len};

  const Eigen::MatrixXd op = curvature_operator(sp, unit);
  const auto eig = linalg::jacobi_eigh(op);
  Eigen::VectorXd lambdas = eig.eigenvalues;
  for (int i = 0; i < lambdas.size(); ++i)
    if (std::abs(lambdas[i]) <= 1e-10) lambdas[i] = 0.0;

  const int m = static_cast<int>(op.rows());
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(m, m);
  const double h = t_max / steps;
  double max_rel = 0.0;
  for (int s = 0; s < steps; ++s) {
    const Eigen::MatrixXd k1y = v;
    const Eigen::MatrixXd k1v = op * y;
    const Eigen::MatrixXd k2y = v + 0.5 * h * k1v;
    const Eigen::MatrixXd k2v = op * (y + 0.5 * h * k1y);
    const Eigen::MatrixXd k3y = v + 0.5 * h * k2v;
    const Eigen::MatrixXd k3v = op * (y + 0.5 * h * k2y);
    const Eigen::MatrixXd k4y = v + h * k3v;
    const Eigen::MatrixXd k4v = op * (y + h * k3y);
    y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);

    const double t = (s + 1) * h;
    const Eigen::MatrixXd amplitudes = y * eig.eigenvectors;
    for (int i = 0; i < m; ++i) {
      const double closed = sinh_ratio(lambdas[i], t);
      const double rel = std::abs(amplitudes.col(i).norm() - closed) / closed;
      max_rel = std::max(max_rel, rel);
    }
  }
  return max_rel;
}

}  // namespace symmspace
