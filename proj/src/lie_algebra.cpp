#include "symmspace/lie_algebra.hpp"

#include <cmath>
#include <sstream>

#include "symmspace/errors.hpp"
#include "symmspace/linalg.hpp"

namespace symmspace {

namespace {

Eigen::MatrixXd unit(int d, int i, int j) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

std::string params_string(Family f, const std::vector<int>& params) {
  std::ostringstream os;
  os << family_name(f) << ":";
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  return os.str();
}

}  // namespace

Eigen::MatrixXd realify(const Eigen::MatrixXcd& z) {
  const int m = static_cast<int>(z.rows());
  Eigen::MatrixXd r(2 * m, 2 * m);
  r.topLeftCorner(m, m) = z.real();
  r.topRightCorner(m, m) = -z.imag();
  r.bottomLeftCorner(m, m) = z.imag();
  r.bottomRightCorner(m, m) = z.real();
  return r;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::sl: return "sl";
    case Family::so: return "so";
    case Family::su: return "su";
    case Family::sp: return "sp";
  }
  return "?";
}

LieAlgebra LieAlgebra::build(Family family, const std::vector<int>& params) {
  LieAlgebra alg;
  alg.family_ = family;
  alg.params_ = params;

  const std::string label = params_string(family, params);
  auto bad_count = [&](std::size_t want) {
    if (params.size() != want)
      throw UnsupportedFamily(label + ": expected " + std::to_string(want) + " parameter(s)");
  };

  switch (family) {
    case Family::sl: {
      bad_count(1);
      const int n = params[0];
      if (n <= 0) throw UnsupportedFamily(label + ": n must be positive");
      if (n == 1) throw DegenerateParams(label + ": sl(1) is trivial");
      alg.rep_size_ = n;
      break;
    }
    case Family::so: {
      bad_count(2);
      const int p = params[0], q = params[1];
      if (p <= 0 || q < 0) throw UnsupportedFamily(label + ": parameters must be positive");
      if (p < q) throw UnsupportedFamily(label + ": use so:p,q with p >= q");
      if (q == 0) throw DegenerateParams(label + ": so(p,0) is compact");
      if (p + q < 3) throw DegenerateParams(label + ": so(1,1) is flat");
      alg.rep_size_ = p + q;
      break;
    }
    case Family::su: {
      bad_count(2);
      const int p = params[0], q = params[1];
      if (p <= 0 || q < 0) throw UnsupportedFamily(label + ": parameters must be positive");
      if (p < q) throw UnsupportedFamily(label + ": use su:p,q with p >= q");
      if (q == 0) throw DegenerateParams(label + ": su(p,0) is compact");
      alg.rep_size_ = 2 * (p + q);
      break;
    }
    case Family::sp: {
      bad_count(1);
      const int n = params[0];
      if (n < 1) throw UnsupportedFamily(label + ": n must be positive");
      alg.rep_size_ = 2 * n;
      break;
    }
  }

  alg.build_basis();
  alg.compute_structure();
  alg.validate_structure();
  return alg;
}

void LieAlgebra::build_basis() {
  basis_.clear();
  const int d = rep_size_;

  switch (family_) {
    case Family::sl: {
      const int n = params_[0];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) basis_.push_back(unit(d, i, j));
      for (int k = 0; k + 1 < n; ++k) basis_.push_back(unit(d, k, k) - unit(d, k + 1, k + 1));
      break;
    }
    case Family::so: {
      const int p = params_[0], q = params_[1];
      // rotations inside each block
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) basis_.push_back(unit(d, i, j) - unit(d, j, i));
      for (int i = p; i < p + q; ++i)
        for (int j = i + 1; j < p + q; ++j) basis_.push_back(unit(d, i, j) - unit(d, j, i));
      // boosts across the signature split
      for (int i = 0; i < p; ++i)
        for (int j = p; j < p + q; ++j) basis_.push_back(unit(d, i, j) + unit(d, j, i));
      break;
    }
    case Family::su: {
      const int p = params_[0], q = params_[1], m = p + q;
      const std::complex<double> iu(0.0, 1.0);
      auto cunit = [&](int i, int j) {
        Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(m, m);
        z(i, j) = 1.0;
        return z;
      };
      // anti-Hermitian blocks on the diagonal
      auto block_pairs = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
          for (int j = i + 1; j < hi; ++j) {
            basis_.push_back(realify(cunit(i, j) - cunit(j, i)));
            basis_.push_back(realify(iu * (cunit(i, j) + cunit(j, i))));
          }
      };
      block_pairs(0, p);
      block_pairs(p, m);
      for (int k = 0; k + 1 < m; ++k)
        basis_.push_back(realify(iu * (cunit(k, k) - cunit(k + 1, k + 1))));
      // Hermitian off-block part
      for (int i = 0; i < p; ++i)
        for (int j = p; j < m; ++j) {
          basis_.push_back(realify(cunit(i, j) + cunit(j, i)));
          basis_.push_back(realify(iu * (cunit(i, j) - cunit(j, i))));
        }
      break;
    }
    case Family::sp: {
      const int n = params_[0];
      // [[A, B], [C, -A^T]] with B, C symmetric
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          basis_.push_back(unit(d, a, b) - unit(d, n + b, n + a));
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          basis_.push_back(a == b ? unit(d, a, n + a)
                                  : Eigen::MatrixXd(unit(d, a, n + b) + unit(d, b, n + a)));
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          basis_.push_back(a == b ? unit(d, n + a, a)
                                  : Eigen::MatrixXd(unit(d, n + a, b) + unit(d, n + b, a)));
      break;
    }
  }

  dim_ = static_cast<int>(basis_.size());
}

void LieAlgebra::compute_structure() {
  const int n = dim_;

  // Gram matrix of the Frobenius inner product over the basis; used for all
  // matrix -> coefficient expansions (the algebra metric is only available
  // after the structure constants exist).
  Eigen::MatrixXd frob(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) frob(i, j) = frob(j, i) = (basis_[i].transpose() * basis_[j]).trace();
  frob_llt_.compute(frob);
  if (frob_llt_.info() != Eigen::Success)
    throw ClosureViolation(params_string(family_, params_) + ": basis is degenerate");

  // structure constants by projecting commutators onto the basis
  ad_basis_.assign(n, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::MatrixXd comm = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      const AlgebraElement c = from_matrix(comm, 1e-10);
      ad_basis_[i].col(j) = c.coeffs;
    }
  }

  // involution over the basis
  involution_.resize(n, n);
  for (int i = 0; i < n; ++i)
    involution_.col(i) = from_matrix(Eigen::MatrixXd(-basis_[i].transpose()), 1e-10).coeffs;

  // Killing form from ad traces only
  killing_gram_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      killing_gram_(i, j) = killing_gram_(j, i) = (ad_basis_[i] * ad_basis_[j]).trace();

  metric_gram_ = -(involution_.transpose() * killing_gram_);
  metric_gram_ = 0.5 * (metric_gram_ + metric_gram_.transpose());
}

void LieAlgebra::validate_structure() const {
  const int n = dim_;
  const std::string label = params_string(family_, params_);

  // antisymmetry of the structure constants
  double anti = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      anti = std::max(anti, (ad_basis_[i].col(j) + ad_basis_[j].col(i)).cwiseAbs().maxCoeff());
  if (anti > 1e-10) throw ClosureViolation(label + ": bracket antisymmetry violated");

  // Jacobi identity over all basis triples
  double jacobi = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd cij = ad_basis_[i].col(j);
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXd res = ad_basis_[i] * ad_basis_[j].col(k) -
                              ad_basis_[j] * ad_basis_[i].col(k);
        for (int l = 0; l < n; ++l) res -= cij[l] * ad_basis_[l].col(k);
        jacobi = std::max(jacobi, res.cwiseAbs().maxCoeff());
      }
    }
  if (jacobi > 1e-8) throw ClosureViolation(label + ": Jacobi identity violated");

  // the involution squares to the identity and is an automorphism
  if ((involution_ * involution_ - Eigen::MatrixXd::Identity(n, n)).norm() > 1e-10)
    throw InvolutionNotDiagonalizable(label + ": involution does not square to identity");

  // metric must be symmetric positive definite
  Eigen::LLT<Eigen::MatrixXd> llt(metric_gram_);
  if (llt.info() != Eigen::Success)
    throw DegenerateParams(label + ": -B(sigma x, y) is not positive definite");
}

Eigen::MatrixXd LieAlgebra::to_matrix(const AlgebraElement& x) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep_size_, rep_size_);
  for (int i = 0; i < dim_; ++i) m += x.coeffs[i] * basis_[i];
  return m;
}

AlgebraElement LieAlgebra::from_matrix(const Eigen::MatrixXd& m, double tol) const {
  if (m.rows() != rep_size_ || m.cols() != rep_size_)
    throw DomainError("from_matrix: wrong matrix size");
  Eigen::VectorXd rhs(dim_);
  for (int i = 0; i < dim_; ++i) rhs[i] = (basis_[i].transpose() * m).trace();
  AlgebraElement x{frob_llt_.solve(rhs)};
  const double resid = (m - to_matrix(x)).norm();
  if (resid > tol * std::max(1.0, m.norm()))
    throw ClosureViolation("from_matrix: matrix lies outside the algebra (residual " +
                           std::to_string(resid) + ")");
  return x;
}

AlgebraElement LieAlgebra::element(const Eigen::VectorXd& coeffs) const {
  if (coeffs.size() != dim_) throw DomainError("element: wrong coefficient count");
  return {coeffs};
}

AlgebraElement LieAlgebra::zero() const { return {Eigen::VectorXd::Zero(dim_)}; }

AlgebraElement LieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  const Eigen::MatrixXd mx = to_matrix(x), my = to_matrix(y);
  return from_matrix(mx * my - my * mx);
}

Eigen::MatrixXd LieAlgebra::ad(const AlgebraElement& x) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x.coeffs[i] != 0.0) m += x.coeffs[i] * ad_basis_[i];
  return m;
}

double LieAlgebra::killing(const AlgebraElement& x, const AlgebraElement& y) const {
  return x.coeffs.dot(killing_gram_ * y.coeffs);
}

AlgebraElement LieAlgebra::involution(const AlgebraElement& x) const {
  return {involution_ * x.coeffs};
}

double LieAlgebra::inner(const AlgebraElement& x, const AlgebraElement& y) const {
  return x.coeffs.dot(metric_gram_ * y.coeffs);
}

double LieAlgebra::norm(const AlgebraElement& x) const {
  return std::sqrt(std::max(0.0, inner(x, x)));
}

CartanDecomposition cartan_decompose(const LieAlgebra& alg) {
  const int n = alg.dim();
  const Eigen::MatrixXd& s = alg.involution_matrix();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

  const Eigen::MatrixXd t_raw = 0.5 * (id + s);
  const Eigen::MatrixXd p_raw = 0.5 * (id - s);
  const Eigen::MatrixXd t_cols = linalg::orthonormalize(t_raw, alg.metric_gram());
  const Eigen::MatrixXd p_cols = linalg::orthonormalize(p_raw, alg.metric_gram());

  CartanDecomposition dec;
  dec.dim_t = static_cast<int>(t_cols.cols());
  dec.dim_p = static_cast<int>(p_cols.cols());
  if (dec.dim_t + dec.dim_p != n)
    throw InvolutionNotDiagonalizable("cartan_decompose: eigenspace dimensions do not add up");

  for (int j = 0; j < dec.dim_t; ++j) {
    if ((s * t_cols.col(j) - t_cols.col(j)).norm() > 1e-10)
      throw InvolutionNotDiagonalizable("cartan_decompose: +1 eigenspace is off");
    dec.t_basis.push_back({t_cols.col(j)});
  }
  for (int j = 0; j < dec.dim_p; ++j) {
    if ((s * p_cols.col(j) + p_cols.col(j)).norm() > 1e-10)
      throw InvolutionNotDiagonalizable("cartan_decompose: -1 eigenspace is off");
    dec.p_basis.push_back({p_cols.col(j)});
  }

  dec.frame_cols.resize(n, n);
  dec.frame_cols << t_cols, p_cols;
  dec.to_frame = dec.frame_cols.transpose() * alg.metric_gram();
  return dec;
}

}  // namespace symmspace
