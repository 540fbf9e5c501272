#include "symmspace/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "symmspace/errors.hpp"

namespace symmspace {
namespace linalg {

namespace {

inline void sort_ascending(Eigen::VectorXd& vals, Eigen::MatrixXd& vecs) {
  const int n = static_cast<int>(vals.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return vals[i] < vals[j]; });
  Eigen::VectorXd sv(n);
  Eigen::MatrixXd sm(vecs.rows(), n);
  for (int k = 0; k < n; ++k) {
    sv[k] = vals[idx[k]];
    sm.col(k) = vecs.col(idx[k]);
  }
  vals = sv;
  vecs = sm;
}

}  // namespace

EighResult jacobi_eigh(Eigen::MatrixXd a, double off_tol, int max_sweeps) {
  if (a.rows() != a.cols()) throw DomainError("jacobi_eigh: matrix must be square");
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  if (n <= 1) return {a.diagonal(), v};

  const double scale = std::max(a.norm(), 1e-300);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    off = std::sqrt(off);
    if (off <= off_tol * scale) break;

    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        const double small = 1e-15 * std::sqrt(std::abs(a(p, p) * a(q, q))) + 1e-300;
        if (std::abs(apq) <= small) continue;
        rotated = true;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- J^T A J applied to rows/cols p and q
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    if (!rotated) break;
  }

  Eigen::VectorXd vals = a.diagonal();
  sort_ascending(vals, v);
  return {vals, v};
}

SvdResult onesided_jacobi_svd(Eigen::MatrixXd a, int max_sweeps) {
  const int n = static_cast<int>(a.cols());
  bool rotated = true;
  for (int sweep = 0; sweep < max_sweeps && rotated; ++sweep) {
    rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double app = a.col(p).squaredNorm();
        const double aqq = a.col(q).squaredNorm();
        const double apq = a.col(p).dot(a.col(q));
        if (app == 0.0 || aqq == 0.0) continue;
        if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq)) continue;
        rotated = true;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        Eigen::VectorXd col_p = a.col(p);
        a.col(p) = c * col_p - s * a.col(q);
        a.col(q) = s * col_p + c * a.col(q).eval();
      }
    }
  }

  Eigen::VectorXd sigma(n);
  Eigen::MatrixXd u(a.rows(), n);
  for (int j = 0; j < n; ++j) {
    sigma[j] = a.col(j).norm();
    u.col(j) = sigma[j] > 0.0 ? Eigen::VectorXd(a.col(j) / sigma[j])
                              : Eigen::VectorXd(Eigen::VectorXd::Zero(a.rows()));
  }
  // descending
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return sigma[i] > sigma[j]; });
  Eigen::VectorXd ss(n);
  Eigen::MatrixXd us(a.rows(), n);
  for (int k = 0; k < n; ++k) {
    ss[k] = sigma[idx[k]];
    us.col(k) = u.col(idx[k]);
  }
  return {us, ss};
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw DomainError("expm: matrix must be square");
  const int n = static_cast<int>(a.rows());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

  // coefficients of the [13/13] Pade approximant to exp
  static const double b[14] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
  const double theta13 = 5.371920351148152;

  double norm1 = 0.0;
  for (int j = 0; j < n; ++j) norm1 = std::max(norm1, a.col(j).cwiseAbs().sum());

  int squarings = 0;
  Eigen::MatrixXd as = a;
  if (norm1 > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    as = a / std::ldexp(1.0, squarings);
  }

  const Eigen::MatrixXd a2 = as * as;
  const Eigen::MatrixXd a4 = a2 * a2;
  const Eigen::MatrixXd a6 = a4 * a2;
  Eigen::MatrixXd u = as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                            b[3] * a2 + b[1] * id);
  Eigen::MatrixXd v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  Eigen::MatrixXd f = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) f = f * f;
  return f;
}

namespace {

void require_spd_shape(const Eigen::MatrixXd& a, const char* who) {
  if (a.rows() != a.cols()) throw NotSpd(std::string(who) + ": matrix must be square");
  if (symmetry_defect(a) > 1e-10 * std::max(1.0, a.norm()))
    throw NotSpd(std::string(who) + ": matrix must be symmetric");
}

}  // namespace

Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& a) {
  require_spd_shape(a, "spd_sqrt");
  EighResult e = jacobi_eigh(0.5 * (a + a.transpose()));
  if (e.eigenvalues.minCoeff() <= 0.0) throw NotSpd("spd_sqrt: matrix must be positive definite");
  Eigen::MatrixXd r =
      e.eigenvectors * e.eigenvalues.cwiseSqrt().asDiagonal() * e.eigenvectors.transpose();
  return 0.5 * (r + r.transpose());
}

Eigen::MatrixXd spd_inv_sqrt(const Eigen::MatrixXd& a) {
  require_spd_shape(a, "spd_inv_sqrt");
  EighResult e = jacobi_eigh(0.5 * (a + a.transpose()));
  if (e.eigenvalues.minCoeff() <= 0.0)
    throw NotSpd("spd_inv_sqrt: matrix must be positive definite");
  Eigen::MatrixXd r = e.eigenvectors * e.eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() *
                      e.eigenvectors.transpose();
  return 0.5 * (r + r.transpose());
}

Eigen::MatrixXd denman_beavers_sqrt(const Eigen::MatrixXd& a, int max_iter) {
  require_spd_shape(a, "denman_beavers_sqrt");
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd y = a;
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::MatrixXd yn = 0.5 * (y + z.inverse());
    Eigen::MatrixXd zn = 0.5 * (z + y.inverse());
    const double step = (yn - y).norm();
    y = yn;
    z = zn;
    if (step <= 1e-14 * std::max(1.0, y.norm())) break;
  }
  return 0.5 * (y + y.transpose());
}

Eigen::MatrixXd logm_spd(const Eigen::MatrixXd& a) {
  require_spd_shape(a, "logm_spd");
  const int n = static_cast<int>(a.rows());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

  Eigen::MatrixXd m = 0.5 * (a + a.transpose());
  int halvings = 0;
  while ((m - id).norm() > 0.25 && halvings < 64) {
    m = denman_beavers_sqrt(m);
    ++halvings;
  }

  EighResult e = jacobi_eigh(m);
  if (e.eigenvalues.minCoeff() <= 0.0) throw NotSpd("logm_spd: matrix must be positive definite");
  Eigen::MatrixXd l = e.eigenvectors * e.eigenvalues.array().log().matrix().asDiagonal() *
                      e.eigenvectors.transpose();
  l *= std::ldexp(1.0, halvings);
  return 0.5 * (l + l.transpose());
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& cols, const Eigen::MatrixXd& gram,
                               double drop_tol) {
  const int n = static_cast<int>(cols.rows());
  Eigen::MatrixXd out(n, cols.cols());
  // rank decisions are relative to the largest column, so noise columns left
  // behind by projector arithmetic do not survive as spurious basis vectors
  double scale = 0.0;
  for (int j = 0; j < cols.cols(); ++j) {
    const Eigen::VectorXd w = cols.col(j);
    scale = std::max(scale, std::sqrt(std::max(0.0, w.dot(gram * w))));
  }
  if (scale == 0.0) return out.leftCols(0);
  int kept = 0;
  for (int j = 0; j < cols.cols(); ++j) {
    Eigen::VectorXd w = cols.col(j);
    if (std::sqrt(std::max(0.0, w.dot(gram * w))) <= drop_tol * scale) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < kept; ++k) {
        const Eigen::VectorXd u = out.col(k);
        w -= u.dot(gram * w) * u;
      }
    }
    const double w_norm = std::sqrt(std::max(0.0, w.dot(gram * w)));
    if (w_norm <= drop_tol * scale) continue;
    out.col(kept++) = w / w_norm;
  }
  return out.leftCols(kept);
}

Quadrature gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  Eigen::VectorXd x(n), w(n);
  const double pi = 3.14159265358979323846264338327950288;
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = -p1 / pp;
      z += dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Quadrature q;
  q.nodes = (mid + half * x.array()).matrix();
  q.weights = (half * w.array()).matrix();
  return q;
}

namespace {

double pairwise_sum_range(const double* xs, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += xs[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_range(xs, half) + pairwise_sum_range(xs + half, n - half);
}

}  // namespace

double pairwise_sum(const std::vector<double>& xs) {
  return xs.empty() ? 0.0 : pairwise_sum_range(xs.data(), xs.size());
}

double log_sum_exp(const std::vector<double>& xs) {
  if (xs.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(xs.begin(), xs.end());
  if (!std::isfinite(m)) return m;
  std::vector<double> shifted(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) shifted[i] = std::exp(xs[i] - m);
  return m + std::log(pairwise_sum(shifted));
}

double log_mean_exp(const std::vector<double>& xs) {
  return log_sum_exp(xs) - std::log(static_cast<double>(xs.size()));
}

double log_sum_exp(const Eigen::VectorXd& xs) {
  return log_sum_exp(std::vector<double>(xs.data(), xs.data() + xs.size()));
}

double log_mean_exp(const Eigen::VectorXd& xs) {
  return log_sum_exp(xs) - std::log(static_cast<double>(xs.size()));
}

double symmetry_defect(const Eigen::MatrixXd& a) {
  return (a - a.transpose()).cwiseAbs().maxCoeff();
}

}  // namespace linalg
}  // namespace symmspace
