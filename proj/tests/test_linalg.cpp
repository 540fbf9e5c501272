#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "symmspace/errors.hpp"
#include "symmspace/linalg.hpp"
#include "symmspace/rng.hpp"

using namespace symmspace;

namespace {

Eigen::MatrixXd random_matrix(CounterRng& rng, int r, int c) {
  Eigen::MatrixXd m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rng.normal();
  return m;
}

Eigen::MatrixXd random_symmetric(CounterRng& rng, int n) {
  const Eigen::MatrixXd m = random_matrix(rng, n, n);
  return 0.5 * (m + m.transpose());
}

Eigen::MatrixXd random_orthogonal(CounterRng& rng, int n) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(random_matrix(rng, n, n));
  return qr.householderQ();
}

}  // namespace

TEST_CASE("cyclic eigensolver agrees with the reference solver") {
  CounterRng rng(7, 1);
  for (int n : {2, 3, 5, 8, 12}) {
    const Eigen::MatrixXd a = random_symmetric(rng, n);
    const linalg::EighResult mine = linalg::jacobi_eigh(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
    for (int i = 0; i < n; ++i)
      CHECK(mine.eigenvalues[i] == doctest::Approx(ref.eigenvalues()[i]).epsilon(1e-12));
    // ascending order and true eigenpairs
    for (int i = 0; i + 1 < n; ++i) CHECK(mine.eigenvalues[i] <= mine.eigenvalues[i + 1]);
    const Eigen::MatrixXd& v = mine.eigenvectors;
    CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((a * v - v * mine.eigenvalues.asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() <
          1e-11);
  }
}

TEST_CASE("one sided svd agrees with the reference on generic input") {
  CounterRng rng(7, 2);
  for (int n : {2, 4, 6}) {
    const Eigen::MatrixXd a = random_matrix(rng, n, n);
    const linalg::SvdResult mine = linalg::onesided_jacobi_svd(a);
    Eigen::JacobiSVD<Eigen::MatrixXd> ref(a);
    for (int i = 0; i < n; ++i)
      CHECK(mine.sigma[i] == doctest::Approx(ref.singularValues()[i]).epsilon(1e-12));
    for (int i = 0; i + 1 < n; ++i) CHECK(mine.sigma[i] >= mine.sigma[i + 1]);
    const Eigen::MatrixXd& u = mine.u;
    CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("one sided svd keeps relative accuracy on wildly graded columns") {
  // orthogonal times diagonal has exactly the diagonal as singular values, so
  // an exponent spread of +-35 (the far-point regime) has a known answer
  CounterRng rng(7, 3);
  const Eigen::MatrixXd q = random_orthogonal(rng, 3);
  const double s0 = std::exp(35.0), s1 = 1.0, s2 = std::exp(-35.0);
  Eigen::MatrixXd a = q;
  a.col(0) *= s0;
  a.col(1) *= s1;
  a.col(2) *= s2;
  const linalg::SvdResult res = linalg::onesided_jacobi_svd(a);
  CHECK(std::abs(res.sigma[0] - s0) / s0 < 1e-13);
  CHECK(std::abs(res.sigma[1] - s1) / s1 < 1e-13);
  CHECK(std::abs(res.sigma[2] - s2) / s2 < 1e-13);
}

TEST_CASE("matrix exponential on closed form inputs") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = 1.5;
  d(1, 1) = -0.25;
  const Eigen::MatrixXd ed = linalg::expm(d);
  CHECK(ed(0, 0) == doctest::Approx(std::exp(1.5)).epsilon(1e-14));
  CHECK(ed(1, 1) == doctest::Approx(std::exp(-0.25)).epsilon(1e-14));
  CHECK(std::abs(ed(0, 1)) < 1e-15);

  Eigen::MatrixXd nil = Eigen::MatrixXd::Zero(2, 2);
  nil(0, 1) = 3.0;
  const Eigen::MatrixXd en = linalg::expm(nil);
  CHECK(en(0, 0) == doctest::Approx(1.0));
  CHECK(en(0, 1) == doctest::Approx(3.0));

  const double th = 1.2;
  Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(2, 2);
  rot(0, 1) = -th;
  rot(1, 0) = th;
  const Eigen::MatrixXd er = linalg::expm(rot);
  CHECK(er(0, 0) == doctest::Approx(std::cos(th)).epsilon(1e-14));
  CHECK(er(1, 0) == doctest::Approx(std::sin(th)).epsilon(1e-14));
}

TEST_CASE("matrix exponential survives large symmetric arguments") {
  CounterRng rng(7, 4);
  Eigen::MatrixXd a = random_symmetric(rng, 4);
  a *= 50.0 / a.norm();
  const Eigen::MatrixXd mine = linalg::expm(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::MatrixXd ref = es.eigenvectors() *
                              es.eigenvalues().array().exp().matrix().asDiagonal() *
                              es.eigenvectors().transpose();
  CHECK((mine - ref).norm() / ref.norm() < 1e-11);

  // the inverse identity is only testable at moderate norm; at norm 50 the
  // product conditions like e^{100} and no algorithm can recover the identity
  Eigen::MatrixXd b = random_symmetric(rng, 4);
  b *= 2.0 / b.norm();
  const Eigen::MatrixXd fwd = linalg::expm(b);
  const Eigen::MatrixXd inv = linalg::expm(Eigen::MatrixXd(-b));
  CHECK((fwd * inv - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spd square roots, logs and their round trips") {
  CounterRng rng(7, 5);
  const Eigen::MatrixXd b = random_matrix(rng, 5, 5);
  const Eigen::MatrixXd s =
      b * b.transpose() + 0.1 * Eigen::MatrixXd::Identity(5, 5);

  const Eigen::MatrixXd r = linalg::spd_sqrt(s);
  CHECK((r * r - s).norm() / s.norm() < 1e-12);
  const Eigen::MatrixXd ri = linalg::spd_inv_sqrt(s);
  CHECK((ri * s * ri - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((linalg::denman_beavers_sqrt(s) - r).norm() / r.norm() < 1e-11);

  const Eigen::MatrixXd l = linalg::logm_spd(s);
  CHECK((linalg::expm(l) - s).norm() / s.norm() < 1e-12);
  CHECK(linalg::symmetry_defect(l) < 1e-12);
}

TEST_CASE("gram orthonormalization extracts the span and drops noise columns") {
  CounterRng rng(7, 6);
  const Eigen::MatrixXd g_half = random_matrix(rng, 4, 4);
  const Eigen::MatrixXd gram =
      g_half * g_half.transpose() + Eigen::MatrixXd::Identity(4, 4);

  Eigen::MatrixXd cols(4, 4);
  cols.col(0) = random_matrix(rng, 4, 1);
  cols.col(1) = random_matrix(rng, 4, 1);
  cols.col(2) = 2.0 * cols.col(0) - cols.col(1);  // dependent
  cols.col(3) = 1e-16 * random_matrix(rng, 4, 1);  // projector dust

  const Eigen::MatrixXd u = linalg::orthonormalize(cols, gram);
  REQUIRE(u.cols() == 2);
  CHECK((u.transpose() * gram * u - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);
  // original directions lie in the computed span
  for (int j = 0; j < 2; ++j) {
    const Eigen::VectorXd w = cols.col(j) - u * (u.transpose() * gram * cols.col(j));
    CHECK(std::sqrt(w.dot(gram * w)) < 1e-10 * cols.col(j).norm());
  }
}

TEST_CASE("quadrature rules integrate polynomials and smooth functions") {
  const linalg::Quadrature q2 = linalg::gauss_legendre(2, 0.0, 1.0);
  double cube = 0.0;
  for (int i = 0; i < 2; ++i) cube += q2.weights[i] * std::pow(q2.nodes[i], 3);
  CHECK(cube == doctest::Approx(0.25).epsilon(1e-14));

  const linalg::Quadrature q20 = linalg::gauss_legendre(20, 0.0, 3.14159265358979323846);
  double integral = 0.0;
  for (int i = 0; i < 20; ++i) integral += q20.weights[i] * std::sin(q20.nodes[i]);
  CHECK(integral == doctest::Approx(2.0).epsilon(1e-13));
  for (int i = 0; i < 20; ++i) {
    CHECK(q20.weights[i] > 0.0);
    CHECK(q20.nodes[i] > 0.0);
    CHECK(q20.nodes[i] < 3.1416);
  }
  CHECK_THROWS_AS(linalg::gauss_legendre(0, 0.0, 1.0), DomainError);
}

TEST_CASE("stable summation helpers") {
  std::vector<double> xs;
  long double exact = 0.0L;
  CounterRng rng(7, 8);
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.normal() * std::exp(10.0 * rng.uniform());
    xs.push_back(v);
    exact += static_cast<long double>(v);
  }
  CHECK(linalg::pairwise_sum(xs) ==
        doctest::Approx(static_cast<double>(exact)).epsilon(1e-12));

  CHECK(linalg::log_sum_exp(std::vector<double>{1000.0, 1000.0}) ==
        doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-14));
  CHECK(linalg::log_mean_exp(std::vector<double>{3.0, 3.0, 3.0}) ==
        doctest::Approx(3.0).epsilon(1e-14));
  CHECK(linalg::log_sum_exp(std::vector<double>{-2.0}) ==
        doctest::Approx(-2.0).epsilon(1e-14));

  Eigen::VectorXd v(3);
  v << 1.0, 2.0, 3.0;
  const double direct =
      std::log(std::exp(1.0) + std::exp(2.0) + std::exp(3.0));
  CHECK(linalg::log_sum_exp(v) == doctest::Approx(direct).epsilon(1e-14));
}
