#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "symmspace/errors.hpp"
#include "symmspace/invariants.hpp"
#include "symmspace/rng.hpp"
#include "symmspace/root_system.hpp"

using namespace symmspace;

namespace {

AlgebraElement unit_root_sum(const Space& sp) {
  return sp.algebra.element(sp.roots.root_sum.coeffs / sp.roots.root_sum_norm);
}

AlgebraElement random_unit_p(const Space& sp, CounterRng& rng) {
  Eigen::VectorXd v(sp.cartan.dim_p);
  for (int i = 0; i < v.size(); ++i) v[i] = rng.normal();
  v.normalize();
  return sp.algebra.element(sp.cartan.p_cols() * v);
}

}  // namespace

TEST_CASE("curvature spectrum of the hyperbolic plane model") {
  const Space sp = Space::build(Family::sl, {2});
  const CurvatureSpectrum cs = curvature_spectrum(sp, sp.abelian.basis[0]);
  REQUIRE(cs.eigenvalues.size() == 2);
  CHECK(cs.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(cs.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(cs.zero_count == 1);
}

TEST_CASE("curvature spectrum along the weighted root sum of the rank two model") {
  const Space sp = Space::build(Family::sl, {3});
  const CurvatureSpectrum cs = curvature_spectrum(sp, unit_root_sum(sp));
  REQUIRE(cs.eigenvalues.size() == 5);
  const std::vector<double> expected = {0.0, 0.0, 1.0 / 12.0, 1.0 / 12.0, 1.0 / 3.0};
  for (int i = 0; i < 5; ++i)
    CHECK(cs.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  CHECK(cs.zero_count == 2);
}

TEST_CASE("sectional curvature is constant on the lorentz quotients") {
  CounterRng rng(13, 1);
  const Space h2 = Space::build(Family::sl, {2});
  for (int s = 0; s < 10; ++s) {
    const AlgebraElement x = random_unit_p(h2, rng);
    const AlgebraElement y = random_unit_p(h2, rng);
    try {
      CHECK(sectional_curvature(h2, x, y) == doctest::Approx(-0.5).epsilon(1e-10));
    } catch (const DegeneratePlane&) {
    }
  }
  const Space h4 = Space::build(Family::so, {4, 1});
  for (int s = 0; s < 10; ++s) {
    const AlgebraElement x = random_unit_p(h4, rng);
    const AlgebraElement y = random_unit_p(h4, rng);
    try {
      CHECK(sectional_curvature(h4, x, y) == doctest::Approx(-1.0 / 6.0).epsilon(1e-10));
    } catch (const DegeneratePlane&) {
    }
  }
  CHECK(max_sectional_curvature(h2) == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(max_sectional_curvature(h4) == doctest::Approx(-1.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("quarter pinching of the complex hyperbolic quotient") {
  const Space sp = Space::build(Family::su, {2, 1});
  CHECK(max_sectional_curvature(sp) == doctest::Approx(-1.0 / 12.0).epsilon(1e-9));
  CounterRng rng(13, 2);
  double lo = 0.0, hi = -1e9;
  for (int s = 0; s < 400; ++s) {
    const AlgebraElement x = random_unit_p(sp, rng);
    const AlgebraElement y = random_unit_p(sp, rng);
    try {
      const double k = sectional_curvature(sp, x, y);
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    } catch (const DegeneratePlane&) {
    }
  }
  CHECK(lo >= -1.0 / 3.0 - 1e-10);
  CHECK(hi <= -1.0 / 12.0 + 1e-10);
  CHECK(lo < -0.30);  // sampling reaches toward both pinched ends
  CHECK(hi > -0.12);
}

TEST_CASE("higher rank spaces contain flat planes") {
  const Space sp = Space::build(Family::sl, {3});
  CHECK(sectional_curvature(sp, sp.abelian.basis[0], sp.abelian.basis[1]) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(max_sectional_curvature(sp) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("horosphere mean curvature peaks at the weighted root sum direction") {
  for (const auto& [f, params] : std::vector<std::pair<Family, std::vector<int>>>{
           {Family::sl, {3}}, {Family::so, {4, 1}}, {Family::su, {2, 1}}, {Family::sp, {2}}}) {
    const Space sp = Space::build(f, params);
    const double target = sp.roots.root_sum_norm;
    CHECK(horosphere_mean_curvature(sp, unit_root_sum(sp)) ==
          doctest::Approx(target).epsilon(1e-12));
    const SupremumResult sup = mean_curvature_supremum(sp, 4000, 42);
    CHECK(sup.value >= 0.995 * target);
    CHECK(sup.value <= target * (1.0 + 1e-9));
    CHECK(sp.algebra.norm(sup.argmax) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(horosphere_mean_curvature(sp, sup.argmax) ==
          doctest::Approx(sup.value).epsilon(1e-12));
  }
}

TEST_CASE("asymptotic invariants tie together exactly") {
  struct Row {
    Family f;
    std::vector<int> params;
    double iso;
  };
  const std::vector<Row> rows = {
      {Family::sl, {2}, 1.0 / std::sqrt(2.0)},   {Family::sl, {3}, 2.0 / std::sqrt(3.0)},
      {Family::sl, {4}, std::sqrt(2.5)},         {Family::so, {3, 1}, 1.0},
      {Family::so, {4, 1}, std::sqrt(1.5)},      {Family::so, {3, 2}, std::sqrt(5.0 / 3.0)},
      {Family::su, {2, 1}, 2.0 / std::sqrt(3.0)},{Family::sp, {2}, std::sqrt(5.0 / 3.0)},
  };
  for (const Row& row : rows) {
    CAPTURE(family_name(row.f));
    const Space sp = Space::build(row.f, row.params);
    const SpaceInvariants inv = space_invariants(sp);
    CHECK(inv.isoperimetric == doctest::Approx(row.iso).epsilon(1e-12));
    CHECK(inv.entropy == doctest::Approx(row.iso).epsilon(1e-12));
    CHECK(inv.lambda0 == doctest::Approx(0.25 * row.iso * row.iso).epsilon(1e-12));
    CHECK(inv.root_sum_norm == doctest::Approx(row.iso).epsilon(1e-12));
    CHECK(inv.dimension == sp.cartan.dim_p);
    CHECK(inv.rank == sp.abelian.rank);
    CHECK(inv.metric_scale == 1.0);
  }
}

TEST_CASE("rescaling the metric moves the invariants with the right powers") {
  const Space sp = Space::build(Family::so, {4, 1});
  const SpaceInvariants inv = space_invariants(sp);
  const SpaceInvariants scaled = rescale_invariants(inv, 4.0);
  CHECK(scaled.isoperimetric == doctest::Approx(inv.isoperimetric / 2.0).epsilon(1e-14));
  CHECK(scaled.entropy == doctest::Approx(inv.entropy / 2.0).epsilon(1e-14));
  CHECK(scaled.lambda0 == doctest::Approx(inv.lambda0 / 4.0).epsilon(1e-14));
  CHECK(scaled.metric_scale == doctest::Approx(4.0));
  const SpaceInvariants back = rescale_invariants(scaled, 0.25);
  CHECK(back.isoperimetric == doctest::Approx(inv.isoperimetric).epsilon(1e-14));
  CHECK(back.metric_scale == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(rescale_invariants(inv, 0.0), NonpositiveScale);
  CHECK_THROWS_AS(rescale_invariants(inv, -2.0), NonpositiveScale);
}

TEST_CASE("directions outside the tangent part are rejected") {
  const Space sp = Space::build(Family::sl, {3});
  const AlgebraElement compact = sp.cartan.t_basis[0];
  CHECK_THROWS_AS(curvature_spectrum(sp, compact), NotInTangentSpace);
  CHECK_THROWS_AS(horosphere_mean_curvature(sp, compact), NotInTangentSpace);
  CHECK_THROWS_AS(curvature_spectrum(sp, sp.algebra.zero()), DomainError);
}

TEST_CASE("squared adjoint route reproduces the tangent curvature spectrum") {
  CounterRng rng(13, 3);
  const Space sp = Space::build(Family::sp, {2});
  for (int s = 0; s < 5; ++s) {
    Eigen::VectorXd c(sp.abelian.rank);
    for (int i = 0; i < c.size(); ++i) c[i] = rng.normal();
    c.normalize();
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(sp.algebra.dim());
    for (int i = 0; i < sp.abelian.rank; ++i) coeffs += c[i] * sp.abelian.basis[i].coeffs;
    const AlgebraElement xi = sp.algebra.element(coeffs);
    // half the trace square root on the full algebra equals the tangent trace
    const CurvatureSpectrum cs = curvature_spectrum(sp, xi);
    double tangent = 0.0;
    for (int i = 0; i < cs.eigenvalues.size(); ++i)
      tangent += std::sqrt(std::max(0.0, cs.eigenvalues[i]));
    Eigen::MatrixXd sq = squared_adjoint_operator(sp, xi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sq);
    double full = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      full += std::sqrt(std::max(0.0, es.eigenvalues()[i]));
    CHECK(tangent == doctest::Approx(0.5 * full).epsilon(1e-9));
  }
}
