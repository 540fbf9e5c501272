// Standalone acceptance runner.  Each numbered block exercises one shipping
// contract of the library end to end and prints a single PASS/FAIL line; the
// process exits nonzero iff any block failed.  Tolerances follow the uniform
// pass rule |measured - expected| <= tol * max(1, |expected|).

#include <json.hpp>

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symmspace/cli.hpp"
#include "symmspace/invariants.hpp"
#include "symmspace/jacobi_fields.hpp"
#include "symmspace/rng.hpp"
#include "symmspace/root_system.hpp"
#include "symmspace/spd_model.hpp"
#include "symmspace/verify.hpp"

using json = nlohmann::json;
using namespace symmspace;

namespace {

bool within(double measured, double expected, double tol) {
  return std::abs(measured - expected) <= tol * std::max(1.0, std::abs(expected));
}

struct NamedSpace {
  std::string label;
  Family family;
  std::vector<int> params;
  double weighted_norm;  // closed form for the weighted root sum length
};

const std::vector<NamedSpace>& catalog() {
  static const std::vector<NamedSpace> spaces{
      {"sl:2", Family::sl, {2}, std::sqrt(0.5)},
      {"sl:3", Family::sl, {3}, 2.0 / std::sqrt(3.0)},
      {"sl:4", Family::sl, {4}, std::sqrt(2.5)},
      {"so:3,1", Family::so, {3, 1}, 1.0},
      {"so:4,1", Family::so, {4, 1}, std::sqrt(1.5)},
      {"so:3,2", Family::so, {3, 2}, std::sqrt(5.0 / 3.0)},
      {"su:2,1", Family::su, {2, 1}, 2.0 / std::sqrt(3.0)},
      {"sp:2", Family::sp, {2}, std::sqrt(5.0 / 3.0)},
  };
  return spaces;
}

Eigen::VectorXd gaussian(CounterRng& rng, int d) {
  Eigen::VectorXd v(d);
  for (int i = 0; i < d; ++i) v[i] = rng.normal();
  return v;
}

AlgebraElement flat_element(const Space& sp, const Eigen::VectorXd& coords) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(sp.algebra.dim());
  for (int i = 0; i < static_cast<int>(sp.abelian.basis.size()); ++i)
    c += coords[i] * sp.abelian.basis[i].coeffs;
  return sp.algebra.element(c);
}

/// Unit coordinates in the flat whose root values all clear `margin` in
/// absolute value, so no curvature eigenvalue can fall into the zero clamp.
Eigen::VectorXd regular_unit_coords(const Space& sp, CounterRng& rng, double margin) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Eigen::VectorXd c = gaussian(rng, sp.roots.root_sum_a.size());
    if (c.norm() < 1e-8) continue;
    c.normalize();
    bool ok = true;
    for (const RestrictedRoot& r : sp.roots.roots)
      if (std::abs(r.alpha.dot(c)) < margin) { ok = false; break; }
    if (ok) return c;
  }
  throw std::runtime_error("no regular direction found");
}

/// Unit coordinates with every positive root value at least `margin`.
Eigen::VectorXd chamber_unit_coords(const Space& sp, CounterRng& rng, double margin) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Eigen::VectorXd c = gaussian(rng, sp.roots.root_sum_a.size());
    if (c.norm() < 1e-8) continue;
    c.normalize();
    bool ok = true;
    for (int idx : sp.roots.positive)
      if (sp.roots.roots[idx].alpha.dot(c) < margin) { ok = false; break; }
    if (ok) return c;
  }
  throw std::runtime_error("no chamber direction found");
}

/// Chamber boundary points: the weighted root sum projected onto each wall,
/// kept when the projection stays in the closed chamber and no root value sits
/// in the clamp's danger band (each value is either an exact zero or clearly
/// positive after normalization).
std::vector<Eigen::VectorXd> wall_coords(const Space& sp, double margin) {
  std::vector<Eigen::VectorXd> out;
  const Eigen::VectorXd h = sp.roots.root_sum_a;
  for (int idx : sp.roots.positive) {
    const Eigen::VectorXd& a = sp.roots.roots[idx].alpha;
    Eigen::VectorXd w = h - (a.dot(h) / a.squaredNorm()) * a;
    if (w.norm() < 1e-8) continue;
    const Eigen::VectorXd u = w / w.norm();
    bool ok = true;
    for (int j : sp.roots.positive) {
      const double v = sp.roots.roots[j].alpha.dot(u);
      if (v < -1e-12 || (v > 1e-12 && v < margin)) { ok = false; break; }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;  // keep the first diagnostic
    ok = false;
  }
};

// ---- criterion bodies ------------------------------------------------------

Outcome criterion_hyperbolic_normalized() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    std::ostringstream out, err;
    const std::string space = "hyperbolic:" + std::to_string(n);
    const int code = run_cli({"invariants", "--space", space, "--normalize-curvature", "-1",
                              "--json"},
                             out, err);
    if (code != 0) {
      o.fail(space + " exited with " + std::to_string(code));
      continue;
    }
    const json doc = json::parse(out.str());
    const double iso = doc["isoperimetric"];
    const double ent = doc["entropy"];
    const double lam = doc["lambda0"];
    const double want_iso = static_cast<double>(n - 1);
    const double want_lam = want_iso * want_iso / 4.0;
    if (!within(iso, want_iso, 1e-9) || !within(ent, want_iso, 1e-9) ||
        !within(lam, want_lam, 1e-9))
      o.fail(space + " normalized invariants off the closed form");
  }
  return o;
}

Outcome criterion_closed_form_invariants(const std::vector<Space>& spaces) {
  Outcome o;
  for (size_t i = 0; i < spaces.size(); ++i) {
    const double h = catalog()[i].weighted_norm;
    const SpaceInvariants inv = space_invariants(spaces[i]);
    if (!within(inv.isoperimetric, h, 1e-12) || !within(inv.entropy, h, 1e-12) ||
        !within(inv.isoperimetric, inv.entropy, 1e-12))
      o.fail(catalog()[i].label + " isoperimetric/entropy off the root sum norm");
    if (!within(inv.lambda0, h * h / 4.0, 1e-12))
      o.fail(catalog()[i].label + " spectral bottom off the closed form");
  }
  return o;
}

Outcome criterion_curvature_spectrum(const std::vector<Space>& spaces) {
  Outcome o;
  for (size_t i = 0; i < spaces.size(); ++i) {
    const Space& sp = spaces[i];
    CounterRng rng(42, 9003 + static_cast<std::uint64_t>(i));
    for (int draw = 0; draw < 200; ++draw) {
      const Eigen::VectorXd unit = regular_unit_coords(sp, rng, 1e-4);
      const double scale = std::exp(0.3 * rng.normal());  // non-unit lengths as well
      const Eigen::VectorXd c = scale * unit;
      const AlgebraElement xi = flat_element(sp, c);
      const double len = sp.algebra.norm(xi);
      // reported eigenvalues refer to the normalized direction; restore the
      // drawn length so the comparison runs against the raw root values
      const CurvatureSpectrum cs = curvature_spectrum(sp, xi);

      std::vector<double> expected(static_cast<size_t>(sp.roots.root_sum_a.size()), 0.0);
      double half_trace = 0.0;
      for (int idx : sp.roots.positive) {
        const RestrictedRoot& r = sp.roots.roots[idx];
        const double val = r.alpha.dot(c);
        for (int m = 0; m < r.multiplicity; ++m) expected.push_back(val * val);
        half_trace += static_cast<double>(r.multiplicity) * std::abs(val);
      }
      std::sort(expected.begin(), expected.end());

      std::vector<double> got(cs.eigenvalues.data(), cs.eigenvalues.data() + cs.eigenvalues.size());
      for (double& lam : got) lam *= len * len;
      std::sort(got.begin(), got.end());
      if (got.size() != expected.size() ||
          cs.zero_count != static_cast<int>(sp.roots.root_sum_a.size())) {
        o.fail(catalog()[i].label + " spectrum shape mismatch");
        break;
      }
      bool match = true;
      for (size_t k = 0; k < got.size(); ++k)
        if (!within(got[k], expected[k], 1e-9)) match = false;
      double sqrt_trace = 0.0;
      for (double lam : got)
        if (lam > 0.0) sqrt_trace += std::sqrt(lam);
      if (!within(sqrt_trace, half_trace, 1e-9)) match = false;
      if (!match) {
        o.fail(catalog()[i].label + " spectrum or half trace off the root data");
        break;
      }
    }
  }
  return o;
}

Outcome criterion_mean_curvature_linear(const std::vector<Space>& spaces) {
  Outcome o;
  for (size_t i = 0; i < spaces.size(); ++i) {
    const Space& sp = spaces[i];
    const AlgebraElement h = sp.algebra.element(sp.roots.root_sum.coeffs);
    CounterRng rng(42, 9103 + static_cast<std::uint64_t>(i));
    std::vector<Eigen::VectorXd> points;
    for (int draw = 0; draw < 100; ++draw)
      points.push_back(chamber_unit_coords(sp, rng, 1e-3));
    for (const Eigen::VectorXd& w : wall_coords(sp, 1e-3)) points.push_back(w);
    for (const Eigen::VectorXd& c : points) {
      const AlgebraElement xi = flat_element(sp, c);
      const double measured = horosphere_mean_curvature(sp, xi);
      const double expected = sp.algebra.inner(xi, h);
      if (!within(measured, expected, 1e-10)) {
        o.fail(catalog()[i].label + " mean curvature is not the pairing with the root sum");
        break;
      }
    }
  }
  return o;
}

Outcome criterion_root_data(const std::vector<Space>& spaces) {
  Outcome o;
  struct IntRow {
    std::string label;
    int rank;
    std::vector<int> mults;  // sorted multiplicities over all roots
  };
  const std::vector<IntRow> rows{
      {"sl:2", 1, {1, 1}},
      {"sl:3", 2, {1, 1, 1, 1, 1, 1}},
      {"sl:4", 3, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"so:3,1", 1, {2, 2}},
      {"so:4,1", 1, {3, 3}},
      {"so:3,2", 2, {1, 1, 1, 1, 1, 1, 1, 1}},
      {"su:2,1", 1, {1, 1, 2, 2}},
      {"sp:2", 2, {1, 1, 1, 1, 1, 1, 1, 1}},
  };
  for (size_t i = 0; i < spaces.size(); ++i) {
    const Space& sp = spaces[i];
    const RootSystem& rs = sp.roots;
    const IntRow& row = rows[i];
    if (static_cast<int>(rs.root_sum_a.size()) != row.rank)
      o.fail(row.label + " rank mismatch");
    std::vector<int> mults;
    for (const RestrictedRoot& r : rs.roots) mults.push_back(r.multiplicity);
    std::sort(mults.begin(), mults.end());
    if (mults != row.mults) o.fail(row.label + " multiplicity multiset mismatch");
    if (rs.positive.size() * 2 != rs.roots.size()) o.fail(row.label + " positive half mismatch");
    // every root has an opposite partner with the same multiplicity
    for (const RestrictedRoot& r : rs.roots) {
      bool found = false;
      for (const RestrictedRoot& s : rs.roots)
        if ((r.alpha + s.alpha).norm() < 1e-8 && r.multiplicity == s.multiplicity) found = true;
      if (!found) o.fail(row.label + " missing opposite root");
    }
    int p_dim = static_cast<int>(rs.root_sum_a.size());
    for (int idx : rs.positive) p_dim += rs.roots[idx].multiplicity;
    if (p_dim != sp.cartan.dim_p) o.fail(row.label + " dimension bookkeeping mismatch");
  }
  const auto norm_of = [&](const std::string& label) {
    for (size_t i = 0; i < spaces.size(); ++i)
      if (catalog()[i].label == label) return spaces[i].roots.root_sum_norm;
    return -1.0;
  };
  if (!within(norm_of("sl:2"), 1.0 / std::sqrt(2.0), 1e-10)) o.fail("sl:2 root sum norm oracle");
  if (!within(norm_of("sl:3"), 2.0 / std::sqrt(3.0), 1e-10)) o.fail("sl:3 root sum norm oracle");
  if (!within(norm_of("so:4,1"), std::sqrt(1.5), 1e-10)) o.fail("so:4,1 root sum norm oracle");
  return o;
}

Outcome criterion_jacobi(const std::vector<Space>& spaces) {
  Outcome o;
  for (size_t i = 0; i < spaces.size(); ++i) {
    const Space& sp = spaces[i];
    CounterRng rng(42, 9203 + static_cast<std::uint64_t>(i));
    for (int draw = 0; draw < 20; ++draw) {
      Eigen::VectorXd v = gaussian(rng, sp.cartan.dim_p);
      v.normalize();
      const AlgebraElement xi = sp.algebra.element(sp.cartan.p_cols() * v);
      const double err = jacobi_max_relative_error(sp, xi, 5.0, 5000);
      if (!(err < 1e-5)) {
        o.fail(catalog()[i].label + " propagated fields drift from the closed form");
        break;
      }
    }
  }
  return o;
}

Outcome criterion_entropy() {
  Outcome o;
  struct Run {
    std::string space;
    double rel;
  };
  const std::vector<Run> runs{{"sl:2", 0.05}, {"so:4,1", 0.05}, {"sl:3", 0.10}};
  const auto start = std::chrono::steady_clock::now();
  for (const Run& r : runs) {
    std::ostringstream out, err;
    const int code = run_cli({"verify", "entropy", "--space", r.space, "--seed", "42",
                              "--samples", "100000", "--r1", "10", "--r2", "20", "--json"},
                             out, err);
    if (code != 0) {
      o.fail(r.space + " entropy verification exited with " + std::to_string(code));
      continue;
    }
    const json doc = json::parse(out.str());
    bool seen = false;
    for (const auto& c : doc["checks"]) {
      if (!c["passed"]) o.fail(r.space + " check " + std::string(c["name"]) + " failed");
      if (c["name"] == "entropy_matches_isoperimetric") {
        seen = true;
        const double measured = c["measured"];
        const double expected = c["expected"];
        if (std::abs(measured - expected) > r.rel * std::abs(expected))
          o.fail(r.space + " estimate outside the stated band");
      }
    }
    if (!seen) o.fail(r.space + " entropy comparison missing");
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 300.0) o.fail("entropy runs exceeded the single-thread time budget");
  return o;
}

Outcome criterion_busemann() {
  Outcome o;
  for (int n : {2, 3}) {
    const Space sp = Space::build(Family::sl, {n});
    const AlgebraElement ray =
        sp.algebra.element(sp.roots.root_sum.coeffs / sp.roots.root_sum_norm);
    CounterRng rng(42, 55);
    Eigen::VectorXd v = gaussian(rng, sp.cartan.dim_p);
    v.normalize();
    const Eigen::MatrixXd off = sp.algebra.to_matrix(sp.algebra.element(sp.cartan.p_cols() * v));
    const Eigen::MatrixXd x =
        spd_geodesic(Eigen::MatrixXd::Identity(n, n), off, 1.0);

    double prev_err = -1.0;
    bool monotone = true;
    double err50 = -1.0, rel100 = -1.0;
    for (double k : {10.0, 20.0, 50.0, 100.0}) {
      const BusemannProbe probe = busemann_probe(sp, ray, x, k, 5e-3);
      const double err = std::abs(probe.fd_laplacian - probe.limit_laplacian);
      if (prev_err >= 0.0 && err > prev_err + 5e-7) monotone = false;
      prev_err = err;
      if (k == 50.0)
        err50 = std::abs(probe.fd_laplacian - probe.predicted_laplacian) /
                std::abs(probe.predicted_laplacian);
      if (k == 100.0)
        rel100 = std::abs(probe.fd_laplacian - probe.limit_laplacian) /
                 std::abs(probe.limit_laplacian);
    }
    const std::string label = "sl:" + std::to_string(n);
    if (!(err50 <= 1e-3)) o.fail(label + " finite horosphere prediction off at mid range");
    if (!(rel100 <= 0.02)) o.fail(label + " laplacian far from the entropy limit");
    if (!monotone) o.fail(label + " probe error fails to shrink with the ray parameter");
  }
  return o;
}

Outcome criterion_spectral_bounds(const std::vector<Space>& spaces) {
  Outcome o;
  for (size_t i = 0; i < spaces.size(); ++i) {
    const Space& sp = spaces[i];
    const SpaceInvariants inv = space_invariants(sp);
    if (!within(inv.lambda0, inv.isoperimetric * inv.isoperimetric / 4.0, 1e-12) ||
        !within(inv.lambda0, inv.entropy * inv.entropy / 4.0, 1e-12))
      o.fail(catalog()[i].label + " two-sided spectral bound not tight");
    const SupremumResult sup = mean_curvature_supremum(sp, 10000, 42);
    const double target = sp.roots.root_sum_norm;
    if (!(sup.value >= 0.999 * target && sup.value <= (1.0 + 1e-9) * target))
      o.fail(catalog()[i].label + " sampled supremum outside the bracket");
  }
  return o;
}

Outcome criterion_structure(const std::vector<Space>& spaces) {
  Outcome o;
  VerifyOptions opts;
  for (size_t i = 0; i < spaces.size(); ++i) {
    const VerificationReport rep = verify_roots(spaces[i], opts);
    if (!rep.all_passed()) {
      for (const Check& c : rep.checks)
        if (!c.passed) {
          o.fail(catalog()[i].label + " structural check " + c.name + " failed");
          break;
        }
    }
  }
  return o;
}

}  // namespace

int main() {
  std::vector<Space> spaces;
  for (const NamedSpace& ns : catalog()) spaces.push_back(Space::build(ns.family, ns.params));

  struct Line {
    std::string label;
    Outcome outcome;
  };
  std::vector<Line> lines;
  lines.push_back({"rank-one spaces at constant curvature -1", criterion_hyperbolic_normalized()});
  lines.push_back({"closed-form invariants across eight spaces", criterion_closed_form_invariants(spaces)});
  lines.push_back({"radial curvature spectrum vs root data", criterion_curvature_spectrum(spaces)});
  lines.push_back({"horosphere mean curvature linear on the chamber", criterion_mean_curvature_linear(spaces)});
  lines.push_back({"root system integer data and norm oracles", criterion_root_data(spaces)});
  lines.push_back({"jacobi propagation against the closed form", criterion_jacobi(spaces)});
  lines.push_back({"monte carlo volume entropy", criterion_entropy()});
  lines.push_back({"finite horosphere laplacian probes", criterion_busemann()});
  lines.push_back({"spectral bounds and chamber supremum", criterion_spectral_bounds(spaces)});
  lines.push_back({"structural verification suite", criterion_structure(spaces)});

  int failed = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::ostringstream tag;
    tag << "[" << std::setw(2) << (i + 1) << "/" << lines.size() << "] ";
    std::cout << tag.str() << std::left << std::setw(50) << lines[i].label
              << (lines[i].outcome.ok ? "PASS" : "FAIL") << "\n";
    if (!lines[i].outcome.ok) {
      ++failed;
      std::cout << "        " << lines[i].outcome.note << "\n";
    }
  }
  std::cout << lines.size() << " criteria, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}
