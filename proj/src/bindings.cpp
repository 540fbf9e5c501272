#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <sstream>

#include "symmspace/cli.hpp"
#include "symmspace/errors.hpp"
#include "symmspace/invariants.hpp"
#include "symmspace/jacobi_fields.hpp"
#include "symmspace/root_system.hpp"
#include "symmspace/space_spec.hpp"
#include "symmspace/spd_model.hpp"
#include "symmspace/verify.hpp"
#include "symmspace/volume_growth.hpp"

namespace py = pybind11;
using namespace symmspace;

namespace {

std::string space_label(const Space& sp) {
  std::string out = family_name(sp.algebra.family()) + ":";
  const std::vector<int>& params = sp.algebra.params();
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out;
}

/// Tangent element from coordinates over the orthonormal tangent frame.
AlgebraElement tangent_element(const Space& sp, const Eigen::VectorXd& frame_coords) {
  if (frame_coords.size() != sp.cartan.dim_p)
    throw DomainError("expected " + std::to_string(sp.cartan.dim_p) +
                      " tangent frame coordinates");
  return sp.algebra.element(sp.cartan.p_cols() * frame_coords);
}

Eigen::VectorXd frame_coords(const Space& sp, const AlgebraElement& x) {
  return (sp.cartan.to_frame * x.coeffs).tail(sp.cartan.dim_p);
}

py::dict invariants_dict(const SpaceInvariants& inv) {
  py::dict d;
  d["isoperimetric"] = inv.isoperimetric;
  d["entropy"] = inv.entropy;
  d["lambda0"] = inv.lambda0;
  d["root_sum_norm"] = inv.root_sum_norm;
  d["dimension"] = inv.dimension;
  d["rank"] = inv.rank;
  d["metric_scale"] = inv.metric_scale;
  return d;
}

py::dict report_dict(const VerificationReport& rep) {
  py::dict d;
  d["space"] = rep.space;
  d["seed"] = rep.seed;
  d["metric"] = rep.metric;
  py::list checks;
  for (const Check& c : rep.checks) {
    py::dict row;
    row["name"] = c.name;
    row["measured"] = c.measured;
    row["expected"] = c.expected;
    row["tolerance"] = c.tolerance;
    row["passed"] = c.passed;
    checks.append(row);
  }
  d["checks"] = checks;
  d["all_passed"] = rep.all_passed();
  return d;
}

VerificationReport dispatch_verify(const Space& sp, const std::string& target,
                                   const VerifyOptions& opts) {
  if (target == "roots") return verify_roots(sp, opts);
  if (target == "curvature") return verify_curvature(sp, opts);
  if (target == "jacobi") return verify_jacobi(sp, opts);
  if (target == "entropy") return verify_entropy(sp, opts);
  if (target == "busemann") return verify_busemann(sp, opts);
  if (target == "cheeger") return verify_cheeger(sp, opts);
  if (target == "sup") return verify_sup(sp, opts);
  if (target == "all") return verify_all(sp, opts);
  throw DomainError("unknown verification target '" + target + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Isoperimetric constant, volume entropy and spectral bottom of "
            "symmetric spaces of noncompact type, computed from matrix Lie "
            "algebra realizations.";

  py::class_<Space>(m, "Space")
      .def(py::init([](const std::string& text, std::uint64_t seed) {
             const SpaceSpec spec = parse_space_spec(text);
             return Space::build(spec.family, spec.params, seed);
           }),
           py::arg("text"), py::arg("seed") = 42,
           "Build a space from a description like 'sl:3', 'so:4,1' or "
           "'hyperbolic:2'.")
      .def_property_readonly("label", &space_label)
      .def_property_readonly("rank",
                             [](const Space& sp) { return static_cast<int>(sp.abelian.rank); })
      .def_property_readonly("dimension", [](const Space& sp) { return sp.cartan.dim_p; })
      .def_property_readonly("algebra_dimension", [](const Space& sp) { return sp.algebra.dim(); })
      .def_property_readonly(
          "flat_frame",
          [](const Space& sp) {
            Eigen::MatrixXd cols(sp.cartan.dim_p, sp.abelian.rank);
            for (int i = 0; i < sp.abelian.rank; ++i)
              cols.col(i) = frame_coords(sp, sp.abelian.basis[i]);
            return cols;
          },
          "Tangent frame coordinates of an orthonormal basis of the maximal "
          "flat, one column per basis vector.")
      .def_property_readonly(
          "radial_direction",
          [](const Space& sp) {
            const AlgebraElement h =
                sp.algebra.element(sp.roots.root_sum.coeffs / sp.roots.root_sum_norm);
            return frame_coords(sp, h);
          },
          "Unit tangent frame coordinates of the weighted root sum direction.")
      .def(
          "roots",
          [](const Space& sp) {
            py::list out;
            for (size_t i = 0; i < sp.roots.roots.size(); ++i) {
              const RestrictedRoot& r = sp.roots.roots[i];
              py::dict row;
              row["coords"] = r.alpha;
              row["multiplicity"] = r.multiplicity;
              row["positive"] =
                  std::find(sp.roots.positive.begin(), sp.roots.positive.end(),
                            static_cast<int>(i)) != sp.roots.positive.end();
              out.append(row);
            }
            return out;
          },
          "Restricted roots as linear functionals over the flat basis, with "
          "multiplicities and the chosen positive half.")
      .def("invariants",
           [](const Space& sp) { return invariants_dict(space_invariants(sp)); })
      .def(
          "rescaled_invariants",
          [](const Space& sp, double factor) {
            return invariants_dict(rescale_invariants(space_invariants(sp), factor));
          },
          py::arg("factor"),
          "Invariants after multiplying the metric by the given factor.")
      .def(
          "curvature_spectrum",
          [](const Space& sp, const Eigen::VectorXd& direction) {
            const CurvatureSpectrum cs = curvature_spectrum(sp, tangent_element(sp, direction));
            py::dict d;
            d["eigenvalues"] = cs.eigenvalues;
            d["zero_count"] = cs.zero_count;
            return d;
          },
          py::arg("direction"),
          "Eigenvalues of the radial curvature operator for the normalized "
          "direction (tangent frame coordinates).")
      .def(
          "mean_curvature",
          [](const Space& sp, const Eigen::VectorXd& direction) {
            return horosphere_mean_curvature(sp, tangent_element(sp, direction));
          },
          py::arg("direction"),
          "Mean curvature of the horosphere orthogonal to the direction, "
          "scaled by the direction's length.")
      .def(
          "mean_curvature_supremum",
          [](const Space& sp, long samples, std::uint64_t seed) {
            const SupremumResult r = mean_curvature_supremum(sp, samples, seed);
            py::dict d;
            d["value"] = r.value;
            d["argmax"] = frame_coords(sp, r.argmax);
            return d;
          },
          py::arg("samples") = 10000, py::arg("seed") = 42)
      .def(
          "sectional_curvature",
          [](const Space& sp, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
            return sectional_curvature(sp, tangent_element(sp, x), tangent_element(sp, y));
          },
          py::arg("x"), py::arg("y"))
      .def("max_sectional_curvature",
           [](const Space& sp) { return max_sectional_curvature(sp); })
      .def(
          "jacobi_error",
          [](const Space& sp, const Eigen::VectorXd& direction, double t_max, long steps) {
            return jacobi_max_relative_error(sp, tangent_element(sp, direction), t_max,
                                             static_cast<int>(steps));
          },
          py::arg("direction"), py::arg("t_max") = 5.0, py::arg("steps") = 5000,
          "Largest relative gap between integrated and closed-form field "
          "magnitudes along the direction.")
      .def(
          "ball_volume",
          [](const Space& sp, double radius, long samples, std::uint64_t seed, int threads) {
            const VolumeEstimate v = ball_volume(sp, radius, samples, seed, threads);
            py::dict d;
            d["log_volume"] = v.log_volume;
            d["std_error"] = v.std_error;
            d["samples"] = v.samples;
            d["insufficient"] = v.insufficient;
            return d;
          },
          py::arg("radius"), py::arg("samples") = 100000, py::arg("seed") = 42,
          py::arg("threads") = 1)
      .def(
          "entropy_curve",
          [](const Space& sp, double r1, double r2, long samples, std::uint64_t seed,
             int threads) {
            const VolumeGrowthCurve c = entropy_curve(sp, r1, r2, samples, seed, threads);
            py::dict d;
            d["radii"] = c.radii;
            d["log_volumes"] = c.log_volumes;
            d["samples"] = c.samples;
            d["seed"] = c.seed;
            d["entropy"] = c.entropy;
            d["half_width"] = c.half_width;
            d["insufficient"] = c.insufficient;
            return d;
          },
          py::arg("r1") = 10.0, py::arg("r2") = 20.0, py::arg("samples") = 100000,
          py::arg("seed") = 42, py::arg("threads") = 1)
      .def(
          "geodesic_point",
          [](const Space& sp, const Eigen::VectorXd& direction, double t) {
            if (sp.algebra.family() != Family::sl)
              throw UnsupportedFamily(
                  "the matrix chart realizes the sl family only");
            const int n = sp.algebra.rep_size();
            return spd_geodesic(Eigen::MatrixXd::Identity(n, n),
                                sp.algebra.to_matrix(tangent_element(sp, direction)), t);
          },
          py::arg("direction"), py::arg("t"),
          "Point reached from the base of the unit determinant chart along "
          "the direction (sl family).")
      .def(
          "busemann_probe",
          [](const Space& sp, const Eigen::MatrixXd& at, double ray_parameter, double step,
             std::optional<Eigen::VectorXd> direction) {
            AlgebraElement ray =
                sp.algebra.element(sp.roots.root_sum.coeffs / sp.roots.root_sum_norm);
            if (direction) ray = tangent_element(sp, *direction);
            const BusemannProbe p = busemann_probe(sp, ray, at, ray_parameter, step);
            py::dict d;
            d["busemann_value"] = p.busemann_value;
            d["fd_laplacian"] = p.fd_laplacian;
            d["predicted_laplacian"] = p.predicted_laplacian;
            d["limit_laplacian"] = p.limit_laplacian;
            d["step"] = p.step;
            d["ray_parameter"] = p.ray_parameter;
            return d;
          },
          py::arg("at"), py::arg("ray_parameter") = 50.0, py::arg("step") = 0.0,
          py::arg("direction") = py::none(),
          "Finite horosphere measurement toward a far ray point, with the "
          "finite difference laplacian against its closed-form prediction; "
          "the direction defaults to the normalized weighted root sum.")
      .def(
          "verify",
          [](const Space& sp, const std::string& target, std::uint64_t seed, long samples,
             double r1, double r2, double tol, int threads) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.samples = samples;
            opts.r1 = r1;
            opts.r2 = r2;
            opts.tol_override = tol;
            opts.threads = threads;
            return report_dict(dispatch_verify(sp, target, opts));
          },
          py::arg("target") = "all", py::arg("seed") = 42, py::arg("samples") = 100000,
          py::arg("r1") = 10.0, py::arg("r2") = 20.0, py::arg("tol") = 0.0,
          py::arg("threads") = 1,
          "Run one verification suite ('roots', 'curvature', 'jacobi', "
          "'entropy', 'busemann', 'cheeger', 'sup' or 'all') and return its "
          "report.")
      .def("__repr__",
           [](const Space& sp) { return "<symmspace.Space " + space_label(sp) + ">"; });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(std::vector<std::string>(args), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"),
      "Run the command line interface in process; returns (exit_code, stdout, "
      "stderr).");

  m.attr("__version__") = "0.1.0";
}
