#include "symmspace/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symmspace/errors.hpp"
#include "symmspace/invariants.hpp"
#include "symmspace/report.hpp"
#include "symmspace/root_system.hpp"
#include "symmspace/space_spec.hpp"
#include "symmspace/verify.hpp"

namespace symmspace {
namespace {

struct CliState {
  std::string space_text;
  bool json = false;
  std::uint64_t seed = 42;
  VerifyOptions verify;
  double normalize_curvature = 0.0;
  bool has_normalize = false;
  std::string target;
};

void add_common(CLI::App* sub, CliState& st) {
  sub->add_option("--space", st.space_text,
                  "Space to use: sl:n, so:p,q, su:p,q, sp:n or hyperbolic:n")
      ->required();
  sub->add_flag("--json", st.json, "Emit machine readable JSON instead of text");
  sub->add_option("--seed", st.seed, "Seed for every pseudo-random draw")
      ->capture_default_str();
}

std::string join_coords(const Eigen::VectorXd& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_real(v[i]);
  }
  return out;
}

int run_info(const SpaceSpec& spec, const Space& sp, const CliState& st, std::ostream& out) {
  const int root_count = static_cast<int>(sp.roots.roots.size());
  const int positive_count = static_cast<int>(sp.roots.positive.size());
  if (st.json) {
    out << "{\n"
        << "  \"space\": \"" << json_escape(spec.text) << "\",\n"
        << "  \"family\": \"" << family_name(sp.algebra.family()) << "\",\n"
        << "  \"rank\": " << sp.abelian.rank << ",\n"
        << "  \"dimension\": " << sp.cartan.dim_p << ",\n"
        << "  \"algebra_dimension\": " << sp.algebra.dim() << ",\n"
        << "  \"compact_dimension\": " << sp.cartan.dim_t << ",\n"
        << "  \"root_count\": " << root_count << ",\n"
        << "  \"positive_root_count\": " << positive_count << ",\n"
        << "  \"metric\": \"killing\"\n"
        << "}\n";
  } else {
    out << "space: " << spec.text << "\n"
        << "family: " << family_name(sp.algebra.family()) << "\n"
        << "rank: " << sp.abelian.rank << "\n"
        << "dimension: " << sp.cartan.dim_p << "\n"
        << "algebra_dimension: " << sp.algebra.dim() << "\n"
        << "compact_dimension: " << sp.cartan.dim_t << "\n"
        << "root_count: " << root_count << "\n"
        << "positive_root_count: " << positive_count << "\n"
        << "metric: killing\n";
  }
  return 0;
}

int run_roots(const SpaceSpec& spec, const Space& sp, const CliState& st, std::ostream& out) {
  const RootSystem& rs = sp.roots;
  const auto is_positive = [&](int idx) {
    return std::find(rs.positive.begin(), rs.positive.end(), idx) != rs.positive.end();
  };
  if (st.json) {
    out << "{\n"
        << "  \"space\": \"" << json_escape(spec.text) << "\",\n"
        << "  \"rank\": " << sp.abelian.rank << ",\n"
        << "  \"metric\": \"killing\",\n"
        << "  \"roots\": [\n";
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      const RestrictedRoot& root = rs.roots[i];
      out << "    {\"coords\": [";
      for (int j = 0; j < root.alpha.size(); ++j) {
        if (j) out << ", ";
        out << format_real(root.alpha[j]);
      }
      out << "], \"norm\": " << format_real(root.alpha.norm())
          << ", \"multiplicity\": " << root.multiplicity
          << ", \"positive\": " << (is_positive(static_cast<int>(i)) ? "true" : "false") << "}"
          << (i + 1 < rs.roots.size() ? "," : "") << "\n";
    }
    out << "  ],\n"
        << "  \"root_sum_norm\": " << format_real(rs.root_sum_norm) << "\n"
        << "}\n";
  } else {
    out << "space: " << spec.text << "  (rank " << sp.abelian.rank << ", "
        << rs.roots.size() << " restricted roots, " << rs.positive.size()
        << " positive)\n";
    for (size_t i = 0; i < rs.roots.size(); ++i) {
      const RestrictedRoot& root = rs.roots[i];
      out << "  root " << i << ": coords (" << join_coords(root.alpha) << ")  norm "
          << format_real(root.alpha.norm()) << "  multiplicity " << root.multiplicity
          << (is_positive(static_cast<int>(i)) ? "  positive" : "") << "\n";
    }
    out << "root_sum_norm: " << format_real(rs.root_sum_norm) << "\n";
  }
  return 0;
}

int run_invariants(const SpaceSpec& spec, const Space& sp, const CliState& st, std::ostream& out,
                   std::ostream& err) {
  SpaceInvariants inv = space_invariants(sp);
  if (st.has_normalize) {
    if (sp.abelian.rank != 1) {
      err << "error: --normalize-curvature requires a rank-one space; " << spec.text
          << " has rank " << sp.abelian.rank << "\n";
      return 2;
    }
    if (!(st.normalize_curvature < 0.0)) {
      err << "error: --normalize-curvature expects a negative target value\n";
      return 2;
    }
    const double current = max_sectional_curvature(sp);
    inv = rescale_invariants(inv, current / st.normalize_curvature);
  }
  if (st.json) {
    out << "{\n"
        << "  \"space\": \"" << json_escape(spec.text) << "\",\n"
        << "  \"isoperimetric\": " << format_real(inv.isoperimetric) << ",\n"
        << "  \"entropy\": " << format_real(inv.entropy) << ",\n"
        << "  \"lambda0\": " << format_real(inv.lambda0) << ",\n"
        << "  \"root_sum_norm\": " << format_real(inv.root_sum_norm) << ",\n"
        << "  \"dimension\": " << inv.dimension << ",\n"
        << "  \"rank\": " << inv.rank << ",\n"
        << "  \"metric_scale\": " << format_real(inv.metric_scale) << ",\n"
        << "  \"metric\": \"killing\"\n"
        << "}\n";
  } else {
    out << "space: " << spec.text << "\n"
        << "isoperimetric: " << format_real(inv.isoperimetric) << "\n"
        << "entropy: " << format_real(inv.entropy) << "\n"
        << "lambda0: " << format_real(inv.lambda0) << "\n"
        << "root_sum_norm: " << format_real(inv.root_sum_norm) << "\n"
        << "dimension: " << inv.dimension << "\n"
        << "rank: " << inv.rank << "\n"
        << "metric_scale: " << format_real(inv.metric_scale) << "\n"
        << "metric: killing\n";
  }
  return 0;
}

int run_verify(const SpaceSpec& spec, const Space& sp, const CliState& st, std::ostream& out,
               std::ostream& err) {
  VerifyOptions opts = st.verify;
  opts.seed = st.seed;
  if (opts.r2 <= opts.r1) {
    err << "error: --r2 must exceed --r1\n";
    return 2;
  }

  using Suite = VerificationReport (*)(const Space&, const VerifyOptions&);
  Suite suite = nullptr;
  if (st.target == "roots") suite = verify_roots;
  else if (st.target == "curvature") suite = verify_curvature;
  else if (st.target == "jacobi") suite = verify_jacobi;
  else if (st.target == "entropy") suite = verify_entropy;
  else if (st.target == "busemann") suite = verify_busemann;
  else if (st.target == "cheeger") suite = verify_cheeger;
  else if (st.target == "sup") suite = verify_sup;
  else if (st.target == "all") suite = verify_all;

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = suite(sp, opts);
  const auto stop = std::chrono::steady_clock::now();
  report.space = spec.text;
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
          .count();

  if (st.json) {
    out << render_json(report);
  } else {
    out << render_table(report);
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CliState st;
  CLI::App app{"Isoperimetric constant, volume entropy and spectral bottom of "
               "noncompact symmetric spaces from matrix algebra data"};
  app.name("symmspace");
  app.require_subcommand(1);

  CLI::App* info_cmd = app.add_subcommand("info", "Print structural data for a space");
  add_common(info_cmd, st);

  CLI::App* roots_cmd =
      app.add_subcommand("roots", "List the restricted roots with multiplicities");
  add_common(roots_cmd, st);

  CLI::App* inv_cmd =
      app.add_subcommand("invariants", "Print the asymptotic invariants of a space");
  add_common(inv_cmd, st);
  inv_cmd->add_option("--normalize-curvature", st.normalize_curvature,
                      "Rescale the metric so the maximal sectional curvature equals this "
                      "negative value (rank-one spaces only)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite and report each check");
  add_common(verify_cmd, st);
  verify_cmd
      ->add_option("target", st.target,
                   "Suite to run: roots, curvature, jacobi, entropy, busemann, cheeger, "
                   "sup or all")
      ->required()
      ->check(CLI::IsMember(
          {"roots", "curvature", "jacobi", "entropy", "busemann", "cheeger", "sup", "all"}));
  verify_cmd->add_option("--samples", st.verify.samples, "Monte Carlo sample count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--r1", st.verify.r1, "Inner radius for the entropy fit")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--r2", st.verify.r2, "Outer radius for the entropy fit")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd
      ->add_option("--tol", st.verify.tol_override,
                   "Override the relative tolerance of every two-sided comparison")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", st.verify.threads, "Worker threads for sampling")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  st.has_normalize = inv_cmd->count("--normalize-curvature") > 0;

  try {
    const SpaceSpec spec = parse_space_spec(st.space_text);
    const Space sp = Space::build(spec.family, spec.params, st.seed);
    if (*info_cmd) return run_info(spec, sp, st, out);
    if (*roots_cmd) return run_roots(spec, sp, st, out);
    if (*inv_cmd) return run_invariants(spec, sp, st, out, err);
    if (*verify_cmd) return run_verify(spec, sp, st, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace symmspace
