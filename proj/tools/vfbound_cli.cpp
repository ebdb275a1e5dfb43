#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vfbound/combinatorics.hpp"
#include "vfbound/errors.hpp"
#include "vfbound/harness.hpp"
#include "vfbound/polytope.hpp"
#include "vfbound/polytope_io.hpp"
#include "vfbound/sphere.hpp"

using namespace vfbound;

namespace {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

Vector parse_point(const std::string& text, int dim) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw InvalidArgument("bad coordinate '" + item + "'");
    xs.push_back(v);
  }
  if (static_cast<int>(xs.size()) != dim) {
    throw InvalidArgument("point has " + std::to_string(xs.size()) + " coordinates, polytope dimension is " +
                          std::to_string(dim));
  }
  return Eigen::Map<Vector>(xs.data(), dim);
}

// Completes the missing representation when enumeration is feasible, so the
// gauge of a vertex-only polytope and the row-wise estimates use a halfspace list.
Polytope completed_if_possible(const Polytope& p) {
  try {
    return with_both_representations(p);
  } catch (const Unsupported&) {
    return p;
  }
}

struct OneShot {
  std::string path;
  std::string point;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = 20240229;
};

int run_value(const OneShot& o, bool is_gauge) {
  const Polytope q = completed_if_possible(load_polytope_json(o.path));
  if (!o.point.empty()) {
    const Vector x = parse_point(o.point, q.dim());
    std::printf("%.17g\n", is_gauge ? gauge(q, x) : support(q, x));
    return 0;
  }
  const auto sample = sample_sphere(q.dim(), o.samples, o.seed);
  const Estimate e = is_gauge ? estimate_M(q, sample) : estimate_Mstar(q, sample);
  std::printf("%s %.17g std_error %.6g samples %zu seed %llu\n", is_gauge ? "M" : "Mstar", e.value, e.std_error,
              e.count, static_cast<unsigned long long>(e.seed));
  return 0;
}

int run_dual(const std::string& path, const std::string& out) {
  const nlohmann::json j = polytope_to_json(polar_dual(load_polytope_json(path)));
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    f << j.dump(2) << '\n';
  }
  return 0;
}

int run_counts(const std::string& path) {
  const Polytope p = load_polytope_json(path);
  const auto violations = validate(p);
  const FaceCounts fc = face_counts(p);
  std::printf("dim %d\nvertices %.17g\nfacets %.17g\nmethod %s\n", p.dim(), fc.num_vertices, fc.num_facets,
              to_string(fc.method).c_str());
  for (const auto& v : violations) std::printf("violation %s: %s\n", to_string(v.kind).c_str(), v.message.c_str());
  std::printf("valid %s\n", violations.empty() ? "yes" : "no");
  return violations.empty() ? 0 : kExitCheckFailed;
}

struct VerifyArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<unsigned> parallel;
};

int run_verify(const VerifyArgs& a) {
  HarnessConfig cfg = load_config(a.config);
  if (a.seed) cfg.options.seed = *a.seed;
  if (a.samples) cfg.options.samples = *a.samples;
  if (a.parallel) cfg.options.parallel = *a.parallel;
  const ExperimentResult res = run_experiment(cfg, a.out);
  std::printf("instances %zu\nfailures %zu\n", res.reports.size(), res.failures.size());
  for (const auto& f : res.failures) std::printf("failed %s\n", f.c_str());
  if (!res.reports.empty()) {
    std::printf("min_empirical_c %.6g (%s)\n", res.min_empirical_c, res.min_empirical_c_instance.c_str());
  }
  return res.all_passed() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-facet bound verification harness"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a config and write report.csv, summary.json, plots/");
  verify_cmd->add_option("--config", verify.config, "Harness config (JSON)")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--out", verify.out, "Output directory")->required();
  verify_cmd->add_option("--seed", verify.seed, "Override the run seed");
  verify_cmd->add_option("--samples", verify.samples, "Override sphere samples per estimate")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--parallel", verify.parallel, "Worker threads")->check(CLI::PositiveNumber);

  OneShot gauge_args;
  OneShot support_args;
  auto add_one_shot = [&](const char* name, const char* help, OneShot& o) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("polytope", o.path, "Polytope JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("--point", o.point, "Comma-separated point; omit for the sphere average");
    cmd->add_option("--samples", o.samples, "Sphere samples")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Sampling seed");
    return cmd;
  };
  auto* gauge_cmd = add_one_shot("gauge", "Gauge at a point, or M as a sphere average", gauge_args);
  auto* support_cmd = add_one_shot("support", "Support at a point, or M* as a sphere average", support_args);

  std::string dual_path;
  std::string dual_out;
  auto* dual_cmd = app.add_subcommand("dual", "Polar dual as polytope JSON");
  dual_cmd->add_option("polytope", dual_path, "Polytope JSON")->required()->check(CLI::ExistingFile);
  dual_cmd->add_option("-o,--output", dual_out, "Write to file instead of stdout");

  std::string counts_path;
  auto* counts_cmd = app.add_subcommand("counts", "Vertex and facet counts plus validation");
  counts_cmd->add_option("polytope", counts_path, "Polytope JSON")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*verify_cmd) return run_verify(verify);
    if (*gauge_cmd) return run_value(gauge_args, true);
    if (*support_cmd) return run_value(support_args, false);
    if (*dual_cmd) return run_dual(dual_path, dual_out);
    if (*counts_cmd) return run_counts(counts_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitError;
}
