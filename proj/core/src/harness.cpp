#include "vfbound/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "vfbound/errors.hpp"
#include "vfbound/polytope_io.hpp"
#include "vfbound/report_io.hpp"
#include "vfbound/svg_plot.hpp"

namespace vfbound {

namespace {

BoundCheck explicit_mean_width_bound(int n, double count, double radius, const Estimate& est) {
  BoundCheck c;
  const double log_count = std::log(count);
  c.applicable = log_count < n / 4.0;
  c.lhs = est.value;
  c.rhs = radius * (std::sqrt(4.0 * log_count / n) + 1.0 / count);
  c.margin = c.rhs + kSigmaMargin * est.std_error - c.lhs;
  if (!c.applicable) {
    c.status = CheckStatus::VacuousPass;
  } else {
    c.status = c.margin >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
  }
  return c;
}

CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

template <typename T>
std::vector<T> json_list(const nlohmann::json& entry, const char* plural, const char* singular, std::vector<T> fallback) {
  if (entry.contains(plural)) {
    const auto& v = entry[plural];
    if (v.is_array()) return v.get<std::vector<T>>();
    return {v.get<T>()};
  }
  if (entry.contains(singular)) return {entry[singular].get<T>()};
  return fallback;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::VacuousPass: return "vacuous";
    case CheckStatus::Fail: return "fail";
  }
  return "unknown";
}

CheckStatus check_status_from_string(const std::string& name) {
  for (CheckStatus s : {CheckStatus::Pass, CheckStatus::VacuousPass, CheckStatus::Fail}) {
    if (to_string(s) == name) return s;
  }
  throw InvalidArgument("unknown check status '" + name + "'");
}

bool InstanceReport::passed() const {
  if (!error.empty() || checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return vfbound::passed(c.status); });
}

BoundCheck verify_lemma4(int n, double num_vertices, double circumradius, const Estimate& mstar) {
  return explicit_mean_width_bound(n, num_vertices, circumradius, mstar);
}

BoundCheck verify_lemma4(const Polytope& p, const Estimate& mstar) {
  return verify_lemma4(p.dim(), face_counts(p).num_vertices, circumradius(p), mstar);
}

BoundCheck verify_eq1(int n, double num_facets, double inradius, const Estimate& m) {
  return explicit_mean_width_bound(n, num_facets, 1.0 / inradius, m);
}

BoundCheck verify_eq1(const Polytope& p, const Estimate& m) {
  return verify_eq1(p.dim(), face_counts(p).num_facets, inradius(p), m);
}

bool verify_chain(InstanceReport& rep, double john_tol) {
  const double n = rep.n;
  const double ratio = rep.r / rep.R;
  rep.trivial_product = rep.m_est.value * rep.mstar_est.value;
  rep.trivial_product_se = product_std_error(rep.m_est, rep.mstar_est);
  rep.chain_lhs = std::log(rep.num_vertices) * std::log(rep.num_facets);
  rep.chain_rhs_factor = n * n * ratio * ratio * rep.trivial_product * rep.trivial_product;
  const double product_low = std::max(0.0, rep.trivial_product - kSigmaMargin * rep.trivial_product_se);
  rep.chain_derived_rhs = kChainConstant * n * n * ratio * ratio * product_low * product_low;
  rep.empirical_c = rep.chain_lhs / n;

  // The inversion behind kChainConstant needs both counts >= n + 1.
  const bool counts_ok = rep.num_vertices >= n + 1 && rep.num_facets >= n + 1;
  const NamedCheck checks[] = {
      {"trivial_bound", status_of(rep.trivial_product >= 1.0 - kSigmaMargin * rep.trivial_product_se)},
      {"john_ratio", status_of(ratio >= (1.0 - 10.0 * john_tol) / std::sqrt(n))},
      {"chain_derived", status_of(counts_ok && rep.chain_lhs >= rep.chain_derived_rhs)},
      {"chain_linear", status_of(rep.chain_lhs >= kChainConstant * n)},
  };
  bool ok = true;
  for (const auto& c : checks) {
    ok = ok && passed(c.status);
    rep.checks.push_back(c);
  }
  return ok;
}

HarnessConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  HarnessConfig cfg;
  try {
    cfg.options.samples = j.value("samples", cfg.options.samples);
    cfg.options.seed = j.value("seed", cfg.options.seed);
    cfg.options.john_tol = j.value("john_tol", cfg.options.john_tol);
    cfg.options.parallel = j.value("parallel", cfg.options.parallel);
    const auto families = j.value("families", nlohmann::json::array());
    if (!families.is_array()) throw InvalidArgument("'families' must be an array");
    for (const auto& entry : families) {
      const Family fam = family_from_string(entry.at("family").get<std::string>());
      if (fam == Family::File) {
        FamilySpec spec;
        spec.family = fam;
        std::filesystem::path path = entry.at("path").get<std::string>();
        if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
        spec.path = path.string();
        spec.dim = load_polytope_json(spec.path).dim();
        cfg.instances.push_back(spec);
        continue;
      }
      const bool random = fam == Family::RandomSign || fam == Family::RandomGaussianSymmetric;
      const auto dims = json_list<int>(entry, "dims", "dim", {});
      if (dims.empty()) throw InvalidArgument("family entry needs 'dim' or 'dims'");
      const auto pairs = json_list<int>(entry, "pairs", "m", {0});
      const auto seeds = json_list<std::uint64_t>(entry, "seeds", "seed", {0});
      for (int d : dims) {
        for (int m : random ? pairs : std::vector<int>{0}) {
          for (std::uint64_t s : random ? seeds : std::vector<std::uint64_t>{0}) {
            FamilySpec spec;
            spec.family = fam;
            spec.dim = d;
            spec.pairs = m;
            spec.seed = s;
            cfg.instances.push_back(spec);
          }
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed config: ") + e.what());
  }
  if (cfg.options.samples < 2) throw InvalidArgument("config 'samples' must be >= 2");
  return cfg;
}

HarnessConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("malformed config JSON in " + path.string() + ": " + e.what());
  }
  return parse_config(j, path.parent_path());
}

std::uint64_t instance_seed(std::uint64_t run_seed, std::size_t index) noexcept {
  return derive_seed(run_seed, 0xC0FFEE00ULL + index);
}

InstanceReport run_instance(const FamilySpec& spec, const HarnessOptions& options, std::uint64_t sample_seed,
                            unsigned threads) {
  InstanceReport rep;
  rep.spec = spec.label();
  rep.family = to_string(spec.family);
  rep.n = spec.dim;
  rep.m_est.seed = rep.mstar_est.seed = sample_seed;
  try {
    const Polytope generated = generate(spec);
    const CountMethod method = count_method_for(generated);
    Polytope p = with_both_representations(generated);
    rep.n = p.dim();
    const double slack = 10.0 * options.john_tol;
    if (!in_john_position(p, slack) && p.symmetric()) {
      const MveeResult mvee = mvee_symmetric(p.vrep().materialize(), options.john_tol);
      p = apply_transform(p, john_map(mvee.ellipsoid));
      rep.transformed = true;
      rep.john_gap = mvee.gap;
    }
    const auto violations = validate(p);
    rep.checks.push_back({"valid", status_of(violations.empty())});

    const FaceCounts counts = face_counts(p);
    rep.num_vertices = counts.num_vertices;
    rep.num_facets = counts.num_facets;
    rep.count_method = method;
    rep.r = inradius(p);
    rep.R = circumradius(p);

    const SphereSample sample = sample_sphere(p.dim(), options.samples, sample_seed, threads);
    const Vector g = gauge_rows(p, sample.points);
    const Vector h = support_rows(p, sample.points);
    rep.m_est = mean_estimate(g, sample_seed);
    rep.mstar_est = mean_estimate(h, sample_seed);
    rep.pointwise_min = (g.array() * h.array()).minCoeff();
    rep.checks.push_back({"pointwise_product", status_of(rep.pointwise_min >= 1.0 - 1e-12)});

    rep.lemma4 = verify_lemma4(rep.n, rep.num_vertices, rep.R, rep.mstar_est);
    rep.eq1 = verify_eq1(rep.n, rep.num_facets, rep.r, rep.m_est);
    rep.checks.push_back({"lemma4", rep.lemma4.status});
    rep.checks.push_back({"eq1", rep.eq1.status});
    verify_chain(rep, options.john_tol);
  } catch (const Error& e) {
    rep.error = e.what();
  }
  return rep;
}

ExperimentResult run_instances(const HarnessConfig& config) {
  ExperimentResult result;
  const std::size_t count = config.instances.size();
  result.reports.resize(count);
  const std::size_t workers = std::clamp<std::size_t>(config.options.parallel, 1, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      result.reports[i] = run_instance(config.instances[i], config.options, instance_seed(config.options.seed, i));
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const auto& rep : result.reports) {
    if (!rep.passed()) result.failures.push_back(rep.spec);
    if (std::isfinite(rep.empirical_c) &&
        (std::isnan(result.min_empirical_c) || rep.empirical_c < result.min_empirical_c)) {
      result.min_empirical_c = rep.empirical_c;
      result.min_empirical_c_instance = rep.spec;
    }
  }
  return result;
}

nlohmann::json summary_json(const ExperimentResult& result, const HarnessOptions& options) {
  nlohmann::json j;
  j["instances"] = result.reports.size();
  j["passed"] = result.reports.size() - result.failures.size();
  j["failures"] = result.failures;
  if (std::isnan(result.min_empirical_c)) {
    j["min_empirical_c"] = nullptr;
  } else {
    j["min_empirical_c"] = result.min_empirical_c;
  }
  j["min_empirical_c_instance"] = result.min_empirical_c_instance;
  j["chain_constant"] = kChainConstant;
  j["samples"] = options.samples;
  j["seed"] = options.seed;
  j["john_tol"] = options.john_tol;
  j["all_passed"] = result.all_passed();
  return j;
}

ExperimentResult run_experiment(const HarnessConfig& config, const std::filesystem::path& out_dir) {
  ExperimentResult result = run_instances(config);
  std::filesystem::create_directories(out_dir / "plots");
  std::ostringstream csv;
  write_report_csv(csv, result.reports);
  write_file_atomically(out_dir / "report.csv", csv.str());
  write_file_atomically(out_dir / "summary.json", summary_json(result, config.options).dump(2) + "\n");
  write_file_atomically(out_dir / "plots" / "empirical_c.svg", empirical_c_svg(result.reports));
  return result;
}

}  // namespace vfbound
