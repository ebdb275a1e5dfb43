#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vfbound/combinatorics.hpp"
#include "vfbound/john.hpp"
#include "vfbound/polytope.hpp"
#include "vfbound/sphere.hpp"

namespace vfbound {

/// Statistical margin, in standard errors, for every Monte Carlo comparison.
inline constexpr double kSigmaMargin = 3.0;

/// Explicit constant of the composed chain L_V * L_F >= n^2 (r/R)^2 (M M*)^2 / 81.
///
/// Inverting M* <= R (sqrt(4 L_V / n) + e^{-L_V}) and the same bound for the
/// dual needs e^{-L} <= sqrt(L / n), which holds whenever the count is at
/// least n + 1; each bracket is then at most 3 sqrt(L / n).
inline constexpr double kChainConstant = 1.0 / 81.0;

enum class CheckStatus { Pass, VacuousPass, Fail };
std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& name);
inline bool passed(CheckStatus s) noexcept { return s != CheckStatus::Fail; }

/// One explicit inequality lhs <= rhs checked against a Monte Carlo lhs.
struct BoundCheck {
  /// Whether the hypothesis log(count) < n / 4 holds.
  bool applicable = false;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  /// rhs + 3 SE - lhs; non-negative iff the inequality holds within the margin.
  double margin = std::numeric_limits<double>::quiet_NaN();
  CheckStatus status = CheckStatus::Fail;
};

struct NamedCheck {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
};

struct InstanceReport {
  std::string spec;
  std::string family;
  int n = 0;
  double num_vertices = 0;
  double num_facets = 0;
  CountMethod count_method = CountMethod::Analytic;
  bool transformed = false;
  /// MVEE duality gap, 0 when no transform was applied.
  double john_gap = 0.0;
  double r = std::numeric_limits<double>::quiet_NaN();
  double R = std::numeric_limits<double>::quiet_NaN();
  Estimate m_est;
  Estimate mstar_est;
  /// min over the sample of gauge * support; >= 1 pointwise.
  double pointwise_min = std::numeric_limits<double>::quiet_NaN();
  double trivial_product = std::numeric_limits<double>::quiet_NaN();
  double trivial_product_se = std::numeric_limits<double>::quiet_NaN();
  BoundCheck lemma4;
  BoundCheck eq1;
  /// log|V| * log|F|
  double chain_lhs = std::numeric_limits<double>::quiet_NaN();
  /// n^2 (r/R)^2 (M M*)^2
  double chain_rhs_factor = std::numeric_limits<double>::quiet_NaN();
  /// kChainConstant * n^2 (r/R)^2 (M M* - 3 SE)_+^2
  double chain_derived_rhs = std::numeric_limits<double>::quiet_NaN();
  /// chain_lhs / n
  double empirical_c = std::numeric_limits<double>::quiet_NaN();
  std::vector<NamedCheck> checks;
  std::string error;

  bool passed() const;
};

/// Mean-width bound for the vertex side:
/// M* <= R (sqrt(4 log|V| / n) + 1/|V|) + 3 SE. Not applicable (vacuous pass)
/// when log|V| >= n / 4; lhs, rhs and margin are filled in either way.
BoundCheck verify_lemma4(int n, double num_vertices, double circumradius, const Estimate& mstar);
BoundCheck verify_lemma4(const Polytope& p, const Estimate& mstar);

/// The same bound applied to the dual: M <= (1/r)(sqrt(4 log|F| / n) + 1/|F|) + 3 SE.
BoundCheck verify_eq1(int n, double num_facets, double inradius, const Estimate& m);
BoundCheck verify_eq1(const Polytope& p, const Estimate& m);

/// Fills the chain fields and appends the chain sub-checks of `report`:
///   trivial_bound    M M* >= 1 - 3 SE
///   john_ratio       r/R >= (1 - 10 tol) / sqrt(n)
///   chain_derived    log|V| log|F| >= chain_derived_rhs
///   chain_linear     log|V| log|F| >= kChainConstant * n
/// Returns true iff all four pass.
bool verify_chain(InstanceReport& report, double john_tol = kJohnTolerance);

struct HarnessOptions {
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = 20240229;
  double john_tol = kJohnTolerance;
  unsigned parallel = 1;
};

struct HarnessConfig {
  std::vector<FamilySpec> instances;
  HarnessOptions options;
};

/// Config JSON:
///   {"samples": N, "seed": S, "john_tol": t,
///    "families": [{"family": "cube", "dims": [4, 8]},
///                 {"family": "random_sign", "dim": 6, "pairs": [10], "seeds": [1, 2]},
///                 {"family": "file", "path": "p.json"}]}
/// Each family entry expands to the cartesian product of its dims, pairs and
/// seeds. Relative file paths resolve against `base_dir`.
HarnessConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
HarnessConfig load_config(const std::filesystem::path& path);

/// Seed of the sphere sample used for instance `index` of a run.
std::uint64_t instance_seed(std::uint64_t run_seed, std::size_t index) noexcept;

/// generate -> both representations -> John transform if not in position ->
/// counts -> radii -> M, M* -> every check. Library errors are caught and
/// recorded in report.error.
InstanceReport run_instance(const FamilySpec& spec, const HarnessOptions& options, std::uint64_t sample_seed,
                            unsigned threads = 1);

struct ExperimentResult {
  std::vector<InstanceReport> reports;
  double min_empirical_c = std::numeric_limits<double>::quiet_NaN();
  std::string min_empirical_c_instance;
  std::vector<std::string> failures;

  bool all_passed() const noexcept { return failures.empty(); }
};

/// Runs every instance (order-stable, `options.parallel` workers).
ExperimentResult run_instances(const HarnessConfig& config);

/// run_instances() plus report.csv, summary.json and plots/empirical_c.svg under `out_dir`.
ExperimentResult run_experiment(const HarnessConfig& config, const std::filesystem::path& out_dir);

nlohmann::json summary_json(const ExperimentResult& result, const HarnessOptions& options);

}  // namespace vfbound
