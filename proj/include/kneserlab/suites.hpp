#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "kneserlab/enumerate.hpp"
#include "kneserlab/tower.hpp"
#include "kneserlab/witness.hpp"

namespace kneserlab {

enum class SuiteKind { lemmas, submodularity, hou_bound, kernel_chain, one_sided, group };

inline constexpr std::array<SuiteKind, 6> kAllSuites = {SuiteKind::lemmas,       SuiteKind::submodularity,
                                                        SuiteKind::hou_bound,    SuiteKind::kernel_chain,
                                                        SuiteKind::one_sided,    SuiteKind::group};

std::string_view to_string(SuiteKind kind);
std::optional<SuiteKind> parse_suite(std::string_view name);

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::optional<std::uint64_t> samples;  // random instances (deficient T per S for one_sided)
  std::size_t sigma_count = 3;
  std::vector<std::vector<std::string>> sigmas;  // explicit forms, used before the sampled ones
  unsigned jobs = 1;
  std::uint64_t max_enum = kDefaultEnumerationCap;
  std::uint64_t exhaustive_limit = 256;  // lemmas, submodularity, hou_bound enumerate up to this many subspaces
  bool force_random = false;
  unsigned coefficient_degree = 1;
  std::vector<std::size_t> s_dims;  // kernel_chain and one_sided; empty means every dimension
  std::size_t max_violations = 16;  // witnesses kept per suite
};

struct CheckTally {
  std::uint64_t checked = 0;
  std::uint64_t vacuous = 0;  // hypothesis not met
  std::uint64_t violations = 0;
};

struct IndexedViolation {
  std::uint64_t index = 0;
  Violation violation;
};

struct SuiteResult {
  SuiteKind kind = SuiteKind::lemmas;
  std::string mode;  // exhaustive, random or skipped
  std::string note;
  std::uint64_t instances = 0;
  std::map<std::string, CheckTally> checks;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<IndexedViolation> violations;
  std::uint64_t violation_count = 0;
  double seconds = 0;
};

// "gf2" for GF(2)-towers of dimension <= 32, else "generic".
std::string engine_name(const Tower& tower);

// Errors: Parse for malformed sigma overrides, DimensionOverflow, and any
// error from building the enumeration. Failures inside an instance are
// reported as violations of the check "exception".
SuiteResult run_suite(SuiteKind kind, const TowerPtr& tower, const SuiteOptions& options);

struct InstanceReplay {
  SuiteKind kind = SuiteKind::lemmas;
  std::string mode;
  std::uint64_t index = 0;
  std::vector<std::pair<std::string, std::vector<std::string>>> inputs;
  std::map<std::string, CheckTally> checks;
  std::vector<Violation> violations;
};

// Recomputes instance `index` of a suite run alone. Errors: Parse when the
// index is out of range.
InstanceReplay replay_instance(SuiteKind kind, const TowerPtr& tower, const SuiteOptions& options,
                               std::uint64_t index);

struct HuntOptions {
  std::uint64_t budget = 100'000;
  std::vector<SuiteKind> suites = {SuiteKind::lemmas, SuiteKind::submodularity, SuiteKind::hou_bound};
};

struct HuntFinding {
  SuiteKind kind = SuiteKind::lemmas;
  std::uint64_t index = 0;
  Violation original;
  Violation minimized;
};

struct HuntResult {
  std::uint64_t instances = 0;
  std::optional<HuntFinding> finding;
};

// Streams random instances, round robin over the suites, and stops at the
// first violation, which is then shrunk by dropping basis vectors while the
// same check still fails.
HuntResult hunt(const TowerPtr& tower, const SuiteOptions& options, const HuntOptions& hunt_options);

struct ReportContext {
  std::string tower_source;
  std::vector<SuiteKind> suites;
  bool fault = false;
};

nlohmann::ordered_json report_json(const Tower& tower, const SuiteOptions& options, const ReportContext& context,
                                   const std::vector<SuiteResult>& results);
// One row per (suite, check), taken from a report.
std::string report_csv(const nlohmann::ordered_json& report);
nlohmann::ordered_json hunt_json(const Tower& tower, const SuiteOptions& options, const ReportContext& context,
                                 const HuntResult& result);
nlohmann::ordered_json replay_json(const Tower& tower, const SuiteOptions& options, const InstanceReplay& replay);

// Adds 1 to c(i, j, k) and c(j, i, k) and rebuilds the tower without checks.
TowerPtr corrupt_tensor_entry(const Tower& tower, std::size_t i = 1, std::size_t j = 1, std::size_t k = 0);

}  // namespace kneserlab
