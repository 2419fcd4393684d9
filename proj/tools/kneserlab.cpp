#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kneserlab/error.hpp"
#include "kneserlab/suites.hpp"
#include "kneserlab/tower_io.hpp"

using namespace kneserlab;

namespace {

enum Exit { kOk = 0, kViolation = 1, kConfig = 2, kTower = 3 };

bool is_tower_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime:
    case ErrorCode::ReducibleModulus:
    case ErrorCode::DimensionOverflow:
    case ErrorCode::TowerInvariant:
    case ErrorCode::SingularMultiplicationMap:
    case ErrorCode::DescriptorMismatch:
      return true;
    default:
      return false;
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Writes through a temporary file in the same directory, then renames.
void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
    out << text;
    if (!out.flush()) throw Error(ErrorCode::Parse, "cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

struct Config {
  std::string tower = "gf:2:4";
  std::vector<std::string> suites = {"all"};
  std::uint64_t seed = 42;
  std::uint64_t samples = 0;
  std::vector<std::string> sigmas;
  std::size_t sigma_count = 3;
  unsigned jobs = 1;
  std::string out;
  std::string format = "json";
  std::uint64_t max_enum = kDefaultEnumerationCap;
  unsigned coefficient_degree = 1;
  std::string s_dims;
  bool force_random = false;
  bool fault = false;
  std::uint64_t index = 0;
  std::uint64_t budget = 100'000;
};

void add_common(CLI::App& app, Config& c) {
  app.add_option("--tower", c.tower, "gf:P:M[:MODULUS], insep:P:VARS[:MODULUS] or a tower-spec .json file");
  app.add_option("--seed", c.seed, "64-bit seed");
  app.add_option("--samples", c.samples, "random instances (deficient T per S for one_sided)")
      ->check(CLI::PositiveNumber);
  app.add_option("--sigma", c.sigmas, "linear form as comma separated coordinates (repeatable)");
  app.add_option("--sigma-count", c.sigma_count, "forms per suite")->check(CLI::PositiveNumber);
  app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "report path (stdout when empty)");
  app.add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-enum", c.max_enum, "subspace enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--coefficient-degree", c.coefficient_degree, "degree bound for random rational function coefficients")
      ->check(CLI::Range(0u, 4u));
  app.add_option("--s-dims", c.s_dims, "dimensions of S for kernel_chain and one_sided, e.g. 3,4");
  app.add_flag("--force-random", c.force_random, "sample even when enumeration is possible");
  app.add_flag("--inject-fault", c.fault, "add 1 to the tensor entry c[1][1][0] (self-test)");
}

SuiteOptions suite_options(const Config& c) {
  SuiteOptions o;
  o.seed = c.seed;
  if (c.samples) o.samples = c.samples;
  o.sigma_count = c.sigma_count;
  for (const auto& s : c.sigmas) o.sigmas.push_back(split(s, ','));
  o.jobs = c.jobs;
  o.max_enum = c.max_enum;
  o.coefficient_degree = c.coefficient_degree;
  o.force_random = c.force_random;
  if (!c.s_dims.empty())
    for (const auto& d : split(c.s_dims, ',')) {
      try {
        std::size_t pos = 0;
        const auto v = std::stoul(d, &pos);
        if (pos != d.size() || v == 0) throw std::invalid_argument(d);
        o.s_dims.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "--s-dims expects positive integers, got '" + d + "'");
      }
    }
  return o;
}

std::vector<SuiteKind> suite_list(const std::vector<std::string>& names) {
  std::vector<SuiteKind> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (auto k : kAllSuites)
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
      continue;
    }
    const auto k = parse_suite(n);
    if (!k) throw Error(ErrorCode::Parse, "unknown suite '" + n + "'");
    if (std::find(out.begin(), out.end(), *k) == out.end()) out.push_back(*k);
  }
  return out;
}

TowerPtr load(const Config& c) {
  TowerPtr t = resolve_tower(c.tower);
  if (c.fault) t = corrupt_tensor_entry(*t);
  return t;
}

void emit(const Config& c, const nlohmann::ordered_json& report, const std::string& csv) {
  const std::string text = c.format == "csv" ? csv : report.dump(2) + "\n";
  if (c.out.empty())
    std::cout << text;
  else
    write_atomic(c.out, text);
}

void emit_timing(const Config& c, const nlohmann::ordered_json& timing) {
  if (!c.out.empty()) write_atomic(c.out + ".timing.json", timing.dump(2) + "\n");
}

int run(const Config& c) {
  const auto suites = suite_list(c.suites);
  const SuiteOptions o = suite_options(c);
  const TowerPtr tower = load(c);
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> results;
  nlohmann::ordered_json timing;
  for (auto k : suites) {
    results.push_back(run_suite(k, tower, o));
    timing["suites"][std::string(to_string(k))] = results.back().seconds;
    std::cerr << to_string(k) << ": " << results.back().mode << ", " << results.back().instances << " instances, "
              << results.back().violation_count << " violations\n";
  }
  timing["total_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto report = report_json(*tower, o, {c.tower, suites, c.fault}, results);
  emit(c, report, report_csv(report));
  emit_timing(c, timing);
  return report["summary"]["violations"].get<std::uint64_t>() ? kViolation : kOk;
}

int hunt_cmd(const Config& c) {
  auto suites = suite_list(c.suites);
  if (c.suites == std::vector<std::string>{"all"}) suites = HuntOptions{}.suites;
  const SuiteOptions o = suite_options(c);
  const TowerPtr tower = load(c);
  const auto start = std::chrono::steady_clock::now();
  const HuntResult r = hunt(tower, o, {c.budget, suites});
  const auto report = hunt_json(*tower, o, {c.tower, suites, c.fault}, r);
  std::ostringstream csv;
  csv << "suite,index,check,instances\n";
  if (r.finding)
    csv << to_string(r.finding->kind) << ',' << r.finding->index << ',' << r.finding->minimized.check << ','
        << r.instances << '\n';
  emit(c, report, csv.str());
  emit_timing(c, {{"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}});
  return r.finding ? kViolation : kOk;
}

int replay_cmd(const Config& c) {
  const auto suites = suite_list(c.suites);
  if (suites.size() != 1) throw Error(ErrorCode::Parse, "replay needs exactly one --suite");
  const SuiteOptions o = suite_options(c);
  const TowerPtr tower = load(c);
  const auto r = replay_instance(suites.front(), tower, o, c.index);
  const auto report = replay_json(*tower, o, r);
  std::ostringstream csv;
  csv << "check,checked,vacuous,violations\n";
  for (const auto& [name, t] : r.checks) csv << name << ',' << t.checked << ',' << t.vacuous << ',' << t.violations << '\n';
  emit(c, report, csv.str());
  return report["summary"]["violations"].get<std::uint64_t>() ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kneserlab: checks linear Kneser-type theorems on finite-dimensional field extensions"};
  app.set_version_flag("--version", KNESERLAB_VERSION);
  app.require_subcommand(1);
  Config c;
  const std::vector<std::string> names = {"all", "lemmas", "submodularity", "hou_bound", "kernel_chain", "one_sided", "group"};

  auto* run_app = app.add_subcommand("run", "run suites and write a report");
  add_common(*run_app, c);
  run_app->add_option("--suite", c.suites, "suites to run")->check(CLI::IsMember(names))->delimiter(',');

  auto* hunt_app = app.add_subcommand("hunt", "search random instances for a violation");
  add_common(*hunt_app, c);
  hunt_app->add_option("--suite", c.suites, "randomized suites to hunt in")->check(CLI::IsMember(names))->delimiter(',');
  hunt_app->add_option("--budget", c.budget, "instances to try")->check(CLI::PositiveNumber);

  auto* replay_app = app.add_subcommand("replay", "recompute one instance of a suite");
  add_common(*replay_app, c);
  replay_app->add_option("--suite", c.suites, "suite")->required()->check(CLI::IsMember(names));
  replay_app->add_option("--index", c.index, "instance index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*run_app) return run(c);
    if (*hunt_app) return hunt_cmd(c);
    return replay_cmd(c);
  } catch (const Error& e) {
    std::cerr << "kneserlab: " << e.what() << "\n";
    return is_tower_error(e.code()) ? kTower : kConfig;
  } catch (const std::exception& e) {
    std::cerr << "kneserlab: " << e.what() << "\n";
    return kConfig;
  }
}
