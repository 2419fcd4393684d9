#include <gtest/gtest.h>

#include <random>

#include "kneserlab/error.hpp"
#include "kneserlab/sampling.hpp"
#include "kneserlab/suites.hpp"

using namespace kneserlab;

namespace {

std::uint64_t violations(const SuiteResult& r) {
  std::uint64_t n = 0;
  for (const auto& [name, t] : r.checks) n += t.violations;
  return n;
}

std::string report_text(const TowerPtr& tower, const SuiteOptions& o, const std::vector<SuiteKind>& kinds) {
  std::vector<SuiteResult> results;
  for (auto k : kinds) results.push_back(run_suite(k, tower, o));
  return report_json(*tower, o, {"test", kinds, false}, results).dump();
}

}  // namespace

TEST(Suites, NamesRoundTrip) {
  for (auto k : kAllSuites) EXPECT_EQ(parse_suite(to_string(k)), k);
  EXPECT_FALSE(parse_suite("kneser").has_value());
}

TEST(Suites, EngineChoice) {
  EXPECT_EQ(engine_name(*build_tower("gf:2:4")), "gf2");
  EXPECT_EQ(engine_name(*build_tower("gf:3:2")), "generic");
  EXPECT_EQ(engine_name(*build_tower("insep:2:t")), "generic");
}

TEST(Suites, Gf16IsExhaustiveAndClean) {
  const auto tower = build_tower("gf:2:4");
  const SuiteOptions o;
  for (auto k : kAllSuites) {
    const SuiteResult r = run_suite(k, tower, o);
    EXPECT_EQ(r.mode, "exhaustive") << to_string(k);
    EXPECT_EQ(violations(r), 0u) << to_string(k);
    EXPECT_EQ(r.violation_count, 0u) << to_string(k);
    EXPECT_GT(r.instances, 0u) << to_string(k);
  }
  const SuiteResult lemmas = run_suite(SuiteKind::lemmas, tower, o);
  EXPECT_EQ(lemmas.instances, 16u * 3u);
  const SuiteResult submod = run_suite(SuiteKind::submodularity, tower, o);
  EXPECT_EQ(submod.checks.at("submodularity").checked, 16u * 67u * 67u);
}

TEST(Suites, GenericEngineMatchesGf2Counts) {
  // GF(9) runs on the generic engine; every count is a function of the lattice alone.
  const auto tower = build_tower("gf:3:2");
  const SuiteResult r = run_suite(SuiteKind::hou_bound, tower, {});
  EXPECT_EQ(r.mode, "exhaustive");
  EXPECT_EQ(r.instances, 5u);  // 4 lines and the plane
  EXPECT_EQ(violations(r), 0u);
}

TEST(Suites, ReportDoesNotDependOnJobs) {
  const auto tower = build_tower("gf:2:5");
  SuiteOptions o;
  const std::vector<SuiteKind> kinds(kAllSuites.begin(), kAllSuites.end());
  o.jobs = 1;
  const std::string one = report_text(tower, o, kinds);
  o.jobs = 3;
  EXPECT_EQ(report_text(tower, o, kinds), one);
}

TEST(Suites, RandomRunsRepeatForASeed) {
  const auto tower = build_tower("insep:2:t");
  SuiteOptions o;
  o.samples = 40;
  const std::vector<SuiteKind> kinds = {SuiteKind::lemmas, SuiteKind::hou_bound};
  const std::string a = report_text(tower, o, kinds);
  EXPECT_EQ(report_text(tower, o, kinds), a);
  o.seed = 7;
  EXPECT_NE(report_text(tower, o, kinds), a);
}

TEST(Suites, FaultIsReportedAndReplayed) {
  const auto bad = corrupt_tensor_entry(*build_tower("gf:2:4"));
  const SuiteOptions o;
  const SuiteResult r = run_suite(SuiteKind::hou_bound, bad, o);
  ASSERT_GT(r.violation_count, 0u);
  ASSERT_FALSE(r.violations.empty());
  const auto& first = r.violations.front();
  const InstanceReplay replay = replay_instance(SuiteKind::hou_bound, bad, o, first.index);
  ASSERT_FALSE(replay.violations.empty());
  EXPECT_EQ(replay.violations.front().check, first.violation.check);
  EXPECT_EQ(replay.violations.front().spaces, first.violation.spaces);
  EXPECT_THROW(replay_instance(SuiteKind::hou_bound, bad, o, r.instances), Error);
}

TEST(Suites, RandomReplayMatchesTheRun) {
  const auto tower = corrupt_tensor_entry(*build_tower("gf:2:5"));
  SuiteOptions o;
  o.force_random = true;
  o.samples = 300;
  const SuiteResult r = run_suite(SuiteKind::lemmas, tower, o);
  EXPECT_EQ(r.mode, "random");
  ASSERT_FALSE(r.violations.empty());
  const auto& v = r.violations.back();
  const InstanceReplay replay = replay_instance(SuiteKind::lemmas, tower, o, v.index);
  bool found = false;
  for (const auto& rv : replay.violations) found = found || (rv.check == v.violation.check && rv.spaces == v.violation.spaces);
  EXPECT_TRUE(found);
}

TEST(Suites, HuntIsQuietOnAField) {
  SuiteOptions o;
  HuntOptions h;
  h.budget = 3000;
  const HuntResult r = hunt(build_tower("gf:2:5"), o, h);
  EXPECT_EQ(r.instances, 3000u);
  EXPECT_FALSE(r.finding.has_value());
}

TEST(Suites, HuntShrinksAFault) {
  SuiteOptions o;
  const HuntResult r = hunt(corrupt_tensor_entry(*build_tower("gf:2:6")), o, {});
  ASSERT_TRUE(r.finding.has_value());
  const auto rows = [](const Violation& v) {
    std::size_t n = 0;
    for (const auto& [name, sp] : v.spaces) n += sp.size();
    return n;
  };
  EXPECT_EQ(r.finding->minimized.check, r.finding->original.check);
  EXPECT_LE(rows(r.finding->minimized), rows(r.finding->original));
  EXPECT_LE(r.instances, HuntOptions{}.budget);
}

TEST(Suites, CsvHasOneRowPerCheck) {
  const auto tower = build_tower("gf:2:3");
  const SuiteOptions o;
  std::vector<SuiteResult> results = {run_suite(SuiteKind::hou_bound, tower, o)};
  const auto report = report_json(*tower, o, {"gf:2:3", {SuiteKind::hou_bound}, false}, results);
  const std::string csv = report_csv(report);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 1 + results[0].checks.size());
  EXPECT_EQ(csv.rfind("suite,", 0), 0u);
  EXPECT_EQ(report["summary"]["status"], "ok");
}

TEST(Suites, OneSidedOnInseparableTowerFindsDeficientPairs) {
  SuiteOptions o;
  o.samples = 20;
  const SuiteResult r = run_suite(SuiteKind::one_sided, build_tower("insep:2:t,s"), o);
  EXPECT_EQ(r.mode, "random");
  EXPECT_EQ(r.instances, 2u);
  EXPECT_EQ(violations(r), 0u);
  EXPECT_GT(r.checks.at("one_sided").checked, 0u);
}

TEST(Suites, BadSigmaOverrideIsAParseError) {
  SuiteOptions o;
  o.sigmas = {{"1", "0"}};
  try {
    run_suite(SuiteKind::lemmas, build_tower("gf:2:4"), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}

TEST(Sampling, RandomSubspacesHaveTheRequestedDimension) {
  const auto tower = build_tower("insep:3:t");
  std::mt19937_64 rng(3);
  for (std::size_t d = 0; d <= 3; ++d) EXPECT_EQ(random_subspace(*tower, rng, d, 2).dim(), d);
  for (std::size_t d = 1; d <= 3; ++d) {
    const Subspace s = random_subspace_with_one(*tower, rng, d, 2);
    EXPECT_EQ(s.dim(), d);
    EXPECT_TRUE(s.contains(tower->one()));
  }
  EXPECT_THROW(random_subspace(*tower, rng, 4, 1), Error);
}

TEST(Sampling, InstanceStreamsAreIndependentOfOrder) {
  auto a = instance_rng(42, 5), b = instance_rng(42, 5), c = instance_rng(42, 6);
  EXPECT_EQ(a(), b());
  EXPECT_NE(instance_rng(42, 5)(), c());
}

TEST(Sampling, SigmaFamilyIsDistinctAndNondegenerate) {
  const auto tower = build_tower("gf:2:5");
  const auto forms = sigma_family(*tower, 6, 1);
  ASSERT_EQ(forms.size(), 6u);
  EXPECT_EQ(forms[0].sigma(), tower->default_sigma());
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) EXPECT_NE(forms[i].sigma(), forms[j].sigma());
}

TEST(Sampling, DegenerateFormsAreSkippedOnACorruptedAlgebra) {
  const gf2::Algebra a(*corrupt_tensor_entry(*build_tower("gf:2:6")));
  std::size_t degenerate = 0;
  for (gf2::Mask m = 1; m <= a.full_mask(); ++m) {
    try {
      gf2::DualityContext ctx(a, m);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateForm);
      ++degenerate;
    }
  }
  ASSERT_GT(degenerate, 0u);
  const auto forms = gf2::sigma_family(a, 64, 1);
  EXPECT_EQ(forms.size(), a.full_mask() - degenerate);
}
