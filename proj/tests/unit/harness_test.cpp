#include <gtest/gtest.h>

#include <map>
#include <set>

#include "curvelab/enumerate.hpp"
#include "curvelab/error.hpp"
#include "curvelab/harness/report.hpp"
#include "curvelab/harness/runner.hpp"
#include "curvelab/harness/serialize.hpp"
#include "curvelab/harness/suites.hpp"

using namespace curvelab;

namespace {

NumericalSemigroup sg(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(std::vector<Int>(gens)); }

std::string json_without_timing(const SuiteReport& r) { return report_json(r, false).dump(); }

// Flags every semigroup of multiplicity 4 as a violation.
void flag_multiplicity_four(SemigroupContext& ctx, Checker& ck) {
  ck.expect("notFour", ctx.semigroup().multiplicity() != 4,
            [&] { return Finding{{ctx.maximal()}, "multiplicity is \"4\", count is 1,2"}; });
}

const Suite kPlanted{"planted", "test double", {}, flag_multiplicity_four};

}  // namespace

TEST(Registry, HasNineteenSuitesInOrder) {
  const std::vector<std::string_view> ids = {
      "semigroupStructure", "colonAdjunction",   "biduality",      "syzygyExactness",     "traceFacts",
      "conductorStableAnn", "wangLowerBound",    "lemmaChain",     "propSyzygyStability", "cocohomDuality",
      "traceContainment",   "traceCriterion",    "ulrichFacts",    "canredFacts",         "agClosure",
      "theoremB",           "medShadow",         "farFlung",       "multiplicity3"};
  ASSERT_EQ(suite_registry().size(), 19u);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(suite_registry()[i].id, ids[i]);
    EXPECT_EQ(find_suite(ids[i]), &suite_registry()[i]);
  }
  EXPECT_EQ(find_suite("nope"), nullptr);
}

TEST(Registry, EveryPropertyOwnedExactlyOnce) {
  std::map<std::string_view, int> owners;
  for (const auto& s : suite_registry()) {
    EXPECT_FALSE(s.properties.empty()) << s.id;
    for (auto p : s.properties) ++owners[p];
  }
  const auto catalog = property_catalog();
  EXPECT_EQ(catalog.size(), 32u);
  std::set<std::string_view> listed(catalog.begin(), catalog.end());
  EXPECT_EQ(listed.size(), catalog.size());
  for (auto p : catalog) EXPECT_EQ(owners[p], 1) << p;
  for (const auto& [p, n] : owners) EXPECT_TRUE(listed.count(p)) << p << " is not catalogued";
}

TEST(RunSuite, TheoremBUpToGenusEight) {
  const SuiteReport r = run_suite("theoremB", 8);
  EXPECT_EQ(r.semigroups_checked, 156u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.checks_executed, 156u);
}

TEST(RunSuite, LemmaChainAtGenusZero) {
  const SuiteReport r = run_suite("lemmaChain", 0);
  EXPECT_EQ(r.semigroups_checked, 1u);
  EXPECT_EQ(r.checks_executed, 0u);
  EXPECT_TRUE(r.passed());
}

TEST(RunSuite, AllUpToGenusSixPasses) {
  const SuiteReport r = run_suite("all", 6, 4);
  EXPECT_EQ(r.semigroups_checked, 50u);
  EXPECT_TRUE(r.violations.empty()) << emit_report(r, "text");
}

TEST(RunSuite, SemigroupsCheckedMatchesEnumeration) {
  for (Int g = 0; g <= 7; ++g)
    EXPECT_EQ(run_suite("multiplicity3", g).semigroups_checked, enumerate_up_to_genus(g).size());
}

TEST(RunSuite, UnknownSuite) {
  try {
    run_suite("noSuchSuite", 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownSuite);
  }
}

TEST(RunSuite, DeterministicAcrossRunsAndJobs) {
  const std::string a = json_without_timing(run_suite("all", 6, 1));
  EXPECT_EQ(a, json_without_timing(run_suite("all", 6, 1)));
  EXPECT_EQ(a, json_without_timing(run_suite("all", 6, 4)));
  EXPECT_EQ(emit_report(run_suite("all", 5, 1), "csv"), emit_report(run_suite("all", 5, 3), "csv"));
}

TEST(RunSuite, PlantedViolationsAreReportedInEnumerationOrder) {
  const auto all = enumerate_up_to_genus(6);
  std::vector<std::string> expected;
  for (const auto& s : all)
    if (s.multiplicity() == 4) expected.push_back(s.to_string());

  for (unsigned jobs : {1u, 4u}) {
    const SuiteReport r = run_suites("planted", {&kPlanted}, 6, jobs, false);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.semigroups_checked, all.size());
    ASSERT_EQ(r.violations.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(r.violations[i].semigroup, expected[i]);
      EXPECT_EQ(r.violations[i].check, "planted.notFour");
      ASSERT_EQ(r.violations[i].ideals.size(), 1u);
    }
  }
}

TEST(RunSuite, FailFastStopsAfterFirstViolatingSemigroup) {
  const auto all = enumerate_up_to_genus(6);
  std::size_t first = 0;
  while (all[first].multiplicity() != 4) ++first;
  for (unsigned jobs : {1u, 4u}) {
    const SuiteReport r = run_suites("planted", {&kPlanted}, 6, jobs, true);
    EXPECT_EQ(r.semigroups_checked, first + 1);
    EXPECT_TRUE(r.fail_fast_stopped);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].semigroup, all[first].to_string());
    const Json j = Json::parse(emit_report(r, "json"));
    EXPECT_EQ(j["violations"].size(), 1u);
  }
  const SuiteReport clean = run_suite("theoremB", 6, 2, true);
  EXPECT_FALSE(clean.fail_fast_stopped);
  EXPECT_EQ(clean.semigroups_checked, 50u);
}

TEST(Checker, DescribeRunsOnlyOnFailureAndWitnessesAreCapped) {
  SemigroupOutcome out;
  out.semigroup = "3,5,7";
  Checker ck(out);
  ck.set_suite("demo");
  int described = 0;
  auto& t = ck.tally("x");
  for (int i = 0; i < 20; ++i)
    ck.expect(t, i % 2 == 0, [&] {
      ++described;
      return Finding{{}, "odd"};
    });
  EXPECT_EQ(t.executed, 20u);
  EXPECT_EQ(t.violations, 10u);
  EXPECT_EQ(described, static_cast<int>(kWitnessesPerCheck));
  EXPECT_EQ(out.violations.size(), kWitnessesPerCheck);
  EXPECT_EQ(out.violations.front().check, "demo.x");
  EXPECT_EQ(&ck.tally("x"), &t);
  ck.inform("y", true, [] { return Finding{{}, "seen"}; });
  EXPECT_EQ(out.informational.size(), 1u);
  EXPECT_EQ(out.violation_count(), 10u);
  EXPECT_EQ(out.informational_count(), 1u);
}

TEST(Replay, SuiteOnOneSemigroup) {
  const SemigroupOutcome out = run_suite_on("agClosure", sg({3, 5, 7}));
  EXPECT_EQ(out.semigroup, "3,5,7");
  EXPECT_TRUE(out.violations.empty());
  EXPECT_GT(out.checks_executed(), 0u);
  EXPECT_FALSE(replay(Witness{"3,5,7", {}, "agClosure.dualityClosure", ""}));
}

TEST(Report, JsonSchema) {
  const SuiteReport r = run_suite("theoremB", 3);
  const Json j = Json::parse(emit_report(r, "json"));
  EXPECT_EQ(j["suite"], "theoremB");
  EXPECT_EQ(j["genus_range"], Json::array({0, 3}));
  EXPECT_EQ(j["semigroups_checked"], 8);
  EXPECT_EQ(j["violations"], Json::array());
  EXPECT_TRUE(j["informational"].is_array());
  EXPECT_TRUE(j.contains("checks_executed"));
  EXPECT_TRUE(j.contains("wall_time_seconds"));
  EXPECT_FALSE(report_json(r, false).contains("wall_time_seconds"));
}

TEST(Report, TextEndsWithVerdict) {
  const std::string pass = emit_report(run_suite("wangLowerBound", 3), "text");
  EXPECT_EQ(pass.substr(pass.size() - 5), "PASS\n");
  const std::string fail = emit_report(run_suites("planted", {&kPlanted}, 4, 1, false), "text");
  EXPECT_EQ(fail.substr(fail.size() - 5), "FAIL\n");
  EXPECT_NE(fail.find("VIOLATION planted.notFour on <4,5,6,7>"), std::string::npos);
}

TEST(Report, CsvRowsAndQuoting) {
  const std::string csv = emit_report(run_suites("planted", {&kPlanted}, 4, 1, false), "csv");
  EXPECT_EQ(csv.substr(0, csv.find("\r\n")), "semigroup,check,status,details");
  EXPECT_NE(csv.find("\"4,5,6,7\",planted.notFour,FAIL,"), std::string::npos);
  EXPECT_NE(csv.find(": multiplicity is \"\"4\"\", count is 1,2\"\r\n"), std::string::npos);
  EXPECT_NE(csv.find("\"3,4,5\",planted.notFour,PASS,1 checks\r\n"), std::string::npos);
  // One row per (semigroup, check): 8 semigroups up to genus 3 plus 7 of genus 4.
  std::size_t rows = 0;
  for (std::size_t p = csv.find("\r\n"); p != std::string::npos; p = csv.find("\r\n", p + 2)) ++rows;
  EXPECT_EQ(rows, 1u + 8u + 7u);
}

TEST(Report, UnsupportedFormat) {
  const SuiteReport r = run_suite("wangLowerBound", 1);
  try {
    emit_report(r, "yaml");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedFormat);
  }
}

TEST(Serialize, CertificateJson) {
  const Json a = to_json(certify_cohomology_annihilator(sg({3, 5, 7})));
  EXPECT_EQ(a["semigroup"], "3,5,7");
  EXPECT_EQ(a["status"], "ExactAlmostGorenstein");
  EXPECT_EQ(a["value"], "[5,∞)");
  EXPECT_EQ(a["value_minimal_generators"], Json::array({5, 6, 7}));
  EXPECT_EQ(a["justification"], Json::array({"TheoremB", "WangConductor", "ConductorStableAnnihilator"}));
  EXPECT_EQ(a["duality_closure"], true);

  const Json b = to_json(certify_cohomology_annihilator(sg({5, 6, 7})));
  EXPECT_EQ(b["status"], "Interval");
  EXPECT_EQ(b["lower"], "[10,∞)");
  EXPECT_EQ(b["upper"], "{5,6,7}∪[10,∞)");
  EXPECT_FALSE(b.contains("value"));
}

TEST(Serialize, RecordsAreFlat) {
  const Json c = to_json(classify(sg({3, 5, 7})));
  EXPECT_EQ(c["gorenstein"], false);
  EXPECT_EQ(c["almost_gorenstein"], true);
  EXPECT_EQ(c["canonical_reduction_number"], 2);
  EXPECT_EQ(c["canonical_trace"], "{3}∪[5,∞)");
  EXPECT_EQ(c["conductor"], "[5,∞)");
  const Json i = to_json(invariants(sg({5, 6, 7})));
  EXPECT_EQ(i["pseudo_frobenius"], Json::array({8, 9}));
  EXPECT_EQ(i["almost_symmetric"], false);
  const Json ideals = ideal_classes_json(sg({3, 5, 7}));
  EXPECT_EQ(ideals["class_count"], 6);
  EXPECT_EQ(ideals["classes"][1]["ideal"], "{0,2,3}∪[5,∞)");
  EXPECT_EQ(ideals["classes"][1]["reflexive"], false);
}

TEST(Context, MatchesLibraryFunctions) {
  for (const auto& s : enumerate_up_to_genus(5)) {
    SemigroupContext ctx(s);
    EXPECT_EQ(ctx.category_annihilator(), category_annihilator(s));
    EXPECT_EQ(ctx.duality_closure().closed, duality_closure_shadow(s).closed);
    EXPECT_EQ(ctx.canred(), canonical_reduction_number(s));
    const auto& cl = ctx.classes();
    for (std::size_t i = 0; i < cl.size(); ++i) {
      EXPECT_EQ(ctx.blowup_of(i), blowup(cl[i].ideal));
      EXPECT_EQ(ctx.b_of(i), b_ideal(cl[i].ideal));
      EXPECT_EQ(cl[i].omega_ulrich, is_ulrich(cl[i].ideal, canonical_ideal(s)));
    }
  }
}
