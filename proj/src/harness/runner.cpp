#include "curvelab/harness/runner.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "curvelab/enumerate.hpp"
#include "curvelab/error.hpp"
#include "curvelab/harness/suites.hpp"

namespace curvelab {
namespace {

std::vector<const Suite*> resolve(std::string_view id) {
  std::vector<const Suite*> out;
  if (id == "all") {
    for (const auto& s : suite_registry()) out.push_back(&s);
  } else if (const Suite* s = find_suite(id)) {
    out.push_back(s);
  } else {
    throw Error(Errc::UnknownSuite, "no suite named '" + std::string(id) + "'");
  }
  return out;
}

SemigroupOutcome run_on(const std::vector<const Suite*>& suites, const NumericalSemigroup& s) {
  SemigroupOutcome out;
  out.semigroup = s.to_string();
  SemigroupContext ctx(s);
  Checker ck(out);
  for (const Suite* suite : suites) {
    ck.set_suite(suite->id);
    try {
      suite->run(ctx, ck);
    } catch (const Error& err) {
      ck.expect("exception", false, [&] { return Finding{{}, err.what()}; });
    }
  }
  return out;
}

SemigroupOutcome run_genus(const std::vector<const Suite*>& suites, Int g) {
  SemigroupOutcome out;
  out.semigroup = "genus " + std::to_string(g);
  out.is_semigroup = false;
  Checker ck(out);
  for (const Suite* suite : suites) {
    if (!suite->run_genus || g > suite->genus_cap) continue;
    ck.set_suite(suite->id);
    suite->run_genus(g, ck);
  }
  return out;
}

}  // namespace

SemigroupOutcome run_suite_on(std::string_view suite, const NumericalSemigroup& s) { return run_on(resolve(suite), s); }

bool replay(const Witness& w) {
  const auto dot = w.check.find('.');
  const std::string suite = w.check.substr(0, dot);
  const SemigroupOutcome out = run_suite_on(suite, NumericalSemigroup::parse(w.semigroup));
  for (const auto& v : out.violations)
    if (v.check == w.check) return true;
  for (const auto& v : out.informational)
    if (v.check == w.check) return true;
  return false;
}

SuiteReport run_suite(std::string_view suite, Int genus_max, unsigned jobs, bool fail_fast) {
  return run_suites(std::string(suite), resolve(suite), genus_max, jobs, fail_fast);
}

SuiteReport run_suites(std::string name, const std::vector<const Suite*>& suites, Int genus_max, unsigned jobs,
                       bool fail_fast) {
  const auto started = std::chrono::steady_clock::now();
  if (genus_max < 0) throw Error(Errc::TooLarge, "genus bound must be nonnegative");

  SuiteReport report;
  report.suite = std::move(name);
  report.genus_hi = genus_max;

  for (Int g = 0; g <= genus_max; ++g) {
    SemigroupOutcome out = run_genus(suites, g);
    if (!out.tallies.empty()) report.outcomes.push_back(std::move(out));
  }

  const std::vector<NumericalSemigroup> all = enumerate_up_to_genus(genus_max);
  std::vector<SemigroupOutcome> results(all.size());
  std::atomic<std::size_t> next{0};
  // Index of the earliest failing semigroup seen so far; work past it is
  // skipped under fail_fast.
  std::atomic<std::size_t> first_bad{all.size()};
  auto worker = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) {
      if (fail_fast && i > first_bad.load()) continue;
      results[i] = run_on(suites, all[i]);
      if (!results[i].violations.empty()) {
        std::size_t seen = first_bad.load();
        while (i < seen && !first_bad.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1u, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  bool prefix_failed = false;
  for (const auto& o : report.outcomes) prefix_failed |= o.violation_count() > 0;
  std::size_t keep = all.size();
  if (fail_fast) {
    if (prefix_failed) {
      keep = 0;
    } else if (first_bad.load() < all.size()) {
      keep = first_bad.load() + 1;
    }
    report.fail_fast_stopped = keep < all.size();
  }
  report.semigroups_checked = keep;
  for (std::size_t i = 0; i < keep; ++i) report.outcomes.push_back(std::move(results[i]));

  for (const auto& o : report.outcomes) {
    report.checks_executed += o.checks_executed();
    report.violation_count += o.violation_count();
    report.informational_count += o.informational_count();
    report.violations.insert(report.violations.end(), o.violations.begin(), o.violations.end());
    report.informational.insert(report.informational.end(), o.informational.begin(), o.informational.end());
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace curvelab
