// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Counts of applicable classes come from the brute-force
// oracle so that "zero violations" cannot hide an empty check.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "curvelab/enumerate.hpp"
#include "curvelab/harness/report.hpp"
#include "curvelab/harness/runner.hpp"
#include "naive.hpp"

using namespace curvelab;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
  if (!o.note.empty()) std::cout << " (" << o.note << ")";
  std::cout << std::endl;
}

struct Command {
  int status = -1;
  std::string out;
  double seconds = 0;
};

Command run_cli(const std::string& args) {
  const auto started = std::chrono::steady_clock::now();
  const std::string cmd = std::string("\"") + CURVELAB_CLI_PATH + "\" " + args;
  Command c;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) c.out.append(buf, n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return c;
}

// Exact set equality against "everything from `from` on" plus `extra`,
// over a range wide enough to include every window involved.
bool same_set(const RelativeIdeal& e, Int from, std::vector<Int> extra = {}) {
  for (Int z = -10; z <= 3 * from + 40; ++z) {
    const bool want = z >= from || std::find(extra.begin(), extra.end(), z) != extra.end();
    if (e.contains(z) != want) return false;
  }
  return true;
}

std::string counts(const SuiteReport& r) {
  return std::to_string(r.semigroups_checked) + " semigroups, " + std::to_string(r.checks_executed) + " checks, " +
         std::to_string(r.violation_count) + " violations";
}

std::size_t tally_total(const SuiteReport& r, const std::string& check) {
  std::size_t n = 0;
  for (const auto& o : r.outcomes)
    for (const auto& t : o.tallies)
      if (t.check == check) n += t.executed;
  return n;
}

naive::Semigroup oracle_of(const NumericalSemigroup& s) { return naive::Semigroup(s.minimal_generators()); }

std::size_t generator_count(const naive::Semigroup& s, const naive::Set& e) {
  const Int lo = e.min();
  std::size_t n = 0;
  for (Int x = lo; x <= lo + s.frob + 2 * s.gens.front() + 2; ++x) {
    if (!e.contains(x)) continue;
    bool reached = false;
    for (Int t = 1; t <= x - lo && !reached; ++t) reached = s.contains(t) && e.contains(x - t);
    if (!reached) ++n;
  }
  return n;
}

struct OracleClass {
  bool two_generated;
  bool reflexive;
  bool dual_reflexive;
};

std::vector<OracleClass> oracle_classes(const naive::Semigroup& s) {
  const naive::Set ring = naive::of_semigroup(s);
  const naive::Set k = naive::canonical(s);
  auto reflexive = [&](const naive::Set& e) { return naive::translates(naive::colon(ring, naive::colon(ring, e)), e); };
  std::vector<OracleClass> out;
  for (const auto& e : naive::ideal_classes(s))
    out.push_back({generator_count(s, e) == 2, reflexive(e), reflexive(naive::colon(k, e))});
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string without_timing(const std::string& json_text) {
  Json j = Json::parse(json_text);
  j.erase("wall_time_seconds");
  return j.dump();
}

}  // namespace

int main() {
  const auto up_to_8 = enumerate_up_to_genus(8);

  criterion(1, "golden certificates via the CLI", [] {
    struct Golden {
      std::string gens, status;
      Int from;
      std::vector<Int> extra;
      bool interval;
    };
    const std::vector<Golden> golden = {{"3,5,7", "ExactAlmostGorenstein", 5, {}, false},
                                        {"2,3", "ExactGorenstein", 2, {}, false},
                                        {"3,4,5", "ExactAlmostGorenstein", 3, {}, false},
                                        {"5,6,7", "Interval", 10, {}, true}};
    Outcome o;
    double slowest = 0;
    for (const auto& g : golden) {
      const Command c = run_cli("ca " + g.gens);
      slowest = std::max(slowest, c.seconds);
      const Json j = Json::parse(c.out);
      const auto s = NumericalSemigroup::parse(g.gens);
      const RelativeIdeal v = parse_ideal(s, j[g.interval ? "lower" : "value"].get<std::string>());
      bool ok = c.status == 0 && j["status"] == g.status && same_set(v, g.from) && c.seconds < 1.0;
      if (g.gens == "3,5,7") ok &= j["value_minimal_generators"] == Json::array({5, 6, 7});
      if (g.interval) ok &= same_set(parse_ideal(s, j["upper"].get<std::string>()), 10, {5, 6, 7});
      if (!ok) o = {false, "mismatch for " + g.gens + ": " + j.dump()};
    }
    if (o.ok) o.note = "4 certificates, slowest " + std::to_string(slowest) + " s";
    return o;
  });

  criterion(2, "theoremB over genus <= 8, single-threaded, < 60 s", [&] {
    const SuiteReport r = run_suite("theoremB", 8, 1);
    std::size_t almost = 0;
    for (const auto& s : up_to_8) {
      const naive::Semigroup o = oracle_of(s);
      const auto pf = o.pseudo_frobenius();
      // Almost symmetric iff 2g = F + t; the regular ring has F = -1, PF = {-1}.
      const Int type = o.frob < 0 ? 1 : static_cast<Int>(pf.size());
      if (2 * static_cast<Int>(o.gaps().size()) == o.frob + type) ++almost;
    }
    const std::size_t checked = tally_total(r, "theoremB.categoryAnnihilatorIsConductor");
    const bool ok = r.passed() && r.semigroups_checked == 156 && checked == almost && r.wall_time_seconds < 60;
    return Outcome{ok, counts(r) + ", " + std::to_string(checked) + " equalities checked, " +
                           std::to_string(almost) + " almost symmetric by the oracle, " +
                           std::to_string(r.wall_time_seconds) + " s"};
  });

  std::size_t two_generated = 0, reflexive_pairs = 0, dual_reflexive = 0, criterion_classes = 0;
  std::size_t canred_small = 0;
  for (const auto& s : up_to_8) {
    const naive::Semigroup o = oracle_of(s);
    const bool small = naive::canonical_reduction_number(o) <= 2;
    canred_small += small;
    for (const auto& c : oracle_classes(o)) {
      two_generated += c.two_generated;
      reflexive_pairs += c.reflexive && c.dual_reflexive;
      dual_reflexive += c.dual_reflexive;
      criterion_classes += small && c.reflexive;
    }
  }

  criterion(3, "lemmaChain, propSyzygyStability, cocohomDuality, traceContainment over genus <= 8", [&] {
    Outcome o;
    std::string note;
    for (const char* id : {"lemmaChain", "propSyzygyStability", "cocohomDuality", "traceContainment"}) {
      const SuiteReport r = run_suite(id, 8, 1);
      o.ok &= r.passed() && r.semigroups_checked == 156;
      note += std::string(id) + ": " + std::to_string(r.violation_count) + " violations; ";
    }
    const SuiteReport lemma = run_suite("lemmaChain", 8, 1);
    const SuiteReport cocohom = run_suite("cocohomDuality", 8, 1);
    const SuiteReport containment = run_suite("traceContainment", 8, 1);
    o.ok &= lemma.checks_executed == 2 * two_generated;
    o.ok &= cocohom.checks_executed == reflexive_pairs;
    o.ok &= containment.checks_executed == dual_reflexive;
    o.note = note + std::to_string(two_generated) + " two-generated classes, " + std::to_string(reflexive_pairs) +
             " reflexive pairs, " + std::to_string(dual_reflexive) + " reflexive duals";
    return o;
  });

  criterion(4, "traceCriterion over genus <= 8 with canonical reduction number <= 2", [&] {
    const SuiteReport r = run_suite("traceCriterion", 8, 1);
    const bool ok = r.passed() && r.checks_executed == criterion_classes;
    return Outcome{ok, counts(r) + ", " + std::to_string(canred_small) + " semigroups in scope, " +
                           std::to_string(criterion_classes) + " reflexive classes"};
  });

  criterion(5, "structural oracles: syzygy exactness, annihilator formula, genus counts", [&] {
    Outcome o;
    const SuiteReport syz = run_suite("syzygyExactness", 8, 1);
    const std::size_t exact = tally_total(syz, "syzygyExactness.degreewiseExactness");
    o.ok &= syz.passed() && exact == two_generated;

    std::size_t compared = 0, mismatched = 0;
    for (const auto& s : enumerate_up_to_genus(6)) {
      const naive::Semigroup ns = oracle_of(s);
      for (const auto& e : enumerate_ideal_classes(s).classes) {
        const naive::Set ne = naive::make(-1, e.window_end(), [&](Int z) { return e.contains(z); });
        const naive::Set want = naive::stable_annihilator(ns, ne);
        const RelativeIdeal got = stable_annihilator(e);
        bool same = true;
        for (Int z = -2; z <= want.top() + ns.frob + 4; ++z) same &= want.contains(z) == got.contains(z);
        ++compared;
        mismatched += !same;
      }
    }
    o.ok &= mismatched == 0 && compared > 0;

    const std::vector<std::size_t> expected = {1, 1, 2, 4, 7, 12, 23, 39, 67};
    bool counts_ok = true;
    for (Int g = 0; g <= 8; ++g) {
      const auto found = enumerate_by_genus(g);
      counts_ok &= found.size() == expected[g];
      if (g <= 6) {
        std::vector<std::vector<Int>> gaps;
        for (const auto& s : found) gaps.push_back(s.gaps());
        std::sort(gaps.begin(), gaps.end());
        counts_ok &= gaps == naive::gap_sets_of_genus(g);
      }
    }
    o.ok &= counts_ok;
    o.note = std::to_string(exact) + " syzygies exact, " + std::to_string(compared) + " annihilators compared, " +
             std::to_string(mismatched) + " mismatches, counts " + (counts_ok ? "match" : "differ");
    return o;
  });

  criterion(6, "pinned facts over <3,5,7>", [] {
    const auto s = NumericalSemigroup::parse("3,5,7");
    const std::size_t classes = enumerate_ideal_classes(s).classes.size();
    const RelativeIdeal tk = trace_ideal(canonical_ideal(s));
    const Int r = canonical_reduction_number(s);
    const bool ok = classes == 6 && same_set(tk, 5, {3}) && tk == maximal_ideal(s) && r == 2;
    return Outcome{ok, std::to_string(classes) + " classes, tr(K) = " + to_text(tk) + ", canonical reduction number " +
                           std::to_string(r)};
  });

  criterion(7, "consistency cross-checks over genus <= 8", [&] {
    std::size_t bad = 0;
    for (const auto& s : up_to_8) {
      const InvariantRecord inv = invariants(s);
      const ClassificationRecord rec = classify(s);
      const RelativeIdeal k = canonical_ideal(s);
      const Int r = naive::canonical_reduction_number(oracle_of(s));
      bad += inv.almost_symmetric != is_ulrich(maximal_ideal(s), k);
      bad += rec.gorenstein != (r <= 1);
      bad += (r <= 2) != is_translate(rec.canonical_trace, ring_dual(k)).has_value();
      bad += rec.canonical_reduction_number != r;
    }
    const SuiteReport suite = run_suite("canredFacts", 8, 1);
    const bool ok = bad == 0 && suite.passed();
    return Outcome{ok, std::to_string(up_to_8.size()) + " semigroups, " + std::to_string(bad) +
                           " disagreements; canredFacts " + std::to_string(suite.violation_count) + " violations"};
  });

  criterion(8, "determinism of verify --suite all --max-genus 6", [] {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string tag = "curvelab-acceptance-" + std::to_string(::getpid());
    const auto a = dir / (tag + "-a.json"), b = dir / (tag + "-b.json"), c = dir / (tag + "-c.json");
    const std::string base = "verify --suite all --max-genus 6 --format json --out ";
    const Command ra = run_cli(base + "\"" + a.string() + "\" --jobs 1 2>/dev/null");
    const Command rb = run_cli(base + "\"" + b.string() + "\" --jobs 1 2>/dev/null");
    const Command rc = run_cli(base + "\"" + c.string() + "\" --jobs 4 2>/dev/null");
    const std::string ja = without_timing(read_file(a));
    const bool repeat = ja == without_timing(read_file(b));
    const bool parallel = ja == without_timing(read_file(c));
    for (const auto& p : {a, b, c}) std::filesystem::remove(p);
    const bool ok = ra.status == 0 && rb.status == 0 && rc.status == 0 && repeat && parallel;
    return Outcome{ok, std::string("repeat ") + (repeat ? "identical" : "differs") + ", jobs 1 vs 4 " +
                           (parallel ? "identical" : "differs")};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
