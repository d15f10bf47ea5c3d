#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "curvelab/enumerate.hpp"
#include "curvelab/error.hpp"
#include "curvelab/harness/report.hpp"
#include "curvelab/harness/serialize.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

using namespace curvelab;

int cmd_info(const std::string& gens) {
  const NumericalSemigroup s = NumericalSemigroup::parse(gens);
  const Json j{{"semigroup", s.to_string()},
               {"invariants", to_json(invariants(s))},
               {"classification", to_json(classify(s))}};
  std::cout << j.dump(2) << "\n";
  return kPass;
}

int cmd_enumerate(Int genus, const std::string& filter) {
  for (const auto& s : enumerate_by_genus(genus)) {
    const InvariantRecord r = invariants(s);
    bool keep = true;
    if (filter == "gorenstein") keep = r.symmetric;
    if (filter == "almost") keep = r.almost_symmetric;
    if (filter == "med") keep = r.med;
    if (keep) std::cout << s.to_string() << "\n";
  }
  return kPass;
}

int cmd_ideals(const std::string& gens, bool json) {
  const NumericalSemigroup s = NumericalSemigroup::parse(gens);
  const Json j = ideal_classes_json(s);
  if (json) {
    std::cout << j.dump(2) << "\n";
    return kPass;
  }
  std::cout << j["class_count"].get<std::size_t>() << " classes over <" << s.to_string() << ">\n";
  for (const auto& c : j["classes"]) {
    std::cout << c["ideal"].get<std::string>() << "  reflexive=" << (c["reflexive"].get<bool>() ? "yes" : "no")
              << "  trace=" << c["trace"].get<std::string>()
              << "  ann=" << c["stable_annihilator"].get<std::string>() << "\n";
  }
  return kPass;
}

int cmd_ca(const std::string& gens) {
  const NumericalSemigroup s = NumericalSemigroup::parse(gens);
  std::cout << to_json(certify_cohomology_annihilator(s)).dump(2) << "\n";
  return kPass;
}

int cmd_verify(const std::string& suite, Int genus, unsigned jobs, bool fail_fast, const std::string& format,
               const std::string& out_path) {
  const SuiteReport report = run_suite(suite, genus, jobs, fail_fast);
  const std::string bytes = emit_report(report, format);
  if (out_path.empty()) {
    std::cout << bytes;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(Errc::UnsupportedFormat, "cannot write '" + out_path + "'");
    out << bytes;
    std::cerr << (report.passed() ? "PASS" : "FAIL") << " (" << report.semigroups_checked << " semigroups, "
              << report.violation_count << " violations)\n";
  }
  return report.passed() ? kPass : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvelab: ideal theory of monomial curve rings k[[t^S]]"};
  app.require_subcommand(1);

  std::string gens;
  auto* info = app.add_subcommand("info", "invariants and classification of <gens> as JSON");
  info->add_option("gens", gens, "generators, e.g. 3,5,7")->required();

  Int genus = 0;
  std::string filter = "none";
  auto* enumerate = app.add_subcommand("enumerate", "semigroups of a given genus, one per line");
  enumerate->add_option("--genus", genus)->required()->check(CLI::Range(Int{0}, Int{30}));
  enumerate->add_option("--filter", filter)->check(CLI::IsMember({"gorenstein", "almost", "med", "none"}));

  bool ideals_json = false;
  auto* ideals = app.add_subcommand("ideals", "normalized ideal classes with reflexivity, trace, annihilator");
  ideals->add_option("gens", gens)->required();
  ideals->add_flag("--json", ideals_json, "print JSON instead of one line per class");

  auto* ca = app.add_subcommand("ca", "cohomology annihilator certificate as JSON");
  ca->add_option("gens", gens)->required();

  std::string suite;
  Int max_genus = 8;
  unsigned jobs = 1;
  bool fail_fast = false;
  std::string format = "text";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "run a verification suite over all semigroups up to a genus");
  verify->add_option("--suite", suite, "suite id or 'all'")->required();
  verify->add_option("--max-genus", max_genus)->required()->check(CLI::Range(Int{0}, Int{30}));
  verify->add_option("--jobs", jobs)->check(CLI::Range(1u, 1024u));
  verify->add_flag("--fail-fast", fail_fast);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*info) return cmd_info(gens);
    if (*enumerate) return cmd_enumerate(genus, filter);
    if (*ideals) return cmd_ideals(gens, ideals_json);
    if (*ca) return cmd_ca(gens);
    if (*verify) return cmd_verify(suite, max_genus, jobs, fail_fast, format, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
