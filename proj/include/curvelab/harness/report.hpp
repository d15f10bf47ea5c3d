#pragma once

#include <string>
#include <string_view>

#include "curvelab/harness/runner.hpp"
#include "curvelab/harness/serialize.hpp"

namespace curvelab {

// format: "text", "json" or "csv"; anything else throws UnsupportedFormat.
// Every format except text omits the wall time when `with_timing` is false.
std::string emit_report(const SuiteReport& report, std::string_view format, bool with_timing = true);

Json report_json(const SuiteReport& report, bool with_timing = true);

}  // namespace curvelab
