#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "curvelab/harness/checker.hpp"
#include "curvelab/harness/context.hpp"

namespace curvelab {

// A named group of checks. Each suite owns a set of catalogued
// properties; together the suites own every catalogued property once.
struct Suite {
  std::string_view id;
  std::string_view summary;
  std::vector<std::string_view> properties;
  void (*run)(SemigroupContext& ctx, Checker& ck) = nullptr;
  // Optional check that looks at a whole genus at once.
  void (*run_genus)(Int genus, Checker& ck) = nullptr;
  // Range-level checks run for genus up to this bound only.
  Int genus_cap = 0;
};

// Registry order is the order "all" runs in.
const std::vector<Suite>& suite_registry();
const Suite* find_suite(std::string_view id);

// Every property identifier that the suites are expected to cover.
std::span<const std::string_view> property_catalog();

}  // namespace curvelab
