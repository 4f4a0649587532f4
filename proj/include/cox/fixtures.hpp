#pragma once

#include <string>
#include <vector>

#include "cox/io.hpp"

namespace cox {

// A paper example run end-to-end with a pinned seed, asserting the recorded
// invariants. `report` and `input_doc` are byte-deterministic.
struct FixtureResult {
  bool ok = true;
  std::string report;
  std::string input_doc;
  std::string log;
};

std::vector<std::string> fixture_names();
FixtureResult run_fixture(const std::string& name, const FieldSpec& field);

}  // namespace cox
