#pragma once

// Seeded randomized identity checks, shared by the `props` command.

#include <cstdint>
#include <string>
#include <vector>

namespace conjzoo {

struct PropertyResult {
  std::string name;
  bool pass = true;
  int samples = 0;
  /// First counterexample, if any.
  std::string detail;
};

std::vector<PropertyResult> run_properties(std::uint64_t seed, int samples);

}  // namespace conjzoo
