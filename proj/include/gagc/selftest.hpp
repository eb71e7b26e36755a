#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gagc {

struct SelftestResult {
  std::string name;
  bool pass = false;
  std::int64_t millis = 0;
  std::string detail;  // scope and counts, or the first failure found
};

// Invariant suites over the arithmetic, code, and curve layers.  level
// "quick" stays on fields of order <= 81; "full" adds the large-field
// sweeps (GF(256), GF(3^8), ...).  Prints one line per suite to `out`
// when given.  Deterministic: all sampling is seeded.
std::vector<SelftestResult> run_selftest(const std::string& level,
                                         std::ostream* out = nullptr);

}  // namespace gagc
