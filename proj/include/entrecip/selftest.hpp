// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entrecip/model.hpp"

namespace entrecip {

struct PropertyResult {
  std::string name;
  bool pass;
  std::string measured;  ///< worst value seen, or the error that stopped the check
};

struct SelftestOptions {
  SystemParams params;  ///< drives the protocol-level checks
  std::uint64_t seed = 20260101;
  std::optional<int> nmax_override;
};

/// Runs the invariant suite. Deterministic for a fixed seed.
std::vector<PropertyResult> run_selftest(const SelftestOptions& options);

/// One "PASS name  measured" / "FAIL name  measured" line per property and a
/// summary line.
void write_report(std::ostream& os, const std::vector<PropertyResult>& results);

}  // namespace entrecip
