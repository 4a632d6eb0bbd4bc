// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entrecip {

enum class ErrorKind {
  CutoffTooSmall,
  DimensionMismatch,
  NonHermitian,
  NormDrift,
  BasisFlagMismatch,
  DegenerateBranch,
  TPrimeMismatch,
  ZeroState,
  InvalidDensityMatrix,
  InvalidParams,
  ValueOutOfRange,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI, the self-test) can report it by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace entrecip
