// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/errors.hpp"

namespace entrecip {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::NormDrift: return "NormDrift";
    case ErrorKind::BasisFlagMismatch: return "BasisFlagMismatch";
    case ErrorKind::DegenerateBranch: return "DegenerateBranch";
    case ErrorKind::TPrimeMismatch: return "TPrimeMismatch";
    case ErrorKind::ZeroState: return "ZeroState";
    case ErrorKind::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace entrecip
