// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <exception>
#include <mutex>

#include "entrecip/protocol.hpp"

namespace entrecip::detail {

/// Runs fn(i) for i in [0, n). Each i writes only its own output slot. The
/// first exception thrown by any row is rethrown after the loop.
template <typename Fn>
void for_each_row(long n, Execution execution, Fn&& fn) {
  if (execution == Execution::serial) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace entrecip::detail
