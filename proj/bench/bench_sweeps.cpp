// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference loop vs OpenMP rows for the sweep kernels.

#include <omp.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "entrecip/protocol.hpp"
#include "entrecip/sweep.hpp"

using namespace entrecip;
using h_clock = std::chrono::high_resolution_clock;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto t0 = h_clock::now();
  fn();
  return std::chrono::duration<double>(h_clock::now() - t0).count();
}

void compare(const char* name, const std::function<void(Execution)>& kernel) {
  const double serial = seconds([&] { kernel(Execution::serial); });
  const double parallel = seconds([&] { kernel(Execution::parallel); });
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(10) << serial << " s" << std::setw(10) << parallel << " s" << std::setw(8)
            << std::setprecision(2) << serial / parallel << "x\n";
}

}  // namespace

int main() {
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12) << "serial" << std::setw(12)
            << "parallel" << std::setw(9) << "speedup\n";

  const SystemParams params;
  const TimeGrid grid{0.0, 5.0, 2000};
  compare("fig1 analytic (2000)", [&](Execution e) { (void)sweep_fig1(params, grid, Branch::minus, e); });

  const ProjectionKind vac[] = {ProjectionKind::vac_vac};
  compare("fig2 analytic (2000)",
          [&](Execution e) { (void)sweep_retrieval(params, grid, Branch::plus, vac, Engine::analytic, std::nullopt, e); });

  const TimeGrid coarse{0.05, 4.0, 40};
  compare("fig2 effective (40)", [&](Execution e) {
    (void)sweep_retrieval(params, coarse, Branch::plus, vac, Engine::numeric_effective, std::nullopt, e);
  });

  std::vector<SystemParams> list;
  for (double ratio : {10.0, 20.0, 50.0, 100.0}) {
    SystemParams p;
    p.omega1 = p.omega2 = ratio;
    list.push_back(p);
  }
  const double times[] = {0.25, 0.5, 0.75, 1.0};
  compare("rwa 4x4 (nmax 40)", [&](Execution e) { (void)rwa_validation(list, times, FockCutoff(40), e); });
  return 0;
}
