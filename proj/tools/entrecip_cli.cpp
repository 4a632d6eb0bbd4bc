// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/cli.hpp"

int main(int argc, char** argv) { return entrecip::cli::main_entry(argc, argv); }
