//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "goms/harness/cli.hpp"

#include <cstdio>

namespace goms::harness {

int run_command(const std::vector<std::string>& args) {
  (void)args;
  std::fprintf(stderr, "error: UsageError: CLI not wired up yet\n");
  return 2;
}

int run_command(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args);
}

}  // namespace goms::harness
