//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <vector>

namespace goms::harness {

// Entry point behind the `goms` binary. Subcommands: parse, decompose,
// featurize, train, eval, expressivity, bench. Returns the process exit
// status: 0 on success, 2 on usage errors, 1 otherwise.
int run_command(int argc, char** argv);
int run_command(const std::vector<std::string>& args);

}  // namespace goms::harness
