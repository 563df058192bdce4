//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "goms/harness/cli.hpp"

int main(int argc, char** argv) {
  return goms::harness::run_command(argc, argv);
}
