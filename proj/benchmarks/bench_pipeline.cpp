//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include <benchmark/benchmark.h>

#include "goms/chem/layout.hpp"
#include "goms/chem/smiles.hpp"
#include "goms/chem/wl.hpp"

namespace {

static void BM_ParseSmiles(benchmark::State& state) {
  const std::string smi = "CC(C)Cc1ccc(cc1)C(C)C(=O)O";
  for (auto _ : state) {
    auto mol = goms::chem::parse_smiles(smi);
    benchmark::DoNotOptimize(mol);
  }
}
BENCHMARK(BM_ParseSmiles);

static void BM_WlHash(benchmark::State& state) {
  auto mol = goms::chem::parse_smiles("CC(C)Cc1ccc(cc1)C(C)C(=O)O");
  for (auto _ : state) {
    benchmark::DoNotOptimize(goms::chem::wl_hash(mol));
  }
}
BENCHMARK(BM_WlHash);

static void BM_FallbackLayout(benchmark::State& state) {
  auto mol = goms::chem::parse_smiles("CC(C)Cc1ccc(cc1)C(C)C(=O)O");
  for (auto _ : state) {
    benchmark::DoNotOptimize(goms::chem::fallback_layout(mol, 7));
  }
}
BENCHMARK(BM_FallbackLayout);

}  // namespace

BENCHMARK_MAIN();
