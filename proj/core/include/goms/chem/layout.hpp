//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>

#include "goms/chem/mol.hpp"

namespace goms::chem {

// Deterministic 3D embedding for molecules without supplied coordinates:
// seeded random init, damped spring relaxation, then hard projection of bond
// lengths toward 1.5 A. Identical (mol, seed) inputs give bit-identical
// coordinates. Bonded-atom distances land in [0.8, 2.0] A.
Conformer fallback_layout(const MolGraph& mol, std::uint64_t seed);

// Conformer for `mol` reusing existing coordinates when present, otherwise
// the fallback layout.
Conformer conformer_or_layout(const MolGraph& mol, std::uint64_t seed);

}  // namespace goms::chem
