//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>

#include "goms/chem/mol.hpp"

namespace goms::chem {

// Parses the organic SMILES subset: linear chains, parenthesized branches,
// ring-closure digits (including %nn), aromatic lowercase atoms, bracket
// atoms with formal charge, and bond symbols - = # :. Stereo markers,
// isotopes, atom classes, and dot-separated components are rejected with a
// typed error naming the byte offset. The returned graph is
// hydrogen-suppressed and guaranteed connected.
MolGraph parse_smiles(const std::string& text);

// Emits a SMILES string that re-parses to a graph isomorphic to the input.
// Not canonical: atom 0 starts the walk.
std::string write_smiles(const MolGraph& mol);

}  // namespace goms::chem
