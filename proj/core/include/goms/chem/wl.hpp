//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <vector>

#include "goms/chem/mol.hpp"

namespace goms::chem {

// Weisfeiler-Lehman color-refinement digest over (element, charge, aromatic)
// atom labels and bond orders. Isomorphic graphs always hash equal; the
// digest is invariant under atom reindexing. Used as the graph-identity
// oracle throughout: round-trip checks, fragment multiset equality, and
// scaffold keys.
std::uint64_t wl_hash(const MolGraph& mol, int iterations = 3);

// Per-atom colors after `iterations` refinement rounds, rank-compressed to
// 0..k-1 in a canonical (value-sorted) order.
std::vector<std::uint32_t> wl_colors(const MolGraph& mol, int iterations);

// Canonical atom order via refinement with individualization backtracking.
// Isomorphic graphs relabeled by their canonical orders become identical
// (same atom payloads, same bond list). Exponential in the worst case; fine
// for molecule-sized graphs.
std::vector<std::uint32_t> canonical_atom_order(const MolGraph& mol);

// Relabels the molecule into canonical order and drops provenance details
// that are not part of graph identity.
MolGraph canonical_form(const MolGraph& mol);

}  // namespace goms::chem
