//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>

#include "goms/chem/mol.hpp"

namespace goms::chem {

// Molecule interchange document (JSON): `atoms` (list of {element, charge,
// aromatic}), `bonds` (list of {a, b, order}), optional `coords` (list of
// [x, y, z] in Angstrom), optional `id`, optional `target`. Datasets are
// newline-delimited streams of these documents.
struct MoleculeDoc {
  MolGraph mol;
  std::optional<std::string> id;
  std::optional<double> target;
};

MoleculeDoc parse_molecule_doc(const std::string& json_text);
std::string write_molecule_doc(const MolGraph& mol,
                               const std::optional<std::string>& id = {},
                               const std::optional<double>& target = {});

}  // namespace goms::chem
