//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "goms/chem/mol_doc.hpp"

#include <cmath>

#include <json.hpp>

namespace goms::chem {

using nlohmann::json;

namespace {

MolGraph suppress_doc_hydrogens(MolGraph mol) {
  std::vector<std::uint32_t> keep;
  for (std::uint32_t i = 0; i < mol.atoms.size(); ++i)
    if (mol.atoms[i].element != Element::H) keep.push_back(i);
  if (keep.empty())
    throw Error(ErrorKind::SchemaError,
                "molecule has no heavy atoms after hydrogen suppression");
  if (keep.size() == mol.atoms.size()) return mol;
  MolGraph out = induced_subgraph(mol, keep);
  out.orig_indices.clear();
  out.provenance = mol.provenance;
  return out;
}

}  // namespace

MoleculeDoc parse_molecule_doc(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array())
    throw Error(ErrorKind::SchemaError, "document requires an 'atoms' array");

  MoleculeDoc out;
  MolGraph& mol = out.mol;
  mol.provenance = "doc";

  for (const json& a : doc["atoms"]) {
    if (!a.is_object() || !a.contains("element") || !a["element"].is_string())
      throw Error(ErrorKind::SchemaError, "atom requires an 'element' string");
    auto elem = element_from_symbol(a["element"].get<std::string>());
    if (!elem)
      throw Error(ErrorKind::SchemaError,
                  "unknown element '" + a["element"].get<std::string>() + "'");
    Atom atom;
    atom.element = *elem;
    if (a.contains("charge")) {
      if (!a["charge"].is_number_integer())
        throw Error(ErrorKind::SchemaError, "atom charge must be an integer");
      atom.formal_charge = a["charge"].get<int>();
    }
    if (a.contains("aromatic")) {
      if (!a["aromatic"].is_boolean())
        throw Error(ErrorKind::SchemaError, "atom aromatic must be a boolean");
      atom.aromatic = a["aromatic"].get<bool>();
    }
    mol.atoms.push_back(atom);
  }
  if (mol.atoms.empty())
    throw Error(ErrorKind::SchemaError, "document has no atoms");

  if (doc.contains("bonds")) {
    if (!doc["bonds"].is_array())
      throw Error(ErrorKind::SchemaError, "'bonds' must be an array");
    for (const json& b : doc["bonds"]) {
      if (!b.is_object() || !b.contains("a") || !b.contains("b") ||
          !b["a"].is_number_integer() || !b["b"].is_number_integer())
        throw Error(ErrorKind::SchemaError, "bond requires integer 'a'/'b'");
      Bond bond;
      const std::int64_t ia = b["a"].get<std::int64_t>();
      const std::int64_t ib = b["b"].get<std::int64_t>();
      if (ia < 0 || ib < 0 ||
          ia >= static_cast<std::int64_t>(mol.atoms.size()) ||
          ib >= static_cast<std::int64_t>(mol.atoms.size()))
        throw Error(ErrorKind::SchemaError, "bond endpoint out of range");
      bond.a = static_cast<std::uint32_t>(std::min(ia, ib));
      bond.b = static_cast<std::uint32_t>(std::max(ia, ib));
      std::string order_str = "single";
      if (b.contains("order")) {
        if (!b["order"].is_string())
          throw Error(ErrorKind::SchemaError, "bond order must be a string");
        order_str = b["order"].get<std::string>();
      }
      auto order = bond_order_from_string(order_str);
      if (!order)
        throw Error(ErrorKind::SchemaError,
                    "unknown bond order '" + order_str + "'");
      bond.order = *order;
      mol.bonds.push_back(bond);
    }
  }

  if (doc.contains("coords")) {
    if (!doc["coords"].is_array())
      throw Error(ErrorKind::SchemaError, "'coords' must be an array");
    if (doc["coords"].size() != mol.atoms.size())
      throw Error(ErrorKind::CoordinateCountMismatch,
                  std::to_string(doc["coords"].size()) + " coords for " +
                      std::to_string(mol.atoms.size()) + " atoms");
    Conformer conf;
    for (const json& c : doc["coords"]) {
      if (!c.is_array() || c.size() != 3 || !c[0].is_number() ||
          !c[1].is_number() || !c[2].is_number())
        throw Error(ErrorKind::SchemaError, "coordinate must be [x, y, z]");
      Vec3 v{c[0].get<double>(), c[1].get<double>(), c[2].get<double>()};
      if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
        throw Error(ErrorKind::NonFiniteCoordinate,
                    "non-finite coordinate in document");
      conf.coords.push_back(v);
    }
    mol.conformer = std::move(conf);
  }

  if (doc.contains("id")) {
    if (!doc["id"].is_string())
      throw Error(ErrorKind::SchemaError, "'id' must be a string");
    out.id = doc["id"].get<std::string>();
  }
  if (doc.contains("target")) {
    if (!doc["target"].is_number())
      throw Error(ErrorKind::SchemaError, "'target' must be a number");
    out.target = doc["target"].get<double>();
    if (!std::isfinite(*out.target))
      throw Error(ErrorKind::SchemaError, "'target' must be finite");
  }

  mol = suppress_doc_hydrogens(std::move(mol));
  validate_molgraph(mol);
  if (!is_connected(mol))
    throw Error(ErrorKind::DisconnectedMolecule,
                "document molecule is disconnected");
  return out;
}

std::string write_molecule_doc(const MolGraph& mol,
                               const std::optional<std::string>& id,
                               const std::optional<double>& target) {
  json doc;
  doc["atoms"] = json::array();
  for (const Atom& a : mol.atoms) {
    json atom;
    atom["element"] = symbol(a.element);
    atom["charge"] = a.formal_charge;
    atom["aromatic"] = a.aromatic;
    doc["atoms"].push_back(atom);
  }
  doc["bonds"] = json::array();
  for (const Bond& b : mol.bonds) {
    json bond;
    bond["a"] = b.a;
    bond["b"] = b.b;
    bond["order"] = to_string(b.order);
    doc["bonds"].push_back(bond);
  }
  if (mol.conformer) {
    doc["coords"] = json::array();
    for (const Vec3& v : mol.conformer->coords)
      doc["coords"].push_back({v.x, v.y, v.z});
  }
  if (id) doc["id"] = *id;
  if (target) doc["target"] = *target;
  return doc.dump();
}

}  // namespace goms::chem
