//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goms/util/error.hpp"

namespace goms::chem {

// Heavy-atom element subset. Hydrogen is recognized on input but molecules
// are stored hydrogen-suppressed, so H never appears in a stored MolGraph.
enum class Element : std::uint8_t { H, B, C, N, O, P, S, F, Cl, Br, I };

const char* symbol(Element e);
std::optional<Element> element_from_symbol(const std::string& s);
// Conventional maximum valence, used by the random-molecule generator.
int max_valence(Element e);
int atomic_number(Element e);

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

const char* to_string(BondOrder order);
std::optional<BondOrder> bond_order_from_string(const std::string& s);
// Integer contribution to valence; aromatic counts as 1.5 rounded up per bond
// pair, but for bookkeeping we use 1 (heavy-atom graphs tolerate this).
int bond_order_value(BondOrder order);

struct Atom {
  Element element = Element::C;
  int formal_charge = 0;
  bool aromatic = false;
};

// Endpoints are stored with a < b.
struct Bond {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  BondOrder order = BondOrder::Single;
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline Vec3 operator-(const Vec3& p, const Vec3& q) {
  return {p.x - q.x, p.y - q.y, p.z - q.z};
}
inline Vec3 operator+(const Vec3& p, const Vec3& q) {
  return {p.x + q.x, p.y + q.y, p.z + q.z};
}
inline Vec3 operator*(const Vec3& p, double s) {
  return {p.x * s, p.y * s, p.z * s};
}
double dot(const Vec3& p, const Vec3& q);
Vec3 cross(const Vec3& p, const Vec3& q);
double norm(const Vec3& p);

// Per-atom 3D coordinates in Angstrom.
struct Conformer {
  std::vector<Vec3> coords;
};

struct MolGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::optional<Conformer> conformer;
  std::string provenance;
  // For induced subgraphs: position i maps to the index in the root molecule.
  // Empty for molecules parsed from scratch.
  std::vector<std::uint32_t> orig_indices;

  std::size_t num_atoms() const { return atoms.size(); }
  std::size_t num_bonds() const { return bonds.size(); }
};

// Neighbor entry: the other atom plus the index of the connecting bond.
struct Neighbor {
  std::uint32_t atom;
  std::uint32_t bond;
};

using AdjacencyList = std::vector<std::vector<Neighbor>>;

AdjacencyList adjacency(const MolGraph& mol);

// Structural checks shared by all construction paths: endpoint validity,
// duplicate bonds, aromatic-flag consistency, conformer size/finiteness.
// Connectivity is checked by parsers, not here (induced subgraphs may be
// disconnected by design).
void validate_molgraph(const MolGraph& mol);

bool is_connected(const MolGraph& mol);
std::vector<std::vector<std::uint32_t>> connected_components(const MolGraph& mol);

// Ring perception. A bond is a ring bond iff it is not a bridge; ring atoms
// are endpoints of ring bonds; a ring system is a connected component of the
// ring-bond subgraph (fused rings share atoms and merge).
std::vector<bool> ring_bond_flags(const MolGraph& mol);
std::vector<bool> ring_atom_flags(const MolGraph& mol);
std::vector<std::vector<std::uint32_t>> ring_systems(const MolGraph& mol);

// Induced subgraph over `atoms` (original indices, any order, deduplicated
// internally). Keeps all bonds with both endpoints inside the set and records
// root-molecule indices in orig_indices (composing through nested induction).
MolGraph induced_subgraph(const MolGraph& mol,
                          const std::vector<std::uint32_t>& atoms);

// Relabels atoms so that new index i holds old atom perm[i].
MolGraph permute_atoms(const MolGraph& mol,
                       const std::vector<std::uint32_t>& perm);

int heavy_degree(const AdjacencyList& adj, std::uint32_t atom);

}  // namespace goms::chem
