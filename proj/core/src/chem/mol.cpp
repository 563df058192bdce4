//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "goms/chem/mol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace goms::chem {

const char* symbol(Element e) {
  switch (e) {
    case Element::H: return "H";
    case Element::B: return "B";
    case Element::C: return "C";
    case Element::N: return "N";
    case Element::O: return "O";
    case Element::P: return "P";
    case Element::S: return "S";
    case Element::F: return "F";
    case Element::Cl: return "Cl";
    case Element::Br: return "Br";
    case Element::I: return "I";
  }
  return "?";
}

std::optional<Element> element_from_symbol(const std::string& s) {
  if (s == "H") return Element::H;
  if (s == "B") return Element::B;
  if (s == "C") return Element::C;
  if (s == "N") return Element::N;
  if (s == "O") return Element::O;
  if (s == "P") return Element::P;
  if (s == "S") return Element::S;
  if (s == "F") return Element::F;
  if (s == "Cl") return Element::Cl;
  if (s == "Br") return Element::Br;
  if (s == "I") return Element::I;
  return std::nullopt;
}

int max_valence(Element e) {
  switch (e) {
    case Element::H: return 1;
    case Element::B: return 3;
    case Element::C: return 4;
    case Element::N: return 3;
    case Element::O: return 2;
    case Element::P: return 5;
    case Element::S: return 6;
    case Element::F:
    case Element::Cl:
    case Element::Br:
    case Element::I: return 1;
  }
  return 4;
}

int atomic_number(Element e) {
  switch (e) {
    case Element::H: return 1;
    case Element::B: return 5;
    case Element::C: return 6;
    case Element::N: return 7;
    case Element::O: return 8;
    case Element::P: return 15;
    case Element::S: return 16;
    case Element::F: return 9;
    case Element::Cl: return 17;
    case Element::Br: return 35;
    case Element::I: return 53;
  }
  return 0;
}

const char* to_string(BondOrder order) {
  switch (order) {
    case BondOrder::Single: return "single";
    case BondOrder::Double: return "double";
    case BondOrder::Triple: return "triple";
    case BondOrder::Aromatic: return "aromatic";
  }
  return "?";
}

std::optional<BondOrder> bond_order_from_string(const std::string& s) {
  if (s == "single") return BondOrder::Single;
  if (s == "double") return BondOrder::Double;
  if (s == "triple") return BondOrder::Triple;
  if (s == "aromatic") return BondOrder::Aromatic;
  return std::nullopt;
}

int bond_order_value(BondOrder order) {
  switch (order) {
    case BondOrder::Single: return 1;
    case BondOrder::Double: return 2;
    case BondOrder::Triple: return 3;
    case BondOrder::Aromatic: return 1;
  }
  return 1;
}

double dot(const Vec3& p, const Vec3& q) {
  return p.x * q.x + p.y * q.y + p.z * q.z;
}

Vec3 cross(const Vec3& p, const Vec3& q) {
  return {p.y * q.z - p.z * q.y, p.z * q.x - p.x * q.z,
          p.x * q.y - p.y * q.x};
}

double norm(const Vec3& p) { return std::sqrt(dot(p, p)); }

AdjacencyList adjacency(const MolGraph& mol) {
  AdjacencyList adj(mol.num_atoms());
  for (std::uint32_t i = 0; i < mol.bonds.size(); ++i) {
    const Bond& b = mol.bonds[i];
    adj[b.a].push_back({b.b, i});
    adj[b.b].push_back({b.a, i});
  }
  return adj;
}

void validate_molgraph(const MolGraph& mol) {
  const std::uint32_t n = static_cast<std::uint32_t>(mol.num_atoms());
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const Bond& b : mol.bonds) {
    if (b.a >= n || b.b >= n)
      throw Error(ErrorKind::IndexOutOfRange, "bond endpoint out of range");
    if (b.a == b.b)
      throw Error(ErrorKind::DuplicateBond, "self-bond not allowed");
    auto key = std::minmax(b.a, b.b);
    if (!seen.insert({key.first, key.second}).second)
      throw Error(ErrorKind::DuplicateBond, "duplicate bond");
    if (b.order == BondOrder::Aromatic &&
        (!mol.atoms[b.a].aromatic || !mol.atoms[b.b].aromatic))
      throw Error(ErrorKind::AromaticityError,
                  "aromatic bond joins non-aromatic atom");
  }
  if (mol.conformer) {
    if (mol.conformer->coords.size() != mol.num_atoms())
      throw Error(ErrorKind::CoordinateCountMismatch,
                  "conformer size " +
                      std::to_string(mol.conformer->coords.size()) +
                      " for " + std::to_string(mol.num_atoms()) + " atoms");
    for (const Vec3& v : mol.conformer->coords) {
      if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
        throw Error(ErrorKind::NonFiniteCoordinate,
                    "non-finite conformer coordinate");
    }
  }
  if (!mol.orig_indices.empty() && mol.orig_indices.size() != mol.num_atoms())
    throw Error(ErrorKind::IndexOutOfRange,
                "orig_indices size mismatches atom count");
}

std::vector<std::vector<std::uint32_t>> connected_components(
    const MolGraph& mol) {
  const std::size_t n = mol.num_atoms();
  AdjacencyList adj = adjacency(mol);
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::uint32_t> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (const Neighbor& nb : adj[u]) {
        if (comp[nb.atom] < 0) {
          comp[nb.atom] = id;
          stack.push_back(nb.atom);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const MolGraph& mol) {
  if (mol.num_atoms() == 0) return false;
  return connected_components(mol).size() == 1;
}

// Bridges via iterative Tarjan lowlink; ring bonds are the non-bridges.
std::vector<bool> ring_bond_flags(const MolGraph& mol) {
  const std::size_t n = mol.num_atoms();
  AdjacencyList adj = adjacency(mol);
  std::vector<bool> is_ring(mol.num_bonds(), true);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;

  struct Frame {
    std::uint32_t node;
    std::uint32_t parent_bond;
    std::size_t next_child;
  };

  for (std::uint32_t root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack;
    stack.push_back({root, UINT32_MAX, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.next_child < adj[fr.node].size()) {
        const Neighbor nb = adj[fr.node][fr.next_child++];
        if (nb.bond == fr.parent_bond) continue;
        if (disc[nb.atom] < 0) {
          disc[nb.atom] = low[nb.atom] = timer++;
          stack.push_back({nb.atom, nb.bond, 0});
        } else {
          low[fr.node] = std::min(low[fr.node], disc[nb.atom]);
        }
      } else {
        if (stack.size() > 1) {
          Frame& parent = stack[stack.size() - 2];
          low[parent.node] = std::min(low[parent.node], low[fr.node]);
          if (low[fr.node] > disc[parent.node]) is_ring[fr.parent_bond] = false;
        }
        stack.pop_back();
      }
    }
  }
  // Bonds never visited (isolated pairs) cannot exist in a connected walk;
  // the loop above visits every bond of every component.
  return is_ring;
}

std::vector<bool> ring_atom_flags(const MolGraph& mol) {
  std::vector<bool> ring_bonds = ring_bond_flags(mol);
  std::vector<bool> flags(mol.num_atoms(), false);
  for (std::uint32_t i = 0; i < mol.bonds.size(); ++i) {
    if (ring_bonds[i]) {
      flags[mol.bonds[i].a] = true;
      flags[mol.bonds[i].b] = true;
    }
  }
  return flags;
}

std::vector<std::vector<std::uint32_t>> ring_systems(const MolGraph& mol) {
  std::vector<bool> ring_bonds = ring_bond_flags(mol);
  const std::size_t n = mol.num_atoms();
  // Union-find over ring-bond endpoints.
  std::vector<std::uint32_t> parent(n);
  for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<bool> in_ring(n, false);
  for (std::uint32_t i = 0; i < mol.bonds.size(); ++i) {
    if (!ring_bonds[i]) continue;
    const Bond& b = mol.bonds[i];
    in_ring[b.a] = in_ring[b.b] = true;
    parent[find(b.a)] = find(b.b);
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t i = 0; i < n; ++i)
    if (in_ring[i]) groups[find(i)].push_back(i);
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(groups.size());
  for (auto& [root, atoms] : groups) out.push_back(std::move(atoms));
  // Deterministic order: by smallest member.
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

MolGraph induced_subgraph(const MolGraph& mol,
                          const std::vector<std::uint32_t>& atoms) {
  if (atoms.empty())
    throw Error(ErrorKind::EmptyAtomSet, "induced subgraph over empty set");
  std::vector<std::uint32_t> sorted(atoms);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::uint32_t n = static_cast<std::uint32_t>(mol.num_atoms());
  std::vector<std::int64_t> new_index(n, -1);
  for (std::uint32_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= n)
      throw Error(ErrorKind::IndexOutOfRange,
                  "atom index " + std::to_string(sorted[i]) + " out of range");
    new_index[sorted[i]] = i;
  }

  MolGraph out;
  out.provenance = mol.provenance;
  out.atoms.reserve(sorted.size());
  out.orig_indices.reserve(sorted.size());
  const bool nested = !mol.orig_indices.empty();
  for (std::uint32_t old : sorted) {
    out.atoms.push_back(mol.atoms[old]);
    out.orig_indices.push_back(nested ? mol.orig_indices[old] : old);
  }
  if (mol.conformer) {
    Conformer c;
    c.coords.reserve(sorted.size());
    for (std::uint32_t old : sorted) c.coords.push_back(mol.conformer->coords[old]);
    out.conformer = std::move(c);
  }
  for (const Bond& b : mol.bonds) {
    const std::int64_t ia = new_index[b.a];
    const std::int64_t ib = new_index[b.b];
    if (ia >= 0 && ib >= 0) {
      Bond nb;
      nb.a = static_cast<std::uint32_t>(std::min(ia, ib));
      nb.b = static_cast<std::uint32_t>(std::max(ia, ib));
      nb.order = b.order;
      out.bonds.push_back(nb);
    }
  }
  return out;
}

MolGraph permute_atoms(const MolGraph& mol,
                       const std::vector<std::uint32_t>& perm) {
  const std::size_t n = mol.num_atoms();
  if (perm.size() != n)
    throw Error(ErrorKind::IndexOutOfRange, "permutation size mismatch");
  std::vector<std::uint32_t> inverse(n);
  for (std::uint32_t i = 0; i < n; ++i) inverse[perm[i]] = i;

  MolGraph out;
  out.provenance = mol.provenance;
  out.atoms.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) out.atoms[i] = mol.atoms[perm[i]];
  if (!mol.orig_indices.empty()) {
    out.orig_indices.resize(n);
    for (std::uint32_t i = 0; i < n; ++i)
      out.orig_indices[i] = mol.orig_indices[perm[i]];
  }
  if (mol.conformer) {
    Conformer c;
    c.coords.resize(n);
    for (std::uint32_t i = 0; i < n; ++i)
      c.coords[i] = mol.conformer->coords[perm[i]];
    out.conformer = std::move(c);
  }
  out.bonds.reserve(mol.bonds.size());
  for (const Bond& b : mol.bonds) {
    Bond nb;
    const std::uint32_t x = inverse[b.a];
    const std::uint32_t y = inverse[b.b];
    nb.a = std::min(x, y);
    nb.b = std::max(x, y);
    nb.order = b.order;
    out.bonds.push_back(nb);
  }
  std::sort(out.bonds.begin(), out.bonds.end(), [](const Bond& x, const Bond& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

int heavy_degree(const AdjacencyList& adj, std::uint32_t atom) {
  return static_cast<int>(adj[atom].size());
}

}  // namespace goms::chem
