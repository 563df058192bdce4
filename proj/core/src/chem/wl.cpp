//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "goms/chem/wl.hpp"

#include <algorithm>
#include <map>

#include "goms/util/hash.hpp"

namespace goms::chem {

namespace {

using util::hash_combine;
using util::mix64;

std::uint64_t atom_label(const Atom& a) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(a.element) + 1);
  h = hash_combine(h, static_cast<std::uint64_t>(
                          static_cast<std::int64_t>(a.formal_charge) + 128));
  h = hash_combine(h, a.aromatic ? 2 : 1);
  return h;
}

// One refinement round over 64-bit colors.
std::vector<std::uint64_t> refine_once(const MolGraph& mol,
                                       const AdjacencyList& adj,
                                       const std::vector<std::uint64_t>& colors) {
  std::vector<std::uint64_t> next(colors.size());
  std::vector<std::uint64_t> packed;
  for (std::uint32_t i = 0; i < colors.size(); ++i) {
    packed.clear();
    packed.reserve(adj[i].size());
    for (const Neighbor& nb : adj[i]) {
      const std::uint64_t order =
          static_cast<std::uint64_t>(mol.bonds[nb.bond].order);
      packed.push_back(hash_combine(mix64(order), colors[nb.atom]));
    }
    std::sort(packed.begin(), packed.end());
    std::uint64_t h = mix64(colors[i]);
    for (std::uint64_t p : packed) h = hash_combine(h, p);
    next[i] = h;
  }
  return next;
}

std::vector<std::uint64_t> refined_colors(const MolGraph& mol,
                                          int iterations) {
  const AdjacencyList adj = adjacency(mol);
  std::vector<std::uint64_t> colors(mol.num_atoms());
  for (std::uint32_t i = 0; i < mol.num_atoms(); ++i)
    colors[i] = atom_label(mol.atoms[i]);
  for (int r = 0; r < iterations; ++r) colors = refine_once(mol, adj, colors);
  return colors;
}

}  // namespace

std::uint64_t wl_hash(const MolGraph& mol, int iterations) {
  if (iterations < 1)
    throw Error(ErrorKind::IndexOutOfRange, "wl_hash needs iterations >= 1");
  std::vector<std::uint64_t> colors = refined_colors(mol, iterations);

  std::vector<std::uint64_t> sorted(colors);
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t digest = mix64(0x60751ULL);
  digest = hash_combine(digest, mol.num_atoms());
  digest = hash_combine(digest, mol.num_bonds());
  for (std::uint64_t c : sorted) digest = hash_combine(digest, c);

  // Edge summary keeps e.g. pairs of triangles vs. a hexagon separated even
  // when node color multisets agree.
  std::vector<std::uint64_t> edges;
  edges.reserve(mol.num_bonds());
  for (const Bond& b : mol.bonds) {
    const std::uint64_t lo = std::min(colors[b.a], colors[b.b]);
    const std::uint64_t hi = std::max(colors[b.a], colors[b.b]);
    edges.push_back(hash_combine(hash_combine(mix64(static_cast<std::uint64_t>(b.order)), lo), hi));
  }
  std::sort(edges.begin(), edges.end());
  for (std::uint64_t e : edges) digest = hash_combine(digest, e);
  return digest;
}

std::vector<std::uint32_t> wl_colors(const MolGraph& mol, int iterations) {
  std::vector<std::uint64_t> colors = refined_colors(mol, iterations);
  std::vector<std::uint64_t> sorted(colors);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> ranks(colors.size());
  for (std::uint32_t i = 0; i < colors.size(); ++i)
    ranks[i] = static_cast<std::uint32_t>(
        std::lower_bound(sorted.begin(), sorted.end(), colors[i]) -
        sorted.begin());
  return ranks;
}

namespace {

// Refines 64-bit colors until the partition stabilizes.
std::vector<std::uint64_t> refine_to_fixpoint(
    const MolGraph& mol, const AdjacencyList& adj,
    std::vector<std::uint64_t> colors) {
  auto class_count = [](const std::vector<std::uint64_t>& c) {
    std::vector<std::uint64_t> s(c);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s.size();
  };
  std::size_t classes = class_count(colors);
  for (std::size_t round = 0; round < colors.size() + 1; ++round) {
    std::vector<std::uint64_t> next = refine_once(mol, adj, colors);
    const std::size_t next_classes = class_count(next);
    colors = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colors;
}

// Signature of the molecule when relabeled by `order`. Lexicographic
// comparison of these picks the canonical labeling.
std::vector<std::uint64_t> order_signature(
    const MolGraph& mol, const AdjacencyList& adj,
    const std::vector<std::uint32_t>& order) {
  const std::size_t n = order.size();
  std::vector<std::uint32_t> pos(n);
  for (std::uint32_t i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::uint64_t> sig;
  sig.reserve(n * 3);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t old = order[i];
    sig.push_back(atom_label(mol.atoms[old]));
    std::vector<std::uint64_t> nbrs;
    nbrs.reserve(adj[old].size());
    for (const Neighbor& nb : adj[old])
      nbrs.push_back((static_cast<std::uint64_t>(pos[nb.atom]) << 8) |
                     static_cast<std::uint64_t>(mol.bonds[nb.bond].order));
    std::sort(nbrs.begin(), nbrs.end());
    sig.push_back(nbrs.size());
    sig.insert(sig.end(), nbrs.begin(), nbrs.end());
  }
  return sig;
}

struct CanonSearch {
  const MolGraph& mol;
  const AdjacencyList& adj;
  std::vector<std::uint32_t> best_order;
  std::vector<std::uint64_t> best_sig;
  bool has_best = false;

  void visit(std::vector<std::uint64_t> colors) {
    colors = refine_to_fixpoint(mol, adj, std::move(colors));
    // Group atoms by color.
    std::map<std::uint64_t, std::vector<std::uint32_t>> classes;
    for (std::uint32_t i = 0; i < colors.size(); ++i)
      classes[colors[i]].push_back(i);
    // Discrete partition: candidate labeling.
    bool discrete = true;
    for (const auto& [c, members] : classes)
      if (members.size() > 1) {
        discrete = false;
        break;
      }
    if (discrete) {
      std::vector<std::uint32_t> order;
      order.reserve(colors.size());
      for (const auto& [c, members] : classes) order.push_back(members[0]);
      std::vector<std::uint64_t> sig = order_signature(mol, adj, order);
      if (!has_best || sig < best_sig) {
        best_sig = std::move(sig);
        best_order = std::move(order);
        has_best = true;
      }
      return;
    }
    // Individualize every member of the first non-singleton class.
    const std::vector<std::uint32_t>* target = nullptr;
    std::size_t target_size = SIZE_MAX;
    for (const auto& [c, members] : classes) {
      if (members.size() > 1 && members.size() < target_size) {
        target = &members;
        target_size = members.size();
      }
    }
    for (std::uint32_t atom : *target) {
      std::vector<std::uint64_t> child = colors;
      child[atom] = hash_combine(mix64(0xD15C0ULL), child[atom]);
      visit(std::move(child));
    }
  }
};

}  // namespace

std::vector<std::uint32_t> canonical_atom_order(const MolGraph& mol) {
  if (mol.atoms.empty())
    throw Error(ErrorKind::EmptyMolecule, "canonical order of empty molecule");
  const AdjacencyList adj = adjacency(mol);
  std::vector<std::uint64_t> colors(mol.num_atoms());
  for (std::uint32_t i = 0; i < mol.num_atoms(); ++i)
    colors[i] = atom_label(mol.atoms[i]);
  CanonSearch search{mol, adj};
  search.visit(std::move(colors));
  return search.best_order;
}

MolGraph canonical_form(const MolGraph& mol) {
  MolGraph out = permute_atoms(mol, canonical_atom_order(mol));
  out.orig_indices.clear();
  out.conformer.reset();
  return out;
}

}  // namespace goms::chem
