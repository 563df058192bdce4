//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "goms/chem/layout.hpp"
#include "goms/chem/mol.hpp"
#include "goms/chem/mol_doc.hpp"
#include "goms/chem/smiles.hpp"
#include "goms/chem/wl.hpp"
#include "goms/util/rng.hpp"

using namespace goms;
using namespace goms::chem;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a goms::Error");
  return ErrorKind::IoError;
}

// Brute-force labeled-graph isomorphism over all permutations. Test-side
// oracle for WL hashing on small graphs; independent of wl_hash internals.
bool brute_force_isomorphic(const MolGraph& a, const MolGraph& b) {
  if (a.num_atoms() != b.num_atoms() || a.num_bonds() != b.num_bonds())
    return false;
  const std::size_t n = a.num_atoms();
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto atom_eq = [](const Atom& x, const Atom& y) {
    return x.element == y.element && x.formal_charge == y.formal_charge &&
           x.aromatic == y.aromatic;
  };
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = atom_eq(a.atoms[i], b.atoms[perm[i]]);
    if (!ok) continue;
    std::set<std::tuple<std::uint32_t, std::uint32_t, int>> eb;
    for (const Bond& bond : b.bonds) {
      auto mm = std::minmax(bond.a, bond.b);
      eb.insert({mm.first, mm.second, static_cast<int>(bond.order)});
    }
    for (const Bond& bond : a.bonds) {
      auto mm = std::minmax(perm[bond.a], perm[bond.b]);
      if (!eb.count({mm.first, mm.second, static_cast<int>(bond.order)})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::uint32_t> random_perm(std::size_t n, util::Rng& rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(p);
  return p;
}

}  // namespace

TEST_CASE("parse_smiles: ethanol") {
  MolGraph mol = parse_smiles("CCO");
  CHECK(mol.num_atoms() == 3);
  CHECK(mol.num_bonds() == 2);
  CHECK(mol.atoms[0].element == Element::C);
  CHECK(mol.atoms[1].element == Element::C);
  CHECK(mol.atoms[2].element == Element::O);
  for (const Bond& b : mol.bonds) CHECK(b.order == BondOrder::Single);
}

TEST_CASE("parse_smiles: benzene") {
  MolGraph mol = parse_smiles("c1ccccc1");
  CHECK(mol.num_atoms() == 6);
  CHECK(mol.num_bonds() == 6);
  for (const Atom& a : mol.atoms) CHECK(a.aromatic);
  for (const Bond& b : mol.bonds) CHECK(b.order == BondOrder::Aromatic);
}

TEST_CASE("parse_smiles: N-methylacetamide atom/bond table") {
  // Expected tables verified against an independent cheminformatics toolkit
  // (RDKit 2025.03): heavy atoms C,C,O,N,C; bonds 0-1 single, 1-2 double,
  // 1-3 single, 3-4 single.
  MolGraph mol = parse_smiles("CC(=O)NC");
  REQUIRE(mol.num_atoms() == 5);
  CHECK(mol.atoms[0].element == Element::C);
  CHECK(mol.atoms[1].element == Element::C);
  CHECK(mol.atoms[2].element == Element::O);
  CHECK(mol.atoms[3].element == Element::N);
  CHECK(mol.atoms[4].element == Element::C);
  REQUIRE(mol.num_bonds() == 4);
  auto find_bond = [&](std::uint32_t a, std::uint32_t b) -> const Bond& {
    for (const Bond& bond : mol.bonds)
      if (bond.a == std::min(a, b) && bond.b == std::max(a, b)) return bond;
    REQUIRE(false);
    return mol.bonds[0];
  };
  CHECK(find_bond(0, 1).order == BondOrder::Single);
  CHECK(find_bond(1, 2).order == BondOrder::Double);
  CHECK(find_bond(1, 3).order == BondOrder::Single);
  CHECK(find_bond(3, 4).order == BondOrder::Single);
}

TEST_CASE("parse_smiles: brackets, charges, ring closures") {
  MolGraph anion = parse_smiles("[O-]C");
  CHECK(anion.atoms[0].formal_charge == -1);

  MolGraph cation = parse_smiles("C[N+](C)(C)C");
  CHECK(cation.atoms[1].formal_charge == 1);
  CHECK(cation.num_atoms() == 5);

  // %nn ring closure spelling.
  MolGraph big = parse_smiles("C%12CCCCC%12");
  CHECK(big.num_atoms() == 6);
  CHECK(big.num_bonds() == 6);

  // Hydrogens are suppressed, including bracket hydrogen counts.
  MolGraph pyrrole = parse_smiles("c1cc[nH]c1");
  CHECK(pyrrole.num_atoms() == 5);

  // Ring-closure bond order may come from either side.
  MolGraph cyclo = parse_smiles("C=1CCCCC=1");
  bool has_double = false;
  for (const Bond& b : cyclo.bonds) has_double |= b.order == BondOrder::Double;
  CHECK(has_double);
}

TEST_CASE("parse_smiles: typed errors with byte offsets") {
  auto check_error = [](const std::string& text, ErrorKind kind) {
    try {
      parse_smiles(text);
      FAIL("expected parse failure for: ", text);
    } catch (const Error& e) {
      CHECK(e.kind() == kind);
      CHECK(e.offset().has_value());
    }
  };
  check_error("CC(C", ErrorKind::UnbalancedParentheses);
  check_error("CC)C", ErrorKind::UnbalancedParentheses);
  check_error("C1CCC", ErrorKind::UnclosedRingBond);
  check_error("CXC", ErrorKind::UnknownElement);
  check_error("C.C", ErrorKind::DisconnectedMolecule);
  check_error("C=", ErrorKind::DanglingBond);
  check_error("C=#C", ErrorKind::DanglingBond);
  check_error("C@C", ErrorKind::UnknownElement);
  check_error("C/C=C/C", ErrorKind::UnsupportedFeature);
  check_error("[13C]", ErrorKind::UnsupportedFeature);
  check_error("C1C=1C", ErrorKind::RingBondConflict);
  check_error("C1C1", ErrorKind::DuplicateBond);
  check_error("C()C", ErrorKind::UnbalancedParentheses);
}

TEST_CASE("write_smiles round trips") {
  for (const char* smi :
       {"CCO", "c1ccccc1", "CC(=O)NC", "c1ccccc1-c1ccccc1", "C[N+](C)(C)C",
        "CC(C)Cc1ccc(cc1)C(C)C(=O)O", "C1CC2CCC1CC2", "N#Cc1ccccc1",
        "OC(=O)c1ccccc1O"}) {
    MolGraph mol = parse_smiles(smi);
    std::string out = write_smiles(mol);
    MolGraph back = parse_smiles(out);
    CHECK_MESSAGE(wl_hash(mol) == wl_hash(back), "round trip failed: ", smi,
                  " -> ", out);
  }
}

TEST_CASE("induced_subgraph on benzene") {
  MolGraph benzene = parse_smiles("c1ccccc1");
  MolGraph full = induced_subgraph(benzene, {0, 1, 2, 3, 4, 5});
  CHECK(full.num_atoms() == 6);
  CHECK(full.num_bonds() == 6);
  CHECK(wl_hash(full) == wl_hash(benzene));

  MolGraph pair = induced_subgraph(benzene, {0, 1});
  CHECK(pair.num_atoms() == 2);
  CHECK(pair.num_bonds() == 1);
  CHECK(pair.orig_indices == std::vector<std::uint32_t>{0, 1});

  MolGraph para = induced_subgraph(benzene, {0, 3});
  CHECK(para.num_atoms() == 2);
  CHECK(para.num_bonds() == 0);

  CHECK(kind_of([&] { induced_subgraph(benzene, {}); }) ==
        ErrorKind::EmptyAtomSet);
  CHECK(kind_of([&] { induced_subgraph(benzene, {9}); }) ==
        ErrorKind::IndexOutOfRange);
}

TEST_CASE("wl_hash: permutation invariance and discrimination") {
  MolGraph benzene = parse_smiles("c1ccccc1");
  util::Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    MolGraph shuffled =
        permute_atoms(benzene, random_perm(benzene.num_atoms(), rng));
    CHECK(wl_hash(shuffled) == wl_hash(benzene));
    CHECK(wl_hash(shuffled, 1) == wl_hash(benzene, 1));
  }

  MolGraph cyclohexane = parse_smiles("C1CCCCC1");
  CHECK_FALSE(brute_force_isomorphic(benzene, cyclohexane));
  CHECK(wl_hash(benzene) != wl_hash(cyclohexane));

  // WL equality tracks brute-force isomorphism on assorted 6-atom graphs.
  const char* six[] = {"C1CCCCC1", "CCCCCC", "CC(C)CCC", "CC(C)(C)CC",
                       "C1CCCC1C", "C1CC1CCC"};
  for (const char* sa : six) {
    for (const char* sb : six) {
      MolGraph a = parse_smiles(sa);
      MolGraph b = parse_smiles(sb);
      CHECK((wl_hash(a) == wl_hash(b)) == brute_force_isomorphic(a, b));
    }
  }
}

TEST_CASE("canonical_form: isomorphic inputs become identical graphs") {
  util::Rng rng(7);
  for (const char* smi :
       {"c1ccccc1", "CC(=O)NC", "CC(C)Cc1ccc(cc1)C(C)C(=O)O", "C1CC2CCC1CC2",
        "Cc1ccncc1", "OCC(O)CO"}) {
    MolGraph mol = parse_smiles(smi);
    MolGraph canon = canonical_form(mol);
    for (int trial = 0; trial < 8; ++trial) {
      MolGraph shuffled = permute_atoms(mol, random_perm(mol.num_atoms(), rng));
      MolGraph canon2 = canonical_form(shuffled);
      REQUIRE(canon.num_atoms() == canon2.num_atoms());
      REQUIRE(canon.bonds.size() == canon2.bonds.size());
      for (std::size_t i = 0; i < canon.num_atoms(); ++i) {
        CHECK(canon.atoms[i].element == canon2.atoms[i].element);
        CHECK(canon.atoms[i].aromatic == canon2.atoms[i].aromatic);
        CHECK(canon.atoms[i].formal_charge == canon2.atoms[i].formal_charge);
      }
      for (std::size_t i = 0; i < canon.bonds.size(); ++i) {
        CHECK(canon.bonds[i].a == canon2.bonds[i].a);
        CHECK(canon.bonds[i].b == canon2.bonds[i].b);
        CHECK(canon.bonds[i].order == canon2.bonds[i].order);
      }
    }
  }
}

TEST_CASE("fallback_layout: degenerate, bounds, determinism") {
  MolGraph single = parse_smiles("C");
  Conformer c1 = fallback_layout(single, 3);
  CHECK(c1.coords.size() == 1);
  CHECK(c1.coords[0].x == 0.0);
  CHECK(c1.coords[0].y == 0.0);
  CHECK(c1.coords[0].z == 0.0);

  MolGraph pair = parse_smiles("CC");
  Conformer c2 = fallback_layout(pair, 5);
  const double d = norm(c2.coords[1] - c2.coords[0]);
  CHECK(d >= 0.8);
  CHECK(d <= 2.0);

  MolGraph benzene = parse_smiles("c1ccccc1");
  Conformer a = fallback_layout(benzene, 7);
  Conformer b = fallback_layout(benzene, 7);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    CHECK(a.coords[i].x == b.coords[i].x);
    CHECK(a.coords[i].y == b.coords[i].y);
    CHECK(a.coords[i].z == b.coords[i].z);
  }

  // Bond-length bounds on a varied set.
  for (const char* smi : {"CCO", "CC(=O)NC", "c1ccccc1-c1ccccc1",
                          "CC(C)Cc1ccc(cc1)C(C)C(=O)O", "C1CC2CCC1CC2",
                          "CCCCCCCCCC", "OC(=O)c1ccccc1O"}) {
    MolGraph mol = parse_smiles(smi);
    Conformer conf = fallback_layout(mol, 11);
    for (const Bond& bond : mol.bonds) {
      const double len = norm(conf.coords[bond.b] - conf.coords[bond.a]);
      CHECK_MESSAGE(len >= 0.8, smi, " bond too short: ", len);
      CHECK_MESSAGE(len <= 2.0, smi, " bond too long: ", len);
    }
  }
}

TEST_CASE("molecule documents") {
  const std::string water_like = R"({
    "atoms": [{"element": "O"}, {"element": "C"}, {"element": "C"}],
    "bonds": [{"a": 0, "b": 1, "order": "single"}, {"a": 1, "b": 2}],
    "coords": [[0.0, 0.0, 0.0], [1.4, 0.0, 0.0], [2.1, 1.2, 0.0]],
    "id": "mol-1", "target": 0.5
  })";
  MoleculeDoc doc = parse_molecule_doc(water_like);
  CHECK(doc.mol.num_atoms() == 3);
  REQUIRE(doc.mol.conformer.has_value());
  CHECK(doc.mol.conformer->coords.size() == 3);
  CHECK(doc.id == "mol-1");
  CHECK(doc.target == 0.5);

  const std::string no_coords = R"({
    "atoms": [{"element": "C"}, {"element": "C"}],
    "bonds": [{"a": 0, "b": 1}]
  })";
  CHECK_FALSE(parse_molecule_doc(no_coords).mol.conformer.has_value());

  const std::string short_coords = R"({
    "atoms": [{"element": "C"}, {"element": "C"}, {"element": "C"}],
    "bonds": [{"a": 0, "b": 1}, {"a": 1, "b": 2}],
    "coords": [[0, 0, 0], [1.5, 0, 0]]
  })";
  CHECK(kind_of([&] { parse_molecule_doc(short_coords); }) ==
        ErrorKind::CoordinateCountMismatch);

  CHECK(kind_of([&] { parse_molecule_doc("{\"atoms\": 3}"); }) ==
        ErrorKind::SchemaError);
  CHECK(kind_of([&] { parse_molecule_doc("not json"); }) ==
        ErrorKind::SchemaError);

  // Round trip through the writer.
  MolGraph mol = parse_smiles("CC(=O)NC");
  mol.conformer = fallback_layout(mol, 1);
  MoleculeDoc back = parse_molecule_doc(write_molecule_doc(mol, "x", 1.25));
  CHECK(wl_hash(back.mol) == wl_hash(mol));
  CHECK(back.target == 1.25);
  for (std::size_t i = 0; i < mol.num_atoms(); ++i) {
    CHECK(back.mol.conformer->coords[i].x == mol.conformer->coords[i].x);
    CHECK(back.mol.conformer->coords[i].y == mol.conformer->coords[i].y);
    CHECK(back.mol.conformer->coords[i].z == mol.conformer->coords[i].z);
  }
}

TEST_CASE("ring perception") {
  MolGraph toluene = parse_smiles("Cc1ccccc1");
  std::vector<bool> ring_atoms = ring_atom_flags(toluene);
  CHECK_FALSE(ring_atoms[0]);
  for (int i = 1; i < 7; ++i) CHECK(ring_atoms[i]);

  MolGraph biphenyl = parse_smiles("c1ccccc1-c1ccccc1");
  auto systems = ring_systems(biphenyl);
  REQUIRE(systems.size() == 2);
  CHECK(systems[0].size() == 6);
  CHECK(systems[1].size() == 6);
  // The inter-ring bond is not a ring bond.
  std::vector<bool> rb = ring_bond_flags(biphenyl);
  int non_ring = 0;
  for (bool f : rb) non_ring += f ? 0 : 1;
  CHECK(non_ring == 1);

  // Fused bicyclic: one ring system.
  MolGraph decalin = parse_smiles("C1CCC2CCCCC2C1");
  CHECK(ring_systems(decalin).size() == 1);
}
