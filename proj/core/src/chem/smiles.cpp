//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "goms/chem/smiles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

namespace goms::chem {

namespace {

constexpr char kNoBond = 0;

struct RingOpening {
  std::uint32_t atom;
  char bond;
  std::size_t offset;
};

struct ParseState {
  MolGraph mol;
  std::set<std::pair<std::uint32_t, std::uint32_t>> bond_set;

  void add_bond(std::uint32_t u, std::uint32_t v, char bond_char,
                std::size_t offset) {
    if (u == v)
      throw Error(ErrorKind::DuplicateBond, offset, "bond to same atom");
    auto key = std::minmax(u, v);
    if (!bond_set.insert({key.first, key.second}).second)
      throw Error(ErrorKind::DuplicateBond, offset, "duplicate bond");
    BondOrder order;
    switch (bond_char) {
      case kNoBond:
        order = (mol.atoms[u].aromatic && mol.atoms[v].aromatic)
                    ? BondOrder::Aromatic
                    : BondOrder::Single;
        break;
      case '-': order = BondOrder::Single; break;
      case '=': order = BondOrder::Double; break;
      case '#': order = BondOrder::Triple; break;
      case ':':
        if (!mol.atoms[u].aromatic || !mol.atoms[v].aromatic)
          throw Error(ErrorKind::AromaticityError, offset,
                      "aromatic bond between non-aromatic atoms");
        order = BondOrder::Aromatic;
        break;
      default:
        throw Error(ErrorKind::UnknownElement, offset, "bad bond symbol");
    }
    Bond b;
    b.a = key.first;
    b.b = key.second;
    b.order = order;
    mol.bonds.push_back(b);
  }
};

bool is_bond_char(char c) {
  return c == '-' || c == '=' || c == '#' || c == ':';
}

// Parses an organic-subset atom starting at `pos`; returns nullopt when the
// character does not begin a bare atom.
std::optional<std::pair<Atom, std::size_t>> parse_bare_atom(
    const std::string& s, std::size_t pos) {
  Atom atom;
  const char c = s[pos];
  // Two-letter symbols first.
  if (c == 'C' && pos + 1 < s.size() && s[pos + 1] == 'l') {
    atom.element = Element::Cl;
    return {{atom, 2}};
  }
  if (c == 'B' && pos + 1 < s.size() && s[pos + 1] == 'r') {
    atom.element = Element::Br;
    return {{atom, 2}};
  }
  switch (c) {
    case 'B': atom.element = Element::B; break;
    case 'C': atom.element = Element::C; break;
    case 'N': atom.element = Element::N; break;
    case 'O': atom.element = Element::O; break;
    case 'P': atom.element = Element::P; break;
    case 'S': atom.element = Element::S; break;
    case 'F': atom.element = Element::F; break;
    case 'I': atom.element = Element::I; break;
    case 'b': atom.element = Element::B; atom.aromatic = true; break;
    case 'c': atom.element = Element::C; atom.aromatic = true; break;
    case 'n': atom.element = Element::N; atom.aromatic = true; break;
    case 'o': atom.element = Element::O; atom.aromatic = true; break;
    case 'p': atom.element = Element::P; atom.aromatic = true; break;
    case 's': atom.element = Element::S; atom.aromatic = true; break;
    default: return std::nullopt;
  }
  return {{atom, 1}};
}

// Bracket atom: [<element>(H<count>)?(charge)?]. Isotopes, stereo marks and
// atom classes are out of the supported subset.
std::pair<Atom, std::size_t> parse_bracket_atom(const std::string& s,
                                                std::size_t start) {
  std::size_t pos = start + 1;  // past '['
  auto need = [&](std::size_t p) {
    if (p >= s.size())
      throw Error(ErrorKind::UnbalancedParentheses, start,
                  "unterminated bracket atom");
  };
  need(pos);
  if (std::isdigit(static_cast<unsigned char>(s[pos])))
    throw Error(ErrorKind::UnsupportedFeature, pos, "isotopes not supported");

  Atom atom;
  // Element symbol: one uppercase (+ optional lowercase second letter) or a
  // lowercase aromatic symbol.
  if (std::isupper(static_cast<unsigned char>(s[pos]))) {
    std::string sym(1, s[pos]);
    if (pos + 1 < s.size() && std::islower(static_cast<unsigned char>(s[pos + 1])) &&
        s[pos + 1] != 'b' && s[pos + 1] != 'c' && s[pos + 1] != 'n' &&
        s[pos + 1] != 'o' && s[pos + 1] != 'p' && s[pos + 1] != 's') {
      sym.push_back(s[pos + 1]);
    }
    auto elem = element_from_symbol(sym);
    if (!elem)
      throw Error(ErrorKind::UnknownElement, pos,
                  "unknown element '" + sym + "'");
    atom.element = *elem;
    pos += sym.size();
  } else if (std::islower(static_cast<unsigned char>(s[pos]))) {
    auto bare = parse_bare_atom(s, pos);
    if (!bare || !bare->first.aromatic)
      throw Error(ErrorKind::UnknownElement, pos, "unknown aromatic symbol");
    atom = bare->first;
    pos += bare->second;
  } else {
    throw Error(ErrorKind::UnknownElement, pos, "expected element symbol");
  }

  need(pos);
  if (s[pos] == '@')
    throw Error(ErrorKind::UnsupportedFeature, pos,
                "stereo descriptors not supported");
  // Hydrogen count: parsed and discarded (graphs are hydrogen-suppressed).
  if (s[pos] == 'H') {
    ++pos;
    need(pos);
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    need(pos);
  }
  if (s[pos] == '+' || s[pos] == '-') {
    const char sign_char = s[pos];
    const int sign = sign_char == '+' ? 1 : -1;
    int magnitude = 1;
    ++pos;
    need(pos);
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      magnitude = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        magnitude = magnitude * 10 + (s[pos] - '0');
        if (magnitude > 15)
          throw Error(ErrorKind::UnsupportedFeature, pos, "charge too large");
        ++pos;
      }
    } else {
      while (pos < s.size() && s[pos] == sign_char) {
        ++magnitude;
        ++pos;
      }
    }
    atom.formal_charge = sign * magnitude;
    need(pos);
  }
  if (s[pos] == ':')
    throw Error(ErrorKind::UnsupportedFeature, pos,
                "atom classes not supported");
  if (s[pos] != ']')
    throw Error(ErrorKind::UnknownElement, pos,
                "unexpected character in bracket atom");
  ++pos;
  return {atom, pos - start};
}

MolGraph suppress_hydrogens(MolGraph mol) {
  std::vector<std::uint32_t> keep;
  for (std::uint32_t i = 0; i < mol.atoms.size(); ++i)
    if (mol.atoms[i].element != Element::H) keep.push_back(i);
  if (keep.size() == mol.atoms.size()) return mol;
  if (keep.empty())
    throw Error(ErrorKind::EmptyMolecule, 0,
                "molecule empty after hydrogen suppression");
  MolGraph out = induced_subgraph(mol, keep);
  out.orig_indices.clear();  // a fresh top-level molecule
  out.provenance = mol.provenance;
  return out;
}

}  // namespace

MolGraph parse_smiles(const std::string& text) {
  if (text.empty())
    throw Error(ErrorKind::EmptyMolecule, 0, "empty SMILES string");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c >= 128)
      throw Error(ErrorKind::UnknownElement, i, "non-ASCII byte");
  }

  ParseState st;
  st.mol.provenance = "smiles:" + text;
  // Branch stack holds the atom to resume from after ')'.
  std::vector<std::pair<std::uint32_t, std::size_t>> branch_stack;
  std::map<int, RingOpening> open_rings;
  std::int64_t prev_atom = -1;
  char pending_bond = kNoBond;
  std::size_t pending_bond_offset = 0;
  bool branch_has_atom = true;

  std::size_t pos = 0;
  auto handle_ring_digit = [&](int digit, std::size_t offset) {
    if (prev_atom < 0)
      throw Error(ErrorKind::UnclosedRingBond, offset,
                  "ring closure before any atom");
    auto it = open_rings.find(digit);
    if (it == open_rings.end()) {
      open_rings[digit] = {static_cast<std::uint32_t>(prev_atom), pending_bond,
                           offset};
    } else {
      RingOpening opening = it->second;
      open_rings.erase(it);
      if (opening.atom == static_cast<std::uint32_t>(prev_atom))
        throw Error(ErrorKind::DuplicateBond, offset,
                    "ring closure to the same atom");
      char bond = kNoBond;
      if (opening.bond != kNoBond && pending_bond != kNoBond &&
          opening.bond != pending_bond)
        throw Error(ErrorKind::RingBondConflict, offset,
                    "ring bond symbols disagree");
      bond = opening.bond != kNoBond ? opening.bond : pending_bond;
      st.add_bond(opening.atom, static_cast<std::uint32_t>(prev_atom), bond,
                  offset);
    }
    pending_bond = kNoBond;
  };

  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '\t') {
      // Trailing whitespace ends the molecule (SMILES files carry names).
      break;
    }
    if (c == '(') {
      if (prev_atom < 0)
        throw Error(ErrorKind::UnbalancedParentheses, pos,
                    "branch before any atom");
      if (pending_bond != kNoBond)
        throw Error(ErrorKind::DanglingBond, pending_bond_offset,
                    "bond symbol before branch open");
      branch_stack.push_back({static_cast<std::uint32_t>(prev_atom), pos});
      branch_has_atom = false;
      ++pos;
      continue;
    }
    if (c == ')') {
      if (branch_stack.empty())
        throw Error(ErrorKind::UnbalancedParentheses, pos,
                    "unmatched closing parenthesis");
      if (pending_bond != kNoBond)
        throw Error(ErrorKind::DanglingBond, pending_bond_offset,
                    "bond symbol before branch close");
      if (!branch_has_atom)
        throw Error(ErrorKind::UnbalancedParentheses, pos, "empty branch");
      prev_atom = branch_stack.back().first;
      branch_stack.pop_back();
      branch_has_atom = true;
      ++pos;
      continue;
    }
    if (c == '.')
      throw Error(ErrorKind::DisconnectedMolecule, pos,
                  "multi-component input rejected");
    if (c == '/' || c == '\\')
      throw Error(ErrorKind::UnsupportedFeature, pos,
                  "stereo bonds not supported");
    if (is_bond_char(c)) {
      if (pending_bond != kNoBond)
        throw Error(ErrorKind::DanglingBond, pos, "two bond symbols in a row");
      if (prev_atom < 0)
        throw Error(ErrorKind::DanglingBond, pos, "bond before any atom");
      pending_bond = c;
      pending_bond_offset = pos;
      ++pos;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      handle_ring_digit(c - '0', pos);
      ++pos;
      continue;
    }
    if (c == '%') {
      if (pos + 2 >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[pos + 1])) ||
          !std::isdigit(static_cast<unsigned char>(text[pos + 2])))
        throw Error(ErrorKind::UnclosedRingBond, pos,
                    "%nn requires two digits");
      handle_ring_digit((text[pos + 1] - '0') * 10 + (text[pos + 2] - '0'),
                        pos);
      pos += 3;
      continue;
    }

    Atom atom;
    std::size_t consumed = 0;
    if (c == '[') {
      auto [a, len] = parse_bracket_atom(text, pos);
      atom = a;
      consumed = len;
    } else if (auto bare = parse_bare_atom(text, pos)) {
      atom = bare->first;
      consumed = bare->second;
    } else {
      throw Error(ErrorKind::UnknownElement, pos,
                  std::string("unexpected character '") + c + "'");
    }

    const std::uint32_t idx = static_cast<std::uint32_t>(st.mol.atoms.size());
    st.mol.atoms.push_back(atom);
    if (prev_atom >= 0)
      st.add_bond(static_cast<std::uint32_t>(prev_atom), idx, pending_bond, pos);
    pending_bond = kNoBond;
    prev_atom = idx;
    branch_has_atom = true;
    pos += consumed;
  }

  if (pending_bond != kNoBond)
    throw Error(ErrorKind::DanglingBond, pending_bond_offset,
                "dangling bond at end of input");
  if (!branch_stack.empty())
    throw Error(ErrorKind::UnbalancedParentheses, branch_stack.back().second,
                "unclosed branch");
  if (!open_rings.empty())
    throw Error(ErrorKind::UnclosedRingBond, open_rings.begin()->second.offset,
                "unclosed ring bond " + std::to_string(open_rings.begin()->first));
  if (st.mol.atoms.empty())
    throw Error(ErrorKind::EmptyMolecule, 0, "no atoms parsed");

  MolGraph mol = suppress_hydrogens(std::move(st.mol));
  validate_molgraph(mol);
  if (!is_connected(mol))
    throw Error(ErrorKind::DisconnectedMolecule, 0,
                "molecule is disconnected after hydrogen suppression");
  return mol;
}

namespace {

bool aromatic_writable(Element e) {
  switch (e) {
    case Element::B:
    case Element::C:
    case Element::N:
    case Element::O:
    case Element::P:
    case Element::S: return true;
    default: return false;
  }
}

std::string atom_token(const Atom& atom) {
  std::string sym = symbol(atom.element);
  if (atom.aromatic) {
    if (!aromatic_writable(atom.element))
      throw Error(ErrorKind::AromaticityError,
                  "aromatic flag on unsupported element");
    for (char& ch : sym) ch = static_cast<char>(std::tolower(ch));
  }
  if (atom.formal_charge == 0) return sym;
  std::string out = "[" + sym;
  const int q = atom.formal_charge;
  out += q > 0 ? '+' : '-';
  const int mag = q > 0 ? q : -q;
  if (mag > 1) out += std::to_string(mag);
  out += ']';
  return out;
}

// Bond symbol for emission; empty when the parser default already matches.
std::string bond_token(const MolGraph& mol, const Bond& b) {
  const bool both_aromatic = mol.atoms[b.a].aromatic && mol.atoms[b.b].aromatic;
  switch (b.order) {
    case BondOrder::Single: return both_aromatic ? "-" : "";
    case BondOrder::Aromatic: return both_aromatic ? "" : ":";
    case BondOrder::Double: return "=";
    case BondOrder::Triple: return "#";
  }
  return "";
}

class DigitPool {
 public:
  int allocate() {
    for (int d = 1; d < 100; ++d) {
      if (!used_[d]) {
        used_[d] = true;
        return d;
      }
    }
    throw Error(ErrorKind::UnsupportedFeature,
                "more than 99 simultaneously open ring bonds");
  }
  void release(int d) { used_[d] = false; }

 private:
  std::array<bool, 100> used_{};
};

std::string digit_token(int d) {
  if (d < 10) return std::to_string(d);
  return "%" + std::to_string(d);
}

}  // namespace

std::string write_smiles(const MolGraph& mol) {
  if (mol.atoms.empty())
    throw Error(ErrorKind::EmptyMolecule, "cannot write empty molecule");
  validate_molgraph(mol);

  const AdjacencyList adj = adjacency(mol);
  const std::size_t n = mol.num_atoms();

  // Pass 1: spanning DFS from atom 0 classifying tree and ring-closure bonds.
  std::vector<int> disc(n, -1);
  std::vector<std::vector<Neighbor>> children(n);
  struct Closure {
    std::uint32_t opener;  // discovered earlier
    std::uint32_t closer;
    std::uint32_t bond;
    int digit = 0;
  };
  std::vector<Closure> closures;
  std::vector<bool> bond_used(mol.num_bonds(), false);
  {
    int timer = 0;
    struct Frame {
      std::uint32_t node;
      std::size_t next;
    };
    std::vector<Frame> stack{{0, 0}};
    disc[0] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.next >= adj[fr.node].size()) {
        stack.pop_back();
        continue;
      }
      const Neighbor nb = adj[fr.node][fr.next++];
      if (bond_used[nb.bond]) continue;
      bond_used[nb.bond] = true;
      if (disc[nb.atom] < 0) {
        disc[nb.atom] = timer++;
        children[fr.node].push_back(nb);
        stack.push_back({nb.atom, 0});
      } else {
        closures.push_back({nb.atom, fr.node, nb.bond});
      }
    }
  }
  for (std::uint32_t i = 0; i < n; ++i)
    if (disc[i] < 0)
      throw Error(ErrorKind::DisconnectedMolecule,
                  "write_smiles requires a connected molecule");

  std::vector<std::vector<std::size_t>> opens(n), closes(n);
  for (std::size_t i = 0; i < closures.size(); ++i) {
    opens[closures[i].opener].push_back(i);
    closes[closures[i].closer].push_back(i);
  }

  // Pass 2: emission in the same order, with ring digits from a shared pool.
  std::string out;
  DigitPool pool;
  struct EmitFrame {
    std::uint32_t node;
    std::size_t next_child;
    bool needs_close_paren;
  };
  auto emit_atom = [&](std::uint32_t u) {
    out += atom_token(mol.atoms[u]);
    for (std::size_t ci : opens[u]) {
      closures[ci].digit = pool.allocate();
      out += digit_token(closures[ci].digit);
    }
    for (std::size_t ci : closes[u]) {
      out += bond_token(mol, mol.bonds[closures[ci].bond]);
      out += digit_token(closures[ci].digit);
      pool.release(closures[ci].digit);
    }
  };

  std::vector<EmitFrame> stack;
  emit_atom(0);
  stack.push_back({0, 0, false});
  while (!stack.empty()) {
    EmitFrame& fr = stack.back();
    if (fr.next_child >= children[fr.node].size()) {
      if (fr.needs_close_paren) out += ')';
      stack.pop_back();
      continue;
    }
    const Neighbor nb = children[fr.node][fr.next_child++];
    const bool more_children = fr.next_child < children[fr.node].size();
    if (more_children) out += '(';
    out += bond_token(mol, mol.bonds[nb.bond]);
    emit_atom(nb.atom);
    stack.push_back({nb.atom, 0, more_children});
  }
  return out;
}

}  // namespace goms::chem
