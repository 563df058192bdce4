//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "goms/chem/layout.hpp"

#include <cmath>

#include "goms/util/rng.hpp"

namespace goms::chem {

namespace {

constexpr double kRestLength = 1.5;  // target bond length, A

void spring_pass(const MolGraph& mol, std::vector<Vec3>& pos, double step) {
  const std::size_t n = pos.size();
  std::vector<Vec3> force(n);
  // Bond springs.
  for (const Bond& b : mol.bonds) {
    Vec3 d = pos[b.b] - pos[b.a];
    double len = norm(d);
    if (len < 1e-9) {
      d = {1e-3, 0, 0};
      len = 1e-3;
    }
    const double f = (len - kRestLength) / len;
    force[b.a] = force[b.a] + d * (0.5 * f);
    force[b.b] = force[b.b] + d * (-0.5 * f);
  }
  // Pairwise repulsion keeps non-bonded atoms apart.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec3 d = pos[j] - pos[i];
      double len2 = dot(d, d);
      if (len2 < 1e-6) len2 = 1e-6;
      if (len2 > 36.0) continue;  // 6 A cutoff
      const double f = 0.8 / len2;
      const double len = std::sqrt(len2);
      force[i] = force[i] + d * (-f / len);
      force[j] = force[j] + d * (f / len);
    }
  }
  for (std::size_t i = 0; i < n; ++i) pos[i] = pos[i] + force[i] * step;
}

// Gauss-Seidel projection of each bond toward the rest length. Returns the
// worst bonded-distance after the pass.
double project_bonds(const MolGraph& mol, std::vector<Vec3>& pos,
                     double strength) {
  for (const Bond& b : mol.bonds) {
    Vec3 d = pos[b.b] - pos[b.a];
    double len = norm(d);
    if (len < 1e-9) {
      d = {1e-3, 1e-3, 0};
      len = norm(d);
    }
    const double corr = strength * 0.5 * (len - kRestLength) / len;
    pos[b.a] = pos[b.a] + d * corr;
    pos[b.b] = pos[b.b] + d * (-corr);
  }
  double worst = 0.0;
  for (const Bond& b : mol.bonds) {
    const double len = norm(pos[b.b] - pos[b.a]);
    worst = std::max(worst, std::abs(len - kRestLength));
  }
  return worst;
}

}  // namespace

Conformer fallback_layout(const MolGraph& mol, std::uint64_t seed) {
  const std::size_t n = mol.num_atoms();
  Conformer conf;
  conf.coords.resize(n);
  if (n == 0) return conf;
  if (n == 1) {
    conf.coords[0] = {0, 0, 0};
    return conf;
  }

  util::Rng rng(util::derive_seed(0x1a4007ULL, seed));
  std::vector<Vec3>& pos = conf.coords;
  const double box = 0.8 * std::cbrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    pos[i] = {rng.uniform(-box, box), rng.uniform(-box, box),
              rng.uniform(-box, box)};

  for (int iter = 0; iter < 250; ++iter) spring_pass(mol, pos, 0.25);

  // Harden bond lengths; repulsion is dropped so the projection converges.
  double worst = 1e9;
  for (int pass = 0; pass < 4000 && worst > 0.25; ++pass)
    worst = project_bonds(mol, pos, 1.0);

  // Center at the origin for stable, reproducible output.
  Vec3 centroid{0, 0, 0};
  for (const Vec3& p : pos) centroid = centroid + p;
  centroid = centroid * (1.0 / static_cast<double>(n));
  for (Vec3& p : pos) p = p - centroid;
  return conf;
}

Conformer conformer_or_layout(const MolGraph& mol, std::uint64_t seed) {
  if (mol.conformer) return *mol.conformer;
  return fallback_layout(mol, seed);
}

}  // namespace goms::chem
