#pragma once

#include <cstdint>
#include <vector>

#include "gkmcher/gkm.hpp"

namespace gkmcher {

struct AlcoveIdeal {
  int d = 0;
  std::vector<AffineWeyl> elements;   // sorted, deterministic
  std::size_t expected_count = 0;     // (dh+1)^rank

  bool contains(const RootSystem& rs, const AffineWeyl& x) const;
};

// All x with k_{alpha_i}(x) >= -d for simple Dynkin alpha_i and
// k_theta(x) <= d for the longest root; enumerated by wall-crossing BFS with
// profile pruning (the region is convex, so pruning is safe).
AlcoveIdeal alcove_ideal(const RootSystem& rs, int d);

struct EquivalenceSummary {
  long ball_radius = 0;
  std::size_t ball_size = 0;
  std::size_t class_count = 0;          // all classes meeting the ball
  std::size_t visible_class_count = 0;  // classes whose minimal length is interior
  bool every_visible_class_meets_ideal = true;
  bool observed_equality = false;  // visible count == (dh+1)^rank
  std::string witness;
};

// Union-find over the length ball for the relation x ~ s_a x recorded when
// swap_condition(x, a, d) holds and s_a x < x.
EquivalenceSummary equivalence_classes(const RootSystem& rs, int d, long ball_radius,
                                       par::Mode mode = par::Mode::parallel);

struct CharacterRow {
  std::vector<int> rep_word;  // a representative of the conjugacy class
  std::size_t class_size = 0;
  long fixed_points = 0;  // chi(w) on the finite quotient module
};

struct PermModuleCharacter {
  long modulus = 0;     // dh+1
  long dimension = 0;   // modulus^rank
  long invariants = 0;  // Burnside average
  long sign_multiplicity = 0;
  long orbit_count = 0;            // independent orbit enumeration
  long sign_orbit_count = 0;       // orbits with alternating-only stabilizer
  std::vector<CharacterRow> rows;  // per conjugacy class
};

// W acting on the coroot lattice modulo (dh+1): character row, Burnside
// invariants, and the independent orbit-count cross-check.
PermModuleCharacter perm_module_character(const RootSystem& rs, int d,
                                          par::Mode mode = par::Mode::parallel);

std::string alcove_ideal_csv(const RootSystem& rs, const AlcoveIdeal& ideal);
std::string character_json(const PermModuleCharacter& pc);

}  // namespace gkmcher
