#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkmcher {

// Coordinates are integral throughout: characters of the torus times loop
// rotation live in the root lattice plus Z·hbar, written in the basis of
// simple roots; cocharacters live in the coroot lattice, written in the basis
// of simple coroots.  All pairings reduce to integer products against the
// Cartan matrix.
constexpr int kMaxRank = 4;

using VecI = std::vector<long>;   // size = rank
using MatI = std::vector<VecI>;   // rank x rank

enum class CartanType { A, B, C, D, G };

std::string cartan_type_name(CartanType t);
CartanType cartan_type_from_char(char c);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An element of the finite Weyl group, stored as its matrix action on the
// root lattice (mat_root, column convention) and on the coroot lattice
// (mat_coroot).  Words are in simple reflections; sign = det = (-1)^length.
struct WeylElement {
  MatI mat_root;
  MatI mat_coroot;
  std::vector<int> word;
  int sign = 1;

  VecI apply_root(const VecI& v) const;      // action on root coordinates
  VecI apply_coroot(const VecI& v) const;    // action on coroot coordinates
  bool operator==(const WeylElement& o) const { return mat_root == o.mat_root; }
  bool operator<(const WeylElement& o) const { return mat_root < o.mat_root; }
};

struct RootSystem {
  CartanType type;
  int rank = 0;
  MatI cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>

  // Aligned lists; coordinates as described above.
  std::vector<VecI> positive_roots;    // root coords, sorted by (height, lex)
  std::vector<VecI> positive_coroots;  // coroot coords, aligned with roots
  std::vector<int> root_class;         // W-orbit id per positive root
  int num_root_classes = 1;

  int coxeter_number = 0;
  VecI highest_root;          // the longest root (alcove wall data)
  VecI highest_root_coroot;   // theta^vee, coroot coords
  VecI min_neg_coroot;        // -theta^vee (cross-relation datum)
  int highest_root_index = -1;

  WeylElement identity_weyl() const;
  WeylElement simple_reflection(int i) const;
  // Reflection at an arbitrary root, given by its index in positive_roots.
  WeylElement root_reflection(int root_index) const;

  // <lambda, mu^vee> for lambda in root coords, mu in coroot coords.
  long pairing(const VecI& root_coords, const VecI& coroot_coords) const;

  long height(const VecI& root_coords) const;
  bool is_positive_root_vec(const VecI& root_coords) const;
  int find_positive_root(const VecI& root_coords) const;  // -1 if absent

  // Full group, enumerated lazily (BFS over simple reflections).
  const std::vector<WeylElement>& weyl_elements() const;
  std::size_t weyl_order() const { return weyl_elements().size(); }

  // Coxeter matrix entry m(i,j) for the affine system; generator 0 is the
  // affine node. 0 encodes infinity.
  int coxeter_m(int i, int j) const;

  std::string json() const;

 private:
  mutable std::vector<WeylElement> weyl_cache_;
};

RootSystem build_root_system(CartanType type, int rank);
int coxeter_number(const RootSystem& rs);

}  // namespace gkmcher
