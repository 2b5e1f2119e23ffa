#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkmcher/affine.hpp"
#include "gkmcher/frac.hpp"
#include "gkmcher/parallel.hpp"
#include "gkmcher/report.hpp"

namespace gkmcher {

struct IsotypicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantPanic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finitely supported localized class: level d plus a map from fixed points to
// rational functions.  Zero entries are never stored.
struct GkmClass {
  const RootSystem* rs = nullptr;
  int d = 0;
  std::map<AffineWeyl, Frac> entries;

  static GkmClass indicator(const RootSystem& rs, int d, const AffineWeyl& x);

  void set(const AffineWeyl& x, Frac f);
  Frac at(const AffineWeyl& x) const;  // zero when absent
  bool operator==(const GkmClass& o) const;
  GkmClass operator+(const GkmClass& o) const;
  GkmClass operator-() const;
  GkmClass scaled(const Rat& c) const;
  std::string str() const;
};

struct EdgeData {
  AffineWeyl partner;
  int root_index;
  long k;
  AffineChar hyperplane;  // ^x(alpha + k hbar), computed from this endpoint
};

std::vector<EdgeData> edges_at(const RootSystem& rs, const AffineWeyl& x, int d);

struct MembershipResult {
  bool ok = true;
  std::string violation;  // names the failing point or edge
};

// Conditions of the localization image: (i) poles only along the admissible
// hyperplanes of each point, at most simple; (ii) edge residues of
// f_x + f_{xs} vanish.  Checked over support plus edge-neighbors.
MembershipResult membership(const GkmClass& xi);

// Left action: Dynkin generators i = 1..r, affine generator i = 0
// (s0 = t^{-theta_vee} s_theta, formula character hbar - theta).
GkmClass cs_apply_reflection(const GkmClass& xi, int i);
GkmClass cs_apply_weight(const GkmClass& xi, const AffineChar& lam);
GkmClass cs_apply_pi(const GkmClass& xi, const AffineWeyl& pi);
GkmClass cs_apply_word(const GkmClass& xi, const std::vector<int>& word);

// Generator element and formula character of the left action.
AffineWeyl cs_generator_element(const RootSystem& rs, int i);
AffineChar cs_generator_char(const RootSystem& rs, int i);
// Coroot datum kappa_i with lam - s_i(lam) = <lam, kappa_i> chi_i; the
// cross-relation constant is d*hbar*<lam, kappa_i>.
VecI cs_generator_coroot(const RootSystem& rs, int i);

// Right action: (xi . y)_x = ^{y^{-1}} xi_{yx}; Ring elements act entrywise.
GkmClass ecm_apply_weyl(const GkmClass& xi, const AffineWeyl& y);
GkmClass ecm_apply_weight(const GkmClass& xi, const AffineChar& lam);

// ^x F for F in the fraction field (substitution of the character action).
Frac twist_frac(const RootSystem& rs, const AffineWeyl& x, const Frac& f);

enum class Isotypic { triv, sign };
GkmClass project_isotypic(const GkmClass& xi, Isotypic kind);
bool is_sign_class(const GkmClass& xi);
bool is_triv_class(const GkmClass& xi);

// Multiplication by prod_{alpha>0}(^x alpha + d hbar): sign classes at level
// d+1 map to trivial-isotypic classes at level d, and back.
GkmClass upsilon(const GkmClass& xi_sign_level_dp1);
GkmClass upsilon_inverse(const GkmClass& xi_triv_level_d);

// Tangent weights of the attracting cell at x (affine-root bookkeeping).
std::vector<AffineChar> cell_weights(const RootSystem& rs, const AffineWeyl& x, int d);

// a_i not in x(N_d) for the positive simple affine root a_i; with
// s_i x < x this is equivalent to equality of the paired tangent weight sets.
bool swap_condition(const RootSystem& rs, const AffineWeyl& x, int i, int d);

// Diagonal localization entry of the cell class: 1 / prod(cell weights).
Frac fundamental_class_diagonal(const RootSystem& rs, const AffineWeyl& w, int d);

struct VerifyConfig {
  int samples = 50;
  int word_length = 6;
  long ball_radius = 2;
  std::uint64_t seed = 0xC0FFEE;
  par::Mode mode = par::Mode::parallel;
};

// Randomized exact verification: left-action Coxeter/cross relations, right
// action, their commutation, and membership closure, on membership-valid
// classes generated from indicator seeds by random generator words.
Report verify_relations(const RootSystem& rs, int d, const VerifyConfig& cfg);

// d = 0 degeneration: x . a^e . y = a^{y^{-1} x^{-1}} on the length ball
// (the regular bimodule under a^z -> z^{-1}).
Report verify_regular_bimodule_d0(const RootSystem& rs, long ball_radius,
                                  par::Mode mode = par::Mode::parallel);

std::string system_name(const RootSystem& rs);

}  // namespace gkmcher
