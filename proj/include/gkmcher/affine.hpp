#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkmcher/root_system.hpp"

namespace gkmcher {

// Character lambda + k*hbar of the torus times loop rotation; lambda in root
// coordinates.
struct AffineChar {
  VecI lam;
  long k = 0;

  bool operator==(const AffineChar& o) const { return lam == o.lam && k == o.k; }
  bool operator<(const AffineChar& o) const {
    if (lam != o.lam) return lam < o.lam;
    return k < o.k;
  }
  AffineChar negated() const {
    AffineChar c{lam, -k};
    for (auto& x : c.lam) x = -x;
    return c;
  }
};

// x = w . t^mu with mu in coroot coordinates.  Group law
// (w1,m1)(w2,m2) = (w1 w2, w2^{-1} m1 + m2); x acts on characters by
// chi -> w(t^mu chi), t^mu(lambda + k hbar) = lambda + (k + <mu,lambda>) hbar.
struct AffineWeyl {
  WeylElement w;
  VecI mu;

  bool operator==(const AffineWeyl& o) const {
    return w.mat_root == o.w.mat_root && mu == o.mu;
  }
  bool operator<(const AffineWeyl& o) const {
    if (w.mat_root != o.w.mat_root) return w.mat_root < o.w.mat_root;
    return mu < o.mu;
  }
};

AffineWeyl affine_identity(const RootSystem& rs);
AffineWeyl translation(const RootSystem& rs, const VecI& mu);
AffineWeyl from_weyl(const RootSystem& rs, const WeylElement& w);
AffineWeyl multiply(const RootSystem& rs, const AffineWeyl& x, const AffineWeyl& y);
AffineWeyl inverse(const RootSystem& rs, const AffineWeyl& x);

AffineChar act_char(const RootSystem& rs, const AffineWeyl& x, const AffineChar& chi);

// s_{alpha,k} = t^{k alpha^vee} s_alpha, for alpha = positive_roots[root_index].
AffineWeyl affine_reflection(const RootSystem& rs, int root_index, long k);

// Generators of the affine Weyl group:
//   index 1..r  -> Dynkin reflections s_i,
//   index 0     -> wall reflection of the fundamental alcove at theta = 1,
//                  r_0 = t^{theta^vee} s_theta.
AffineWeyl standard_generator(const RootSystem& rs, int i);

// The positive simple affine roots in delta-coordinates (root part, delta
// coefficient): a_i = (alpha_i, 0) for i >= 1 and a_0 = (-theta, 1).
AffineChar simple_affine_root(const RootSystem& rs, int i);

struct Alcove {
  AffineWeyl element;
  std::vector<long> profile;  // k_alpha(x) per positive root, aligned with rs
};

// Floor of alpha on the open alcove x(A_0), evaluated at the interior point
// rho^vee/(h+1); the floor reduces to an integer formula.
long alcove_floor(const RootSystem& rs, const AffineWeyl& x, int root_index);
Alcove alcove_profile(const RootSystem& rs, const AffineWeyl& x);

long length(const RootSystem& rs, const AffineWeyl& x);

// Canonical form "w:[word];t:[mu]"; the word is one fixed reduced expression.
std::string to_string(const RootSystem& rs, const AffineWeyl& x);

// Ball of all elements of length <= radius (BFS over standard generators).
std::vector<AffineWeyl> length_ball(const RootSystem& rs, long radius);

}  // namespace gkmcher
