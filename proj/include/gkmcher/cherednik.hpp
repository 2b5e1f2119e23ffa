#pragma once

#include <map>

#include "gkmcher/gkm.hpp"

namespace gkmcher {

// W-invariant reflection parameter, keyed on root length classes; hbar stays
// a formal variable throughout.
struct CherednikParams {
  std::vector<Rat> c_by_class;

  static CherednikParams constant(const RootSystem& rs, const Rat& c) {
    CherednikParams p;
    p.c_by_class.assign(rs.num_root_classes, c);
    return p;
  }
  const Rat& c_of_root(const RootSystem& rs, int root_index) const {
    return c_by_class.at(rs.root_class.at(root_index));
  }
};

// Group algebra of the coroot lattice with Q[hbar] coefficients (the hbar
// slot of Poly); finite support.
struct LaurentElem {
  std::map<VecI, Poly> terms;

  static LaurentElem exponent(const VecI& mu) {
    LaurentElem f;
    f.terms.emplace(mu, Poly::constant(1));
    return f;
  }
  bool is_zero() const { return terms.empty(); }
  bool operator==(const LaurentElem& o) const { return terms == o.terms; }
  LaurentElem operator+(const LaurentElem& o) const;
  LaurentElem operator-() const;
  LaurentElem operator-(const LaurentElem& o) const { return *this + (-o); }
  LaurentElem scaled_by(const Poly& p) const;  // hbar-polynomial scalar
  LaurentElem shifted(const VecI& mu) const;   // multiplication by e^mu
  void prune();
  std::string str(const RootSystem& rs) const;
};

LaurentElem weyl_act(const RootSystem& rs, const WeylElement& w, const LaurentElem& f);

// Exact division of (f - s_alpha f) by 1 - e^{-alpha_vee}: the numerator is
// always a sum of geometric strings, so the division terminates; a failure
// signals a pairing-convention bug and panics.
LaurentElem divide_geometric(const RootSystem& rs, const LaurentElem& numerator,
                             const VecI& coroot);

// Trigonometric Dunkl operator in the direction of the character y
// (root coordinates):
//   D_y = hbar * [ d_y - sum_{a>0} c_a <y,a_vee> (1-s_a)/(1-e^{-a_vee})
//                  + <y, rho_vee_c> ],   rho_vee_c = (1/2) sum_a c_a a_vee.
LaurentElem trig_dunkl(const RootSystem& rs, const VecI& y, const LaurentElem& f,
                       const CherednikParams& params);

// Polynomial module of the rational algebra: Poly in the coordinates
// U_j = <., alpha_j_vee> of the dual Cartan space.
Poly weyl_act_poly(const RootSystem& rs, const WeylElement& w, const Poly& f);
Poly rational_dunkl(const RootSystem& rs, const VecI& y, const Poly& f,
                    const CherednikParams& params);

enum class Flavor { rational, trigonometric, cs_on_gkm, ecm_on_gkm };

struct RelationConfig {
  int bound = 3;        // window half-width / max degree
  int samples = 50;     // forwarded to the localized-model checks
  std::uint64_t seed = 0xC0FFEE;
  par::Mode mode = par::Mode::parallel;
};

Report check_algebra_relations(const RootSystem& rs, Flavor flavor,
                               const CherednikParams& params, int d,
                               const RelationConfig& cfg);

// Order-N comparison of the two Dunkl operators under x -> e^x: transports
// the group-algebra computation into truncated series and checks it against
// the series-side operator; the difference of the two flavors must be a
// regular multiplication/reflection combination (zero singular part).
Report compare_dunkl_truncated(const RootSystem& rs, const VecI& y, int order,
                               const CherednikParams& params,
                               par::Mode mode = par::Mode::parallel);

}  // namespace gkmcher
