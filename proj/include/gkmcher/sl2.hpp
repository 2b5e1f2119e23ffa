#pragma once

#include <map>

#include "gkmcher/gkm.hpp"

namespace gkmcher {

// Rank-one fixed-point combinatorics: the integer line indexes the affine Weyl
// group via 2m <-> t^{m alpha_vee}, 2m+1 <-> t^{m alpha_vee} s.
long sl2_index_of(const RootSystem& rs, const AffineWeyl& x);
AffineWeyl sl2_element_of(const RootSystem& rs, long ell);

// Admissible labels: r in 0..d with k in {0,1} when r < d, any k when r = d.
struct BasisLabel {
  int r = 0;
  long k = 0;
  bool operator<(const BasisLabel& o) const {
    if (r != o.r) return r < o.r;
    return k < o.k;
  }
  bool operator==(const BasisLabel& o) const { return r == o.r && k == o.k; }
};

bool label_admissible(int d, const BasisLabel& label);

// Leading index of the basis element in the reduction order:
// k for k < 0, else k + 2r - 1 (and k itself for r = 0).
long leading_index(const BasisLabel& label);

// The explicit module basis over rank one: supported on [k, k+2r-1] with
// entries (-1)^{m+eps} C(r-1, m) / prod_{i=1}^{r} (y + (k+m+i-1) h).
GkmClass sl2_basis_element(const RootSystem& rs, int d, const BasisLabel& label);

struct Sl2ExpansionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact coordinates of a membership-valid class in the basis: clear entries
// outside [0, 2d-2] with multiples of b^d_k, then shrink the remaining
// support with the b^r_{0/1}.  Throws Sl2ExpansionError when an entry is not
// a polynomial multiple of the expected extremal form (non-membership).
std::map<BasisLabel, Poly> sl2_expand(const GkmClass& xi);

// JSON dump of the admissible basis in a window of k.
std::string sl2_basis_json(const RootSystem& rs, int d, long kmin, long kmax);

}  // namespace gkmcher
