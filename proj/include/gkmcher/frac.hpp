#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkmcher/poly.hpp"

namespace gkmcher {

struct ResidueOrderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational function with factored denominator: a polynomial numerator over a
// multiset of primitive affine-root linear forms.  Kept reduced: no stored
// form divides the numerator.  Division only ever enters through
// divided_by_char, so denominators stay factored by construction.
struct Frac {
  Poly num;
  std::map<LinForm, int> den;

  static Frac zero() { return Frac{}; }
  static Frac one() { return from_poly(Poly::constant(1)); }
  static Frac from_poly(Poly p);
  static Frac from_rat(const Rat& c) { return from_poly(Poly::constant(c)); }
  static Frac linear(const AffineChar& chi) { return from_poly(Poly::linear(chi)); }
  // 1 / prod(chi_i): the only constructor introducing denominators.
  static Frac inverse_of_char_product(const std::vector<AffineChar>& chars);

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den.empty(); }

  Frac operator-() const;
  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const { return *this + (-o); }
  Frac operator*(const Frac& o) const;
  bool operator==(const Frac& o) const { return ((*this) - o).is_zero(); }

  Frac scaled(const Rat& c) const;
  Frac times_char(const AffineChar& chi) const;
  Frac divided_by_char(const AffineChar& chi) const;

  // Largest pole order along the hyperplane of chi (0 if none).
  int pole_order(const AffineChar& chi) const;

  // Residue along chi = 0: clears one factor of chi, then substitutes the
  // hyperplane relation by eliminating the pivot variable (or the given one).
  // Res_{-chi} = -Res_{chi} exactly; pole order >= 2 raises ResidueOrderError.
  Frac residue(const AffineChar& chi) const;
  Frac residue_with_pivot(const AffineChar& chi, int pivot) const;

  void reduce();

  std::string str(int rank) const;
};

}  // namespace gkmcher
