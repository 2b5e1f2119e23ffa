#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "gkmcher/affine.hpp"
#include "gkmcher/rational.hpp"

namespace gkmcher {

// Exponent vector over y_1..y_4, hbar.  Slot kHbarVar is always hbar; unused
// y-slots stay zero, so one monomial type serves every rank <= 4.
constexpr int kNumVars = kMaxRank + 1;
constexpr int kHbarVar = kMaxRank;

struct Mono {
  std::array<std::uint8_t, kNumVars> e{};

  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  // deglex, hbar treated as the last variable
  bool operator<(const Mono& o) const {
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    return e < o.e;
  }
  bool operator==(const Mono& o) const { return e == o.e; }
};

// Sparse polynomial over Q in y_1..y_r, hbar.  Zero coefficients never stored.
struct Poly {
  std::map<Mono, Rat> terms;

  static Poly zero() { return Poly{}; }
  static Poly constant(const Rat& c);
  static Poly variable(int v, int power = 1);
  // Linear polynomial of an affine character (root coords, hbar coefficient).
  static Poly linear(const AffineChar& chi);

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Poly& o) const { return terms == o.terms; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly scaled(const Rat& c) const;

  int total_degree() const;  // -1 for zero
  int degree_in(int v) const;

  // Substitute variable v by the given polynomial.
  Poly substituted(int v, const Poly& replacement) const;
  // Drop all terms of total degree > bound (series truncation).
  Poly truncated(int bound) const;
  // Same, but counting only the y-variables (hbar-degree ignored).
  Poly truncated_in_y(int bound) const;

  std::string str(int rank) const;
};

// Primitive integer covector c_1 y_1 + ... + c_r y_r + c_h hbar, normalized so
// the first nonzero coordinate is positive.  Equal as hyperplanes iff equal.
struct LinForm {
  std::array<long, kNumVars> c{};

  bool operator<(const LinForm& o) const { return c < o.c; }
  bool operator==(const LinForm& o) const { return c == o.c; }

  Poly poly() const;
  int pivot() const;  // highest-index nonzero coordinate
  std::string str(int rank) const;
};

// chi = scale * normalized primitive form; throws UsageError on chi == 0.
std::pair<LinForm, Rat> normalize_char(const AffineChar& chi);
AffineChar char_of_linform(const LinForm& l, int rank);

// Exact division of p by the degree-1 polynomial of l; nullopt if the
// remainder is nonzero.
std::optional<Poly> divide_by_linform(const Poly& p, const LinForm& l);

std::string var_name(int v, int rank);

}  // namespace gkmcher
