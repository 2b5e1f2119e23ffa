#include "gkmcher/frac.hpp"

#include <sstream>

namespace gkmcher {

Frac Frac::from_poly(Poly p) {
  Frac f;
  f.num = std::move(p);
  return f;
}

Frac Frac::inverse_of_char_product(const std::vector<AffineChar>& chars) {
  Frac f = one();
  for (const auto& chi : chars) f = f.divided_by_char(chi);
  return f;
}

void Frac::reduce() {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (auto it = den.begin(); it != den.end();) {
    while (it->second > 0) {
      auto q = divide_by_linform(num, it->first);
      if (!q) break;
      num = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den.erase(it) : ++it;
  }
}

Frac Frac::operator-() const {
  Frac f = *this;
  f.num = -f.num;
  return f;
}

Frac Frac::operator+(const Frac& o) const {
  Frac r;
  // common denominator = multiset max
  r.den = den;
  for (const auto& [l, m] : o.den) {
    auto it = r.den.find(l);
    if (it == r.den.end())
      r.den.emplace(l, m);
    else
      it->second = std::max(it->second, m);
  }
  auto lift = [&](const Frac& f) {
    Poly p = f.num;
    for (const auto& [l, m] : r.den) {
      int have = 0;
      if (auto it = f.den.find(l); it != f.den.end()) have = it->second;
      for (int i = have; i < m; ++i) p = p * l.poly();
    }
    return p;
  };
  r.num = lift(*this) + lift(o);
  r.reduce();
  return r;
}

Frac Frac::operator*(const Frac& o) const {
  Frac r;
  r.num = num * o.num;
  r.den = den;
  for (const auto& [l, m] : o.den) r.den[l] += m;
  r.reduce();
  return r;
}

Frac Frac::scaled(const Rat& c) const {
  Frac f;
  if (c == 0) return f;
  f.num = num.scaled(c);
  f.den = den;
  return f;
}

Frac Frac::times_char(const AffineChar& chi) const {
  Frac f = *this;
  f.num = f.num * Poly::linear(chi);
  f.reduce();
  return f;
}

Frac Frac::divided_by_char(const AffineChar& chi) const {
  auto [l, scale] = normalize_char(chi);
  Frac f = *this;
  f.num = f.num.scaled(1 / scale);
  f.den[l] += 1;
  f.reduce();
  return f;
}

int Frac::pole_order(const AffineChar& chi) const {
  auto [l, scale] = normalize_char(chi);
  (void)scale;
  auto it = den.find(l);
  return it == den.end() ? 0 : it->second;
}

Frac Frac::residue(const AffineChar& chi) const {
  auto [l, scale] = normalize_char(chi);
  (void)scale;
  return residue_with_pivot(chi, l.pivot());
}

Frac Frac::residue_with_pivot(const AffineChar& chi, int pivot) const {
  auto [l, scale] = normalize_char(chi);
  if (l.c[pivot] == 0) throw UsageError("pivot variable absent from hyperplane form");
  int order = pole_order(chi);
  if (order == 0) return zero();
  if (order > 1)
    throw ResidueOrderError("pole order " + std::to_string(order) +
                            " > 1 along hyperplane");
  // Replacement for the pivot variable on l = 0.
  Poly repl;
  for (int i = 0; i < kNumVars; ++i)
    if (i != pivot && l.c[i]) repl += Poly::variable(i).scaled(rat(-l.c[i], l.c[pivot]));
  Frac r;
  r.num = num.substituted(pivot, repl);
  Rat accum = 1;
  for (const auto& [m, mult] : den) {
    if (m == l) continue;  // the cleared factor
    // On the hyperplane, m = u / l[pivot] for the integer covector
    // u = l[pivot]*m - m[pivot]*l.
    AffineChar u;
    u.lam.assign(kMaxRank, 0);
    bool all_zero = true;
    for (int i = 0; i < kNumVars; ++i) {
      long v = l.c[pivot] * m.c[i] - m.c[pivot] * l.c[i];
      if (v) all_zero = false;
      if (i == kHbarVar)
        u.k = v;
      else
        u.lam[i] = v;
    }
    if (all_zero)
      throw UsageError("denominator form proportional to residue hyperplane");
    auto [p, s] = normalize_char(u);
    Rat factor_scale = s / Rat(l.c[pivot]);
    for (int i = 0; i < mult; ++i) accum *= factor_scale;
    r.den[p] += mult;
  }
  r.num = r.num.scaled(Rat(1) / (accum * scale));
  r.reduce();
  return r;
}

std::string Frac::str(int rank) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  std::string n = num.str(rank);
  if (den.empty()) return n;
  if (num.terms.size() > 1)
    os << "(" << n << ")";
  else
    os << n;
  os << " / ";
  bool first = true;
  for (const auto& [l, m] : den) {
    if (!first) os << "*";
    first = false;
    os << "[" << l.str(rank) << "]";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

}  // namespace gkmcher
