#include "gkmcher/poly.hpp"

#include <numeric>
#include <sstream>

namespace gkmcher {

Poly Poly::constant(const Rat& c) {
  Poly p;
  if (c != 0) p.terms[Mono{}] = c;
  return p;
}

Poly Poly::variable(int v, int power) {
  Poly p;
  Mono m;
  m.e[v] = static_cast<std::uint8_t>(power);
  p.terms[m] = 1;
  return p;
}

Poly Poly::linear(const AffineChar& chi) {
  Poly p;
  for (std::size_t i = 0; i < chi.lam.size(); ++i)
    if (chi.lam[i]) {
      Mono m;
      m.e[i] = 1;
      p.terms[m] = chi.lam[i];
    }
  if (chi.k) {
    Mono m;
    m.e[kHbarVar] = 1;
    p.terms[m] = chi.k;
  }
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  p += o;
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  Poly p = *this;
  p += -o;
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  Poly p;
  for (const auto& [ma, ca] : terms)
    for (const auto& [mb, cb] : o.terms) {
      Mono m;
      for (int i = 0; i < kNumVars; ++i)
        m.e[i] = static_cast<std::uint8_t>(ma.e[i] + mb.e[i]);
      auto it = p.terms.find(m);
      if (it == p.terms.end()) {
        Rat c = ca * cb;
        if (c != 0) p.terms.emplace(m, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second == 0) p.terms.erase(it);
      }
    }
  return p;
}

Poly Poly::scaled(const Rat& c) const {
  Poly p;
  if (c == 0) return p;
  for (const auto& [m, x] : terms) p.terms.emplace(m, x * c);
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, m.total_degree());
  return d;
}

int Poly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms) d = std::max<int>(d, m.e[v]);
  return d;
}

Poly Poly::substituted(int v, const Poly& replacement) const {
  // Cache powers of the replacement.
  std::vector<Poly> pow{Poly::constant(1)};
  Poly out;
  for (const auto& [m, c] : terms) {
    int k = m.e[v];
    while (static_cast<int>(pow.size()) <= k) pow.push_back(pow.back() * replacement);
    Mono rest = m;
    rest.e[v] = 0;
    Poly base;
    base.terms[rest] = c;
    out += base * pow[k];
  }
  return out;
}

Poly Poly::truncated(int bound) const {
  Poly p;
  for (const auto& [m, c] : terms)
    if (m.total_degree() <= bound) p.terms.emplace(m, c);
  return p;
}

Poly Poly::truncated_in_y(int bound) const {
  Poly p;
  for (const auto& [m, c] : terms)
    if (m.total_degree() - m.e[kHbarVar] <= bound) p.terms.emplace(m, c);
  return p;
}

std::string var_name(int v, int rank) {
  if (v == kHbarVar) return "h";
  if (rank == 1) return "y";
  return "y" + std::to_string(v + 1);
}

std::string Poly::str(int rank) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads better.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0 && m.total_degree() > 0) {
      os << "-";
      a = -a;
    }
    first = false;
    if (a != 1 || m.total_degree() == 0) os << a.get_str();
    bool printed_var = false;
    for (int v = 0; v < kNumVars; ++v)
      if (m.e[v]) {
        if (printed_var) os << "*";
        os << var_name(v, rank);
        if (m.e[v] > 1) os << "^" << int(m.e[v]);
        printed_var = true;
      }
  }
  return os.str();
}

Poly LinForm::poly() const {
  Poly p;
  for (int i = 0; i < kNumVars; ++i)
    if (c[i]) {
      Mono m;
      m.e[i] = 1;
      p.terms[m] = c[i];
    }
  return p;
}

int LinForm::pivot() const {
  for (int i = kNumVars - 1; i >= 0; --i)
    if (c[i]) return i;
  return -1;
}

std::string LinForm::str(int rank) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kNumVars; ++i) {
    if (!c[i]) continue;
    long a = c[i];
    if (!first)
      os << (a < 0 ? "-" : "+");
    else if (a < 0)
      os << "-";
    first = false;
    if (std::abs(a) != 1) os << std::abs(a) << "*";
    os << var_name(i, rank);
  }
  return os.str();
}

std::pair<LinForm, Rat> normalize_char(const AffineChar& chi) {
  LinForm l;
  for (std::size_t i = 0; i < chi.lam.size(); ++i) l.c[i] = chi.lam[i];
  l.c[kHbarVar] = chi.k;
  long g = 0;
  for (long x : l.c) g = std::gcd(g, std::abs(x));
  if (g == 0) throw UsageError("zero character has no hyperplane");
  long sign = 0;
  for (long x : l.c)
    if (x) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  for (auto& x : l.c) x /= g * sign;
  return {l, Rat(g * sign)};
}

AffineChar char_of_linform(const LinForm& l, int rank) {
  AffineChar chi;
  chi.lam.assign(l.c.begin(), l.c.begin() + rank);
  chi.k = l.c[kHbarVar];
  return chi;
}

std::optional<Poly> divide_by_linform(const Poly& p, const LinForm& l) {
  int v = l.pivot();
  if (v < 0) throw UsageError("division by zero form");
  Rat a(l.c[v]);
  // B = l - a*x_v as a polynomial in the other variables.
  Poly B = l.poly() - Poly::variable(v).scaled(a);
  Poly rem = p, quot;
  while (true) {
    int d = rem.degree_in(v);
    if (d == 0) break;
    // leading coefficient in x_v^d
    Poly lead;
    for (const auto& [m, c] : rem.terms)
      if (m.e[v] == d) {
        Mono r = m;
        r.e[v] = 0;
        lead.terms[r] = c;
      }
    Poly t = lead.scaled(1 / a);  // times x_v^{d-1}
    Poly t_shift;
    for (const auto& [m, c] : t.terms) {
      Mono s = m;
      s.e[v] = static_cast<std::uint8_t>(d - 1);
      t_shift.terms[s] = c;
    }
    quot += t_shift;
    rem = rem - t_shift * l.poly();
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

}  // namespace gkmcher
