#include "gkmcher/sl2.hpp"

#include <sstream>

namespace gkmcher {

namespace {

void require_rank_one(const RootSystem& rs) {
  if (rs.rank != 1) throw UsageError("rank-one module requires an A1 system");
}

long binom(int n, long m) {
  if (m < 0 || m > n) return 0;
  long b = 1;
  for (long i = 0; i < m; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// f_k^{r,(m)} = prod_{i=1}^{r} (y + (k+m+i-1) h)
std::vector<AffineChar> pole_chars(int r, long k, long m) {
  std::vector<AffineChar> chars;
  for (long i = 1; i <= r; ++i) chars.push_back(AffineChar{{1}, k + m + i - 1});
  return chars;
}

}  // namespace

long sl2_index_of(const RootSystem& rs, const AffineWeyl& x) {
  require_rank_one(rs);
  bool is_id = x.w.mat_root == rs.identity_weyl().mat_root;
  // t^{m a^vee} = (e, m); t^{m a^vee} s = (s, -m)
  return is_id ? 2 * x.mu[0] : -2 * x.mu[0] + 1;
}

AffineWeyl sl2_element_of(const RootSystem& rs, long ell) {
  require_rank_one(rs);
  if (ell % 2 == 0) return translation(rs, {ell / 2});
  long m = (ell - 1) / 2;
  return multiply(rs, translation(rs, {m}), from_weyl(rs, rs.simple_reflection(0)));
}

bool label_admissible(int d, const BasisLabel& label) {
  if (label.r < 0 || label.r > d) return false;
  if (label.r == d) return true;
  if (label.r == 0) return label.k == 0;
  return label.k == 0 || label.k == 1;
}

long leading_index(const BasisLabel& label) {
  if (label.r == 0) return label.k;
  if (label.k < 0) return label.k;
  return label.k + 2 * label.r - 1;
}

GkmClass sl2_basis_element(const RootSystem& rs, int d, const BasisLabel& label) {
  require_rank_one(rs);
  if (!label_admissible(d, label))
    throw UsageError("inadmissible basis label (r=" + std::to_string(label.r) +
                     ", k=" + std::to_string(label.k) + ") at level " + std::to_string(d));
  GkmClass out;
  out.rs = &rs;
  out.d = d;
  if (label.r == 0) {
    out.set(sl2_element_of(rs, label.k), Frac::one());
    return out;
  }
  for (long ell = label.k; ell <= label.k + 2 * label.r - 1; ++ell) {
    long m = (ell - label.k) / 2;
    long eps = (ell - label.k) % 2;
    long c = binom(label.r - 1, m);
    if ((m + eps) % 2) c = -c;
    Frac entry = Frac::inverse_of_char_product(pole_chars(label.r, label.k, m)).scaled(c);
    out.set(sl2_element_of(rs, ell), std::move(entry));
  }
  return out;
}

std::map<BasisLabel, Poly> sl2_expand(const GkmClass& xi) {
  const RootSystem& rs = *xi.rs;
  require_rank_one(rs);
  int d = xi.d;
  std::map<BasisLabel, Poly> coeffs;

  // index-keyed working copy
  std::map<long, Frac> g;
  for (const auto& [x, f] : xi.entries) g[sl2_index_of(rs, x)] = f;
  auto drop_zeros = [&] {
    for (auto it = g.begin(); it != g.end();)
      it = it->second.is_zero() ? g.erase(it) : ++it;
  };
  drop_zeros();

  auto reduce_with = [&](const BasisLabel& label, long pos) {
    GkmClass b = sl2_basis_element(rs, d, label);
    Frac b_entry = b.at(sl2_element_of(rs, pos));
    // c = g_pos / b_pos: multiply by the inverted entry (a pure product of
    // linear forms over an integer), then demand a polynomial.
    Frac c = g[pos];
    for (const auto& [l, m] : b_entry.den)
      for (int i = 0; i < m; ++i) c = c * Frac::from_poly(l.poly());
    Rat lead = b_entry.num.terms.empty() ? Rat(0) : b_entry.num.terms.begin()->second;
    if (lead == 0) throw Sl2ExpansionError("degenerate basis entry");
    c = c.scaled(1 / lead);
    if (!c.is_polynomial())
      throw Sl2ExpansionError(
          "entry at index " + std::to_string(pos) +
          " is not a module multiple of the extremal basis entry (non-membership)");
    for (const auto& [x, f] : sl2_basis_element(rs, d, label).entries) {
      long ell = sl2_index_of(rs, x);
      g[ell] = g[ell] - c * f;
    }
    coeffs[label] += c.num;
    drop_zeros();
  };

  long guard = 0;
  while (!g.empty()) {
    if (++guard > 10000) throw Sl2ExpansionError("reduction failed to terminate");
    long lo = g.begin()->first;
    long hi = g.rbegin()->first;
    if (d == 0) {
      if (!g[hi].is_polynomial())
        throw Sl2ExpansionError("level-0 entry with a pole (non-membership)");
      coeffs[BasisLabel{0, hi}] += g[hi].num;
      g.erase(hi);
      continue;
    }
    if (lo < 0) {
      reduce_with(BasisLabel{d, lo}, lo);
    } else if (hi > 2 * d - 2) {
      reduce_with(BasisLabel{d, hi - 2 * d + 1}, hi);
    } else if (hi == 0) {
      reduce_with(BasisLabel{0, 0}, 0);
    } else if (hi % 2) {
      reduce_with(BasisLabel{static_cast<int>((hi + 1) / 2), 0}, hi);
    } else {
      reduce_with(BasisLabel{static_cast<int>(hi / 2), 1}, hi);
    }
  }
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second.is_zero() ? coeffs.erase(it) : ++it;
  return coeffs;
}

std::string sl2_basis_json(const RootSystem& rs, int d, long kmin, long kmax) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int r = 0; r <= d; ++r)
    for (long k = kmin; k <= kmax; ++k) {
      BasisLabel label{r, k};
      if (!label_admissible(d, label)) continue;
      if (!first) os << ",";
      first = false;
      os << "{\"r\":" << r << ",\"k\":" << k << ",\"entries\":[";
      GkmClass b = sl2_basis_element(rs, d, label);
      bool efirst = true;
      for (const auto& [x, f] : b.entries) {
        if (!efirst) os << ",";
        efirst = false;
        os << "{\"index\":" << sl2_index_of(rs, x) << ",\"frac\":\""
           << json_escape(f.str(rs.rank)) << "\"}";
      }
      os << "]}";
    }
  os << "]";
  return os.str();
}

}  // namespace gkmcher
