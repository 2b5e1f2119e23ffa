#include "gkmcher/affine.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "gkmcher/rational.hpp"

namespace gkmcher {

namespace {

MatI mat_mul(const MatI& a, const MatI& b) {
  int n = static_cast<int>(a.size());
  MatI c(n, VecI(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long aik = a[i][k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

// Exact inverse of a unimodular integer matrix (Weyl matrices have det +-1)
// by Gauss-Jordan over the rationals with an integrality check.
MatI mat_inverse_unimodular(const MatI& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw UsageError("singular Weyl matrix");
    std::swap(m[col], m[pivot]);
    Rat p = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  MatI inv(n, VecI(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = m[i][n + j];
      if (v.get_den() != 1) throw UsageError("non-integral Weyl inverse");
      inv[i][j] = static_cast<long>(v.get_num().get_si());
    }
  return inv;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.mat_root = mat_mul(a.mat_root, b.mat_root);
  c.mat_coroot = mat_mul(a.mat_coroot, b.mat_coroot);
  c.word = a.word;
  c.word.insert(c.word.end(), b.word.begin(), b.word.end());
  c.sign = a.sign * b.sign;
  return c;
}

WeylElement weyl_inverse(const WeylElement& w) {
  WeylElement inv;
  inv.mat_root = mat_inverse_unimodular(w.mat_root);
  inv.mat_coroot = mat_inverse_unimodular(w.mat_coroot);
  inv.word.assign(w.word.rbegin(), w.word.rend());
  inv.sign = w.sign;
  return inv;
}

}  // namespace

AffineWeyl affine_identity(const RootSystem& rs) {
  return AffineWeyl{rs.identity_weyl(), VecI(rs.rank, 0)};
}

AffineWeyl translation(const RootSystem& rs, const VecI& mu) {
  return AffineWeyl{rs.identity_weyl(), mu};
}

AffineWeyl from_weyl(const RootSystem& rs, const WeylElement& w) {
  return AffineWeyl{w, VecI(rs.rank, 0)};
}

AffineWeyl multiply(const RootSystem& rs, const AffineWeyl& x, const AffineWeyl& y) {
  if (static_cast<int>(x.mu.size()) != rs.rank || static_cast<int>(y.mu.size()) != rs.rank)
    throw UsageError("affine elements from mixed root systems");
  WeylElement w2inv = weyl_inverse(y.w);
  VecI mu = w2inv.apply_coroot(x.mu);
  for (int i = 0; i < rs.rank; ++i) mu[i] += y.mu[i];
  return AffineWeyl{weyl_mul(x.w, y.w), std::move(mu)};
}

AffineWeyl inverse(const RootSystem& rs, const AffineWeyl& x) {
  WeylElement winv = weyl_inverse(x.w);
  VecI mu = x.w.apply_coroot(x.mu);
  for (auto& c : mu) c = -c;
  (void)rs;
  return AffineWeyl{std::move(winv), std::move(mu)};
}

AffineChar act_char(const RootSystem& rs, const AffineWeyl& x, const AffineChar& chi) {
  AffineChar out;
  out.k = chi.k + rs.pairing(chi.lam, x.mu);
  out.lam = x.w.apply_root(chi.lam);
  return out;
}

AffineWeyl affine_reflection(const RootSystem& rs, int root_index, long k) {
  if (root_index < 0 || root_index >= static_cast<int>(rs.positive_roots.size()))
    throw UsageError("affine_reflection: not a positive root index");
  WeylElement s = rs.root_reflection(root_index);
  // t^{k alpha^vee} s_alpha = (s_alpha, s_alpha^{-1}(k alpha^vee)) = (s_alpha, -k alpha^vee)
  VecI mu = rs.positive_coroots[root_index];
  for (auto& c : mu) c *= -k;
  return AffineWeyl{std::move(s), std::move(mu)};
}

AffineWeyl standard_generator(const RootSystem& rs, int i) {
  if (i == 0) return affine_reflection(rs, rs.highest_root_index, 1);
  return from_weyl(rs, rs.simple_reflection(i - 1));
}

AffineChar simple_affine_root(const RootSystem& rs, int i) {
  if (i == 0) {
    AffineChar a{rs.highest_root, 1};
    for (auto& x : a.lam) x = -x;
    return a;
  }
  AffineChar a{VecI(rs.rank, 0), 0};
  a.lam[i - 1] = 1;
  return a;
}

namespace {

// alpha(x(p)) = gamma(p) + <gamma, mu> for gamma = w^{-1}(alpha) and
// p = rho^vee/(h+1); then gamma(p) = height(gamma)/(h+1) lies in (-1,1)\{0},
// so the floor is <gamma,mu> for gamma > 0 and <gamma,mu> - 1 otherwise.
long floor_with_winv(const RootSystem& rs, const WeylElement& winv, const VecI& mu,
                     int root_index) {
  VecI gamma = winv.apply_root(rs.positive_roots[root_index]);
  long shift = rs.pairing(gamma, mu);
  long h = rs.height(gamma);
  if (h == 0) throw UsageError("degenerate root in alcove_floor");
  return h > 0 ? shift : shift - 1;
}

}  // namespace

long alcove_floor(const RootSystem& rs, const AffineWeyl& x, int root_index) {
  return floor_with_winv(rs, weyl_inverse(x.w), x.mu, root_index);
}

Alcove alcove_profile(const RootSystem& rs, const AffineWeyl& x) {
  Alcove a;
  a.element = x;
  a.profile.resize(rs.positive_roots.size());
  WeylElement winv = weyl_inverse(x.w);
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    a.profile[i] = floor_with_winv(rs, winv, x.mu, static_cast<int>(i));
  return a;
}

long length(const RootSystem& rs, const AffineWeyl& x) {
  long len = 0;
  WeylElement winv = weyl_inverse(x.w);
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    len += std::abs(floor_with_winv(rs, winv, x.mu, static_cast<int>(i)));
  return len;
}

std::string to_string(const RootSystem& rs, const AffineWeyl& x) {
  std::ostringstream os;
  os << "w:[";
  // Recover one reduced word for the finite part by BFS if none is cached.
  std::vector<int> word = x.w.word;
  if (word.empty() && x.w.mat_root != rs.identity_weyl().mat_root) {
    for (const auto& w : rs.weyl_elements())
      if (w.mat_root == x.w.mat_root) {
        word = w.word;
        break;
      }
  }
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << (word[i] + 1);
  os << "];t:[";
  for (int i = 0; i < rs.rank; ++i) os << (i ? "," : "") << x.mu[i];
  os << "]";
  return os.str();
}

std::vector<AffineWeyl> length_ball(const RootSystem& rs, long radius) {
  std::vector<AffineWeyl> out;
  std::set<AffineWeyl> seen;
  std::deque<AffineWeyl> q;
  AffineWeyl e = affine_identity(rs);
  seen.insert(e);
  q.push_back(e);
  std::vector<AffineWeyl> gens;
  for (int i = 0; i <= rs.rank; ++i) gens.push_back(standard_generator(rs, i));
  while (!q.empty()) {
    AffineWeyl x = q.front();
    q.pop_front();
    out.push_back(x);
    for (const auto& g : gens) {
      AffineWeyl y = multiply(rs, x, g);
      if (length(rs, y) > radius) continue;
      if (seen.insert(y).second) q.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gkmcher
