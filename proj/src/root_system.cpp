#include "gkmcher/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace gkmcher {

std::string cartan_type_name(CartanType t) {
  switch (t) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
    case CartanType::G: return "G";
  }
  return "?";
}

CartanType cartan_type_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return CartanType::A;
    case 'B': case 'b': return CartanType::B;
    case 'C': case 'c': return CartanType::C;
    case 'D': case 'd': return CartanType::D;
    case 'G': case 'g': return CartanType::G;
  }
  throw ConfigError(std::string("unsupported Cartan type '") + c + "'");
}

namespace {

MatI identity_matrix(int n) {
  MatI m(n, VecI(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

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

VecI mat_apply(const MatI& m, const VecI& v) {
  int n = static_cast<int>(m.size());
  VecI out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

MatI cartan_matrix(CartanType type, int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw ConfigError("rank " + std::to_string(rank) + " out of supported range 1.." +
                      std::to_string(kMaxRank));
  auto chain = [&](MatI& c) {
    for (int i = 0; i + 1 < rank; ++i) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  };
  MatI c(rank, VecI(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  switch (type) {
    case CartanType::A:
      chain(c);
      break;
    case CartanType::B:  // last simple root short
      if (rank < 2) throw ConfigError("type B needs rank >= 2");
      chain(c);
      c[rank - 2][rank - 1] = -2;
      c[rank - 1][rank - 2] = -1;
      break;
    case CartanType::C:  // last simple root long
      if (rank < 2) throw ConfigError("type C needs rank >= 2");
      chain(c);
      c[rank - 2][rank - 1] = -1;
      c[rank - 1][rank - 2] = -2;
      break;
    case CartanType::D:
      if (rank < 3) throw ConfigError("type D needs rank >= 3");
      for (int i = 0; i + 2 < rank; ++i) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
      c[rank - 3][rank - 1] = -1;
      c[rank - 1][rank - 3] = -1;
      break;
    case CartanType::G:
      if (rank != 2) throw ConfigError("type G needs rank == 2");
      c[0][1] = -1;  // alpha_1 short
      c[1][0] = -3;
      break;
  }
  return c;
}

std::size_t weyl_order_formula(CartanType type, int rank) {
  auto fact = [](int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (type) {
    case CartanType::A: return fact(rank + 1);
    case CartanType::B:
    case CartanType::C: return (std::size_t(1) << rank) * fact(rank);
    case CartanType::D: return (std::size_t(1) << (rank - 1)) * fact(rank);
    case CartanType::G: return 12;
  }
  return 0;
}

}  // namespace

VecI WeylElement::apply_root(const VecI& v) const { return mat_apply(mat_root, v); }
VecI WeylElement::apply_coroot(const VecI& v) const { return mat_apply(mat_coroot, v); }

WeylElement RootSystem::identity_weyl() const {
  WeylElement e;
  e.mat_root = identity_matrix(rank);
  e.mat_coroot = identity_matrix(rank);
  e.sign = 1;
  return e;
}

WeylElement RootSystem::simple_reflection(int i) const {
  if (i < 0 || i >= rank) throw UsageError("simple reflection index out of range");
  WeylElement s = identity_weyl();
  // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i
  for (int j = 0; j < rank; ++j) s.mat_root[i][j] -= cartan[j][i];
  // s_i(alpha_j^vee) = alpha_j^vee - <alpha_i, alpha_j^vee> alpha_i^vee
  for (int j = 0; j < rank; ++j) s.mat_coroot[i][j] -= cartan[i][j];
  s.word = {i};
  s.sign = -1;
  return s;
}

WeylElement RootSystem::root_reflection(int root_index) const {
  const VecI& beta = positive_roots.at(root_index);
  const VecI& beta_cov = positive_coroots.at(root_index);
  WeylElement s = identity_weyl();
  // s_beta(alpha_j) = alpha_j - <alpha_j, beta^vee> beta
  for (int j = 0; j < rank; ++j) {
    VecI ej(rank, 0);
    ej[j] = 1;
    long p = pairing(ej, beta_cov);
    for (int i = 0; i < rank; ++i) s.mat_root[i][j] -= p * beta[i];
  }
  for (int j = 0; j < rank; ++j) {
    VecI ej(rank, 0);
    ej[j] = 1;
    long p = pairing(beta, ej);  // <beta, alpha_j^vee>
    for (int i = 0; i < rank; ++i) s.mat_coroot[i][j] -= p * beta_cov[i];
  }
  s.word.clear();
  s.sign = -1;
  return s;
}

long RootSystem::pairing(const VecI& root_coords, const VecI& coroot_coords) const {
  long p = 0;
  for (int i = 0; i < rank; ++i) {
    if (!root_coords[i]) continue;
    for (int j = 0; j < rank; ++j) p += root_coords[i] * cartan[i][j] * coroot_coords[j];
  }
  return p;
}

long RootSystem::height(const VecI& root_coords) const {
  return std::accumulate(root_coords.begin(), root_coords.end(), 0L);
}

bool RootSystem::is_positive_root_vec(const VecI& v) const {
  return find_positive_root(v) >= 0;
}

int RootSystem::find_positive_root(const VecI& v) const {
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    if (positive_roots[i] == v) return static_cast<int>(i);
  return -1;
}

const std::vector<WeylElement>& RootSystem::weyl_elements() const {
  if (!weyl_cache_.empty()) return weyl_cache_;
  std::map<MatI, std::size_t> seen;
  std::deque<WeylElement> frontier;
  WeylElement e = identity_weyl();
  seen[e.mat_root] = 0;
  weyl_cache_.push_back(e);
  frontier.push_back(e);
  std::vector<WeylElement> gens;
  for (int i = 0; i < rank; ++i) gens.push_back(simple_reflection(i));
  while (!frontier.empty()) {
    WeylElement w = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < rank; ++i) {
      WeylElement ws;
      ws.mat_root = mat_mul(w.mat_root, gens[i].mat_root);
      ws.mat_coroot = mat_mul(w.mat_coroot, gens[i].mat_coroot);
      if (seen.count(ws.mat_root)) continue;
      ws.word = w.word;
      ws.word.push_back(i);
      ws.sign = -w.sign;
      seen[ws.mat_root] = weyl_cache_.size();
      weyl_cache_.push_back(ws);
      frontier.push_back(ws);
    }
  }
  return weyl_cache_;
}

int RootSystem::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  auto pair_of = [&](int a, int b) -> long {
    // a, b in 0..rank where 0 denotes the affine node (highest root data).
    VecI ra = a == 0 ? highest_root : [&] {
      VecI v(rank, 0);
      v[a - 1] = 1;
      return v;
    }();
    VecI cb = b == 0 ? highest_root_coroot : [&] {
      VecI v(rank, 0);
      v[b - 1] = 1;
      return v;
    }();
    return pairing(ra, cb);
  };
  long p = pair_of(i, j) * pair_of(j, i);
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite
  }
}

std::string RootSystem::json() const {
  std::ostringstream os;
  auto vec = [&](const VecI& v) {
    std::ostringstream s;
    s << "[";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << "]";
    return s.str();
  };
  os << "{\"type\":\"" << cartan_type_name(type) << "\",\"rank\":" << rank
     << ",\"coxeter_number\":" << coxeter_number << ",\"cartan\":[";
  for (int i = 0; i < rank; ++i) os << (i ? "," : "") << vec(cartan[i]);
  os << "],\"positive_roots\":[";
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    os << (i ? "," : "") << vec(positive_roots[i]);
  os << "],\"positive_coroots\":[";
  for (std::size_t i = 0; i < positive_coroots.size(); ++i)
    os << (i ? "," : "") << vec(positive_coroots[i]);
  os << "],\"highest_root\":" << vec(highest_root) << ",\"highest_root_coroot\":"
     << vec(highest_root_coroot) << "}";
  return os.str();
}

RootSystem build_root_system(CartanType type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);

  // Close the simple (root, coroot) pairs under simple reflections.  Pure
  // lattice arithmetic: only the Cartan matrix enters.
  std::set<std::pair<VecI, VecI>> all;
  std::deque<std::pair<VecI, VecI>> work;
  for (int i = 0; i < rank; ++i) {
    VecI r(rank, 0), c(rank, 0);
    r[i] = 1;
    c[i] = 1;
    all.insert({r, c});
    work.push_back({r, c});
  }
  auto reflect_root = [&](int i, const VecI& v) {
    VecI out = v;
    long p = 0;
    for (int j = 0; j < rank; ++j) p += v[j] * rs.cartan[j][i];
    out[i] -= p;
    return out;
  };
  auto reflect_coroot = [&](int i, const VecI& v) {
    VecI out = v;
    long p = 0;
    for (int j = 0; j < rank; ++j) p += rs.cartan[i][j] * v[j];
    out[i] -= p;
    return out;
  };
  while (!work.empty()) {
    auto [r, c] = work.front();
    work.pop_front();
    for (int i = 0; i < rank; ++i) {
      std::pair<VecI, VecI> next{reflect_root(i, r), reflect_coroot(i, c)};
      if (all.insert(next).second) work.push_back(next);
    }
  }

  for (const auto& [r, c] : all) {
    bool pos = true, neg = true;
    for (long x : r) {
      if (x > 0) neg = false;
      if (x < 0) pos = false;
    }
    if (!pos && !neg) throw ConfigError("root closure produced a non-signed vector");
    if (pos) {
      rs.positive_roots.push_back(r);
      rs.positive_coroots.push_back(c);
    }
  }
  // Deterministic order: by height then lexicographic.
  {
    std::vector<std::size_t> idx(rs.positive_roots.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      long ha = rs.height(rs.positive_roots[a]), hb = rs.height(rs.positive_roots[b]);
      if (ha != hb) return ha < hb;
      return rs.positive_roots[a] < rs.positive_roots[b];
    });
    std::vector<VecI> pr, pc;
    for (auto i : idx) {
      pr.push_back(rs.positive_roots[i]);
      pc.push_back(rs.positive_coroots[i]);
    }
    rs.positive_roots = std::move(pr);
    rs.positive_coroots = std::move(pc);
  }

  std::size_t nroots = 2 * rs.positive_roots.size();
  if (nroots % rank != 0)
    throw ConfigError("|R| not divisible by rank; bad Cartan data");
  rs.coxeter_number = static_cast<int>(nroots / rank);

  rs.highest_root_index = static_cast<int>(rs.positive_roots.size()) - 1;
  rs.highest_root = rs.positive_roots.back();
  rs.highest_root_coroot = rs.positive_coroots.back();
  rs.min_neg_coroot = rs.highest_root_coroot;
  for (auto& x : rs.min_neg_coroot) x = -x;
  if (rs.height(rs.highest_root) + 1 != rs.coxeter_number)
    throw ConfigError("Coxeter number mismatch: h != height(theta)+1");
  // The highest root dominates every positive root in the root order.
  for (const auto& r : rs.positive_roots)
    for (int i = 0; i < rank; ++i)
      if (rs.highest_root[i] < r[i]) throw ConfigError("highest root not maximal");

  // W-orbits of positive roots (reflection conjugacy classes).
  {
    rs.root_class.assign(rs.positive_roots.size(), -1);
    int cls = 0;
    for (std::size_t seed = 0; seed < rs.positive_roots.size(); ++seed) {
      if (rs.root_class[seed] >= 0) continue;
      std::deque<VecI> q{rs.positive_roots[seed]};
      std::set<VecI> seen{rs.positive_roots[seed]};
      while (!q.empty()) {
        VecI v = q.front();
        q.pop_front();
        for (int i = 0; i < rank; ++i) {
          VecI w = reflect_root(i, v);
          if (seen.insert(w).second) q.push_back(w);
        }
      }
      for (std::size_t j = 0; j < rs.positive_roots.size(); ++j)
        if (seen.count(rs.positive_roots[j])) rs.root_class[j] = cls;
      ++cls;
    }
    rs.num_root_classes = cls;
  }

  if (rs.weyl_order() != weyl_order_formula(type, rank))
    throw ConfigError("Weyl group order mismatch for " + cartan_type_name(type) +
                      std::to_string(rank));
  return rs;
}

int coxeter_number(const RootSystem& rs) {
  return static_cast<int>(2 * rs.positive_roots.size() / rs.rank);
}

}  // namespace gkmcher
