#include "gkmcher/combinat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gkmcher {

namespace {

bool in_ideal(const RootSystem& rs, const AffineWeyl& x, int d) {
  for (int i = 0; i < rs.rank; ++i) {
    // simple roots come first in the sorted positive root list
    VecI ei(rs.rank, 0);
    ei[i] = 1;
    int idx = rs.find_positive_root(ei);
    if (alcove_floor(rs, x, idx) < -d) return false;
  }
  return alcove_floor(rs, x, rs.highest_root_index) <= d;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

bool AlcoveIdeal::contains(const RootSystem& rs, const AffineWeyl& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
  (void)rs;
}

AlcoveIdeal alcove_ideal(const RootSystem& rs, int d) {
  AlcoveIdeal ideal;
  ideal.d = d;
  ideal.expected_count = ipow(std::size_t(d) * rs.coxeter_number + 1, rs.rank);

  std::set<AffineWeyl> seen;
  std::deque<AffineWeyl> q;
  AffineWeyl e = affine_identity(rs);
  if (!in_ideal(rs, e, d)) throw InvariantPanic("fundamental alcove outside its own ideal");
  seen.insert(e);
  q.push_back(e);
  while (!q.empty()) {
    AffineWeyl x = q.front();
    q.pop_front();
    ideal.elements.push_back(x);
    for (int i = 0; i <= rs.rank; ++i) {
      AffineWeyl y = multiply(rs, x, standard_generator(rs, i));
      if (seen.count(y) || !in_ideal(rs, y, d)) continue;
      seen.insert(y);
      q.push_back(y);
    }
  }
  std::sort(ideal.elements.begin(), ideal.elements.end());
  if (ideal.elements.size() != ideal.expected_count)
    throw InvariantPanic("alcove ideal count " + std::to_string(ideal.elements.size()) +
                         " != (dh+1)^rank = " + std::to_string(ideal.expected_count));
  return ideal;
}

EquivalenceSummary equivalence_classes(const RootSystem& rs, int d, long ball_radius,
                                       par::Mode mode) {
  EquivalenceSummary sum;
  sum.ball_radius = ball_radius;
  auto ball = length_ball(rs, ball_radius);
  sum.ball_size = ball.size();
  std::map<AffineWeyl, std::size_t> index;
  for (std::size_t i = 0; i < ball.size(); ++i) index.emplace(ball[i], i);

  // Link x ~ s_a x when the swap condition holds at x and s_a x is shorter.
  // The relation multiplies on the left only, so it never crosses components
  // of the finite quotient (trivial here: the lattice is the coroot lattice).
  std::vector<std::vector<std::size_t>> links(ball.size());
  par::for_each(ball.size(), mode, [&](std::size_t i) {
    const AffineWeyl& x = ball[i];
    long lx = length(rs, x);
    for (int a = 0; a <= rs.rank; ++a) {
      AffineWeyl sx = multiply(rs, standard_generator(rs, a), x);
      auto it = index.find(sx);
      if (it == index.end()) continue;
      if (length(rs, sx) >= lx) continue;
      if (swap_condition(rs, x, a, d)) links[i].push_back(it->second);
    }
  });
  UnionFind uf(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j : links[i]) uf.unite(i, j);

  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < ball.size(); ++i) classes[uf.find(i)].push_back(i);
  sum.class_count = classes.size();

  auto ideal = alcove_ideal(rs, d);
  for (const auto& [root, members] : classes) {
    long min_len = ball_radius + 1;
    bool meets = false;
    for (std::size_t i : members) {
      min_len = std::min(min_len, length(rs, ball[i]));
      if (ideal.contains(rs, ball[i])) meets = true;
    }
    // A class whose shortest member sits well inside the ball has its full
    // downward reduction visible; those are the ones the bound speaks about.
    if (min_len <= ball_radius - 2) {
      ++sum.visible_class_count;
      if (!meets) {
        sum.every_visible_class_meets_ideal = false;
        if (sum.witness.empty())
          sum.witness = "class of " + to_string(rs, ball[members.front()]) +
                        " (min length " + std::to_string(min_len) +
                        ") misses the alcove ideal";
      }
    }
  }
  sum.observed_equality = sum.visible_class_count == ideal.expected_count;
  return sum;
}

PermModuleCharacter perm_module_character(const RootSystem& rs, int d, par::Mode mode) {
  PermModuleCharacter pc;
  pc.modulus = static_cast<long>(d) * rs.coxeter_number + 1;
  long m = pc.modulus;
  pc.dimension = static_cast<long>(ipow(std::size_t(m), rs.rank));

  const auto& W = rs.weyl_elements();
  // conjugacy classes by brute force
  std::vector<int> cls(W.size(), -1);
  std::map<MatI, std::size_t> windex;
  for (std::size_t i = 0; i < W.size(); ++i) windex[W[i].mat_root] = i;
  int ncls = 0;
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (cls[i] >= 0) continue;
    for (std::size_t g = 0; g < W.size(); ++g) {
      AffineWeyl gw = multiply(rs, from_weyl(rs, W[g]), from_weyl(rs, W[i]));
      AffineWeyl gwg = multiply(rs, gw, inverse(rs, from_weyl(rs, W[g])));
      cls[windex.at(gwg.w.mat_root)] = ncls;
    }
    ++ncls;
  }

  // enumerate the quotient lattice points once
  std::size_t npts = ipow(std::size_t(m), rs.rank);
  auto decode = [&](std::size_t code) {
    VecI v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      v[i] = static_cast<long>(code % m);
      code /= m;
    }
    return v;
  };
  auto encode = [&](const VecI& v) {
    std::size_t code = 0;
    for (int i = rs.rank - 1; i >= 0; --i)
      code = code * m + static_cast<std::size_t>(((v[i] % m) + m) % m);
    return code;
  };

  // chi(w) = # fixed vectors, computed per element (sharded), then folded
  // into per-class rows.
  std::vector<long> chi(W.size(), 0);
  par::for_each(W.size(), mode, [&](std::size_t wi) {
    long fixed = 0;
    for (std::size_t code = 0; code < npts; ++code) {
      VecI v = decode(code);
      if (encode(W[wi].apply_coroot(v)) == code) ++fixed;
    }
    chi[wi] = fixed;
  });

  long sum_chi = 0, sum_sign_chi = 0;
  for (std::size_t i = 0; i < W.size(); ++i) {
    sum_chi += chi[i];
    sum_sign_chi += W[i].sign * chi[i];
  }
  if (sum_chi % static_cast<long>(W.size()) || sum_sign_chi % static_cast<long>(W.size()))
    throw InvariantPanic("Burnside averages are not integers");
  pc.invariants = sum_chi / static_cast<long>(W.size());
  pc.sign_multiplicity = sum_sign_chi / static_cast<long>(W.size());

  for (int c = 0; c < ncls; ++c) {
    CharacterRow row;
    std::size_t rep = 0;
    for (std::size_t i = 0; i < W.size(); ++i)
      if (cls[i] == c) {
        row.class_size++;
        rep = i;
      }
    // prefer the shortest word as representative
    for (std::size_t i = 0; i < W.size(); ++i)
      if (cls[i] == c && W[i].word.size() < W[rep].word.size()) rep = i;
    row.rep_word = W[rep].word;
    row.fixed_points = chi[rep];
    pc.rows.push_back(std::move(row));
  }

  // Independent cross-check: explicit orbit enumeration.
  {
    UnionFind uf(npts);
    for (std::size_t code = 0; code < npts; ++code) {
      VecI v = decode(code);
      for (int i = 0; i < rs.rank; ++i)
        uf.unite(code, encode(rs.simple_reflection(i).apply_coroot(v)));
    }
    std::set<std::size_t> roots;
    for (std::size_t code = 0; code < npts; ++code) roots.insert(uf.find(code));
    pc.orbit_count = static_cast<long>(roots.size());
    // orbits whose stabilizer contains no odd element carry the sign rep
    long sign_orbits = 0;
    for (std::size_t r : roots) {
      bool odd_stab = false;
      VecI v = decode(r);
      for (const auto& w : W)
        if (w.sign < 0 && encode(w.apply_coroot(v)) == r) {
          odd_stab = true;
          break;
        }
      if (!odd_stab) ++sign_orbits;
    }
    pc.sign_orbit_count = sign_orbits;
  }
  return pc;
}

std::string alcove_ideal_csv(const RootSystem& rs, const AlcoveIdeal& ideal) {
  std::ostringstream os;
  os << "element";
  for (const auto& r : rs.positive_roots) {
    os << ",k_";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "+" : "") << r[i];
  }
  os << "\n";
  for (const auto& x : ideal.elements) {
    os << to_string(rs, x);
    auto a = alcove_profile(rs, x);
    for (long k : a.profile) os << "," << k;
    os << "\n";
  }
  return os.str();
}

std::string character_json(const PermModuleCharacter& pc) {
  std::ostringstream os;
  os << "{\"modulus\":" << pc.modulus << ",\"dim\":" << pc.dimension
     << ",\"invariants\":" << pc.invariants << ",\"sign_multiplicity\":"
     << pc.sign_multiplicity << ",\"orbit_count\":" << pc.orbit_count
     << ",\"sign_orbit_count\":" << pc.sign_orbit_count << ",\"rows\":[";
  for (std::size_t i = 0; i < pc.rows.size(); ++i) {
    const auto& r = pc.rows[i];
    os << (i ? "," : "") << "{\"rep\":[";
    for (std::size_t j = 0; j < r.rep_word.size(); ++j)
      os << (j ? "," : "") << (r.rep_word[j] + 1);
    os << "],\"size\":" << r.class_size << ",\"fixed\":" << r.fixed_points << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace gkmcher
