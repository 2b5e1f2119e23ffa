#include "gkmcher/gkm.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "gkmcher/prng.hpp"

namespace gkmcher {

std::string system_name(const RootSystem& rs) {
  return cartan_type_name(rs.type) + std::to_string(rs.rank);
}

GkmClass GkmClass::indicator(const RootSystem& rs, int d, const AffineWeyl& x) {
  GkmClass c;
  c.rs = &rs;
  c.d = d;
  c.entries.emplace(x, Frac::one());
  return c;
}

void GkmClass::set(const AffineWeyl& x, Frac f) {
  if (f.is_zero())
    entries.erase(x);
  else
    entries.insert_or_assign(x, std::move(f));
}

Frac GkmClass::at(const AffineWeyl& x) const {
  auto it = entries.find(x);
  return it == entries.end() ? Frac::zero() : it->second;
}

bool GkmClass::operator==(const GkmClass& o) const {
  if (d != o.d) return false;
  std::set<AffineWeyl> keys;
  for (const auto& [x, f] : entries) keys.insert(x);
  for (const auto& [x, f] : o.entries) keys.insert(x);
  for (const auto& x : keys)
    if (!(at(x) == o.at(x))) return false;
  return true;
}

GkmClass GkmClass::operator+(const GkmClass& o) const {
  GkmClass r = *this;
  for (const auto& [x, f] : o.entries) r.set(x, r.at(x) + f);
  return r;
}

GkmClass GkmClass::operator-() const {
  GkmClass r = *this;
  for (auto& [x, f] : r.entries) f = -f;
  return r;
}

GkmClass GkmClass::scaled(const Rat& c) const {
  GkmClass r;
  r.rs = rs;
  r.d = d;
  if (c == 0) return r;
  for (const auto& [x, f] : entries) r.entries.emplace(x, f.scaled(c));
  return r;
}

std::string GkmClass::str() const {
  std::ostringstream os;
  os << "{d=" << d;
  for (const auto& [x, f] : entries)
    os << "; " << to_string(*rs, x) << " -> " << f.str(rs->rank);
  os << "}";
  return os.str();
}

std::vector<EdgeData> edges_at(const RootSystem& rs, const AffineWeyl& x, int d) {
  std::vector<EdgeData> out;
  for (int ri = 0; ri < static_cast<int>(rs.positive_roots.size()); ++ri)
    for (long k = -d; k <= d - 1; ++k) {
      EdgeData e;
      e.root_index = ri;
      e.k = k;
      e.partner = multiply(rs, x, affine_reflection(rs, ri, k));
      e.hyperplane = act_char(rs, x, AffineChar{rs.positive_roots[ri], k});
      out.push_back(std::move(e));
    }
  return out;
}

MembershipResult membership(const GkmClass& xi) {
  const RootSystem& rs = *xi.rs;
  // (i): poles only along admissible hyperplanes, at most simple.
  for (const auto& [x, f] : xi.entries) {
    std::set<LinForm> allowed;
    for (int ri = 0; ri < static_cast<int>(rs.positive_roots.size()); ++ri)
      for (long k = -xi.d; k <= xi.d - 1; ++k)
        allowed.insert(
            normalize_char(act_char(rs, x, AffineChar{rs.positive_roots[ri], k})).first);
    for (const auto& [l, m] : f.den) {
      if (m > 1)
        return {false, "pole of order " + std::to_string(m) + " at " +
                           to_string(rs, x) + " along " + l.str(rs.rank)};
      if (!allowed.count(l))
        return {false, "inadmissible pole at " + to_string(rs, x) + " along " +
                           l.str(rs.rank)};
    }
  }
  // (ii): residues across every edge with a support endpoint cancel.
  std::set<std::pair<AffineWeyl, AffineWeyl>> seen;
  for (const auto& [x, f] : xi.entries) {
    for (const auto& e : edges_at(rs, x, xi.d)) {
      auto key = x < e.partner ? std::make_pair(x, e.partner)
                               : std::make_pair(e.partner, x);
      if (!seen.insert(key).second) continue;
      Frac g = xi.at(e.partner);
      if (f.pole_order(e.hyperplane) == 0 && g.pole_order(e.hyperplane) == 0) continue;
      Frac res = f.residue(e.hyperplane) + g.residue(e.hyperplane);
      if (!res.is_zero())
        return {false, "edge residue nonzero between " + to_string(rs, x) + " and " +
                           to_string(rs, e.partner)};
    }
  }
  return {true, ""};
}

AffineWeyl cs_generator_element(const RootSystem& rs, int i) {
  if (i == 0) return affine_reflection(rs, rs.highest_root_index, -1);
  return from_weyl(rs, rs.simple_reflection(i - 1));
}

AffineChar cs_generator_char(const RootSystem& rs, int i) {
  return simple_affine_root(rs, i);  // alpha_i, or hbar - theta for i = 0
}

VecI cs_generator_coroot(const RootSystem& rs, int i) {
  if (i == 0) return rs.min_neg_coroot;
  VecI v(rs.rank, 0);
  v[i - 1] = 1;
  return v;
}

GkmClass cs_apply_reflection(const GkmClass& xi, int i) {
  const RootSystem& rs = *xi.rs;
  if (i < 0 || i > rs.rank) throw UsageError("reflection generator out of range");
  AffineWeyl s = cs_generator_element(rs, i);
  AffineChar chi = cs_generator_char(rs, i);
  AffineChar dh{VecI(rs.rank, 0), xi.d};
  GkmClass out;
  out.rs = xi.rs;
  out.d = xi.d;
  for (const auto& [y, f] : xi.entries) {
    AffineChar chi_y = act_char(rs, y, chi);
    if (xi.d != 0) {
      // contribution to the entry at y: (d hbar / ^y chi) f_y
      Frac t1 = f.times_char(dh).divided_by_char(chi_y);
      out.set(y, out.at(y) + t1);
    }
    // contribution to the entry at ys: ((^y chi - d hbar)/ ^y chi) f_y
    AffineChar num = chi_y;
    num.k -= xi.d;
    AffineWeyl ys = multiply(rs, y, s);
    Frac t2 = f.times_char(num).divided_by_char(chi_y);
    out.set(ys, out.at(ys) + t2);
  }
  return out;
}

GkmClass cs_apply_weight(const GkmClass& xi, const AffineChar& lam) {
  const RootSystem& rs = *xi.rs;
  GkmClass out;
  out.rs = xi.rs;
  out.d = xi.d;
  for (const auto& [x, f] : xi.entries) out.set(x, f.times_char(act_char(rs, x, lam)));
  return out;
}

GkmClass cs_apply_pi(const GkmClass& xi, const AffineWeyl& pi) {
  const RootSystem& rs = *xi.rs;
  AffineWeyl pinv = inverse(rs, pi);
  GkmClass out;
  out.rs = xi.rs;
  out.d = xi.d;
  // (pi xi)_x = xi_{x pi}, so the entry at y moves to y pi^{-1}.
  for (const auto& [y, f] : xi.entries) out.set(multiply(rs, y, pinv), f);
  return out;
}

GkmClass cs_apply_word(const GkmClass& xi, const std::vector<int>& word) {
  GkmClass cur = xi;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = cs_apply_reflection(cur, *it);
  return cur;
}

Frac twist_frac(const RootSystem& rs, const AffineWeyl& x, const Frac& f) {
  // Simultaneous substitution y_i -> ^x(alpha_i) on the numerator.
  std::vector<Poly> lin(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    AffineChar ei{VecI(rs.rank, 0), 0};
    ei.lam[i] = 1;
    lin[i] = Poly::linear(act_char(rs, x, ei));
  }
  std::vector<std::vector<Poly>> powers(rs.rank, {Poly::constant(1)});
  Frac out;
  for (const auto& [m, c] : f.num.terms) {
    Poly term = Poly::constant(c);
    for (int i = 0; i < rs.rank; ++i) {
      while (static_cast<int>(powers[i].size()) <= m.e[i])
        powers[i].push_back(powers[i].back() * lin[i]);
      if (m.e[i]) term = term * powers[i][m.e[i]];
    }
    if (m.e[kHbarVar]) term = term * Poly::variable(kHbarVar, m.e[kHbarVar]);
    out.num += term;
  }
  Rat scale = 1;
  for (const auto& [l, mult] : f.den) {
    AffineChar c = char_of_linform(l, rs.rank);
    auto [lp, s] = normalize_char(act_char(rs, x, c));
    out.den[lp] += mult;
    for (int i = 0; i < mult; ++i) scale *= s;
  }
  out.num = out.num.scaled(1 / scale);
  out.reduce();
  return out;
}

GkmClass ecm_apply_weyl(const GkmClass& xi, const AffineWeyl& y) {
  const RootSystem& rs = *xi.rs;
  AffineWeyl yinv = inverse(rs, y);
  GkmClass out;
  out.rs = xi.rs;
  out.d = xi.d;
  for (const auto& [z, f] : xi.entries)
    out.set(multiply(rs, yinv, z), twist_frac(rs, yinv, f));
  return out;
}

GkmClass ecm_apply_weight(const GkmClass& xi, const AffineChar& lam) {
  GkmClass out;
  out.rs = xi.rs;
  out.d = xi.d;
  for (const auto& [x, f] : xi.entries) out.set(x, f.times_char(lam));
  return out;
}

GkmClass project_isotypic(const GkmClass& xi, Isotypic kind) {
  const RootSystem& rs = *xi.rs;
  GkmClass acc;
  acc.rs = xi.rs;
  acc.d = xi.d;
  for (const auto& w : rs.weyl_elements()) {
    std::vector<int> word;
    for (int i : w.word) word.push_back(i + 1);
    GkmClass term = cs_apply_word(xi, word);
    if (kind == Isotypic::sign && w.sign < 0) term = -term;
    acc = acc + term;
  }
  return acc.scaled(rat(1, static_cast<long>(rs.weyl_order())));
}

namespace {

std::set<AffineWeyl> dynkin_closure(const GkmClass& xi) {
  const RootSystem& rs = *xi.rs;
  std::set<AffineWeyl> pts;
  for (const auto& [x, f] : xi.entries) {
    pts.insert(x);
    for (int i = 1; i <= rs.rank; ++i)
      pts.insert(multiply(rs, x, cs_generator_element(rs, i)));
  }
  return pts;
}

}  // namespace

bool is_sign_class(const GkmClass& xi) {
  const RootSystem& rs = *xi.rs;
  for (const auto& x : dynkin_closure(xi))
    for (int i = 1; i <= rs.rank; ++i) {
      AffineWeyl xs = multiply(rs, x, cs_generator_element(rs, i));
      if (!(xi.at(x) + xi.at(xs)).is_zero()) return false;
    }
  return true;
}

bool is_triv_class(const GkmClass& xi) {
  const RootSystem& rs = *xi.rs;
  for (const auto& x : dynkin_closure(xi))
    for (int i = 1; i <= rs.rank; ++i) {
      AffineWeyl xs = multiply(rs, x, cs_generator_element(rs, i));
      AffineChar a = act_char(rs, x, cs_generator_char(rs, i));
      AffineChar plus = a, minus = a;
      plus.k += xi.d;
      minus.k -= xi.d;
      if (!(xi.at(xs).times_char(plus) == xi.at(x).times_char(minus))) return false;
    }
  return true;
}

GkmClass upsilon(const GkmClass& xi) {
  const RootSystem& rs = *xi.rs;
  if (xi.d < 1) throw UsageError("upsilon needs level >= 1");
  if (!is_sign_class(xi)) throw IsotypicError("upsilon input is not sign-isotypic");
  int d = xi.d - 1;
  GkmClass out;
  out.rs = xi.rs;
  out.d = d;
  for (const auto& [x, f] : xi.entries) {
    Frac g = f;
    for (const auto& alpha : rs.positive_roots)
      g = g.times_char(act_char(rs, x, AffineChar{alpha, d}));
    out.set(x, std::move(g));
  }
  if (!membership(out).ok) throw InvariantPanic("upsilon output fails membership");
  if (!is_triv_class(out)) throw InvariantPanic("upsilon output not trivial-isotypic");
  return out;
}

GkmClass upsilon_inverse(const GkmClass& xi) {
  const RootSystem& rs = *xi.rs;
  if (!is_triv_class(xi)) throw IsotypicError("upsilon_inverse input is not trivial-isotypic");
  GkmClass out;
  out.rs = xi.rs;
  out.d = xi.d + 1;
  for (const auto& [x, f] : xi.entries) {
    Frac g = f;
    for (const auto& alpha : rs.positive_roots)
      g = g.divided_by_char(act_char(rs, x, AffineChar{alpha, xi.d}));
    out.set(x, std::move(g));
  }
  if (!membership(out).ok) throw InvariantPanic("upsilon_inverse output fails membership");
  if (!is_sign_class(out)) throw InvariantPanic("upsilon_inverse output not sign-isotypic");
  return out;
}

namespace {

// N_d in delta coordinates: R^+ - r delta (1 <= r <= d) and R^- - r delta
// (0 <= r <= d-1).
std::vector<AffineChar> lowering_set(const RootSystem& rs, int d) {
  std::vector<AffineChar> out;
  for (const auto& alpha : rs.positive_roots) {
    for (long r = 1; r <= d; ++r) out.push_back({alpha, -r});
    VecI neg = alpha;
    for (auto& c : neg) c = -c;
    for (long r = 0; r <= d - 1; ++r) out.push_back({neg, -r});
  }
  return out;
}

bool positive_affine(const AffineChar& a) {
  if (a.k != 0) return a.k > 0;
  for (long c : a.lam)
    if (c != 0) return c > 0;
  return false;
}

}  // namespace

std::vector<AffineChar> cell_weights(const RootSystem& rs, const AffineWeyl& x, int d) {
  std::vector<AffineChar> out;
  for (const auto& n : lowering_set(rs, d)) {
    AffineChar im = act_char(rs, x, n);
    if (positive_affine(im)) out.push_back(im);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The affine-root action of the wall-crossing picture: x = w t^mu sends
// gamma + k delta to w(gamma) + (k - <gamma,mu>) delta.  (The character twist
// used for tangent weights is its delta-conjugate.)
static AffineChar act_affine_root(const RootSystem& rs, const AffineWeyl& x,
                                  const AffineChar& a) {
  AffineChar out;
  out.k = a.k - rs.pairing(a.lam, x.mu);
  out.lam = x.w.apply_root(a.lam);
  return out;
}

bool swap_condition(const RootSystem& rs, const AffineWeyl& x, int i, int d) {
  AffineChar a = simple_affine_root(rs, i);
  for (const auto& n : lowering_set(rs, d))
    if (act_affine_root(rs, x, n) == a) return false;
  return true;
}

Frac fundamental_class_diagonal(const RootSystem& rs, const AffineWeyl& w, int d) {
  return Frac::inverse_of_char_product(cell_weights(rs, w, d));
}

// ---------------------------------------------------------------------------
// randomized relation verification

namespace {

struct BallElem {
  AffineWeyl x;
  std::vector<int> word;  // in the left-action generators 0..r
};

std::vector<BallElem> ball_with_words(const RootSystem& rs, long radius) {
  // Words are in the left-action generator set (the affine one is
  // t^{-theta_vee} s_theta); the BFS length cap is padded so every element of
  // the ball is reached even though that generator crosses several walls.
  std::vector<BallElem> out;
  std::set<AffineWeyl> seen;
  std::deque<BallElem> q;
  BallElem e{affine_identity(rs), {}};
  seen.insert(e.x);
  q.push_back(e);
  long cap = radius + 2 * rs.coxeter_number;
  while (!q.empty()) {
    BallElem b = q.front();
    q.pop_front();
    if (length(rs, b.x) <= radius) out.push_back(b);
    for (int i = 0; i <= rs.rank; ++i) {
      BallElem nb;
      nb.x = multiply(rs, b.x, cs_generator_element(rs, i));
      if (length(rs, nb.x) > cap || seen.count(nb.x)) continue;
      seen.insert(nb.x);
      nb.word = b.word;
      nb.word.push_back(i);
      q.push_back(nb);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BallElem& a, const BallElem& b) { return a.x < b.x; });
  return out;
}

GkmClass random_valid_class(const RootSystem& rs, int d, Prng& rng, int word_length,
                            long ball_radius) {
  // Seed indicator inside a small ball, then a random generator word; the
  // image stays in the localization image by construction.
  AffineWeyl x = affine_identity(rs);
  long seed_len = rng.below(ball_radius + 1);
  for (long i = 0; i < seed_len; ++i)
    x = multiply(rs, x, standard_generator(rs, static_cast<int>(rng.below(rs.rank + 1))));
  GkmClass xi = GkmClass::indicator(rs, d, x);
  long ops = rng.below(word_length + 1);
  for (long i = 0; i < ops; ++i) {
    switch (rng.below(3)) {
      case 0:
        xi = cs_apply_reflection(xi, static_cast<int>(rng.below(rs.rank + 1)));
        break;
      case 1: {
        int g = static_cast<int>(rng.below(rs.rank + 1));
        xi = ecm_apply_weyl(xi, standard_generator(rs, g));
        break;
      }
      default: {
        VecI mu(rs.rank, 0);
        mu[rng.below(rs.rank)] = rng.below(2) ? 1 : -1;
        xi = ecm_apply_weyl(xi, translation(rs, mu));
        break;
      }
    }
  }
  return xi;
}

using CheckFn = std::function<std::string(const GkmClass&)>;

VecI mu_char(const RootSystem& rs) {
  VecI v(rs.rank, 0);
  v[0] = 1;
  return v;
}

}  // namespace

Report verify_relations(const RootSystem& rs, int d, const VerifyConfig& cfg) {
  Report rep;
  rep.command = "relations";
  rep.system = system_name(rs);
  rep.d = d;
  rep.seed = cfg.seed;
  rep.samples = cfg.samples;
  rep.ball = cfg.ball_radius;

  std::vector<GkmClass> samples(cfg.samples);
  par::for_each(samples.size(), cfg.mode, [&](std::size_t t) {
    Prng rng = Prng::for_sample(cfg.seed, t);
    samples[t] = random_valid_class(rs, d, rng, cfg.word_length, cfg.ball_radius);
  });

  std::vector<AffineChar> weights;
  for (int j = 0; j < rs.rank; ++j) {
    AffineChar a{VecI(rs.rank, 0), 0};
    a.lam[j] = 1;
    weights.push_back(a);
  }
  weights.push_back(AffineChar{VecI(rs.rank, 0), 1});  // hbar

  auto run_check = [&](const std::string& name, const CheckFn& fn) {
    Check c;
    c.name = name;
    c.samples = static_cast<long>(samples.size());
    std::vector<std::string> fail(samples.size());
    par::for_each(samples.size(), cfg.mode,
                  [&](std::size_t t) { fail[t] = fn(samples[t]); });
    for (std::size_t t = 0; t < samples.size(); ++t)
      if (!fail[t].empty()) {
        c.pass = false;
        c.witness = "sample " + std::to_string(t) + ": " + fail[t];
        break;
      }
    rep.add(std::move(c));
  };

  run_check("cs_involution", [&](const GkmClass& xi) -> std::string {
    for (int i = 0; i <= rs.rank; ++i)
      if (!(cs_apply_reflection(cs_apply_reflection(xi, i), i) == xi))
        return "s_" + std::to_string(i) + "^2 != 1 on " + xi.str();
    return "";
  });

  run_check("cs_braid", [&](const GkmClass& xi) -> std::string {
    for (int i = 0; i <= rs.rank; ++i)
      for (int j = i + 1; j <= rs.rank; ++j) {
        int m = rs.coxeter_m(i, j);
        if (m == 0) continue;  // infinite order, nothing to check
        std::vector<int> w1, w2;
        for (int t = 0; t < m; ++t) {
          w1.push_back(t % 2 ? j : i);
          w2.push_back(t % 2 ? i : j);
        }
        if (!(cs_apply_word(xi, w1) == cs_apply_word(xi, w2)))
          return "braid (" + std::to_string(i) + "," + std::to_string(j) + ") m=" +
                 std::to_string(m);
      }
    return "";
  });

  run_check("cs_cross_relation", [&](const GkmClass& xi) -> std::string {
    for (int i = 0; i <= rs.rank; ++i) {
      AffineWeyl s = cs_generator_element(rs, i);
      VecI kappa = cs_generator_coroot(rs, i);
      for (const auto& lam : weights) {
        GkmClass lhs = cs_apply_reflection(cs_apply_weight(xi, lam), i);
        AffineChar slam = act_char(rs, s, lam);
        GkmClass rhs1 = cs_apply_weight(cs_apply_reflection(xi, i), slam);
        long pair = rs.pairing(lam.lam, kappa);
        GkmClass rhs2 =
            cs_apply_weight(xi, AffineChar{VecI(rs.rank, 0), 1}).scaled(Rat(d) * pair);
        if (!(lhs == rhs1 + rhs2))
          return "cross-relation s_" + std::to_string(i) + " failed";
      }
    }
    return "";
  });

  run_check("cs_weight_commute", [&](const GkmClass& xi) -> std::string {
    for (std::size_t a = 0; a < weights.size(); ++a)
      for (std::size_t b = a + 1; b < weights.size(); ++b)
        if (!(cs_apply_weight(cs_apply_weight(xi, weights[a]), weights[b]) ==
              cs_apply_weight(cs_apply_weight(xi, weights[b]), weights[a])))
          return "weight operators do not commute";
    return "";
  });

  run_check("pi_identity", [&](const GkmClass& xi) -> std::string {
    if (!(cs_apply_pi(xi, affine_identity(rs)) == xi)) return "pi = e acts nontrivially";
    return "";
  });

  run_check("ecm_group_action", [&](const GkmClass& xi) -> std::string {
    std::vector<AffineWeyl> els;
    for (int i = 0; i <= rs.rank; ++i) els.push_back(standard_generator(rs, i));
    els.push_back(translation(rs, VecI(rs.rank, 1)));
    for (const auto& y : els)
      for (const auto& z : els) {
        GkmClass lhs = ecm_apply_weyl(ecm_apply_weyl(xi, y), z);
        GkmClass rhs = ecm_apply_weyl(xi, multiply(rs, y, z));
        if (!(lhs == rhs)) return "(xi.y).z != xi.(yz)";
      }
    return "";
  });

  run_check("ecm_cross_relation", [&](const GkmClass& xi) -> std::string {
    std::vector<AffineWeyl> els;
    for (int i = 0; i <= rs.rank; ++i) els.push_back(standard_generator(rs, i));
    VecI mu(rs.rank, 0);
    mu[0] = 1;
    els.push_back(translation(rs, mu));
    for (const auto& g : els)
      for (const auto& lam : weights) {
        GkmClass lhs = ecm_apply_weight(ecm_apply_weyl(xi, g), lam);
        GkmClass rhs = ecm_apply_weyl(ecm_apply_weight(xi, act_char(rs, g, lam)), g);
        if (!(lhs == rhs)) return "right cross-relation failed";
      }
    return "";
  });

  run_check("cs_ecm_commutation", [&](const GkmClass& xi) -> std::string {
    std::vector<AffineWeyl> els;
    for (int i = 0; i <= rs.rank; ++i) els.push_back(standard_generator(rs, i));
    VecI mu(rs.rank, 0);
    mu[rs.rank - 1] = -1;
    els.push_back(translation(rs, mu));
    for (int i = 0; i <= rs.rank; ++i)
      for (const auto& g : els)
        if (!(cs_apply_reflection(ecm_apply_weyl(xi, g), i) ==
              ecm_apply_weyl(cs_apply_reflection(xi, i), g)))
          return "CS s_" + std::to_string(i) + " does not commute with ECM";
    for (const auto& lam : weights)
      for (const auto& g : els)
        if (!(cs_apply_weight(ecm_apply_weyl(xi, g), lam) ==
              ecm_apply_weyl(cs_apply_weight(xi, lam), g)))
          return "CS weight does not commute with ECM";
    return "";
  });

  run_check("membership_closure", [&](const GkmClass& xi) -> std::string {
    if (auto r = membership(xi); !r.ok) return "sample invalid: " + r.violation;
    for (int i = 0; i <= rs.rank; ++i) {
      if (auto r = membership(cs_apply_reflection(xi, i)); !r.ok)
        return "cs image invalid: " + r.violation;
      if (auto r = membership(ecm_apply_weyl(xi, standard_generator(rs, i))); !r.ok)
        return "ecm image invalid: " + r.violation;
    }
    VecI mu(rs.rank, 0);
    mu[0] = 1;
    if (auto r = membership(ecm_apply_weyl(xi, translation(rs, mu))); !r.ok)
      return "ecm translation image invalid: " + r.violation;
    if (auto r = membership(cs_apply_weight(xi, AffineChar{mu_char(rs), 1})); !r.ok)
      return "weight image invalid: " + r.violation;
    return "";
  });

  return rep;
}

Report verify_regular_bimodule_d0(const RootSystem& rs, long ball_radius,
                                  par::Mode mode) {
  Report rep;
  rep.command = "regular-bimodule-d0";
  rep.system = system_name(rs);
  rep.d = 0;
  rep.ball = ball_radius;

  auto ball = ball_with_words(rs, ball_radius);
  Check c;
  c.name = "regular_bimodule_d0";
  c.samples = static_cast<long>(ball.size() * ball.size());
  std::vector<std::string> fail(ball.size());
  par::for_each(ball.size(), mode, [&](std::size_t a) {
    const auto& xb = ball[a];
    std::vector<int> word = xb.word;
    GkmClass left = cs_apply_word(GkmClass::indicator(rs, 0, affine_identity(rs)), word);
    for (const auto& yb : ball) {
      GkmClass both = ecm_apply_weyl(left, yb.x);
      AffineWeyl expect =
          inverse(rs, multiply(rs, xb.x, yb.x));  // (xy)^{-1} = y^{-1} x^{-1}
      if (!(both == GkmClass::indicator(rs, 0, expect))) {
        fail[a] = "x=" + to_string(rs, xb.x) + " y=" + to_string(rs, yb.x);
        return;
      }
    }
  });
  for (const auto& f : fail)
    if (!f.empty()) {
      c.pass = false;
      c.witness = f;
      break;
    }
  rep.add(std::move(c));
  return rep;
}

}  // namespace gkmcher
