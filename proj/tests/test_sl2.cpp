#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gkmcher/prng.hpp"
#include "gkmcher/sl2.hpp"

using namespace gkmcher;

namespace {

AffineChar ch(long a, long k) {
  AffineChar c;
  c.lam = {a};
  c.k = k;
  return c;
}

Frac inv(std::initializer_list<AffineChar> chars) {
  return Frac::inverse_of_char_product(std::vector<AffineChar>(chars));
}

GkmClass resum(const RootSystem& rs, int d, const std::map<BasisLabel, Poly>& coeffs) {
  GkmClass acc;
  acc.rs = &rs;
  acc.d = d;
  for (const auto& [label, c] : coeffs) {
    GkmClass b = sl2_basis_element(rs, d, label);
    for (const auto& [x, f] : b.entries) acc.set(x, acc.at(x) + f * Frac::from_poly(c));
  }
  return acc;
}

GkmClass random_class(const RootSystem& rs, int d, Prng& rng, int ops) {
  GkmClass xi = GkmClass::indicator(
      rs, d, sl2_element_of(rs, static_cast<long>(rng.below(7)) - 3));
  for (int i = 0; i < ops; ++i) {
    switch (rng.below(4)) {
      case 0:
        xi = cs_apply_reflection(xi, static_cast<int>(rng.below(2)));
        break;
      case 1:
        xi = ecm_apply_weyl(xi, standard_generator(rs, static_cast<int>(rng.below(2))));
        break;
      case 2:
        xi = ecm_apply_weyl(xi, translation(rs, {rng.below(2) ? 1 : -1}));
        break;
      default:
        xi = xi + GkmClass::indicator(
                      rs, d, sl2_element_of(rs, static_cast<long>(rng.below(5)) - 2));
    }
  }
  return xi;
}

}  // namespace

TEST_CASE("index bijection") {
  auto rs = build_root_system(CartanType::A, 1);
  for (long ell = -9; ell <= 9; ++ell)
    CHECK(sl2_index_of(rs, sl2_element_of(rs, ell)) == ell);
  CHECK(sl2_element_of(rs, 0) == affine_identity(rs));
  CHECK(sl2_element_of(rs, 1) == from_weyl(rs, rs.simple_reflection(0)));
  CHECK(sl2_element_of(rs, 2) == translation(rs, {1}));
}

TEST_CASE("admissibility and leading indices") {
  CHECK(label_admissible(0, {0, 5}));   // r = d = 0: any k
  CHECK(label_admissible(2, {2, -4}));  // r = d
  CHECK(label_admissible(2, {1, 0}));
  CHECK(label_admissible(2, {1, 1}));
  CHECK(label_admissible(2, {0, 0}));
  CHECK(!label_admissible(2, {0, 1}));  // dropped: b01 = b00 - y b10
  CHECK(!label_admissible(2, {1, 2}));
  CHECK(!label_admissible(1, {2, 0}));  // r > d

  // the leading-index map is injective over admissible labels and covers a
  // window of Z without gaps
  for (int d = 1; d <= 3; ++d) {
    std::set<long> seen;
    std::vector<BasisLabel> labels;
    for (long k = -8; k <= 8; ++k) labels.push_back({d, k});
    labels.push_back({0, 0});
    for (int r = 1; r < d; ++r) {
      labels.push_back({r, 0});
      labels.push_back({r, 1});
    }
    for (const auto& l : labels) {
      REQUIRE(label_admissible(d, l));
      CHECK(seen.insert(leading_index(l)).second);
    }
    for (long ell = -8 + 2 * d; ell <= 8; ++ell) CHECK(seen.count(ell));
  }
}

TEST_CASE("explicit basis entries") {
  auto rs = build_root_system(CartanType::A, 1);
  // b^0_5 at d=0 is the indicator at index 5
  CHECK(sl2_basis_element(rs, 0, {0, 5}) ==
        GkmClass::indicator(rs, 0, sl2_element_of(rs, 5)));
  // b^1_0 = {1/y, -1/y}
  GkmClass b10 = sl2_basis_element(rs, 1, {1, 0});
  CHECK(b10.at(sl2_element_of(rs, 0)) == inv({ch(1, 0)}));
  CHECK(b10.at(sl2_element_of(rs, 1)) == -inv({ch(1, 0)}));
  CHECK(b10.entries.size() == 2);
  CHECK(is_sign_class(b10));

  // b^2_0: +-1/(y(y+h)) at 0,1 and -+1/((y+h)(y+2h)) at 2,3
  GkmClass b20 = sl2_basis_element(rs, 2, {2, 0});
  CHECK(b20.at(sl2_element_of(rs, 0)) == inv({ch(1, 0), ch(1, 1)}));
  CHECK(b20.at(sl2_element_of(rs, 1)) == -inv({ch(1, 0), ch(1, 1)}));
  CHECK(b20.at(sl2_element_of(rs, 2)) == -inv({ch(1, 1), ch(1, 2)}));
  CHECK(b20.at(sl2_element_of(rs, 3)) == inv({ch(1, 1), ch(1, 2)}));
  CHECK(b20.entries.size() == 4);

  // the dependence that forced dropping the label (0,1)
  GkmClass lhs = ecm_apply_weight(b10, ch(1, 0));  // y * b^1_0
  GkmClass rhs = GkmClass::indicator(rs, 1, sl2_element_of(rs, 0)) +
                 (-GkmClass::indicator(rs, 1, sl2_element_of(rs, 1)));
  CHECK(lhs == rhs);

  // inadmissible labels are rejected
  CHECK_THROWS_AS(sl2_basis_element(rs, 2, {0, 1}), UsageError);
  CHECK_THROWS_AS(sl2_basis_element(rs, 1, {3, 0}), UsageError);
}

TEST_CASE("every admissible element passes membership (d <= 3, |k| <= 6)") {
  auto rs = build_root_system(CartanType::A, 1);
  for (int d = 1; d <= 3; ++d) {
    std::vector<BasisLabel> labels{{0, 0}};
    for (int r = 1; r < d; ++r) {
      labels.push_back({r, 0});
      labels.push_back({r, 1});
    }
    for (long k = -6; k <= 6; ++k) labels.push_back({d, k});
    for (const auto& l : labels) {
      GkmClass b = sl2_basis_element(rs, d, l);
      auto m = membership(b);
      INFO("d=", d, " r=", l.r, " k=", l.k, " : ", m.violation);
      CHECK(m.ok);
    }
  }
}

TEST_CASE("expansion: unit vectors and round trips") {
  auto rs = build_root_system(CartanType::A, 1);
  // expand(b^r_k) is the single label with coefficient 1
  for (int d = 1; d <= 2; ++d)
    for (const auto& l : std::vector<BasisLabel>{{d, -2}, {d, 0}, {d, 3}, {0, 0}}) {
      auto coeffs = sl2_expand(sl2_basis_element(rs, d, l));
      REQUIRE(coeffs.size() == 1);
      CHECK(coeffs.begin()->first == l);
      CHECK(coeffs.begin()->second == Poly::constant(1));
    }

  // expand(a^e) at d=1 reconstructs the indicator
  GkmClass ae = GkmClass::indicator(rs, 1, affine_identity(rs));
  auto coeffs = sl2_expand(ae);
  CHECK(resum(rs, 1, coeffs) == ae);

  // expand(s . a^e) round-trips
  GkmClass sae = cs_apply_reflection(ae, 1);
  CHECK(resum(rs, 1, sl2_expand(sae)) == sae);

  // a lone pole is rejected with the non-membership error
  GkmClass bad;
  bad.rs = &rs;
  bad.d = 1;
  bad.set(affine_identity(rs), inv({ch(1, 0)}));
  CHECK_THROWS_AS(sl2_expand(bad), Sl2ExpansionError);
}

TEST_CASE("expansion round-trips on generated classes") {
  auto rs = build_root_system(CartanType::A, 1);
  Prng rng(424242);
  int done = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int d = 1 + static_cast<int>(rng.below(3));
    GkmClass xi = random_class(rs, d, rng, 3 + static_cast<int>(rng.below(3)));
    REQUIRE(membership(xi).ok);
    auto coeffs = sl2_expand(xi);
    CHECK(resum(rs, d, coeffs) == xi);
    ++done;
  }
  CHECK(done == 60);
}

TEST_CASE("basis JSON dump") {
  auto rs = build_root_system(CartanType::A, 1);
  std::string j = sl2_basis_json(rs, 1, 0, 1);
  CHECK(j.find("\"r\":0") != std::string::npos);
  CHECK(j.find("\"r\":1") != std::string::npos);
  CHECK(j.find("\"frac\":\"1 / [y]\"") != std::string::npos);
}
