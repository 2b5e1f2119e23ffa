#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "gkmcher/root_system.hpp"

using namespace gkmcher;

namespace {

// Independent Coxeter-number oracle: h = |R| / rank with |R| counted from the
// enumerated root list.
int h_oracle(const RootSystem& rs) {
  return static_cast<int>(2 * rs.positive_roots.size() / rs.rank);
}

std::vector<std::pair<CartanType, int>> supported() {
  return {{CartanType::A, 1}, {CartanType::A, 2}, {CartanType::A, 3},
          {CartanType::A, 4}, {CartanType::B, 2}, {CartanType::B, 3},
          {CartanType::C, 2}, {CartanType::C, 3}, {CartanType::D, 3},
          {CartanType::D, 4}, {CartanType::G, 2}};
}

}  // namespace

TEST_CASE("root counts and Coxeter numbers") {
  auto a1 = build_root_system(CartanType::A, 1);
  CHECK(a1.positive_roots.size() == 1);
  CHECK(a1.coxeter_number == 2);

  auto a2 = build_root_system(CartanType::A, 2);
  CHECK(a2.positive_roots.size() == 3);
  CHECK(a2.coxeter_number == h_oracle(a2));
  CHECK(a2.coxeter_number == 3);

  auto b2 = build_root_system(CartanType::B, 2);
  CHECK(b2.coxeter_number == 4);
  CHECK(b2.positive_roots.size() == 4);

  auto g2 = build_root_system(CartanType::G, 2);
  CHECK(g2.positive_roots.size() == 6);
  CHECK(g2.coxeter_number == h_oracle(g2));
  CHECK(g2.coxeter_number == 6);

  for (auto [t, r] : supported()) {
    auto rs = build_root_system(t, r);
    CHECK(rs.coxeter_number == h_oracle(rs));
    CHECK(2 * rs.positive_roots.size() == std::size_t(rs.rank) * rs.coxeter_number);
  }
}

TEST_CASE("unsupported configurations are rejected") {
  CHECK_THROWS_AS(build_root_system(CartanType::G, 3), ConfigError);
  CHECK_THROWS_AS(build_root_system(CartanType::B, 1), ConfigError);
  CHECK_THROWS_AS(build_root_system(CartanType::D, 2), ConfigError);
  CHECK_THROWS_AS(build_root_system(CartanType::A, 7), ConfigError);
  CHECK_THROWS_AS(cartan_type_from_char('E'), ConfigError);
}

TEST_CASE("positive roots are nonnegative combinations and pairings match Cartan") {
  for (auto [t, r] : supported()) {
    auto rs = build_root_system(t, r);
    for (const auto& root : rs.positive_roots)
      for (long c : root) CHECK(c >= 0);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        VecI ei(rs.rank, 0), ej(rs.rank, 0);
        ei[i] = 1;
        ej[j] = 1;
        CHECK(rs.pairing(ei, ej) == rs.cartan[i][j]);
      }
    // <beta, beta^vee> = 2 for every root.
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
      CHECK(rs.pairing(rs.positive_roots[k], rs.positive_coroots[k]) == 2);
  }
}

TEST_CASE("simple reflections permute the other positive roots") {
  for (auto [t, r] : supported()) {
    auto rs = build_root_system(t, r);
    for (int i = 0; i < rs.rank; ++i) {
      auto s = rs.simple_reflection(i);
      int flipped = 0;
      for (const auto& root : rs.positive_roots) {
        VecI im = s.apply_root(root);
        VecI neg = im;
        for (auto& x : neg) x = -x;
        if (rs.is_positive_root_vec(im)) continue;
        CHECK(rs.is_positive_root_vec(neg));
        ++flipped;
      }
      CHECK(flipped == 1);  // only alpha_i changes sign
    }
  }
}

TEST_CASE("Weyl group order matches the product formula") {
  CHECK(build_root_system(CartanType::A, 2).weyl_order() == 6);
  CHECK(build_root_system(CartanType::B, 2).weyl_order() == 8);
  CHECK(build_root_system(CartanType::G, 2).weyl_order() == 12);
  CHECK(build_root_system(CartanType::A, 3).weyl_order() == 24);
  CHECK(build_root_system(CartanType::D, 4).weyl_order() == 192);
  // signs multiply along words
  auto b2 = build_root_system(CartanType::B, 2);
  for (const auto& w : b2.weyl_elements())
    CHECK(w.sign == (w.word.size() % 2 ? -1 : 1));
}

TEST_CASE("root length classes") {
  CHECK(build_root_system(CartanType::A, 2).num_root_classes == 1);
  CHECK(build_root_system(CartanType::B, 2).num_root_classes == 2);
  CHECK(build_root_system(CartanType::C, 3).num_root_classes == 2);
  CHECK(build_root_system(CartanType::G, 2).num_root_classes == 2);
  CHECK(build_root_system(CartanType::D, 4).num_root_classes == 1);
}

TEST_CASE("highest root and dual data") {
  auto b2 = build_root_system(CartanType::B, 2);
  // theta = alpha_1 + 2 alpha_2 = e1 + e2 (long)
  CHECK(b2.highest_root == VecI{1, 2});
  CHECK(b2.highest_root_coroot == VecI{1, 1});
  CHECK(b2.min_neg_coroot == VecI{-1, -1});
  auto g2 = build_root_system(CartanType::G, 2);
  CHECK(g2.highest_root == VecI{3, 2});
  CHECK(g2.highest_root_coroot == VecI{1, 2});
}

TEST_CASE("golden JSON serialization") {
  for (std::string name : {"A1", "A2", "B2"}) {
    auto rs = build_root_system(cartan_type_from_char(name[0]), name[1] - '0');
    std::ifstream in(std::string(GOLDEN_DIR) + "/rootsys_" + name + ".json");
    REQUIRE(in.good());
    std::string expected((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    while (!expected.empty() && (expected.back() == '\n' || expected.back() == ' '))
      expected.pop_back();
    CHECK(rs.json() == expected);
  }
}
