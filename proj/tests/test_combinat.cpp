#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkmcher/combinat.hpp"

using namespace gkmcher;

TEST_CASE("alcove ideal cardinalities match (dh+1)^rank") {
  struct Row {
    CartanType t;
    int rank;
    int d;
    std::size_t expect;
  };
  for (const Row& row : {Row{CartanType::A, 1, 1, 3}, Row{CartanType::A, 1, 2, 5},
                         Row{CartanType::A, 2, 1, 16}, Row{CartanType::B, 2, 1, 25},
                         Row{CartanType::G, 2, 1, 49}, Row{CartanType::A, 1, 3, 7},
                         Row{CartanType::A, 2, 2, 49}, Row{CartanType::B, 2, 2, 81},
                         Row{CartanType::C, 2, 1, 25}, Row{CartanType::A, 3, 1, 125}}) {
    auto rs = build_root_system(row.t, row.rank);
    auto ideal = alcove_ideal(rs, row.d);
    INFO(system_name(rs), " d=", row.d);
    CHECK(ideal.elements.size() == row.expect);
    CHECK(ideal.expected_count == row.expect);
  }
  // d=0: only the fundamental alcove
  auto rs = build_root_system(CartanType::B, 2);
  CHECK(alcove_ideal(rs, 0).elements.size() == 1);
}

TEST_CASE("alcove ideal is closed downward") {
  for (auto [t, r] : {std::pair{CartanType::A, 2}, {CartanType::B, 2}}) {
    auto rs = build_root_system(t, r);
    for (int d = 1; d <= 2; ++d) {
      auto ideal = alcove_ideal(rs, d);
      for (const auto& x : ideal.elements)
        for (int i = 0; i <= rs.rank; ++i) {
          AffineWeyl y = multiply(rs, x, standard_generator(rs, i));
          if (length(rs, y) < length(rs, x)) CHECK(ideal.contains(rs, y));
        }
    }
  }
}

TEST_CASE("ideal membership matches the profile bounds") {
  auto rs = build_root_system(CartanType::A, 2);
  auto ideal = alcove_ideal(rs, 1);
  for (const auto& x : length_ball(rs, 5)) {
    bool in = true;
    for (int i = 0; i < rs.rank; ++i) {
      VecI ei(rs.rank, 0);
      ei[i] = 1;
      if (alcove_floor(rs, x, rs.find_positive_root(ei)) < -1) in = false;
    }
    if (alcove_floor(rs, x, rs.highest_root_index) > 1) in = false;
    CHECK(ideal.contains(rs, x) == in);
  }
}

TEST_CASE("equivalence classes: A1 exact structure") {
  auto rs = build_root_system(CartanType::A, 1);
  auto sum = equivalence_classes(rs, 1, 10, par::Mode::serial);
  INFO(sum.witness);
  CHECK(sum.every_visible_class_meets_ideal);
  CHECK(sum.visible_class_count <= 3);
  CHECK(sum.visible_class_count == 3);  // observed equality at rank 1
  CHECK(sum.observed_equality);

  auto sum2 = equivalence_classes(rs, 2, 10, par::Mode::serial);
  INFO(sum2.witness);
  CHECK(sum2.every_visible_class_meets_ideal);
  CHECK(sum2.visible_class_count <= 5);
  CHECK(sum2.observed_equality);
}

TEST_CASE("equivalence classes: d=0 collapses to one visible class") {
  for (auto [t, r] : {std::pair{CartanType::A, 1}, {CartanType::A, 2}}) {
    auto rs = build_root_system(t, r);
    auto sum = equivalence_classes(rs, 0, 6, par::Mode::serial);
    CHECK(sum.visible_class_count == 1);
    CHECK(sum.every_visible_class_meets_ideal);
  }
}

TEST_CASE("equivalence classes: A2 bound") {
  auto rs = build_root_system(CartanType::A, 2);
  auto sum = equivalence_classes(rs, 1, 8, par::Mode::serial);
  INFO(sum.witness);
  CHECK(sum.every_visible_class_meets_ideal);
  CHECK(sum.visible_class_count <= 16);
}

TEST_CASE("permutation module character") {
  // A1, d=1: dim 3, chi(e)=3, chi(s)=1, invariants 2
  auto rs = build_root_system(CartanType::A, 1);
  auto pc = perm_module_character(rs, 1, par::Mode::serial);
  CHECK(pc.modulus == 3);
  CHECK(pc.dimension == 3);
  CHECK(pc.invariants == 2);
  CHECK(pc.orbit_count == 2);
  REQUIRE(pc.rows.size() == 2);
  long chi_e = -1, chi_s = -1;
  for (const auto& row : pc.rows)
    (row.rep_word.empty() ? chi_e : chi_s) = row.fixed_points;
  CHECK(chi_e == 3);
  CHECK(chi_s == 1);

  // d=0: trivial module
  auto pc0 = perm_module_character(rs, 0, par::Mode::serial);
  CHECK(pc0.dimension == 1);
  CHECK(pc0.invariants == 1);

  // A2, d=1: dim 16, invariants = S3-orbit count on (Z/4)^2
  auto a2 = build_root_system(CartanType::A, 2);
  auto pca = perm_module_character(a2, 1, par::Mode::serial);
  CHECK(pca.modulus == 4);
  CHECK(pca.dimension == 16);
  CHECK(pca.invariants == pca.orbit_count);
  CHECK(pca.sign_multiplicity == pca.sign_orbit_count);

  // Burnside == orbit count across rank <= 2, d <= 2
  for (auto [t, r] : {std::pair{CartanType::A, 1}, {CartanType::A, 2},
                      {CartanType::B, 2}, {CartanType::G, 2}})
    for (int d = 0; d <= 2; ++d) {
      auto sys = build_root_system(t, r);
      auto p = perm_module_character(sys, d, par::Mode::serial);
      INFO(system_name(sys), " d=", d);
      CHECK(p.invariants == p.orbit_count);
      CHECK(p.sign_multiplicity == p.sign_orbit_count);
      CHECK(p.dimension ==
            static_cast<long>(std::pow(double(p.modulus), double(sys.rank)) + 0.5));
      long total = 0;
      for (const auto& row : p.rows) total += static_cast<long>(row.class_size);
      CHECK(total == static_cast<long>(sys.weyl_order()));
    }
}

TEST_CASE("emission formats") {
  auto rs = build_root_system(CartanType::A, 1);
  auto ideal = alcove_ideal(rs, 1);
  std::string csv = alcove_ideal_csv(rs, ideal);
  CHECK(csv.find("element") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
  auto pc = perm_module_character(rs, 1, par::Mode::serial);
  std::string j = character_json(pc);
  CHECK(j.find("\"dim\":3") != std::string::npos);
  CHECK(j.find("\"invariants\":2") != std::string::npos);
}
