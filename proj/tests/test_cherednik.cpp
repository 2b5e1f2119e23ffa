#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkmcher/cherednik.hpp"

using namespace gkmcher;

namespace {

Poly hbar_poly(const Rat& c) { return Poly::variable(kHbarVar).scaled(c); }

}  // namespace

TEST_CASE("geometric-sum division") {
  auto rs = build_root_system(CartanType::A, 1);
  VecI av = {1};  // alpha_vee
  // (1 - e^{-k a_vee})/(1 - e^{-a_vee}) = sum_{j<k} e^{-j a_vee}
  for (long k = 1; k <= 4; ++k) {
    LaurentElem num = LaurentElem::exponent({0}) - LaurentElem::exponent({-k});
    LaurentElem q = divide_geometric(rs, num, av);
    LaurentElem expect;
    for (long j = 0; j < k; ++j)
      expect = expect + LaurentElem::exponent({-j});
    CHECK(q == expect);
  }
}

TEST_CASE("trigonometric Dunkl operator values (A1)") {
  auto rs = build_root_system(CartanType::A, 1);
  Rat c(3, 5);
  auto params = CherednikParams::constant(rs, c);
  VecI y = {1};  // direction alpha

  // D_y(1) = hbar <y, rho_c_vee> = hbar c
  LaurentElem one = LaurentElem::exponent({0});
  CHECK(trig_dunkl(rs, y, one, params) == one.scaled_by(hbar_poly(c)));

  // c = 0 reduces to the derivative
  auto zero = CherednikParams::constant(rs, Rat(0));
  LaurentElem em = LaurentElem::exponent({3});
  CHECK(trig_dunkl(rs, y, em, zero) == em.scaled_by(hbar_poly(6)));  // <alpha,3a_vee>=6

  // f = e^{a_vee}: independent geometric-sum oracle
  // D_y(e_1) = hbar[2 e_1 - 2c(e_1 + e_0) + c e_1]
  LaurentElem e1 = LaurentElem::exponent({1});
  LaurentElem expect = e1.scaled_by(hbar_poly(2 + c)) +
                       (-(e1 + LaurentElem::exponent({0})).scaled_by(hbar_poly(2 * c)));
  CHECK(trig_dunkl(rs, y, e1, params) == expect);
}

TEST_CASE("rational Dunkl operator (A1 spot values)") {
  auto rs = build_root_system(CartanType::A, 1);
  Rat c(2, 7);
  auto params = CherednikParams::constant(rs, c);
  VecI y = {1};

  // c=0: partial derivative, d_y U = <y, a_vee> = 2
  auto zero = CherednikParams::constant(rs, Rat(0));
  Poly U = Poly::variable(0);
  CHECK(rational_dunkl(rs, y, U, zero) ==
        Poly::constant(2) * Poly::variable(kHbarVar));
  // D_y(U^2) = hbar(4U - 4cU): (1-s)U^2 = 0, derivative 4U, reflection term
  // -c<y,a_vee>(U^2 - U^2)/U = 0
  CHECK(rational_dunkl(rs, y, U * U, params) ==
        (U.scaled(4) * Poly::variable(kHbarVar)));
  // D_y(U) = hbar(2 - 2c * (U-(-U))/U) = hbar(2 - 4c)
  CHECK(rational_dunkl(rs, y, U, params) ==
        Poly::constant(2 - 4 * c) * Poly::variable(kHbarVar));
}

TEST_CASE("rational relation suite (A1, A2, B2)") {
  for (auto [t, r] : {std::pair{CartanType::A, 1}, {CartanType::A, 2},
                      {CartanType::B, 2}}) {
    auto rs = build_root_system(t, r);
    RelationConfig cfg;
    cfg.bound = 4;
    cfg.mode = par::Mode::serial;
    // generic rational c, distinct per length class
    CherednikParams params;
    params.c_by_class.assign(rs.num_root_classes, Rat(0));
    for (int i = 0; i < rs.num_root_classes; ++i) params.c_by_class[i] = rat(2 + i, 3);
    Report rep = check_algebra_relations(rs, Flavor::rational, params, 0, cfg);
    INFO(rep.json());
    CHECK(rep.all_pass());
    // integer parameter too
    Report rep1 = check_algebra_relations(rs, Flavor::rational,
                                          CherednikParams::constant(rs, Rat(1)), 0, cfg);
    CHECK(rep1.all_pass());
  }
}

TEST_CASE("trigonometric relation suite (A1, A2, B2)") {
  for (auto [t, r] : {std::pair{CartanType::A, 1}, {CartanType::A, 2},
                      {CartanType::B, 2}}) {
    auto rs = build_root_system(t, r);
    RelationConfig cfg;
    cfg.bound = r == 1 ? 3 : 1;
    cfg.mode = par::Mode::serial;
    CherednikParams params;
    params.c_by_class.assign(rs.num_root_classes, Rat(0));
    for (int i = 0; i < rs.num_root_classes; ++i) params.c_by_class[i] = rat(3 + 2 * i, 5);
    Report rep = check_algebra_relations(rs, Flavor::trigonometric, params, 0, cfg);
    INFO(rep.json());
    CHECK(rep.all_pass());
    // specialization coherence: the constant integer parameter c = d satisfies
    // the same relation set that the localized model verifies at level d
    for (int d = 1; d <= 2; ++d) {
      Report repd = check_algebra_relations(rs, Flavor::trigonometric,
                                            CherednikParams::constant(rs, Rat(d)), d, cfg);
      CHECK(repd.all_pass());
    }
  }
}

TEST_CASE("GKM flavors delegate to the localized model") {
  auto rs = build_root_system(CartanType::A, 1);
  RelationConfig cfg;
  cfg.bound = 2;
  cfg.samples = 8;
  cfg.mode = par::Mode::serial;
  Report rep = check_algebra_relations(rs, Flavor::cs_on_gkm,
                                       CherednikParams::constant(rs, Rat(1)), 1, cfg);
  CHECK(rep.all_pass());
  CHECK(rep.command == "relations-cs-gkm");
}

TEST_CASE("truncated comparison of the two flavors") {
  // c = 0: difference identically zero
  {
    auto rs = build_root_system(CartanType::A, 1);
    Report rep = compare_dunkl_truncated(rs, {1}, 6, CherednikParams::constant(rs, Rat(0)),
                                         par::Mode::serial);
    INFO(rep.json());
    CHECK(rep.all_pass());
  }
  // generic c, A1 at order 6; A2 and B2 at order 4
  {
    auto rs = build_root_system(CartanType::A, 1);
    Report rep = compare_dunkl_truncated(rs, {1}, 6,
                                         CherednikParams::constant(rs, rat(3, 5)),
                                         par::Mode::serial);
    INFO(rep.json());
    CHECK(rep.all_pass());
  }
  for (auto t : {CartanType::A, CartanType::B}) {
    auto rs = build_root_system(t, 2);
    CherednikParams params;
    params.c_by_class.assign(rs.num_root_classes, Rat(0));
    for (int i = 0; i < rs.num_root_classes; ++i) params.c_by_class[i] = rat(1 + i, 2);
    Report rep = compare_dunkl_truncated(rs, {1, 1}, 4, params, par::Mode::serial);
    INFO(rep.json());
    CHECK(rep.all_pass());
  }
  // order cap enforced
  auto rs = build_root_system(CartanType::A, 1);
  CHECK_THROWS_AS(compare_dunkl_truncated(rs, {1}, 13,
                                          CherednikParams::constant(rs, Rat(1)),
                                          par::Mode::serial),
                  UsageError);
}
