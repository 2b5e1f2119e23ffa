// Batch driver: every verification of the library as a subcommand with a
// deterministic JSON report.  Exit code 0 iff all checks pass, 1 on a failed
// check (the report is still written), 2 on a usage error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

#include "gkmcher/cherednik.hpp"
#include "gkmcher/combinat.hpp"
#include "gkmcher/gkm.hpp"
#include "gkmcher/prng.hpp"
#include "gkmcher/sl2.hpp"

using namespace gkmcher;

namespace {

struct RunConfig {
  std::string type = "A";
  int rank = 1;
  int samples = 50;
  long ball = 6;
  std::uint64_t seed = 0xC0FFEE;
  std::string out;
  std::string format = "json";
  bool serial = false;

  par::Mode mode() const { return serial ? par::Mode::serial : par::Mode::parallel; }
};

long elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

Check make_check(const std::string& name, bool pass, long samples,
                 const std::string& details, const std::string& witness = "") {
  Check c;
  c.name = name;
  c.pass = pass;
  c.samples = samples;
  c.details = details;
  c.witness = witness;
  return c;
}

Report run_relations(const RootSystem& rs, int d, const RunConfig& cfg) {
  VerifyConfig vc;
  vc.samples = cfg.samples;
  vc.seed = cfg.seed;
  vc.ball_radius = 2;
  vc.mode = cfg.mode();
  Report rep = verify_relations(rs, d, vc);
  if (d == 0) {
    Report reg = verify_regular_bimodule_d0(rs, std::min(cfg.ball, 4L), cfg.mode());
    for (auto& c : reg.checks) rep.add(c);
  }
  return rep;
}

Report run_sl2(const RootSystem& rs, int d, const RunConfig& cfg) {
  Report rep;
  rep.command = "sl2-basis";
  rep.system = system_name(rs);
  rep.d = d;
  rep.seed = cfg.seed;
  if (rs.rank != 1 || rs.type != CartanType::A)
    throw UsageError("sl2-basis requires --type A --rank 1");
  bool member_ok = true;
  long count = 0;
  std::string witness;
  std::vector<BasisLabel> labels;
  if (d >= 1) labels.push_back({0, 0});
  for (int r = 1; r < d; ++r) {
    labels.push_back({r, 0});
    labels.push_back({r, 1});
  }
  for (long k = -6; k <= 6; ++k) labels.push_back({d, k});
  for (const auto& l : labels) {
    ++count;
    auto m = membership(sl2_basis_element(rs, d, l));
    if (!m.ok) {
      member_ok = false;
      witness = "r=" + std::to_string(l.r) + ",k=" + std::to_string(l.k);
      break;
    }
  }
  rep.add(make_check("basis_membership", member_ok, count, "window |k| <= 6", witness));

  std::vector<std::string> fail(cfg.samples);
  par::for_each(fail.size(), cfg.mode(), [&](std::size_t t) {
    Prng rng = Prng::for_sample(cfg.seed, t);
    GkmClass xi = GkmClass::indicator(
        rs, d, sl2_element_of(rs, static_cast<long>(rng.below(7)) - 3));
    for (int i = 0; i < 4; ++i) {
      if (rng.below(2))
        xi = cs_apply_reflection(xi, static_cast<int>(rng.below(2)));
      else
        xi = ecm_apply_weyl(xi, standard_generator(rs, static_cast<int>(rng.below(2))));
    }
    auto coeffs = sl2_expand(xi);
    GkmClass acc;
    acc.rs = &rs;
    acc.d = d;
    for (const auto& [label, c] : coeffs) {
      GkmClass b = sl2_basis_element(rs, d, label);
      for (const auto& [x, f] : b.entries) acc.set(x, acc.at(x) + f * Frac::from_poly(c));
    }
    if (!(acc == xi)) fail[t] = "sample " + std::to_string(t);
  });
  std::string w2;
  for (const auto& f : fail)
    if (!f.empty()) {
      w2 = f;
      break;
    }
  rep.add(make_check("expand_resum_identity", w2.empty(),
                     static_cast<long>(fail.size()), "random generator words", w2));

  std::set<long> seen;
  bool tri = true;
  for (const auto& l : labels)
    if (!seen.insert(leading_index(l)).second) tri = false;
  rep.add(make_check("leading_index_injective", tri, static_cast<long>(labels.size()), ""));
  return rep;
}

Report run_upsilon(const RootSystem& rs, int d, const RunConfig& cfg) {
  Report rep;
  rep.command = "upsilon";
  rep.system = system_name(rs);
  rep.d = d;
  rep.seed = cfg.seed;
  int n = std::max(1, cfg.samples / 2);
  std::vector<std::string> fail(n);
  par::for_each(fail.size(), cfg.mode(), [&](std::size_t t) {
    Prng rng = Prng::for_sample(cfg.seed, t);
    AffineWeyl x = affine_identity(rs);
    for (int i = 0; i < 2; ++i)
      x = multiply(rs, x, standard_generator(rs, static_cast<int>(rng.below(rs.rank + 1))));
    GkmClass xi = project_isotypic(GkmClass::indicator(rs, d + 1, x), Isotypic::sign);
    if (xi.entries.empty()) return;
    try {
      GkmClass down = upsilon(xi);
      if (!is_triv_class(down) || !membership(down).ok) {
        fail[t] = "level-d image invalid";
        return;
      }
      if (!(upsilon_inverse(down) == xi)) fail[t] = "round trip broke";
    } catch (const std::exception& e) {
      fail[t] = e.what();
    }
  });
  std::string w;
  for (const auto& f : fail)
    if (!f.empty()) {
      w = f;
      break;
    }
  rep.add(make_check("upsilon_round_trip", w.empty(), n, "sign -> triv -> sign", w));
  return rep;
}

Report run_alcoves(const RootSystem& rs, int d, const RunConfig& cfg) {
  Report rep;
  rep.command = "alcoves";
  rep.system = system_name(rs);
  rep.d = d;
  rep.seed = cfg.seed;
  auto ideal = alcove_ideal(rs, d);
  rep.add(make_check("alcove_count", ideal.elements.size() == ideal.expected_count,
                     static_cast<long>(ideal.elements.size()),
                     "count=" + std::to_string(ideal.elements.size()) +
                         " expected=" + std::to_string(ideal.expected_count)));
  return rep;
}

Report run_classes(const RootSystem& rs, int d, const RunConfig& cfg) {
  Report rep;
  rep.command = "classes";
  rep.system = system_name(rs);
  rep.d = d;
  rep.seed = cfg.seed;
  rep.ball = cfg.ball;
  auto sum = equivalence_classes(rs, d, cfg.ball, cfg.mode());
  auto ideal_count = alcove_ideal(rs, d).expected_count;
  rep.add(make_check(
      "visible_classes_meet_ideal", sum.every_visible_class_meets_ideal,
      static_cast<long>(sum.ball_size),
      "visible=" + std::to_string(sum.visible_class_count) +
          " bound=" + std::to_string(ideal_count) +
          (sum.observed_equality ? " (equality observed)" : ""),
      sum.witness));
  rep.add(make_check("visible_classes_within_bound",
                     sum.visible_class_count <= ideal_count,
                     static_cast<long>(sum.visible_class_count), ""));
  return rep;
}

Report run_character(const RootSystem& rs, int d, const RunConfig& cfg) {
  Report rep;
  rep.command = "character";
  rep.system = system_name(rs);
  rep.d = d;
  rep.seed = cfg.seed;
  auto pc = perm_module_character(rs, d, cfg.mode());
  rep.add(make_check("burnside_vs_orbits",
                     pc.invariants == pc.orbit_count &&
                         pc.sign_multiplicity == pc.sign_orbit_count,
                     pc.dimension, character_json(pc)));
  return rep;
}

Report run_dunkl(const RootSystem& rs, int d, const RunConfig& cfg) {
  Report rep;
  rep.command = "dunkl";
  rep.system = system_name(rs);
  rep.d = d;
  rep.seed = cfg.seed;
  if (rs.rank > 2) throw UsageError("dunkl checks are limited to rank <= 2");
  CherednikParams params;
  params.c_by_class.assign(rs.num_root_classes, Rat(0));
  for (int i = 0; i < rs.num_root_classes; ++i) params.c_by_class[i] = rat(2 + i, 3);
  RelationConfig rc;
  rc.bound = rs.rank == 1 ? 4 : 1;
  rc.mode = cfg.mode();
  Report rational = check_algebra_relations(rs, Flavor::rational, params, d, rc);
  for (auto& c : rational.checks) rep.add(c);
  rc.bound = rs.rank == 1 ? 3 : 1;
  Report trig = check_algebra_relations(rs, Flavor::trigonometric, params, d, rc);
  for (auto& c : trig.checks) rep.add(c);
  VecI y(rs.rank, 0);
  y[0] = 1;
  Report cmp = compare_dunkl_truncated(rs, y, 6, params, cfg.mode());
  for (auto& c : cmp.checks) rep.add(c);
  return rep;
}

void emit_progress(const Report& rep) {
  for (const auto& c : rep.checks)
    std::cerr << "[" << (c.pass ? "pass" : "FAIL") << "] " << rep.system << " d=" << rep.d
              << " " << c.name << (c.witness.empty() ? "" : " : " + c.witness) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact localized-class and reflection-algebra verification suite"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string d_range = "1";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type {A|B|C|D|G}");
    sub->add_option("--rank", cfg.rank, "rank (1..4)");
    sub->add_option("-d,--level", d_range, "level d or range N..M");
    sub->add_option("--samples", cfg.samples, "randomized sample count");
    sub->add_option("--ball", cfg.ball, "length-ball radius");
    sub->add_option("--seed", cfg.seed, "PRNG seed");
    sub->add_option("--out", cfg.out, "report output path");
    sub->add_option("--format", cfg.format, "report format (json)");
    sub->add_flag("--serial", cfg.serial, "disable the OpenMP paths");
  };

  for (const char* n : {"relations", "sl2-basis", "upsilon", "alcoves", "classes",
                        "character", "dunkl", "all"})
    add_common(app.add_subcommand(n));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  std::string command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.format != "json") throw UsageError("only --format json is supported");
    auto dash = d_range.find("..");
    int d_lo = std::stoi(d_range.substr(0, dash));
    int d_hi = dash == std::string::npos ? d_lo : std::stoi(d_range.substr(dash + 2));
    if (d_lo < 0 || d_hi < d_lo) throw UsageError("bad level range");

    auto t0 = std::chrono::steady_clock::now();
    auto rs = build_root_system(cartan_type_from_char(cfg.type.at(0)), cfg.rank);

    std::vector<std::string> reports;
    bool all_pass = true;
    for (int d = d_lo; d <= d_hi; ++d) {
      std::vector<Report> reps;
      if (command == "relations") reps.push_back(run_relations(rs, d, cfg));
      if (command == "sl2-basis") reps.push_back(run_sl2(rs, d, cfg));
      if (command == "upsilon") reps.push_back(run_upsilon(rs, d, cfg));
      if (command == "alcoves") reps.push_back(run_alcoves(rs, d, cfg));
      if (command == "classes") reps.push_back(run_classes(rs, d, cfg));
      if (command == "character") reps.push_back(run_character(rs, d, cfg));
      if (command == "dunkl") reps.push_back(run_dunkl(rs, d, cfg));
      if (command == "all") {
        reps.push_back(run_relations(rs, d, cfg));
        reps.push_back(run_alcoves(rs, d, cfg));
        reps.push_back(run_classes(rs, d, cfg));
        reps.push_back(run_character(rs, d, cfg));
        if (rs.rank == 1 && rs.type == CartanType::A) reps.push_back(run_sl2(rs, d, cfg));
        reps.push_back(run_upsilon(rs, d, cfg));
        if (rs.rank <= 2) reps.push_back(run_dunkl(rs, d, cfg));
      }
      for (auto& rep : reps) {
        rep.command = command;
        rep.elapsed_ms = elapsed_ms_since(t0);
        emit_progress(rep);
        reports.push_back(rep.json());
        if (!rep.all_pass()) all_pass = false;
      }
    }

    std::string payload;
    if (reports.size() == 1) {
      payload = reports.front();
    } else {
      payload = "[";
      for (std::size_t i = 0; i < reports.size(); ++i) payload += (i ? "," : "") + reports[i];
      payload += "]";
    }
    if (!cfg.out.empty()) {
      std::ofstream os(cfg.out);
      os << payload << "\n";
    } else {
      std::cout << payload << "\n";
    }
    return all_pass ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
