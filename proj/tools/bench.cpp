// Benchmark comparing the serial reference paths against the OpenMP kernels
// on the three sweep workloads: relation samples, ball reduction, and
// fixed-point counting.

#include <chrono>
#include <cstdio>

#include "gkmcher/combinat.hpp"
#include "gkmcher/gkm.hpp"
#include "gkmcher/parallel.hpp"

using namespace gkmcher;

namespace {

template <class F>
double time_ms(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.1f ms %10.1f ms   speedup %.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("OpenMP available: %s\n", par::have_openmp() ? "yes" : "no");
  std::printf("%-28s %13s %13s\n", "workload", "serial", "parallel");

  {
    auto rs = build_root_system(CartanType::A, 2);
    VerifyConfig cfg;
    cfg.samples = 24;
    cfg.word_length = 5;
    Report check_serial, check_parallel;
    cfg.mode = par::Mode::serial;
    double s = time_ms([&] { check_serial = verify_relations(rs, 1, cfg); });
    cfg.mode = par::Mode::parallel;
    double p = time_ms([&] { check_parallel = verify_relations(rs, 1, cfg); });
    if (check_serial.json() != check_parallel.json())
      std::printf("MISMATCH in relation reports!\n");
    row("relations A2 d=1 (24)", s, p);
  }
  {
    auto rs = build_root_system(CartanType::B, 2);
    double s = time_ms([&] { equivalence_classes(rs, 1, 8, par::Mode::serial); });
    double p = time_ms([&] { equivalence_classes(rs, 1, 8, par::Mode::parallel); });
    row("classes B2 d=1 ball 8", s, p);
  }
  {
    auto rs = build_root_system(CartanType::G, 2);
    double s = time_ms([&] { perm_module_character(rs, 2, par::Mode::serial); });
    double p = time_ms([&] { perm_module_character(rs, 2, par::Mode::parallel); });
    row("character G2 d=2", s, p);
  }
  {
    auto rs = build_root_system(CartanType::A, 1);
    double s = time_ms([&] { verify_regular_bimodule_d0(rs, 5, par::Mode::serial); });
    double p = time_ms([&] { verify_regular_bimodule_d0(rs, 5, par::Mode::parallel); });
    row("regular bimodule A1 ball 5", s, p);
  }
  return 0;
}
