#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gkmcher {

struct Check {
  std::string name;
  bool pass = true;
  long samples = 0;
  std::string details;
  std::string witness;  // minimal failing witness, empty when passing
};

struct Report {
  std::string command;
  std::string system;  // e.g. "A1"
  int d = 0;
  std::uint64_t seed = 0;
  long samples = 0;
  long ball = 0;
  std::vector<Check> checks;
  long elapsed_ms = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(Check c) { checks.push_back(std::move(c)); }

  // Deterministic JSON; elapsed_ms is the only timing field.
  std::string json() const;
};

// The pinned convention block embedded in every report.
std::string conventions_json();

std::string json_escape(const std::string& s);

}  // namespace gkmcher
