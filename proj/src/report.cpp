#include "gkmcher/report.hpp"

#include <sstream>

namespace gkmcher {

std::string json_escape(const std::string& s) {
  std::ostringstream os;
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default: os << c;
    }
  }
  return os.str();
}

std::string conventions_json() {
  std::ostringstream os;
  os << "{"
     << "\"composition\":\"x = w*t^mu acts on characters by chi -> w(t^mu chi)\","
     << "\"translation_action\":\"t^mu(lambda + k h) = lambda + (k + <mu,lambda>) h\","
     << "\"translations\":\"coroot directions, s_{alpha,k} = t^{k alpha_vee} s_alpha\","
     << "\"edges\":\"{x, x s_{alpha,k}} with hyperplane x(alpha + k h), alpha > 0, -d <= k <= d-1\","
     << "\"affine_generator\":\"s0 = t^{-theta_vee} s_theta with formula character h - theta\","
     << "\"wall_generator\":\"r0 = t^{theta_vee} s_theta (alcove combinatorics)\","
     << "\"sl2_coefficient\":\"(-1)^(m+eps) binom(r-1, m), support [k, k+2r-1]\","
     << "\"interior_point\":\"rho_vee/(h+1)\""
     << "}";
  return os.str();
}

std::string Report::json() const {
  std::ostringstream os;
  os << "{\"command\":\"" << json_escape(command) << "\",";
  os << "\"config\":{\"system\":\"" << json_escape(system) << "\",\"d\":" << d
     << ",\"seed\":" << seed << ",\"samples\":" << samples << ",\"ball\":" << ball
     << "},";
  os << "\"conventions\":" << conventions_json() << ",";
  os << "\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    os << (i ? "," : "") << "{\"name\":\"" << json_escape(c.name) << "\",\"status\":\""
       << (c.pass ? "pass" : "fail") << "\",\"samples\":" << c.samples;
    if (!c.details.empty()) os << ",\"details\":\"" << json_escape(c.details) << "\"";
    if (!c.witness.empty()) os << ",\"witness\":\"" << json_escape(c.witness) << "\"";
    os << "}";
  }
  os << "],\"elapsed_ms\":" << elapsed_ms << "}";
  return os.str();
}

}  // namespace gkmcher
