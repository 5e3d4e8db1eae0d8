#include "wls/degree.hpp"
#include "wls/solver.hpp"

namespace wls {

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::wls1:
      return "wls1";
    case SystemKind::wls2:
      return "wls2";
    case SystemKind::wls3:
      return "wls3";
  }
  return "?";
}

SystemKind parse_system_kind(std::string_view text) {
  if (text == "wls1" || text == "1") return SystemKind::wls1;
  if (text == "wls2" || text == "2") return SystemKind::wls2;
  if (text == "wls3" || text == "3") return SystemKind::wls3;
  throw ParseError("unknown system kind '" + std::string(text) + "' (expected wls1, wls2 or wls3)");
}

std::string to_string(SolveStatus status) {
  return status == SolveStatus::converged ? "converged" : "iteration_cap_reached";
}

}  // namespace wls
