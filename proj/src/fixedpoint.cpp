#include "mmetric/fixedpoint.hpp"

namespace mmetric {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::woc_and_nonexpansive: return "woc_and_nonexpansive";
    case Branch::woc_and_bounded_by_ffa: return "woc_and_bounded_by_ffa";
    case Branch::nonexpansive_and_bounded_by_aa: return "nonexpansive_and_bounded_by_aa";
    case Branch::none: return "none";
  }
  return "?";
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::fixed_point: return "fixed_point";
    case SolveStatus::space_not_m_metric: return "space_not_m_metric";
    case SolveStatus::diverged: return "diverged";
    case SolveStatus::orbit_not_r_cauchy: return "orbit_not_r_cauchy";
    case SolveStatus::no_special_limit: return "no_special_limit";
    case SolveStatus::no_branch_verified: return "no_branch_verified";
    case SolveStatus::conclusion_not_verified: return "conclusion_not_verified";
  }
  return "?";
}

std::optional<Branch> parse_branch(std::string_view s) {
  for (auto b : {Branch::woc_and_nonexpansive, Branch::woc_and_bounded_by_ffa,
                 Branch::nonexpansive_and_bounded_by_aa, Branch::none}) {
    if (to_string(b) == s) return b;
  }
  return std::nullopt;
}

}  // namespace mmetric
