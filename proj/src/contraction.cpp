#include "mmetric/contraction.hpp"

namespace mmetric {

bool check_bounded_below(const FiniteSpace& space, double r0, double tol) {
  if (std::isinf(r0) && r0 < 0) return true;
  return space.min_entry() >= r0 - tol;
}

bool check_bounded_below(const FunctionalSpace& space, double r0, double tol) {
  if (std::isinf(r0) && r0 < 0) return true;
  if (!space.lower_bound()) {
    throw PreconditionError("functional space '" + space.name() + "' declares no lower bound");
  }
  return *space.lower_bound() >= r0 - tol;
}

}  // namespace mmetric
