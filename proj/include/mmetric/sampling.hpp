#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mmetric/finite_space.hpp"
#include "mmetric/functional_space.hpp"

namespace mmetric {

/// Van der Corput radical inverse of `index` in `base`, in [0, 1).
double radical_inverse(std::uint64_t index, unsigned base);

template <class P>
struct PairSample {
  std::vector<std::pair<P, P>> pairs;
  bool exhaustive = false;
};

/// Every ordered pair of a finite space; `budget` is ignored.
PairSample<std::size_t> sample_pairs(const FiniteSpace& space, std::size_t budget);

/// Deterministic low-discrepancy pairs over [lo, hi]^2: the four corners,
/// then budget/8 diagonal pairs (x, x), then 2-D Halton (bases 2, 3).
PairSample<double> sample_pairs(const FunctionalSpace& space, std::size_t budget);

/// lo, hi, then van der Corput points of the domain.
std::vector<double> sample_points(const FunctionalSpace& space, std::size_t count);

inline std::vector<std::size_t> sample_points(const FiniteSpace& space, std::size_t) {
  std::vector<std::size_t> out(space.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

inline constexpr std::size_t kDefaultPairSamples = 4096;

}  // namespace mmetric
