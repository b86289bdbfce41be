#pragma once

#include <cstddef>
#include <cstdint>

#include "mmetric/finite_space.hpp"

namespace mmetric {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Parameters for the random space generators.
struct GenConfig {
  std::size_t n = 4;
  Interval diag_range{-2.0, 2.0};  // self-distances sigma(x,x)
  Interval d_range{0.0, 3.0};      // raw off-diagonal weights before closure
  std::uint64_t seed = 0;
  bool ensure_distinct_diag = false;
  /// Every sampled value is rounded to a multiple of this step. The default
  /// dyadic step keeps all later sums and differences exact in double, so
  /// exact set comparisons on generated spaces are meaningful. 0 disables.
  double quantum = 1.0 / 1024.0;
  std::size_t resample_budget = 256;
};

/// Random M-metric built as sigma(x,y) = d(x,y) + min(s_x, s_y), where s are
/// the sampled self-distances and d is the shortest-path closure of a random
/// symmetric nonnegative matrix. Draws that break separation (d = 0 between
/// equal self-distances) are resampled; CapacityError once the budget runs
/// out. Deterministic per seed.
FiniteSpace gen_m_metric(const GenConfig& cfg);

/// induce_partial(gen_m_metric(cfg)): always a partial metric.
FiniteSpace gen_partial_metric(const GenConfig& cfg);

/// Labels "p0", "p1", ... used by the generators.
std::vector<std::string> generated_labels(std::size_t n);

}  // namespace mmetric
