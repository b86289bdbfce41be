#include "mmetric/functional_space.hpp"

#include <cmath>

#include "mmetric/error.hpp"

namespace mmetric {

FunctionalSpace::FunctionalSpace(std::string name, double lo, double hi, Sigma sigma,
                                 std::optional<double> lower_bound, bool complete)
    : name_(std::move(name)),
      lo_(lo),
      hi_(hi),
      sigma_(std::move(sigma)),
      lower_bound_(lower_bound),
      complete_(complete) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw ArgumentError("functional space domain must be a finite interval lo <= hi");
  }
  if (!sigma_) throw ArgumentError("functional space needs a distance function");
}

FiniteSpace FunctionalSpace::restrict(std::span<const double> points) const {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (double p : points) {
    if (!contains(p)) {
      throw UnknownPoint(format_real(p) + " is outside [" + format_real(lo_) + ", " +
                         format_real(hi_) + "]");
    }
    labels.push_back(format_real(p));
  }
  std::vector<std::vector<double>> table(points.size(), std::vector<double>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) table[i][j] = sigma(points[i], points[j]);
  }
  return FiniteSpace(std::move(labels), std::move(table));
}

}  // namespace mmetric
