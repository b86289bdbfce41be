#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmetric/finite_space.hpp"

namespace mmetric {

/// A closed real interval [lo, hi] carrying a distance function.
///
/// Nothing about sigma is proven here: symmetry and the axioms are only ever
/// spot-checked on finite samples (see restrict()). `lower_bound` and
/// `complete` are declarations made by whoever builds the space.
class FunctionalSpace {
 public:
  using point_type = double;
  using Sigma = std::function<double(double, double)>;

  FunctionalSpace(std::string name, double lo, double hi, Sigma sigma,
                  std::optional<double> lower_bound = std::nullopt, bool complete = false);

  [[nodiscard]] double sigma(double x, double y) const { return sigma_(x, y); }
  [[nodiscard]] bool contains(double x) const noexcept { return x >= lo_ && x <= hi_; }

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] double lo() const noexcept { return lo_; }
  [[nodiscard]] double hi() const noexcept { return hi_; }
  [[nodiscard]] const std::optional<double>& lower_bound() const noexcept { return lower_bound_; }
  [[nodiscard]] bool complete() const noexcept { return complete_; }

  /// The finite subspace on the given points, labelled by their decimal form.
  /// Throws InvalidSpace (with witness) if sigma is asymmetric on the sample.
  [[nodiscard]] FiniteSpace restrict(std::span<const double> points) const;

 private:
  std::string name_;
  double lo_;
  double hi_;
  Sigma sigma_;
  std::optional<double> lower_bound_;
  bool complete_;
};

}  // namespace mmetric
