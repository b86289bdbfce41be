#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmetric/error.hpp"
#include "mmetric/finite_space.hpp"
#include "mmetric/functional_space.hpp"
#include "mmetric/sequences.hpp"
#include "mmetric/space_traits.hpp"

namespace mmetric {

/// A self-map f on a space together with a base point x0.
template <DistanceSpace S>
struct MapSystem {
  using point_type = point_t<S>;

  S space;
  std::function<point_type(point_type)> f;
  point_type x0{};
  std::string name;

  /// f(x), checked to stay inside the space.
  point_type apply(const point_type& x) const {
    point_type y = f(x);
    if (!space.contains(y)) {
      throw PreconditionError("map '" + name + "' sends " + point_name(space, x) +
                              " outside the space");
    }
    return y;
  }

  [[nodiscard]] MapSystem with_base(point_type start) const {
    MapSystem copy = *this;
    copy.x0 = std::move(start);
    return copy;
  }
};

/// x0, f(x0), ..., f^{count-1}(x0).
template <DistanceSpace S>
std::vector<point_t<S>> orbit(const MapSystem<S>& sys, std::size_t count) {
  std::vector<point_t<S>> out;
  out.reserve(count);
  if (count == 0) return out;
  if (!sys.space.contains(sys.x0)) throw UnknownPoint("base point outside the space");
  out.push_back(sys.x0);
  while (out.size() < count) out.push_back(sys.apply(out.back()));
  return out;
}

/// Finite map from an image table: f(i) = image[i].
MapSystem<FiniteSpace> finite_map(FiniteSpace space, std::vector<std::size_t> image,
                                  std::size_t x0, std::string name = "finite_map");

/// Finite map from "a:b,b:a" label pairs; unlisted points are fixed.
MapSystem<FiniteSpace> finite_map_from_spec(FiniteSpace space, std::string_view spec,
                                            std::string_view x0, std::string name = "finite_map");

/// f(x) = alpha x + beta on a functional space.
MapSystem<FunctionalSpace> affine_map(FunctionalSpace space, double alpha, double beta,
                                      double x0);

struct OrbitOptions {
  std::size_t max_iter = 10'000;
  std::size_t window = kDefaultWindow;
  double tol = kDefaultSequenceTol;
};

/// An orbit prefix with its Cauchy verdict and, when one exists, the unique
/// point passing the special-limit test.
template <DistanceSpace S>
struct OrbitReport {
  std::vector<point_t<S>> prefix;
  CauchyVerdict cauchy;
  std::optional<point_t<S>> special_limit;
  std::optional<LimitVerdict> special_limit_verdict;
  /// More than one candidate passed; none is reported.
  std::vector<point_t<S>> competing_special_limits;
  std::size_t iterations = 0;
  bool stationary = false;  // f(x_k) == x_k reached, so the rest of the orbit is constant
  bool diverged = false;
  std::string diagnostic;
};

namespace detail {

template <DistanceSpace S>
double window_spread(const S& space, const std::vector<point_t<S>>& terms, std::size_t window) {
  const std::size_t n = terms.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = n - window; i < n; ++i) {
    for (std::size_t j = n - window; j < n; ++j) {
      const double v = space.sigma(terms[i], terms[j]);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return hi - lo;
}

inline std::vector<std::size_t> limit_candidates(const FiniteSpace& space,
                                                 const std::vector<std::size_t>&) {
  std::vector<std::size_t> all(space.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

inline std::vector<double> limit_candidates(const FunctionalSpace&,
                                            const std::vector<double>& terms) {
  return {terms.back()};
}

}  // namespace detail

/// Iterates f from x0 for at most max_iter steps and analyses the prefix.
///
/// Stops early once the orbit is stationary and at least two windows long.
/// Aborts as diverged when sigma turns non-finite, or when the window spread
/// keeps growing over three successive doublings of the prefix. Special-limit
/// candidates are every point of a finite space, or the last iterate on the
/// real line.
template <DistanceSpace S>
OrbitReport<S> trace_orbit(const MapSystem<S>& sys, const OrbitOptions& opts = {}) {
  if (opts.max_iter + 1 < 2 * opts.window) {
    throw ArgumentError("max_iter too small for the analysis window");
  }
  if (!sys.space.contains(sys.x0)) throw UnknownPoint("base point outside the space");

  OrbitReport<S> report;
  auto& terms = report.prefix;
  terms.push_back(sys.x0);

  std::size_t next_checkpoint = 4 * opts.window;
  double last_spread = -1.0;
  int growth_streak = 0;

  for (std::size_t k = 1; k <= opts.max_iter; ++k) {
    terms.push_back(sys.apply(terms.back()));
    report.iterations = k;
    const auto& x = terms.back();
    if (!std::isfinite(sys.space.sigma(x, x))) {
      report.diverged = true;
      report.diagnostic = "sigma(x_k, x_k) is not finite at k=" + std::to_string(k);
      return report;
    }
    if (terms[k] == terms[k - 1]) report.stationary = true;
    if (report.stationary && terms.size() >= 2 * opts.window) break;

    if (terms.size() == next_checkpoint) {
      const double spread = detail::window_spread(sys.space, terms, opts.window);
      growth_streak = (last_spread >= 0.0 && spread > last_spread) ? growth_streak + 1 : 0;
      last_spread = spread;
      next_checkpoint *= 2;
      if (growth_streak >= 3 && spread > opts.tol) {
        report.diverged = true;
        report.diagnostic = "tail spread grew across three doublings (now " +
                            std::to_string(spread) + ") at k=" + std::to_string(k);
        return report;
      }
    }
  }

  const std::span<const point_t<S>> view(terms);
  report.cauchy = cauchy_analyze(sys.space, view, opts.window, opts.tol);
  if (!report.cauchy.is_r_cauchy()) {
    report.diagnostic = "orbit not r-Cauchy (" + std::string(to_string(report.cauchy.status)) + ")";
    return report;
  }

  const auto candidates = detail::limit_candidates(sys.space, terms);
  const auto winners = special_limits(sys.space, view, report.cauchy,
                                      std::span<const point_t<S>>(candidates), opts.tol);
  if (winners.size() == 1) {
    report.special_limit = winners.front();
    report.special_limit_verdict = is_limit(sys.space, view, report.cauchy, winners.front(), opts.tol);
  } else if (winners.empty()) {
    report.diagnostic = "no candidate passes the special-limit test";
  } else {
    report.competing_special_limits = winners;
    report.diagnostic = "several candidates pass the special-limit test";
  }
  return report;
}

}  // namespace mmetric
