#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmetric/distance.hpp"
#include "mmetric/error.hpp"
#include "mmetric/space_traits.hpp"

namespace mmetric {

inline constexpr std::size_t kDefaultWindow = 16;
inline constexpr double kDefaultSequenceTol = 1e-6;

enum class CauchyStatus { r_cauchy, not_cauchy, inconclusive };

inline std::string_view to_string(CauchyStatus s) {
  switch (s) {
    case CauchyStatus::r_cauchy: return "r_cauchy";
    case CauchyStatus::not_cauchy: return "not_cauchy";
    case CauchyStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Finite-prefix verdict on whether sigma(x_i, x_j) converges jointly.
///
/// The tail is the last `window` terms. `r` is the mean of sigma over all
/// tail pairs (i = j included) and `tail_spread` the largest deviation from
/// it; status r_cauchy requires tail_spread <= tol.
struct CauchyVerdict {
  CauchyStatus status = CauchyStatus::inconclusive;
  double r = std::numeric_limits<double>::quiet_NaN();
  double tail_spread = std::numeric_limits<double>::infinity();
  std::size_t window = 0;
  double tol = 0.0;

  std::vector<double> consecutive;     // sigma(x_n, x_{n-1}) for n in the tail
  std::vector<double> self_distances;  // sigma(x_n, x_n) for n in the tail
  std::vector<double> self_distance_levels;

  // Set for not_cauchy: the period of the interleaving and the distinct
  // levels its blocks settle at.
  std::optional<std::size_t> oscillation_period;
  std::vector<double> oscillation_levels;

  // Consequences checked on the same tail when r_cauchy: sigma(x_i,x_i),
  // m_{x_i,x_j} and M_{x_i,x_j} all within tol of r.
  double self_distance_deviation = 0.0;
  double m_deviation = 0.0;
  double M_deviation = 0.0;
  bool tail_limits_consistent = false;

  [[nodiscard]] bool is_r_cauchy() const { return status == CauchyStatus::r_cauchy; }
};

namespace detail {

/// Distinct values after merging neighbours closer than tol.
inline std::vector<double> cluster_levels(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<double> levels;
  for (double v : values) {
    if (levels.empty() || v - levels.back() > tol) levels.push_back(v);
  }
  return levels;
}

/// Looks for a period p such that, over the doubled window, every block of
/// pairs (i mod p, j mod p) is tight on its own while two blocks sit at
/// levels more than 3 tol apart. That pattern cannot converge to one r.
template <DistanceSpace S>
bool find_oscillation(const S& space, std::span<const point_t<S>> terms, std::size_t window,
                      double tol, CauchyVerdict& verdict) {
  const std::size_t n = terms.size();
  const std::size_t begin = n - 2 * window;
  for (std::size_t period = 2; period <= std::min<std::size_t>(4, window); ++period) {
    std::vector<std::vector<double>> blocks(period * period);
    for (std::size_t i = begin; i < n; ++i) {
      for (std::size_t j = begin; j < n; ++j) {
        blocks[(i % period) * period + (j % period)].push_back(space.sigma(terms[i], terms[j]));
      }
    }
    bool tight = true;
    std::vector<double> levels;
    for (const auto& block : blocks) {
      const auto [lo, hi] = std::minmax_element(block.begin(), block.end());
      if (*hi - *lo > 2 * tol) {
        tight = false;
        break;
      }
      levels.push_back((*lo + *hi) / 2);
    }
    if (!tight) continue;
    const auto [lo, hi] = std::minmax_element(levels.begin(), levels.end());
    if (*hi - *lo > 3 * tol) {
      verdict.oscillation_period = period;
      verdict.oscillation_levels = cluster_levels(levels, 3 * tol);
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Classifies a finite prefix as r-Cauchy, demonstrably oscillating
/// (not_cauchy) or inconclusive. Requires terms.size() >= 2 * window.
template <DistanceSpace S>
CauchyVerdict cauchy_analyze(const S& space, std::span<const point_t<S>> terms,
                             std::size_t window = kDefaultWindow,
                             double tol = kDefaultSequenceTol) {
  if (window == 0) throw ArgumentError("window must be >= 1");
  if (!(tol >= 0.0)) throw ArgumentError("tolerance must be >= 0");
  const std::size_t n = terms.size();
  if (n < 2 * window) {
    throw ArgumentError("prefix too short: " + std::to_string(n) + " terms, need at least " +
                        std::to_string(2 * window));
  }
  for (const auto& t : terms) {
    if (!space.contains(t)) throw UnknownPoint("sequence term outside the space");
  }

  CauchyVerdict v;
  v.window = window;
  v.tol = tol;
  const std::size_t begin = n - window;

  double sum = 0.0;
  for (std::size_t i = begin; i < n; ++i) {
    for (std::size_t j = begin; j < n; ++j) sum += space.sigma(terms[i], terms[j]);
  }
  v.r = sum / static_cast<double>(window * window);
  v.tail_spread = 0.0;
  for (std::size_t i = begin; i < n; ++i) {
    for (std::size_t j = begin; j < n; ++j) {
      v.tail_spread = std::max(v.tail_spread, std::abs(space.sigma(terms[i], terms[j]) - v.r));
    }
    v.consecutive.push_back(space.sigma(terms[i], terms[i - 1]));
    v.self_distances.push_back(space.sigma(terms[i], terms[i]));
  }
  v.self_distance_levels = detail::cluster_levels(v.self_distances, tol);

  if (!std::isfinite(v.tail_spread)) {
    v.status = CauchyStatus::inconclusive;
    return v;
  }

  if (v.tail_spread <= tol) {
    v.status = CauchyStatus::r_cauchy;
    for (std::size_t i = begin; i < n; ++i) {
      v.self_distance_deviation =
          std::max(v.self_distance_deviation, std::abs(space.sigma(terms[i], terms[i]) - v.r));
      for (std::size_t j = begin; j < n; ++j) {
        v.m_deviation = std::max(v.m_deviation, std::abs(m_of(space, terms[i], terms[j]) - v.r));
        v.M_deviation = std::max(v.M_deviation, std::abs(M_of(space, terms[i], terms[j]) - v.r));
      }
    }
    v.tail_limits_consistent =
        v.self_distance_deviation <= tol && v.m_deviation <= tol && v.M_deviation <= tol;
    return v;
  }

  v.status = detail::find_oscillation(space, terms, window, tol, v) ? CauchyStatus::not_cauchy
                                                                     : CauchyStatus::inconclusive;
  return v;
}

template <DistanceSpace S>
CauchyVerdict cauchy_analyze(const S& space, const std::vector<point_t<S>>& terms,
                             std::size_t window = kDefaultWindow,
                             double tol = kDefaultSequenceTol) {
  return cauchy_analyze(space, std::span<const point_t<S>>(terms), window, tol);
}

struct LimitVerdict {
  bool is_limit = false;
  bool is_special_limit = false;
  /// max over the tail of |sigma(a,x_i) + sigma(x_i,x_i) - m_{a,x_i} - sigma(a,a)|
  double residual = std::numeric_limits<double>::infinity();
  /// |sigma(a,a) - r|
  double self_gap = std::numeric_limits<double>::infinity();
};

namespace detail {

inline void require_r_cauchy(const CauchyVerdict& verdict, const char* op) {
  if (!verdict.is_r_cauchy()) {
    throw PreconditionError(std::string(op) + " needs an r-Cauchy verdict, got " +
                            std::string(to_string(verdict.status)));
  }
}

}  // namespace detail

/// Tests a candidate limit against the tail used by `verdict`.
template <DistanceSpace S>
LimitVerdict is_limit(const S& space, std::span<const point_t<S>> terms,
                      const CauchyVerdict& verdict, const point_t<S>& a,
                      double tol = kDefaultSequenceTol) {
  detail::require_r_cauchy(verdict, "is_limit");
  if (!space.contains(a)) throw UnknownPoint("candidate limit " + point_name(space, a) + " is outside the space");
  const double saa = space.sigma(a, a);
  LimitVerdict out;
  out.residual = 0.0;
  for (std::size_t i = terms.size() - verdict.window; i < terms.size(); ++i) {
    const auto& x = terms[i];
    const double value = space.sigma(a, x) + space.sigma(x, x) - m_of(space, a, x);
    out.residual = std::max(out.residual, std::abs(value - saa));
  }
  out.self_gap = std::abs(saa - verdict.r);
  out.is_limit = out.residual <= tol;
  out.is_special_limit = out.is_limit && out.self_gap <= tol;
  return out;
}

/// Every candidate that passes the special-limit test.
template <DistanceSpace S>
std::vector<point_t<S>> special_limits(const S& space, std::span<const point_t<S>> terms,
                                       const CauchyVerdict& verdict,
                                       std::span<const point_t<S>> candidates,
                                       double tol = kDefaultSequenceTol) {
  std::vector<point_t<S>> out;
  for (const auto& c : candidates) {
    if (is_limit(space, terms, verdict, c, tol).is_special_limit) out.push_back(c);
  }
  return out;
}

/// Returns true when a and b name the same point. Both must pass the
/// special-limit test (PreconditionError otherwise). Two distinct passing
/// points contradict uniqueness of special limits and are reported as an
/// AmbiguityError, never as `false`.
template <DistanceSpace S>
bool special_limit_unique(const S& space, std::span<const point_t<S>> terms,
                          const CauchyVerdict& verdict, const point_t<S>& a,
                          const point_t<S>& b, double tol = kDefaultSequenceTol) {
  for (const auto* p : {&a, &b}) {
    if (!is_limit(space, terms, verdict, *p, tol).is_special_limit) {
      throw PreconditionError(point_name(space, *p) + " is not a special limit of the sequence");
    }
  }
  if (same_point(space, a, b, tol)) return true;
  throw AmbiguityError("distinct points " + point_name(space, a) + " and " +
                       point_name(space, b) +
                       " both pass the special-limit test; tolerance too loose for this prefix");
}

struct LimitTransfer {
  double tail_value = 0.0;  // sigma(y, x_N) - m_{y, x_N} at the last term
  double at_limit = 0.0;    // sigma(y, a) - m_{y, a}
  double max_deviation = 0.0;
  bool holds = false;
  // Consequences for the special limit itself, checked over the tail:
  // M_{a,x_i}, m_{a,x_i} and sigma(a,x_i) all approach sigma(a,a). The bound
  // is 3 tol, the error the limit and r-Cauchy tolerances can add up to.
  double M_gap = 0.0;
  double m_gap = 0.0;
  double sigma_gap = 0.0;
  bool special_limit_consequences = false;
};

/// Compares the tail of sigma(y,x_i) - m_{y,x_i} with sigma(y,a) - m_{y,a}
/// for a verified special limit a.
template <DistanceSpace S>
LimitTransfer limit_transfer(const S& space, std::span<const point_t<S>> terms,
                             const CauchyVerdict& verdict, const point_t<S>& a,
                             const point_t<S>& y, double tol = kDefaultSequenceTol) {
  if (!is_limit(space, terms, verdict, a, tol).is_special_limit) {
    throw PreconditionError(point_name(space, a) + " is not a special limit of the sequence");
  }
  if (!space.contains(y)) throw UnknownPoint("point outside the space");
  LimitTransfer out;
  out.at_limit = space.sigma(y, a) - m_of(space, y, a);
  const double saa = space.sigma(a, a);
  for (std::size_t i = terms.size() - verdict.window; i < terms.size(); ++i) {
    const auto& x = terms[i];
    const double value = space.sigma(y, x) - m_of(space, y, x);
    out.max_deviation = std::max(out.max_deviation, std::abs(value - out.at_limit));
    out.tail_value = value;
    out.M_gap = std::max(out.M_gap, std::abs(M_of(space, a, x) - saa));
    out.m_gap = std::max(out.m_gap, std::abs(m_of(space, a, x) - saa));
    out.sigma_gap = std::max(out.sigma_gap, std::abs(space.sigma(a, x) - saa));
  }
  out.holds = std::abs(out.tail_value - out.at_limit) <= tol;
  out.special_limit_consequences =
      out.M_gap <= 3 * tol && out.m_gap <= 3 * tol && out.sigma_gap <= 3 * tol;
  return out;
}

}  // namespace mmetric
