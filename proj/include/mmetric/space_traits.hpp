#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include <json.hpp>

#include "mmetric/finite_space.hpp"
#include "mmetric/functional_space.hpp"

namespace mmetric {

/// Anything with a point type, a real-valued sigma and a membership test.
template <class S>
concept DistanceSpace = requires(const S& s, const typename S::point_type& p) {
  { s.sigma(p, p) } -> std::convertible_to<double>;
  { s.contains(p) } -> std::convertible_to<bool>;
};

template <DistanceSpace S>
using point_t = typename S::point_type;

/// Point identity: exact on finite spaces, |x - y| <= tol on the real line.
inline bool same_point(const FiniteSpace&, std::size_t x, std::size_t y, double) { return x == y; }
inline bool same_point(const FunctionalSpace&, double x, double y, double tol) {
  return std::abs(x - y) <= tol;
}

inline nlohmann::json point_to_json(const FiniteSpace& s, std::size_t x) { return s.label(x); }
inline nlohmann::json point_to_json(const FunctionalSpace&, double x) { return x; }

inline std::string point_name(const FiniteSpace& s, std::size_t x) { return s.label(x); }
inline std::string point_name(const FunctionalSpace&, double x) { return format_real(x); }

}  // namespace mmetric
