#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmetric/distance.hpp"
#include "mmetric/finite_space.hpp"

namespace mmetric {

/// Subset of a finite space with at most 64 points, stored as a bitmask.
class PointSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}
  static PointSet of(std::initializer_list<std::size_t> points);
  static constexpr PointSet all(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  [[nodiscard]] constexpr bool contains(std::size_t x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(std::size_t x) { bits_ |= std::uint64_t{1} << x; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool subset_of(PointSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] std::vector<std::size_t> indices() const;

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet, PointSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// The four ball families on an M-metric space. With e(x,y) the defining
/// expression, ball(x, eps) = { y : e(x,y) < eps }:
///   asadi       sigma(x,y) - m_{x,y}
///   m_open      sigma(x,y) + sigma(y,y) - m_{x,y} - sigma(x,x)
///   induced_p   sigma(x,y) + M_{x,y}   - m_{x,y} - sigma(x,x)
///   standard_p  sigma(x,y) - sigma(x,x)          (partial metrics only)
enum class BallFamily { asadi, m_open, induced_p, standard_p };

std::string_view to_string(BallFamily f);
std::optional<BallFamily> parse_ball_family(std::string_view s);

double ball_expression(const FiniteSpace& space, BallFamily family, std::size_t x, std::size_t y);

/// Throws ArgumentError for eps <= 0, PreconditionError for standard_p on a
/// space that is not a partial metric, CapacityError above 64 points.
PointSet ball(const FiniteSpace& space, BallFamily family, std::size_t x, double eps,
              double tol = kDefaultAxiomTol);

/// Radii realising every distinct ball around x: the ball is a step function
/// of eps with jumps at the positive expression values, so one radius per
/// gap (midpoints, plus one past the largest value) covers them all.
std::vector<double> ball_radii(const FiniteSpace& space, BallFamily family, std::size_t x);

struct TopologyOptions {
  std::size_t max_points = 15;
  double tol = kDefaultAxiomTol;
};

struct FiniteTopology {
  std::size_t n = 0;
  BallFamily family = BallFamily::m_open;
  std::vector<PointSet> open_sets;  // ascending by bitmask

  [[nodiscard]] bool is_open(PointSet u) const;
};

/// open = { U : every x in U has some ball(x, eps) inside U }, decided by
/// enumerating all 2^n subsets against the distinct balls of every center.
FiniteTopology generate_topology(const FiniteSpace& space, BallFamily family,
                                 const TopologyOptions& opts = {});

enum class Relation { equal, left_strictly_coarser, left_strictly_finer, incomparable };
std::string_view to_string(Relation r);

struct TopologyComparison {
  Relation relation = Relation::equal;
  std::optional<PointSet> only_in_left;   // an open set of the left topology missing on the right
  std::optional<PointSet> only_in_right;  // and vice versa
};

TopologyComparison compare(const FiniteTopology& left, const FiniteTopology& right);
TopologyComparison compare(const FiniteSpace& space, BallFamily left, BallFamily right,
                           const TopologyOptions& opts = {});

enum class Separation { not_T0, T0_not_T1, T1 };
std::string_view to_string(Separation s);

struct SeparationReport {
  Separation level = Separation::T1;
  /// For not_T0: a pair no open set tells apart. For T0_not_T1: an ordered
  /// pair (x, y) such that every open set containing x also contains y.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

SeparationReport separation(const FiniteTopology& topology);
SeparationReport separation(const FiniteSpace& space, BallFamily family,
                            const TopologyOptions& opts = {});

/// Whether the Asadi-ball topology contains the standard partial-metric
/// topology. Requires a partial metric.
bool asadi_finer_check(const FiniteSpace& space, const TopologyOptions& opts = {});

std::vector<std::string> labels_of(const FiniteSpace& space, PointSet set);

}  // namespace mmetric
