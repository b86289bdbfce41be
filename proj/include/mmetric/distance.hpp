#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmetric/finite_space.hpp"
#include "mmetric/space_traits.hpp"

namespace mmetric {

inline constexpr double kDefaultAxiomTol = 1e-9;

/// m_{x,y} = min(sigma(x,x), sigma(y,y)).
template <DistanceSpace S>
double m_of(const S& space, const point_t<S>& x, const point_t<S>& y) {
  return std::min(space.sigma(x, x), space.sigma(y, y));
}

/// M_{x,y} = max(sigma(x,x), sigma(y,y)).
template <DistanceSpace S>
double M_of(const S& space, const point_t<S>& x, const point_t<S>& y) {
  return std::max(space.sigma(x, x), space.sigma(y, y));
}

double m_of(const FiniteSpace& space, std::string_view x, std::string_view y);
double M_of(const FiniteSpace& space, std::string_view x, std::string_view y);

enum class SpaceClass { none, m_metric, partial_metric, metric };

enum class Axiom {
  sigma_lbnd,
  sigma_sym,
  sigma_sep,
  sigma_inq,
  p_lbnd,
  p_sym,
  p_sep,
  p_inq,
  zero_self_distance,
};

inline constexpr std::array kAllAxioms = {
    Axiom::sigma_lbnd, Axiom::sigma_sym, Axiom::sigma_sep, Axiom::sigma_inq, Axiom::p_lbnd,
    Axiom::p_sym,      Axiom::p_sep,     Axiom::p_inq,     Axiom::zero_self_distance,
};

std::string_view to_string(SpaceClass c);
std::string_view to_string(Axiom a);
std::optional<SpaceClass> parse_space_class(std::string_view s);

/// A concrete instance refuting an axiom.
///
/// `points` is the tuple the axiom was instantiated at, `values` the raw table
/// entries involved. For inequalities the violation is lhs > rhs + tol; for
/// the separation axioms lhs is the largest of |sigma(x,x)-sigma(x,y)| and
/// |sigma(y,y)-sigma(x,y)| and rhs the tolerance.
struct AxiomWitness {
  std::vector<std::size_t> points;
  std::vector<double> values;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct AxiomResult {
  bool pass = true;
  std::size_t violations = 0;
  std::optional<AxiomWitness> witness;  // first violation in lexicographic order
};

struct ClassificationReport {
  SpaceClass space_class = SpaceClass::none;
  std::array<AxiomResult, kAllAxioms.size()> axioms{};
  double tol = kDefaultAxiomTol;

  [[nodiscard]] const AxiomResult& result(Axiom a) const {
    return axioms[static_cast<std::size_t>(a)];
  }
  [[nodiscard]] bool passes(Axiom a) const { return result(a).pass; }

  /// True when the space is at least `c` (metric implies partial metric
  /// implies M-metric).
  [[nodiscard]] bool satisfies(SpaceClass c) const { return space_class >= c; }
};

/// Exhaustive axiom check: pairs for lbnd/sym/sep, ordered triples for the
/// triangle-type inequalities. Every label's axiom set includes the sets of
/// the weaker labels, so the reported class is monotone by construction.
ClassificationReport classify(const FiniteSpace& space, double tol = kDefaultAxiomTol);

/// Human-readable account of a failed axiom, e.g.
/// "sigma(b,b)=2 > sigma(b,a)=1".
std::string describe_violation(const FiniteSpace& space, Axiom axiom, const AxiomWitness& w);

/// sigma*(x,y) = sigma(x,y) - m_{x,y}, zero on the diagonal. Requires an
/// M-metric; throws PreconditionError otherwise.
FiniteSpace sigma_star(const FiniteSpace& space, double tol = kDefaultAxiomTol);

/// p(x,y) = sigma(x,y) + M_{x,y} - m_{x,y}; the diagonal is copied verbatim.
/// Requires an M-metric; the result is always a partial metric.
FiniteSpace induce_partial(const FiniteSpace& space, double tol = kDefaultAxiomTol);

/// Both lattice inequalities over the reals:
///   min(c,a) + min(c,b) <= c + min(a,b)   and   c + max(a,b) <= max(c,a) + max(c,b).
bool min_max_inequality_check(double a, double b, double c);

}  // namespace mmetric
