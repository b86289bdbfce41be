#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmetric/contraction.hpp"
#include "mmetric/distance.hpp"
#include "mmetric/error.hpp"
#include "mmetric/map_system.hpp"
#include "mmetric/sampling.hpp"

namespace mmetric {

/// Which hypothesis pair of the main fixed-point theorem was verified.
enum class Branch {
  woc_and_nonexpansive,
  woc_and_bounded_by_ffa,
  nonexpansive_and_bounded_by_aa,
  none,
};

enum class SolveStatus {
  fixed_point,
  space_not_m_metric,
  diverged,
  orbit_not_r_cauchy,
  no_special_limit,
  no_branch_verified,
  conclusion_not_verified,
};

std::string_view to_string(Branch b);
std::string_view to_string(SolveStatus s);
std::optional<Branch> parse_branch(std::string_view s);

struct SolveOptions {
  std::size_t max_iter = 10'000;
  std::size_t window = kDefaultWindow;
  double tol = kDefaultSequenceTol;
  /// Tolerance for f(a) == a on the real line; defaults to tol.
  std::optional<double> point_tol;
  std::optional<Branch> branch_hint;
  std::size_t pair_samples = kDefaultPairSamples;
  std::size_t certificate_depth = kDefaultCertificateDepth;
  std::size_t uniqueness_starts = 64;

  [[nodiscard]] double point_tolerance() const { return point_tol.value_or(tol); }
  [[nodiscard]] OrbitOptions orbit() const { return {max_iter, window, tol}; }
};

template <class P>
struct BranchHypotheses {
  WocReport<P> woc;
  PairCheck<P> nonexpansive;
  double self_at_image = 0.0;  // sigma(f(a), f(a))
  double self_at_limit = 0.0;  // sigma(a, a)
  bool bounded_by_image = false;
  bool bounded_by_limit = false;
  std::string bound_note;  // set when the space declares no lower bound

  [[nodiscard]] bool holds(Branch b) const {
    switch (b) {
      case Branch::woc_and_nonexpansive: return woc.holds && nonexpansive.holds;
      case Branch::woc_and_bounded_by_ffa: return woc.holds && bounded_by_image;
      case Branch::nonexpansive_and_bounded_by_aa: return nonexpansive.holds && bounded_by_limit;
      case Branch::none: return false;
    }
    return false;
  }
};

template <class P>
struct UniquenessReport {
  std::string method;  // "exhaustive" or "multi_start"
  std::size_t starts = 0;
  std::size_t unresolved_starts = 0;
  std::vector<P> fixed_points;
  bool zero_self_distances = false;  // sigma(a,a) = sigma(b,b) = sigma(a,b) = 0 for every pair found
  bool unique = false;
};

template <class P>
struct FixedPointResult {
  SolveStatus status = SolveStatus::no_branch_verified;
  Branch branch = Branch::none;
  std::optional<P> point;
  /// |sigma(a,a) - sigma(a,f(a))| + |sigma(a,f(a)) - sigma(f(a),f(a))|
  double residual = std::numeric_limits<double>::quiet_NaN();
  std::string message;

  std::optional<BranchHypotheses<P>> hypotheses;
  // Filled by the banach/kannan front-ends.
  std::string mode = "solve";
  double k = std::numeric_limits<double>::quiet_NaN();
  std::optional<PairCheck<P>> precondition;
  std::optional<ContractionCertificate> certificate;
  std::optional<UniquenessReport<P>> uniqueness;

  [[nodiscard]] bool found() const { return status == SolveStatus::fixed_point; }
};

template <DistanceSpace S>
struct SolveOutcome {
  OrbitReport<S> orbit;
  FixedPointResult<point_t<S>> result;
};

namespace detail {

inline bool axioms_hold(const FiniteSpace& space, double tol, std::string& why) {
  const auto report = classify(space, tol);
  if (report.satisfies(SpaceClass::m_metric)) return true;
  why = "space is not an M-metric (classifies as " + std::string(to_string(report.space_class)) + ")";
  return false;
}

inline bool axioms_hold(const FunctionalSpace& space, double tol, std::string& why) {
  const auto points = sample_points(space, 9);
  const auto report = classify(space.restrict(points), tol);
  if (report.satisfies(SpaceClass::m_metric)) return true;
  why = "sampled restriction of '" + space.name() + "' is not an M-metric";
  return false;
}

template <DistanceSpace S>
bool bounded_below_or_note(const S& space, double r0, double tol, std::string& note) {
  try {
    return check_bounded_below(space, r0, tol);
  } catch (const PreconditionError& e) {
    note = e.what();
    return false;
  }
}

}  // namespace detail

/// Iterates f from x0, locates the special limit a of the orbit, evaluates
/// the three hypothesis pairs of the fixed-point theorem and, when one holds,
/// verifies sigma(a,a) = sigma(a,f(a)) = sigma(f(a),f(a)) and f(a) = a.
///
/// Never fabricates: every failure comes back as a status with branch none
/// and no point. Uniqueness is not claimed.
template <DistanceSpace S>
SolveOutcome<S> solve_traced(const MapSystem<S>& sys, const SolveOptions& opts = {}) {
  if (opts.max_iter < 2) throw ArgumentError("max_iter must be >= 2");
  SolveOutcome<S> out;
  auto& res = out.result;
  const auto& space = sys.space;
  const double tol = opts.tol;

  std::string why;
  if (!detail::axioms_hold(space, kDefaultAxiomTol, why)) {
    res.status = SolveStatus::space_not_m_metric;
    res.message = why;
    return out;
  }

  out.orbit = trace_orbit(sys, opts.orbit());
  const auto& orbit = out.orbit;
  if (orbit.diverged) {
    res.status = SolveStatus::diverged;
    res.message = orbit.diagnostic;
    return out;
  }
  if (!orbit.cauchy.is_r_cauchy()) {
    res.status = SolveStatus::orbit_not_r_cauchy;
    res.message = orbit.diagnostic;
    return out;
  }
  if (!orbit.special_limit) {
    res.status = SolveStatus::no_special_limit;
    res.message = orbit.diagnostic;
    return out;
  }

  const auto a = *orbit.special_limit;
  BranchHypotheses<point_t<S>> hyp;
  hyp.woc = check_weak_orbital_continuity(sys, orbit, tol);
  const auto fa = hyp.woc.image;
  hyp.nonexpansive = check_nonexpansive(sys, opts.pair_samples, tol);
  hyp.self_at_image = space.sigma(fa, fa);
  hyp.self_at_limit = space.sigma(a, a);
  hyp.bounded_by_image = detail::bounded_below_or_note(space, hyp.self_at_image, tol, hyp.bound_note);
  hyp.bounded_by_limit = detail::bounded_below_or_note(space, hyp.self_at_limit, tol, hyp.bound_note);

  Branch chosen = Branch::none;
  if (opts.branch_hint && hyp.holds(*opts.branch_hint)) {
    chosen = *opts.branch_hint;
  } else {
    for (Branch b : {Branch::woc_and_nonexpansive, Branch::woc_and_bounded_by_ffa,
                     Branch::nonexpansive_and_bounded_by_aa}) {
      if (hyp.holds(b)) {
        chosen = b;
        break;
      }
    }
  }
  res.hypotheses = hyp;
  if (chosen == Branch::none) {
    res.status = SolveStatus::no_branch_verified;
    res.message = "special limit " + point_name(space, a) +
                  " found but no hypothesis pair of the theorem holds";
    return out;
  }

  const double saa = space.sigma(a, a);
  const double safa = space.sigma(a, fa);
  const double sfafa = space.sigma(fa, fa);
  res.residual = std::abs(saa - safa) + std::abs(safa - sfafa);
  if (res.residual > tol) {
    res.status = SolveStatus::conclusion_not_verified;
    res.message = "hypotheses hold but sigma(a,a), sigma(a,f(a)), sigma(f(a),f(a)) differ by " +
                  format_real(res.residual);
    return out;
  }
  if (!same_point(space, a, fa, opts.point_tolerance())) {
    res.status = SolveStatus::conclusion_not_verified;
    res.message = "sigma values agree but f(a) != a at " + point_name(space, a);
    return out;
  }
  res.status = SolveStatus::fixed_point;
  res.branch = chosen;
  res.point = a;
  res.message = "fixed point " + point_name(space, a) + " via " + std::string(to_string(chosen));
  return out;
}

template <DistanceSpace S>
FixedPointResult<point_t<S>> solve(const MapSystem<S>& sys, const SolveOptions& opts = {}) {
  return solve_traced(sys, opts).result;
}

/// 0 <= sigma(f(x), f(y)) <= k sigma(x, y) on every (sampled) pair.
template <DistanceSpace S>
PairCheck<point_t<S>> check_banach_condition(const MapSystem<S>& sys, double k,
                                             std::size_t samples = kDefaultPairSamples,
                                             double tol = kDefaultSequenceTol) {
  const auto& s = sys.space;
  auto image = [&](const auto& x, const auto& y) { return s.sigma(sys.apply(x), sys.apply(y)); };
  auto lower = check_pairs(s, samples, tol, [](const auto&, const auto&) { return 0.0; }, image);
  if (!lower.holds) return lower;
  return check_pairs(s, samples, tol, image,
                     [&](const auto& x, const auto& y) { return k * s.sigma(x, y); });
}

/// 0 <= sigma(f(x), f(y)) <= k [sigma(x, f(x)) + sigma(y, f(y))].
template <DistanceSpace S>
PairCheck<point_t<S>> check_kannan_condition(const MapSystem<S>& sys, double k,
                                             std::size_t samples = kDefaultPairSamples,
                                             double tol = kDefaultSequenceTol) {
  const auto& s = sys.space;
  auto image = [&](const auto& x, const auto& y) { return s.sigma(sys.apply(x), sys.apply(y)); };
  auto lower = check_pairs(s, samples, tol, [](const auto&, const auto&) { return 0.0; }, image);
  if (!lower.holds) return lower;
  return check_pairs(s, samples, tol, image, [&](const auto& x, const auto& y) {
    return k * (s.sigma(x, sys.apply(x)) + s.sigma(y, sys.apply(y)));
  });
}

namespace detail {

template <class P>
std::string pair_text(const FiniteSpace& s, const PairViolation<P>& w) {
  return "(" + point_name(s, w.x) + ", " + point_name(s, w.y) + "): " + format_real(w.lhs) +
         " > " + format_real(w.rhs);
}
template <class P>
std::string pair_text(const FunctionalSpace& s, const PairViolation<P>& w) {
  return "(" + point_name(s, w.x) + ", " + point_name(s, w.y) + "): " + format_real(w.lhs) +
         " > " + format_real(w.rhs);
}

template <DistanceSpace S>
void require_nonnegative(const S& space, std::size_t samples, double tol) {
  const auto check = check_pairs(space, samples, tol, [](const auto&, const auto&) { return 0.0; },
                                 [&](const auto& x, const auto& y) { return space.sigma(x, y); });
  if (!check.holds) {
    throw PreconditionError("space takes negative values at " + pair_text(space, *check.witness));
  }
}

inline void require_complete(const FiniteSpace&) {}
inline void require_complete(const FunctionalSpace& space) {
  if (!space.complete()) {
    throw PreconditionError("functional space '" + space.name() + "' is not declared complete");
  }
}

inline std::vector<std::size_t> fixed_point_candidates(const MapSystem<FiniteSpace>& sys,
                                                       const SolveOptions&, std::size_t& starts,
                                                       std::size_t& unresolved) {
  std::vector<std::size_t> out;
  starts = sys.space.size();
  unresolved = 0;
  for (std::size_t b = 0; b < sys.space.size(); ++b) {
    if (sys.apply(b) == b) out.push_back(b);
  }
  return out;
}

/// Deterministic starts over the domain (endpoints, then van der Corput),
/// each iterated to its special limit; collects the distinct fixed points.
inline std::vector<double> fixed_point_candidates(const MapSystem<FunctionalSpace>& sys,
                                                  const SolveOptions& opts, std::size_t& starts,
                                                  std::size_t& unresolved) {
  std::vector<double> out;
  const auto seeds = sample_points(sys.space, opts.uniqueness_starts);
  starts = seeds.size();
  unresolved = 0;
  for (double seed : seeds) {
    const auto report = trace_orbit(sys.with_base(seed), opts.orbit());
    if (!report.special_limit ||
        std::abs(sys.apply(*report.special_limit) - *report.special_limit) > opts.point_tolerance()) {
      ++unresolved;
      continue;
    }
    const double b = *report.special_limit;
    const bool known = std::any_of(out.begin(), out.end(), [&](double p) {
      return std::abs(p - b) <= opts.point_tolerance();
    });
    if (!known) out.push_back(b);
  }
  return out;
}

inline std::string_view uniqueness_method(const FiniteSpace&) { return "exhaustive"; }
inline std::string_view uniqueness_method(const FunctionalSpace&) { return "multi_start"; }

template <DistanceSpace S>
UniquenessReport<point_t<S>> uniqueness_scan(const MapSystem<S>& sys, const point_t<S>& a,
                                             const SolveOptions& opts) {
  UniquenessReport<point_t<S>> rep;
  rep.method = std::string(uniqueness_method(sys.space));
  rep.fixed_points = fixed_point_candidates(sys, opts, rep.starts, rep.unresolved_starts);
  const auto& s = sys.space;
  const double tol = opts.tol;
  rep.zero_self_distances = true;
  bool all_same = true;
  for (const auto& b : rep.fixed_points) {
    const bool zeros = std::abs(s.sigma(a, a)) <= tol && std::abs(s.sigma(b, b)) <= tol &&
                       std::abs(s.sigma(a, b)) <= tol;
    rep.zero_self_distances = rep.zero_self_distances && zeros;
    all_same = all_same && same_point(s, a, b, opts.point_tolerance());
  }
  rep.unique = all_same && rep.zero_self_distances && rep.unresolved_starts == 0 &&
               !rep.fixed_points.empty();
  return rep;
}

}  // namespace detail

/// Contraction front-end: 0 <= sigma(f x, f y) <= k sigma(x, y), 0 <= k < 1,
/// on a nonnegative complete (or finite) space.
///
/// Spot-checks the condition, certifies the orbit as a phi_0-contraction with
/// phi(t) = (1 - k) t, solves preferring the (woc, non-expansive) branch and
/// finally scans for a second fixed point.
template <DistanceSpace S>
SolveOutcome<S> banach_traced(const MapSystem<S>& sys, double k, SolveOptions opts = {}) {
  if (!(k >= 0.0 && k < 1.0)) throw ArgumentError("banach needs 0 <= k < 1");
  detail::require_complete(sys.space);
  detail::require_nonnegative(sys.space, opts.pair_samples, opts.tol);

  auto condition = check_banach_condition(sys, k, opts.pair_samples, opts.tol);
  if (!condition.holds) {
    throw PreconditionError("contraction condition sigma(fx,fy) <= k sigma(x,y) fails at " +
                            detail::pair_text(sys.space, *condition.witness));
  }
  auto cert = check_phi_r(sys, Phi::linear(1.0 - k), 0.0, opts.certificate_depth, opts.tol);
  if (!cert.certified()) {
    const auto& v = cert.violations.front();
    throw PreconditionError("orbit is not a phi_0-contraction: " + v.condition + " fails at (" +
                            std::to_string(v.i) + "," + std::to_string(v.j) + ")");
  }

  opts.branch_hint = opts.branch_hint.value_or(Branch::woc_and_nonexpansive);
  auto out = solve_traced(sys, opts);
  auto& res = out.result;
  res.mode = "banach";
  res.k = k;
  res.precondition = condition;
  res.certificate = cert;
  if (res.found()) res.uniqueness = detail::uniqueness_scan(sys, *res.point, opts);
  return out;
}

template <DistanceSpace S>
FixedPointResult<point_t<S>> banach(const MapSystem<S>& sys, double k, SolveOptions opts = {}) {
  return banach_traced(sys, k, std::move(opts)).result;
}

/// Kannan front-end: 0 <= sigma(f x, f y) <= k [sigma(x, f x) + sigma(y, f y)],
/// 0 <= k < 1/2. Certifies the orbit as a c_0-contraction with c = 2k, solves
/// preferring the (woc, bounded below by sigma(f(a), f(a))) branch, requires
/// sigma(f(a), f(a)) = 0, then scans for a second fixed point.
template <DistanceSpace S>
SolveOutcome<S> kannan_traced(const MapSystem<S>& sys, double k, SolveOptions opts = {}) {
  if (!(k >= 0.0 && k < 0.5)) throw ArgumentError("kannan needs 0 <= k < 1/2");
  detail::require_complete(sys.space);
  detail::require_nonnegative(sys.space, opts.pair_samples, opts.tol);

  auto condition = check_kannan_condition(sys, k, opts.pair_samples, opts.tol);
  if (!condition.holds) {
    throw PreconditionError("Kannan condition fails at " +
                            detail::pair_text(sys.space, *condition.witness));
  }
  // With k = 0 every image distance vanishes and any c in (0, 1) works.
  const double c = k > 0.0 ? 2.0 * k : 0.5;
  auto cert = check_c_r(sys, c, 0.0, opts.certificate_depth, opts.tol);
  if (!cert.certified()) {
    const auto& v = cert.violations.front();
    throw PreconditionError("orbit is not a c_0-contraction with c=" + format_real(c) + ": " +
                            v.condition + " fails at (" + std::to_string(v.i) + "," +
                            std::to_string(v.j) + ")");
  }

  opts.branch_hint = opts.branch_hint.value_or(Branch::woc_and_bounded_by_ffa);
  auto out = solve_traced(sys, opts);
  auto& res = out.result;
  res.mode = "kannan";
  res.k = k;
  res.precondition = condition;
  res.certificate = cert;
  if (res.found()) {
    const double self_at_image = sys.space.sigma(sys.apply(*res.point), sys.apply(*res.point));
    if (std::abs(self_at_image) > opts.tol) {
      res.status = SolveStatus::conclusion_not_verified;
      res.message = "sigma(f(a),f(a)) = " + format_real(self_at_image) + " is not 0";
      res.point.reset();
      res.branch = Branch::none;
      return out;
    }
    res.uniqueness = detail::uniqueness_scan(sys, *res.point, opts);
  }
  return out;
}

template <DistanceSpace S>
FixedPointResult<point_t<S>> kannan(const MapSystem<S>& sys, double k, SolveOptions opts = {}) {
  return kannan_traced(sys, k, std::move(opts)).result;
}

}  // namespace mmetric
