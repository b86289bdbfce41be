#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmetric/distance.hpp"
#include "mmetric/error.hpp"
#include "mmetric/map_system.hpp"
#include "mmetric/phi.hpp"
#include "mmetric/sampling.hpp"
#include "mmetric/sequences.hpp"

namespace mmetric {

inline constexpr std::size_t kDefaultCertificateDepth = 64;

enum class CertificateKind { c_r, phi_r, none };

inline std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::c_r: return "c_r";
    case CertificateKind::phi_r: return "phi_r";
    case CertificateKind::none: return "none";
  }
  return "?";
}

struct OrbitViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string condition;
};

/// Finite-depth attestation of an orbital contraction. `kind` is none
/// exactly when `violations` is non-empty. Only the first
/// kMaxStoredViolations are kept; `violation_count` has the total.
struct ContractionCertificate {
  static constexpr std::size_t kMaxStoredViolations = 32;

  CertificateKind kind = CertificateKind::none;
  CertificateKind requested = CertificateKind::none;
  double c = std::numeric_limits<double>::quiet_NaN();
  double r = 0.0;
  std::string phi;
  std::size_t checked_depth = 0;
  std::size_t violation_count = 0;
  std::vector<OrbitViolation> violations;

  [[nodiscard]] bool certified() const { return kind != CertificateKind::none; }

  void record(OrbitViolation v) {
    ++violation_count;
    if (violations.size() < kMaxStoredViolations) violations.push_back(std::move(v));
  }
};

/// Orbital c_r-contraction at x0, checked for i = 0..depth on the two
/// consecutive-index inequalities
///   r <= sigma(x_{i+1}, x_{i+1}) <= r + c^i |sigma(x_1, x_0)|
///   sigma(x_{i+2}, x_{i+1}) <= r + c^{i+1} |sigma(x_1, x_0)|
template <DistanceSpace S>
ContractionCertificate check_c_r(const MapSystem<S>& sys, double c, double r,
                                 std::size_t depth = kDefaultCertificateDepth,
                                 double tol = kDefaultSequenceTol) {
  if (!(c > 0.0 && c < 1.0)) throw ArgumentError("c must lie in (0, 1)");
  if (depth < 2) throw ArgumentError("certificate depth must be >= 2");
  const auto xs = orbit(sys, depth + 3);
  const auto& space = sys.space;
  const double base = std::abs(space.sigma(xs[1], xs[0]));

  ContractionCertificate cert;
  cert.requested = CertificateKind::c_r;
  cert.c = c;
  cert.r = r;
  cert.checked_depth = depth;
  for (std::size_t i = 0; i <= depth; ++i) {
    const double self = space.sigma(xs[i + 1], xs[i + 1]);
    const double step = space.sigma(xs[i + 2], xs[i + 1]);
    const double envelope = r + std::pow(c, static_cast<double>(i)) * base;
    const double next_envelope = r + std::pow(c, static_cast<double>(i + 1)) * base;
    if (r > self + tol) cert.record({i + 1, i + 1, r, self, "r <= sigma(x_{i+1},x_{i+1})"});
    if (self > envelope + tol) {
      cert.record({i + 1, i + 1, self, envelope, "sigma(x_{i+1},x_{i+1}) <= r + c^i|sigma(x_1,x_0)|"});
    }
    if (step > next_envelope + tol) {
      cert.record({i + 2, i + 1, step, next_envelope,
                   "sigma(x_{i+2},x_{i+1}) <= r + c^{i+1}|sigma(x_1,x_0)|"});
    }
  }
  if (cert.violation_count == 0) cert.kind = CertificateKind::c_r;
  return cert;
}

/// Orbital phi_r-contraction at x0, checked for all 0 <= i, j <= depth:
///   r <= sigma(x_{i+1}, x_{j+1}) <= sigma(x_i, x_j) - phi(sigma(x_i, x_j)).
/// phi is first validated on a 256-point grid over [r, max sigma on the
/// orbit]; a phi failing its own contract raises PreconditionError.
template <DistanceSpace S>
ContractionCertificate check_phi_r(const MapSystem<S>& sys, const Phi& phi, double r,
                                   std::size_t depth = kDefaultCertificateDepth,
                                   double tol = kDefaultSequenceTol) {
  if (depth < 2) throw ArgumentError("certificate depth must be >= 2");
  const auto xs = orbit(sys, depth + 2);
  const auto& space = sys.space;

  double top = r;
  for (std::size_t i = 0; i <= depth + 1; ++i) {
    for (std::size_t j = 0; j <= depth + 1; ++j) top = std::max(top, space.sigma(xs[i], xs[j]));
  }
  const auto contract = validate_phi(phi, r, top - r);
  if (!contract.ok) throw PreconditionError("phi contract violated: " + contract.failure);

  ContractionCertificate cert;
  cert.requested = CertificateKind::phi_r;
  cert.r = r;
  cert.phi = phi.name();
  cert.checked_depth = depth;
  for (std::size_t i = 0; i <= depth; ++i) {
    for (std::size_t j = 0; j <= depth; ++j) {
      const double before = space.sigma(xs[i], xs[j]);
      const double after = space.sigma(xs[i + 1], xs[j + 1]);
      if (r > after + tol) cert.record({i + 1, j + 1, r, after, "r <= sigma(x_{i+1},x_{j+1})"});
      if (before < r - tol) {
        cert.record({i, j, before, r, "sigma(x_i,x_j) inside the domain [r, inf) of phi"});
        continue;
      }
      const double bound = before - phi(std::max(before, r));
      if (after > bound + tol) {
        cert.record({i + 1, j + 1, after, bound,
                     "sigma(x_{i+1},x_{j+1}) <= sigma(x_i,x_j) - phi(sigma(x_i,x_j))"});
      }
    }
  }
  if (cert.violation_count == 0) cert.kind = CertificateKind::phi_r;
  return cert;
}

template <class P>
struct PairViolation {
  P x{};
  P y{};
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Outcome of a pairwise inequality check: exhaustive on finite spaces,
/// sampled on the real line. The witness is the first failing pair.
template <class P>
struct PairCheck {
  bool holds = true;
  std::size_t checked = 0;
  bool exhaustive = false;
  std::optional<PairViolation<P>> witness;

  explicit operator bool() const { return holds; }
};

/// Runs `lhs(x, y) <= rhs(x, y) + tol` over the pair sample of the space.
template <DistanceSpace S, class Lhs, class Rhs>
PairCheck<point_t<S>> check_pairs(const S& space, std::size_t samples, double tol, Lhs&& lhs,
                                  Rhs&& rhs) {
  const auto sample = sample_pairs(space, samples);
  PairCheck<point_t<S>> out;
  out.exhaustive = sample.exhaustive;
  for (const auto& [x, y] : sample.pairs) {
    ++out.checked;
    const double l = lhs(x, y);
    const double r = rhs(x, y);
    if (l > r + tol || std::isnan(l) || std::isnan(r)) {
      out.holds = false;
      out.witness = PairViolation<point_t<S>>{x, y, l, r};
      break;
    }
  }
  return out;
}

/// sigma(f(x), f(y)) <= sigma(x, y) on every (sampled) pair.
template <DistanceSpace S>
PairCheck<point_t<S>> check_nonexpansive(const MapSystem<S>& sys,
                                         std::size_t samples = kDefaultPairSamples,
                                         double tol = kDefaultSequenceTol) {
  if (samples == 0) throw ArgumentError("sample budget must be >= 1");
  const auto& s = sys.space;
  return check_pairs(
      s, samples, tol,
      [&](const auto& x, const auto& y) { return s.sigma(sys.apply(x), sys.apply(y)); },
      [&](const auto& x, const auto& y) { return s.sigma(x, y); });
}

/// Exhaustive: every table entry >= r0 - tol.
bool check_bounded_below(const FiniteSpace& space, double r0, double tol = 0.0);

/// Uses the declared lower bound: declared >= r0 - tol. An r0 of -infinity
/// always holds; otherwise a space without a declaration raises
/// PreconditionError.
bool check_bounded_below(const FunctionalSpace& space, double r0, double tol = 0.0);

template <class P>
struct WocReport {
  bool holds = false;
  P special_limit{};
  P image{};  // f(special_limit)
  LimitVerdict image_verdict;
  double self_at_limit = 0.0;   // sigma(a, a)
  double cross = 0.0;           // sigma(a, f(a))
  double self_at_image = 0.0;   // sigma(f(a), f(a))
  /// sigma(a,a) <= sigma(a,f(a)) <= sigma(f(a),f(a)) within tol; expected
  /// whenever `holds`.
  bool chain_holds = false;
};

/// Weak orbital continuity at x0: f(a) must be a limit (not necessarily a
/// special one) of the orbit whose special limit is a.
template <DistanceSpace S>
WocReport<point_t<S>> check_weak_orbital_continuity(const MapSystem<S>& sys,
                                                     const OrbitReport<S>& orbit_report,
                                                     double tol = kDefaultSequenceTol) {
  if (!orbit_report.special_limit) {
    throw PreconditionError("weak orbital continuity needs the orbit's special limit; " +
                            (orbit_report.diagnostic.empty() ? std::string("none identified")
                                                             : orbit_report.diagnostic));
  }
  const auto& s = sys.space;
  WocReport<point_t<S>> out;
  out.special_limit = *orbit_report.special_limit;
  out.image = sys.apply(out.special_limit);
  out.image_verdict = is_limit(s, std::span<const point_t<S>>(orbit_report.prefix),
                               orbit_report.cauchy, out.image, tol);
  out.holds = out.image_verdict.is_limit;
  out.self_at_limit = s.sigma(out.special_limit, out.special_limit);
  out.cross = s.sigma(out.special_limit, out.image);
  out.self_at_image = s.sigma(out.image, out.image);
  out.chain_holds = out.self_at_limit <= out.cross + tol && out.cross <= out.self_at_image + tol;
  return out;
}

template <DistanceSpace S>
WocReport<point_t<S>> check_weak_orbital_continuity(const MapSystem<S>& sys, std::size_t depth,
                                                     double tol = kDefaultSequenceTol) {
  OrbitOptions opts;
  opts.max_iter = depth;
  opts.tol = tol;
  opts.window = std::min(kDefaultWindow, (depth + 1) / 2);
  return check_weak_orbital_continuity(sys, trace_orbit(sys, opts), tol);
}

}  // namespace mmetric
