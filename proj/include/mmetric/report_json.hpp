#pragma once

#include <cmath>
#include <span>
#include <string>

#include <json.hpp>

#include "mmetric/contraction.hpp"
#include "mmetric/distance.hpp"
#include "mmetric/fixedpoint.hpp"
#include "mmetric/sequences.hpp"
#include "mmetric/topology.hpp"

namespace mmetric::report {

using nlohmann::json;

/// Non-finite reals become null.
inline json real(double v) { return std::isfinite(v) ? json(v) : json(); }

json reals(std::span<const double> values);
json to_json(const FiniteSpace& space, const ClassificationReport& report);
json to_json(const FiniteSpace& space, PointSet set);
json to_json(const FiniteSpace& space, const FiniteTopology& topology);
json to_json(const FiniteSpace& space, const TopologyComparison& comparison);
json to_json(const FiniteSpace& space, const SeparationReport& report);
json to_json(const CauchyVerdict& verdict);
json to_json(const LimitVerdict& verdict);
json to_json(const ContractionCertificate& cert);

template <DistanceSpace S>
json points(const S& space, std::span<const point_t<S>> pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_to_json(space, p));
  return out;
}

template <DistanceSpace S>
json to_json(const S& space, const PairCheck<point_t<S>>& check) {
  json out{{"holds", check.holds}, {"checked", check.checked}, {"exhaustive", check.exhaustive}};
  if (check.witness) {
    const auto& w = *check.witness;
    out["witness"] = {{"x", point_to_json(space, w.x)},
                      {"y", point_to_json(space, w.y)},
                      {"lhs", real(w.lhs)},
                      {"rhs", real(w.rhs)}};
  }
  return out;
}

template <DistanceSpace S>
json to_json(const S& space, const OrbitReport<S>& orbit) {
  json out{{"iterations", orbit.iterations},
           {"prefix_length", orbit.prefix.size()},
           {"stationary", orbit.stationary},
           {"diverged", orbit.diverged},
           {"cauchy", to_json(orbit.cauchy)}};
  const std::size_t shown = std::min<std::size_t>(orbit.prefix.size(), 8);
  out["prefix_head"] = points(space, std::span<const point_t<S>>(orbit.prefix.data(), shown));
  if (!orbit.prefix.empty()) out["last"] = point_to_json(space, orbit.prefix.back());
  out["special_limit"] = orbit.special_limit ? point_to_json(space, *orbit.special_limit) : json();
  if (orbit.special_limit_verdict) out["special_limit_verdict"] = to_json(*orbit.special_limit_verdict);
  if (!orbit.competing_special_limits.empty()) {
    out["competing_special_limits"] =
        points(space, std::span<const point_t<S>>(orbit.competing_special_limits));
  }
  if (!orbit.diagnostic.empty()) out["diagnostic"] = orbit.diagnostic;
  return out;
}

template <DistanceSpace S>
json to_json(const S& space, const WocReport<point_t<S>>& woc) {
  return {{"holds", woc.holds},
          {"special_limit", point_to_json(space, woc.special_limit)},
          {"image", point_to_json(space, woc.image)},
          {"image_verdict", to_json(woc.image_verdict)},
          {"sigma_a_a", real(woc.self_at_limit)},
          {"sigma_a_fa", real(woc.cross)},
          {"sigma_fa_fa", real(woc.self_at_image)},
          {"chain_holds", woc.chain_holds}};
}

template <DistanceSpace S>
json to_json(const S& space, const BranchHypotheses<point_t<S>>& h) {
  json out{{"weak_orbital_continuity", to_json(space, h.woc)},
           {"nonexpansive", to_json(space, h.nonexpansive)},
           {"bounded_below_by_sigma_fa_fa", {{"r0", real(h.self_at_image)}, {"holds", h.bounded_by_image}}},
           {"bounded_below_by_sigma_a_a", {{"r0", real(h.self_at_limit)}, {"holds", h.bounded_by_limit}}}};
  json branches = json::object();
  for (Branch b : {Branch::woc_and_nonexpansive, Branch::woc_and_bounded_by_ffa,
                   Branch::nonexpansive_and_bounded_by_aa}) {
    branches[std::string(to_string(b))] = h.holds(b);
  }
  out["branches"] = branches;
  if (!h.bound_note.empty()) out["bound_note"] = h.bound_note;
  return out;
}

template <DistanceSpace S>
json to_json(const S& space, const UniquenessReport<point_t<S>>& u) {
  return {{"method", u.method},
          {"starts", u.starts},
          {"unresolved_starts", u.unresolved_starts},
          {"fixed_points", points(space, std::span<const point_t<S>>(u.fixed_points))},
          {"zero_self_distances", u.zero_self_distances},
          {"unique", u.unique}};
}

template <DistanceSpace S>
json to_json(const S& space, const FixedPointResult<point_t<S>>& res,
             const OrbitReport<S>* orbit = nullptr) {
  json out{{"mode", res.mode},
           {"status", std::string(to_string(res.status))},
           {"branch", std::string(to_string(res.branch))},
           {"point", res.point ? point_to_json(space, *res.point) : json()},
           {"residual", real(res.residual)},
           {"message", res.message}};
  if (std::isfinite(res.k)) out["k"] = res.k;
  if (orbit) out["orbit"] = to_json(space, *orbit);
  if (res.hypotheses) out["hypotheses"] = to_json(space, *res.hypotheses);
  if (res.precondition) out["precondition"] = to_json(space, *res.precondition);
  if (res.certificate) out["certificate"] = to_json(*res.certificate);
  if (res.uniqueness) out["uniqueness"] = to_json(space, *res.uniqueness);
  return out;
}

}  // namespace mmetric::report
