#include "mmetric/report_json.hpp"

namespace mmetric::report {

json reals(std::span<const double> values) {
  json out = json::array();
  for (double v : values) out.push_back(real(v));
  return out;
}

json to_json(const FiniteSpace& space, const ClassificationReport& report) {
  json axioms = json::object();
  for (Axiom a : kAllAxioms) {
    const auto& r = report.result(a);
    json entry{{"pass", r.pass}, {"violations", r.violations}};
    if (r.witness) {
      json pts = json::array();
      for (auto p : r.witness->points) pts.push_back(space.label(p));
      entry["witness"] = {{"points", pts},
                          {"values", reals(r.witness->values)},
                          {"lhs", real(r.witness->lhs)},
                          {"rhs", real(r.witness->rhs)},
                          {"text", describe_violation(space, a, *r.witness)}};
    }
    axioms[std::string(to_string(a))] = entry;
  }
  return {{"class", std::string(to_string(report.space_class))},
          {"points", space.size()},
          {"tol", report.tol},
          {"axioms", axioms}};
}

json to_json(const FiniteSpace& space, PointSet set) { return labels_of(space, set); }

json to_json(const FiniteSpace& space, const FiniteTopology& topology) {
  json sets = json::array();
  for (auto u : topology.open_sets) sets.push_back(to_json(space, u));
  return {{"family", std::string(to_string(topology.family))},
          {"points", space.labels()},
          {"open_set_count", topology.open_sets.size()},
          {"open_sets", sets}};
}

json to_json(const FiniteSpace& space, const TopologyComparison& c) {
  json out{{"relation", std::string(to_string(c.relation))}};
  out["only_in_left"] = c.only_in_left ? to_json(space, *c.only_in_left) : json();
  out["only_in_right"] = c.only_in_right ? to_json(space, *c.only_in_right) : json();
  return out;
}

json to_json(const FiniteSpace& space, const SeparationReport& r) {
  json out{{"level", std::string(to_string(r.level))}};
  out["witness"] = r.witness ? json::array({space.label(r.witness->first), space.label(r.witness->second)})
                             : json();
  return out;
}

json to_json(const CauchyVerdict& v) {
  json out{{"status", std::string(to_string(v.status))},
           {"r", real(v.r)},
           {"tail_spread", real(v.tail_spread)},
           {"window", v.window},
           {"tol", v.tol},
           {"consecutive", reals(v.consecutive)},
           {"self_distances", reals(v.self_distances)},
           {"self_distance_levels", reals(v.self_distance_levels)}};
  if (v.oscillation_period) {
    out["oscillation"] = {{"period", *v.oscillation_period}, {"levels", reals(v.oscillation_levels)}};
  }
  if (v.is_r_cauchy()) {
    out["tail_consequences"] = {{"self_distance_deviation", real(v.self_distance_deviation)},
                                {"m_deviation", real(v.m_deviation)},
                                {"M_deviation", real(v.M_deviation)},
                                {"consistent", v.tail_limits_consistent}};
  }
  return out;
}

json to_json(const LimitVerdict& v) {
  return {{"is_limit", v.is_limit},
          {"is_special_limit", v.is_special_limit},
          {"residual", real(v.residual)},
          {"self_gap", real(v.self_gap)}};
}

json to_json(const ContractionCertificate& cert) {
  json out{{"kind", std::string(to_string(cert.kind))},
           {"requested", std::string(to_string(cert.requested))},
           {"certified", cert.certified()},
           {"r", real(cert.r)},
           {"checked_depth", cert.checked_depth},
           {"violation_count", cert.violation_count}};
  if (cert.requested == CertificateKind::c_r) out["c"] = real(cert.c);
  if (!cert.phi.empty()) out["phi"] = cert.phi;
  json vs = json::array();
  for (const auto& v : cert.violations) {
    vs.push_back({{"i", v.i}, {"j", v.j}, {"lhs", real(v.lhs)}, {"rhs", real(v.rhs)}, {"condition", v.condition}});
  }
  out["violations"] = vs;
  return out;
}

}  // namespace mmetric::report
