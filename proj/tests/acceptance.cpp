// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mmetric/contraction.hpp"
#include "mmetric/corpus.hpp"
#include "mmetric/distance.hpp"
#include "mmetric/fixedpoint.hpp"
#include "mmetric/spacegen.hpp"
#include "mmetric/topology.hpp"

using namespace mmetric;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

FiniteSpace gen(std::uint64_t seed, std::size_t max_n, bool partial) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.n = 1 + seed % max_n;
  return partial ? gen_partial_metric(cfg) : gen_m_metric(cfg);
}

template <class S>
const MapSystem<S>& system_of(const corpus::Entry& e) {
  return std::get<MapSystem<S>>(e.payload);
}

Check two_point_space() {
  Check c;
  const auto e2a = std::get<FiniteSpace>(corpus::get("e2a").payload);
  const auto start = Clock::now();
  const auto rep = classify(e2a, 0.0);
  const auto star = sigma_star(e2a, 0.0);
  const auto star_rep = classify(star, 0.0);
  const double ms = elapsed_ms(start);
  c.require(rep.space_class == SpaceClass::m_metric, "e2a does not classify as m_metric");
  c.require(star_rep.space_class != SpaceClass::metric, "sigma_star(e2a) classifies as metric");
  c.require(!star_rep.passes(Axiom::sigma_sep), "no separation failure on sigma_star(e2a)");
  if (!star_rep.passes(Axiom::sigma_sep)) {
    const auto& w = star_rep.result(Axiom::sigma_sep).witness->points;
    c.require(w.size() == 2 && w[0] != w[1] && star.sigma(w[0], w[1]) == 0.0,
              "witness is not a pair of distinct points at distance 0");
  }
  c.require(ms < 1.0, "took " + std::to_string(ms) + " ms");
  return c;
}

Check alternating_sequence() {
  Check c;
  const auto entry = corpus::get("e2b_alternating");
  const auto& seq = std::get<corpus::FiniteSequence>(entry.payload);
  c.require(seq.terms.size() == 64, "prefix length is not 64");
  const auto v = cauchy_analyze(seq.space, seq.terms);
  c.require(v.status == CauchyStatus::not_cauchy, "status is " + std::string(to_string(v.status)));
  for (double d : v.consecutive) c.require(d == 0.0, "consecutive tail distance is not 0");
  c.require(v.self_distance_levels == std::vector<double>{0.0, 1.0}, "self distances do not oscillate on {0,1}");
  return c;
}

Check negative_sumline() {
  Check c;
  const auto s = corpus::sumline({-1, 0, 1, 2});
  const auto rep = classify(s, 0.0);
  c.require(rep.space_class == SpaceClass::m_metric, "sumline{-1,0,1,2} is not m_metric");
  c.require(!rep.passes(Axiom::p_lbnd) && rep.result(Axiom::p_lbnd).witness.has_value(),
            "no p_lbnd witness");
  if (rep.result(Axiom::p_lbnd).witness) {
    const auto& w = rep.result(Axiom::p_lbnd).witness->points;
    c.require(s.sigma(w[0], w[0]) > s.sigma(w[0], w[1]), "witness does not violate p_lbnd");
  }
  return c;
}

Check induced_partial_suite() {
  Check c;
  const auto start = Clock::now();
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto p = induce_partial(gen(seed, 6, false));
    c.require(classify(p, 1e-9).satisfies(SpaceClass::partial_metric), "seed " + std::to_string(seed));
  }
  const double ms = elapsed_ms(start);
  c.require(ms < 10'000.0, "took " + std::to_string(ms) + " ms");
  return c;
}

Check sigma_star_suite() {
  Check c;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto star = sigma_star(gen(seed, 6, true), 1e-9);
    c.require(classify(star, 1e-9).space_class == SpaceClass::metric, "seed " + std::to_string(seed));
  }
  return c;
}

Check sumline_topologies() {
  Check c;
  const auto s = corpus::sumline({0, 1, 2, 3});
  const auto cmp = compare(s, BallFamily::m_open, BallFamily::induced_p);
  c.require(cmp.relation == Relation::left_strictly_coarser,
            "relation is " + std::string(to_string(cmp.relation)));
  c.require(cmp.only_in_right.has_value(), "no strictness witness");
  if (cmp.only_in_right) {
    c.require(generate_topology(s, BallFamily::induced_p).is_open(*cmp.only_in_right),
              "witness not open for induced_p");
    c.require(!generate_topology(s, BallFamily::m_open).is_open(*cmp.only_in_right),
              "witness open for m_open");
  }
  return c;
}

Check topology_suites() {
  Check c;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto s = gen(seed, 5, false);
    const auto t_sigma = generate_topology(s, BallFamily::m_open);
    const auto t_p = generate_topology(s, BallFamily::induced_p);
    for (const auto& u : t_sigma.open_sets) c.require(t_p.is_open(u), "T_sigma not inside T_p, seed " + std::to_string(seed));
    c.require(separation(t_sigma).level != Separation::not_T0, "not T0, seed " + std::to_string(seed));

    const auto p = gen(seed, 5, true);
    const auto a = generate_topology(p, BallFamily::m_open);
    const auto b = generate_topology(p, BallFamily::standard_p);
    c.require(a.open_sets == b.open_sets, "T_sigma != T_s on partial, seed " + std::to_string(seed));
    c.require(separation(a).level != Separation::not_T0, "partial not T0, seed " + std::to_string(seed));
  }
  return c;
}

Check basis_property() {
  Check c;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = gen(seed, 6, false);
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::vector<double> radii = ball_radii(s, BallFamily::m_open, x);
      for (std::size_t y = 0; y < s.size(); ++y) {
        const double e = ball_expression(s, BallFamily::m_open, x, y);
        if (e > 0.0) radii.push_back(e);  // thresholds themselves
      }
      for (double eps : radii) {
        const auto outer = ball(s, BallFamily::m_open, x, eps);
        for (auto y : outer.indices()) {
          const double delta = eps - s.sigma(x, y) - s.sigma(y, y) + m_of(s, x, y) + s.sigma(x, x);
          c.require(delta > 0.0 && ball(s, BallFamily::m_open, y, delta).subset_of(outer),
                    "seed " + std::to_string(seed));
        }
      }
    }
  }
  return c;
}

template <class S>
void cross_check(Check& c, const corpus::Entry& e, const MapSystem<S>& sys, std::size_t& seen) {
  for (const auto& [key, value] : e.expected) {
    if (key.rfind("certify:", 0) != 0 || value != "certified") continue;
    const auto outcome = corpus::verify(e);
    for (const auto& o : outcome) {
      if (o.key == key) c.require(o.pass, e.name + " " + key + " not certified");
    }
    // c_r:<c>:<r> or phi_r:<r>:<phi>
    const std::string rest = key.substr(std::string("certify:").size());
    double r = 0.0;
    if (rest.rfind("c_r:", 0) == 0) {
      r = std::stod(rest.substr(rest.find(':', 4) + 1));
    } else {
      r = std::stod(rest.substr(6, rest.find(':', 6) - 6));
    }
    const auto terms = orbit(sys, kDefaultCertificateDepth + 1);
    const auto v = cauchy_analyze(sys.space, terms);
    c.require(v.is_r_cauchy(), e.name + " orbit is not r-Cauchy");
    c.require(std::abs(v.r - r) <= 1e-6, e.name + " r_hat off by " + std::to_string(std::abs(v.r - r)));
    ++seen;
  }
}

Check certified_orbits() {
  Check c;
  std::size_t seen = 0;
  for (const auto& name : corpus::list()) {
    const auto e = corpus::get(name);
    if (const auto* f = std::get_if<MapSystem<FunctionalSpace>>(&e.payload)) cross_check(c, e, *f, seen);
    if (const auto* f = std::get_if<MapSystem<FiniteSpace>>(&e.payload)) cross_check(c, e, *f, seen);
  }
  c.require(seen > 0, "no certified corpus systems");
  return c;
}

Check banach_halving() {
  Check c;
  const auto entry = corpus::get("halving");
  const auto start = Clock::now();
  const auto res = banach(system_of<FunctionalSpace>(entry), 0.5);
  const double ms = elapsed_ms(start);
  c.require(res.found(), res.message);
  if (res.found()) {
    c.require(*res.point == 0.0, "point is " + std::to_string(*res.point));
    c.require(res.residual <= 1e-9, "residual " + std::to_string(res.residual));
    c.require(res.uniqueness && res.uniqueness->starts == 64 && res.uniqueness->unique,
              "uniqueness scan disagrees");
  }
  c.require(ms < 100.0, "took " + std::to_string(ms) + " ms");
  return c;
}

Check kannan_quartering() {
  Check c;
  const auto res = kannan(system_of<FunctionalSpace>(corpus::get("quartering")), 0.25);
  c.require(res.found() && *res.point == 0.0, "quartering: " + res.message);
  const auto& halving = system_of<FunctionalSpace>(corpus::get("halving"));
  const auto check = check_kannan_condition(halving, 0.2);
  c.require(!check.holds && check.witness.has_value(), "x/2 accepted at k=0.2");
  if (check.witness) {
    c.require(check.witness->x == 0.0 && check.witness->y == 1.0, "witness pair is not (0, 1)");
    c.require(check.witness->lhs == 0.5, "lhs is not sigma(0, 0.5) = 0.5");
  }
  bool rejected = false;
  try {
    kannan(halving, 0.2);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  c.require(rejected, "kannan front-end accepted x/2 at k=0.2");
  return c;
}

Check special_limit_uniqueness() {
  Check c;
  std::size_t seen = 0;
  for (const auto& name : corpus::list()) {
    const auto e = corpus::get(name);
    const auto* sys = std::get_if<MapSystem<FiniteSpace>>(&e.payload);
    if (!sys) continue;
    for (std::size_t x0 = 0; x0 < sys->space.size(); ++x0) {
      const auto rep = trace_orbit(sys->with_base(x0));
      if (!rep.special_limit) continue;
      ++seen;
      std::vector<std::size_t> all(sys->space.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      const auto found = special_limits(sys->space, std::span<const std::size_t>(rep.prefix), rep.cauchy,
                                        std::span<const std::size_t>(all));
      c.require(found.size() == 1, name + " from " + std::to_string(x0) + ": " +
                                       std::to_string(found.size()) + " special limits");
    }
  }
  c.require(seen > 0, "no finite system with a special limit");
  return c;
}

Check no_fabrication() {
  Check c;
  const auto res = solve(system_of<FiniteSpace>(corpus::get("e2b_swap")));
  c.require(res.message.find("orbit not r-Cauchy") != std::string::npos, "message: " + res.message);
  c.require(res.branch == Branch::none, "branch is " + std::string(to_string(res.branch)));
  c.require(!res.point.has_value(), "a point was reported");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"two-point space classification and sigma_star witness", two_point_space},
      {"alternating orbit is not Cauchy", alternating_sequence},
      {"sumline{-1,0,1,2} is an M-metric with a p_lbnd witness", negative_sumline},
      {"induced partial metric suite (1000 spaces)", induced_partial_suite},
      {"sigma_star of partial metrics (500 spaces)", sigma_star_suite},
      {"sumline topologies strictly nested", sumline_topologies},
      {"topology inclusion, equality and T0 suites", topology_suites},
      {"M-open basis property (200 spaces)", basis_property},
      {"certified corpus orbits are r-Cauchy", certified_orbits},
      {"banach on halving", banach_halving},
      {"kannan on quartering and rejection of x/2", kannan_quartering},
      {"special limits unique on finite corpus systems", special_limit_uniqueness},
      {"no fixed point fabricated on the alternating system", no_fabrication},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2zu %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                c.ok ? "" : " -- ", c.detail.c_str());
    failed += c.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
