#include "mmetric/topology.hpp"

#include <algorithm>

#include "mmetric/error.hpp"

namespace mmetric {

PointSet PointSet::of(std::initializer_list<std::size_t> points) {
  PointSet out;
  for (auto p : points) out.insert(p);
  return out;
}

std::vector<std::size_t> PointSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kCapacity; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string_view to_string(BallFamily f) {
  switch (f) {
    case BallFamily::asadi: return "asadi";
    case BallFamily::m_open: return "m_open";
    case BallFamily::induced_p: return "induced_p";
    case BallFamily::standard_p: return "standard_p";
  }
  return "?";
}

std::optional<BallFamily> parse_ball_family(std::string_view s) {
  for (auto f : {BallFamily::asadi, BallFamily::m_open, BallFamily::induced_p,
                 BallFamily::standard_p}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::left_strictly_coarser: return "left_strictly_coarser";
    case Relation::left_strictly_finer: return "left_strictly_finer";
    case Relation::incomparable: return "incomparable";
  }
  return "?";
}

std::string_view to_string(Separation s) {
  switch (s) {
    case Separation::not_T0: return "not_T0";
    case Separation::T0_not_T1: return "T0_not_T1";
    case Separation::T1: return "T1";
  }
  return "?";
}

double ball_expression(const FiniteSpace& space, BallFamily family, std::size_t x, std::size_t y) {
  const double sxy = space.sigma(x, y);
  const double sxx = space.sigma(x, x);
  const double syy = space.sigma(y, y);
  const double m = std::min(sxx, syy);
  const double M = std::max(sxx, syy);
  switch (family) {
    case BallFamily::asadi: return sxy - m;
    case BallFamily::m_open: return sxy + syy - m - sxx;
    case BallFamily::induced_p: return sxy + M - m - sxx;
    case BallFamily::standard_p: return sxy - sxx;
  }
  return sxy;
}

namespace {

void check_capacity(const FiniteSpace& space, std::size_t cap) {
  if (space.size() > cap) {
    throw CapacityError("space has " + std::to_string(space.size()) +
                        " points; the limit here is " + std::to_string(cap));
  }
}

void check_family(const FiniteSpace& space, BallFamily family, double tol) {
  if (family != BallFamily::standard_p) return;
  const auto report = classify(space, tol);
  if (!report.satisfies(SpaceClass::partial_metric)) {
    throw PreconditionError("standard_p balls need a partial metric; space classifies as " +
                            std::string(to_string(report.space_class)));
  }
}

PointSet ball_unchecked(const FiniteSpace& space, BallFamily family, std::size_t x, double eps) {
  PointSet out;
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (ball_expression(space, family, x, y) < eps) out.insert(y);
  }
  return out;
}

std::vector<PointSet> distinct_balls(const FiniteSpace& space, BallFamily family, std::size_t x) {
  std::vector<PointSet> out;
  for (double r : ball_radii(space, family, x)) out.push_back(ball_unchecked(space, family, x, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PointSet ball(const FiniteSpace& space, BallFamily family, std::size_t x, double eps, double tol) {
  if (!(eps > 0.0)) throw ArgumentError("ball radius must be > 0");
  if (!space.contains(x)) throw UnknownPoint("ball center index out of range");
  check_capacity(space, PointSet::kCapacity);
  check_family(space, family, tol);
  return ball_unchecked(space, family, x, eps);
}

std::vector<double> ball_radii(const FiniteSpace& space, BallFamily family, std::size_t x) {
  std::vector<double> thresholds;
  for (std::size_t y = 0; y < space.size(); ++y) {
    const double v = ball_expression(space, family, x, y);
    if (v > 0.0) thresholds.push_back(v);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  if (thresholds.empty()) return {1.0};
  std::vector<double> radii;
  radii.push_back(thresholds.front() / 2.0);
  for (std::size_t k = 0; k + 1 < thresholds.size(); ++k) {
    radii.push_back(thresholds[k] + (thresholds[k + 1] - thresholds[k]) / 2.0);
  }
  radii.push_back(thresholds.back() + 1.0);
  return radii;
}

bool FiniteTopology::is_open(PointSet u) const {
  return std::binary_search(open_sets.begin(), open_sets.end(), u);
}

FiniteTopology generate_topology(const FiniteSpace& space, BallFamily family,
                                 const TopologyOptions& opts) {
  check_capacity(space, std::min(opts.max_points, std::size_t{24}));
  check_family(space, family, opts.tol);

  const std::size_t n = space.size();
  std::vector<std::vector<PointSet>> balls(n);
  for (std::size_t x = 0; x < n; ++x) balls[x] = distinct_balls(space, family, x);

  FiniteTopology topo;
  topo.n = n;
  topo.family = family;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const PointSet u(bits);
    bool open = true;
    for (std::size_t x = 0; x < n && open; ++x) {
      if (!u.contains(x)) continue;
      open = std::any_of(balls[x].begin(), balls[x].end(),
                         [&](PointSet b) { return b.subset_of(u); });
    }
    if (open) topo.open_sets.push_back(u);
  }
  return topo;
}

TopologyComparison compare(const FiniteTopology& left, const FiniteTopology& right) {
  if (left.n != right.n) throw ArgumentError("topologies live on different spaces");
  TopologyComparison out;
  for (PointSet u : left.open_sets) {
    if (!right.is_open(u)) {
      out.only_in_left = u;
      break;
    }
  }
  for (PointSet u : right.open_sets) {
    if (!left.is_open(u)) {
      out.only_in_right = u;
      break;
    }
  }
  if (!out.only_in_left && !out.only_in_right) {
    out.relation = Relation::equal;
  } else if (!out.only_in_left) {
    out.relation = Relation::left_strictly_coarser;
  } else if (!out.only_in_right) {
    out.relation = Relation::left_strictly_finer;
  } else {
    out.relation = Relation::incomparable;
  }
  return out;
}

TopologyComparison compare(const FiniteSpace& space, BallFamily left, BallFamily right,
                           const TopologyOptions& opts) {
  return compare(generate_topology(space, left, opts), generate_topology(space, right, opts));
}

SeparationReport separation(const FiniteTopology& topology) {
  const std::size_t n = topology.n;
  // separated[x][y]: some open set contains x but not y.
  std::vector<std::vector<bool>> separated(n, std::vector<bool>(n, false));
  for (PointSet u : topology.open_sets) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!u.contains(x)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (!u.contains(y)) separated[x][y] = true;
      }
    }
  }
  SeparationReport report;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!separated[x][y] && !separated[y][x]) {
        return {Separation::not_T0, std::make_pair(x, y)};
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && !separated[x][y]) return {Separation::T0_not_T1, std::make_pair(x, y)};
    }
  }
  return report;
}

SeparationReport separation(const FiniteSpace& space, BallFamily family,
                            const TopologyOptions& opts) {
  return separation(generate_topology(space, family, opts));
}

bool asadi_finer_check(const FiniteSpace& space, const TopologyOptions& opts) {
  check_family(space, BallFamily::standard_p, opts.tol);
  const auto asadi = generate_topology(space, BallFamily::asadi, opts);
  const auto standard = generate_topology(space, BallFamily::standard_p, opts);
  return std::all_of(standard.open_sets.begin(), standard.open_sets.end(),
                     [&](PointSet u) { return asadi.is_open(u); });
}

std::vector<std::string> labels_of(const FiniteSpace& space, PointSet set) {
  std::vector<std::string> out;
  for (std::size_t i : set.indices()) {
    if (i < space.size()) out.push_back(space.label(i));
  }
  return out;
}

}  // namespace mmetric
