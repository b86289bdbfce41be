#include "mmetric/distance.hpp"

#include <cmath>
#include <sstream>

#include "mmetric/error.hpp"

namespace mmetric {

double m_of(const FiniteSpace& space, std::string_view x, std::string_view y) {
  return m_of(space, space.index_of(x), space.index_of(y));
}

double M_of(const FiniteSpace& space, std::string_view x, std::string_view y) {
  return M_of(space, space.index_of(x), space.index_of(y));
}

std::string_view to_string(SpaceClass c) {
  switch (c) {
    case SpaceClass::none: return "none";
    case SpaceClass::m_metric: return "m_metric";
    case SpaceClass::partial_metric: return "partial_metric";
    case SpaceClass::metric: return "metric";
  }
  return "none";
}

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::sigma_lbnd: return "sigma_lbnd";
    case Axiom::sigma_sym: return "sigma_sym";
    case Axiom::sigma_sep: return "sigma_sep";
    case Axiom::sigma_inq: return "sigma_inq";
    case Axiom::p_lbnd: return "p_lbnd";
    case Axiom::p_sym: return "p_sym";
    case Axiom::p_sep: return "p_sep";
    case Axiom::p_inq: return "p_inq";
    case Axiom::zero_self_distance: return "zero_self_distance";
  }
  return "?";
}

std::optional<SpaceClass> parse_space_class(std::string_view s) {
  for (auto c : {SpaceClass::none, SpaceClass::m_metric, SpaceClass::partial_metric,
                 SpaceClass::metric}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

namespace {

class Recorder {
 public:
  explicit Recorder(AxiomResult& slot) : slot_(slot) {}

  void fail(std::vector<std::size_t> points, std::vector<double> values, double lhs, double rhs) {
    if (slot_.pass) slot_.witness = AxiomWitness{std::move(points), std::move(values), lhs, rhs};
    slot_.pass = false;
    ++slot_.violations;
  }

 private:
  AxiomResult& slot_;
};

}  // namespace

ClassificationReport classify(const FiniteSpace& space, double tol) {
  if (!(tol >= 0.0)) throw ArgumentError("tolerance must be >= 0");
  ClassificationReport report;
  report.tol = tol;
  auto slot = [&](Axiom a) { return Recorder(report.axioms[static_cast<std::size_t>(a)]); };

  const std::size_t n = space.size();
  auto s = [&](std::size_t i, std::size_t j) { return space.sigma(i, j); };
  auto m = [&](std::size_t i, std::size_t j) { return m_of(space, i, j); };

  Recorder sigma_lbnd = slot(Axiom::sigma_lbnd);
  Recorder p_lbnd = slot(Axiom::p_lbnd);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (m(x, y) > s(x, y) + tol) sigma_lbnd.fail({x, y}, {s(x, x), s(y, y), s(x, y)}, m(x, y), s(x, y));
      if (s(x, x) > s(x, y) + tol) p_lbnd.fail({x, y}, {s(x, x), s(x, y)}, s(x, x), s(x, y));
    }
  }

  Recorder sigma_sym = slot(Axiom::sigma_sym);
  Recorder p_sym = slot(Axiom::p_sym);
  Recorder sigma_sep = slot(Axiom::sigma_sep);
  Recorder p_sep = slot(Axiom::p_sep);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const double asym = std::abs(s(x, y) - s(y, x));
      if (asym > tol) {
        sigma_sym.fail({x, y}, {s(x, y), s(y, x)}, s(x, y), s(y, x));
        p_sym.fail({x, y}, {s(x, y), s(y, x)}, s(x, y), s(y, x));
      }
      const double spread = std::max(std::abs(s(x, x) - s(x, y)), std::abs(s(y, y) - s(x, y)));
      if (spread <= tol) {
        sigma_sep.fail({x, y}, {s(x, x), s(x, y), s(y, y)}, spread, tol);
        p_sep.fail({x, y}, {s(x, x), s(x, y), s(y, y)}, spread, tol);
      }
    }
  }

  Recorder sigma_inq = slot(Axiom::sigma_inq);
  Recorder p_inq = slot(Axiom::p_inq);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const double lhs_m = s(x, y) - m(x, y);
        const double rhs_m = (s(x, z) - m(x, z)) + (s(z, y) - m(z, y));
        if (lhs_m > rhs_m + tol) {
          sigma_inq.fail({x, y, z}, {s(x, y), s(x, z), s(z, y), s(x, x), s(y, y), s(z, z)}, lhs_m,
                         rhs_m);
        }
        const double rhs_p = s(x, z) + s(z, y) - s(z, z);
        if (s(x, y) > rhs_p + tol) {
          p_inq.fail({x, y, z}, {s(x, y), s(x, z), s(z, y), s(z, z)}, s(x, y), rhs_p);
        }
      }
    }
  }

  Recorder zero = slot(Axiom::zero_self_distance);
  for (std::size_t x = 0; x < n; ++x) {
    if (std::abs(s(x, x)) > tol) zero.fail({x}, {s(x, x)}, std::abs(s(x, x)), tol);
  }

  auto all = [&](std::initializer_list<Axiom> axioms) {
    for (Axiom a : axioms) {
      if (!report.passes(a)) return false;
    }
    return true;
  };
  const bool m_metric =
      all({Axiom::sigma_lbnd, Axiom::sigma_sym, Axiom::sigma_sep, Axiom::sigma_inq});
  const bool partial =
      m_metric && all({Axiom::p_lbnd, Axiom::p_sym, Axiom::p_sep, Axiom::p_inq});
  const bool metric = partial && report.passes(Axiom::zero_self_distance);
  report.space_class = metric    ? SpaceClass::metric
                       : partial ? SpaceClass::partial_metric
                       : m_metric ? SpaceClass::m_metric
                                  : SpaceClass::none;
  return report;
}

std::string describe_violation(const FiniteSpace& space, Axiom axiom, const AxiomWitness& w) {
  std::ostringstream out;
  auto l = [&](std::size_t k) { return space.label(w.points.at(k)); };
  auto v = [&](double d) { return format_real(d); };
  switch (axiom) {
    case Axiom::sigma_lbnd:
      out << "m(" << l(0) << "," << l(1) << ")=" << v(w.lhs) << " > sigma(" << l(0) << ","
          << l(1) << ")=" << v(w.rhs);
      break;
    case Axiom::p_lbnd:
      out << "sigma(" << l(0) << "," << l(0) << ")=" << v(w.lhs) << " > sigma(" << l(0) << ","
          << l(1) << ")=" << v(w.rhs);
      break;
    case Axiom::sigma_sym:
    case Axiom::p_sym:
      out << "sigma(" << l(0) << "," << l(1) << ")=" << v(w.lhs) << " != sigma(" << l(1) << ","
          << l(0) << ")=" << v(w.rhs);
      break;
    case Axiom::sigma_sep:
    case Axiom::p_sep:
      out << "sigma(" << l(0) << "," << l(0) << ")=sigma(" << l(0) << "," << l(1) << ")=sigma("
          << l(1) << "," << l(1) << ")=" << v(w.values.at(1)) << " but " << l(0)
          << " != " << l(1);
      break;
    case Axiom::sigma_inq:
      out << "sigma(" << l(0) << "," << l(1) << ")-m(" << l(0) << "," << l(1) << ")=" << v(w.lhs)
          << " > [sigma(" << l(0) << "," << l(2) << ")-m] + [sigma(" << l(2) << "," << l(1)
          << ")-m]=" << v(w.rhs);
      break;
    case Axiom::p_inq:
      out << "sigma(" << l(0) << "," << l(1) << ")=" << v(w.lhs) << " > sigma(" << l(0) << ","
          << l(2) << ")+sigma(" << l(2) << "," << l(1) << ")-sigma(" << l(2) << "," << l(2)
          << ")=" << v(w.rhs);
      break;
    case Axiom::zero_self_distance:
      out << "sigma(" << l(0) << "," << l(0) << ")=" << v(w.values.at(0)) << " != 0";
      break;
  }
  return out.str();
}

namespace {

void require_m_metric(const FiniteSpace& space, double tol, const char* op) {
  const auto report = classify(space, tol);
  if (report.satisfies(SpaceClass::m_metric)) return;
  for (Axiom a : {Axiom::sigma_lbnd, Axiom::sigma_sym, Axiom::sigma_sep, Axiom::sigma_inq}) {
    const auto& r = report.result(a);
    if (!r.pass) {
      throw PreconditionError(std::string(op) + " requires an M-metric; " +
                              std::string(to_string(a)) + " fails: " +
                              describe_violation(space, a, *r.witness));
    }
  }
}

}  // namespace

FiniteSpace sigma_star(const FiniteSpace& space, double tol) {
  require_m_metric(space, tol, "sigma_star");
  return FiniteSpace::from_function(space.labels(), [&](std::size_t x, std::size_t y) {
    return x == y ? 0.0 : space.sigma(x, y) - m_of(space, x, y);
  });
}

FiniteSpace induce_partial(const FiniteSpace& space, double tol) {
  require_m_metric(space, tol, "induce_partial");
  return FiniteSpace::from_function(space.labels(), [&](std::size_t x, std::size_t y) {
    if (x == y) return space.sigma(x, x);
    return space.sigma(x, y) + M_of(space, x, y) - m_of(space, x, y);
  });
}

bool min_max_inequality_check(double a, double b, double c) {
  const bool min_form = std::min(c, a) + std::min(c, b) <= c + std::min(a, b);
  const bool max_form = c + std::max(a, b) <= std::max(c, a) + std::max(c, b);
  return min_form && max_form;
}

}  // namespace mmetric
