#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mmetric/finite_space.hpp"
#include "mmetric/functional_space.hpp"
#include "mmetric/map_system.hpp"

namespace mmetric::corpus {

enum class Kind { finite_space, functional_space, map_system, sequence };

std::string_view to_string(Kind k);

/// A fixed sequence of points in a finite space.
struct FiniteSequence {
  FiniteSpace space;
  std::vector<std::size_t> terms;
};

using Payload = std::variant<FiniteSpace, FunctionalSpace, MapSystem<FiniteSpace>,
                             MapSystem<FunctionalSpace>, FiniteSequence>;

/// Expected verdicts are keyed by check name:
///
///   class, sigma_star_class, induced_class     classify() on the space / derived space
///   sampled_class                               classify() on a 9-point restriction
///   m_open_vs_induced_p                         compare() of the two topologies
///   separation:<family>                         separation() of one topology
///   cauchy                                      cauchy_analyze() status
///   solve, solve.branch, solve.point            solve() outcome
///   banach:<k>, kannan:<k>                      point found, or precondition_error
///   certify:c_r:<c>:<r>                         certified / not_certified
///   certify:phi_r:<r>:<phi>                     certified / not_certified
///   special_limits                              exhaustive special-limit count
struct Entry {
  std::string name;
  Kind kind;
  std::string description;
  Payload payload;
  std::map<std::string, std::string> expected;
  std::string map_formula;  // functional map systems only
};

/// Registered names plus the parameterised forms sumline(...) and maxline(...).
Entry get(std::string_view name);
std::vector<std::string> list();

FiniteSpace sumline(const std::vector<double>& points);
FiniteSpace maxline(const std::vector<double>& points);
FunctionalSpace sumline_interval(double lo = 0.0, double hi = 1.0);
FunctionalSpace maxline_interval(double lo = 0.0, double hi = 1.0);

/// JSON document for an entry. Finite spaces use the {"points","sigma"} file
/// format accepted by read_finite_space.
nlohmann::json emit(const Entry& entry);

struct CheckOutcome {
  std::string key;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Runs the check behind every expected verdict of the entry.
std::vector<CheckOutcome> verify(const Entry& entry);

}  // namespace mmetric::corpus
