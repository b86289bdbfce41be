#include "mmetric/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>

#include "mmetric/contraction.hpp"
#include "mmetric/distance.hpp"
#include "mmetric/fixedpoint.hpp"
#include "mmetric/phi.hpp"
#include "mmetric/sampling.hpp"
#include "mmetric/sequences.hpp"
#include "mmetric/topology.hpp"

namespace mmetric::corpus {

namespace {

const std::vector<double> kDefaultLine{0.0, 1.0, 2.0, 3.0};

double parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ArgumentError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

FiniteSpace line_space(const std::vector<double>& points, const std::function<double(double, double)>& sigma) {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (double p : points) labels.push_back(format_real(p));
  return FiniteSpace::from_function(std::move(labels), [&](std::size_t i, std::size_t j) {
    return sigma(points[i], points[j]);
  });
}

FiniteSpace e2a_space() { return FiniteSpace({"a", "b"}, {{1.0, 1.0}, {1.0, 2.0}}); }
FiniteSpace e2b_space() { return FiniteSpace({"a", "b"}, {{0.0, 0.0}, {0.0, 1.0}}); }

Entry finite_entry(std::string name, std::string description, FiniteSpace space,
                   std::map<std::string, std::string> expected) {
  return {std::move(name), Kind::finite_space, std::move(description), std::move(space),
          std::move(expected), {}};
}

Entry grid_entry(std::string name, std::string description, FiniteSpace space,
                 std::vector<std::size_t> image, std::size_t x0,
                 std::map<std::string, std::string> expected) {
  auto sys = finite_map(std::move(space), std::move(image), x0, name);
  return {std::move(name), Kind::map_system, std::move(description), std::move(sys),
          std::move(expected), {}};
}

Entry affine_entry(std::string name, std::string description, FunctionalSpace space, double alpha,
                   double beta, double x0, std::map<std::string, std::string> expected) {
  auto sys = affine_map(std::move(space), alpha, beta, x0);
  sys.name = name;
  std::string formula = format_real(alpha) + "*x+" + format_real(beta);
  return {std::move(name), Kind::map_system, std::move(description), std::move(sys),
          std::move(expected), std::move(formula)};
}

std::vector<std::size_t> floor_div_image(std::size_t n, std::size_t d) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i / d;
  return image;
}

std::vector<double> integers(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(i);
  return out;
}

std::vector<Entry> registry() {
  std::vector<Entry> out;

  out.push_back(finite_entry("e2a", "{a,b}: sigma(a,a)=sigma(a,b)=1, sigma(b,b)=2", e2a_space(),
                             {{"class", "m_metric"},
                              {"sigma_star_class", "none"},
                              {"induced_class", "partial_metric"}}));
  out.push_back(finite_entry("e2b", "{a,b}: sigma(a,a)=sigma(a,b)=0, sigma(b,b)=1", e2b_space(),
                             {{"class", "m_metric"}, {"induced_class", "partial_metric"}}));
  {
    std::vector<std::size_t> terms(64);
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = i % 2;
    out.push_back({"e2b_alternating", Kind::sequence, "a, b, a, b, ... in e2b (64 terms)",
                   FiniteSequence{e2b_space(), std::move(terms)},
                   {{"cauchy", "not_cauchy"}},
                   {}});
  }
  out.push_back(grid_entry("e2b_swap", "swap a <-> b on e2b from a", e2b_space(), {1, 0}, 0,
                           {{"solve", "orbit_not_r_cauchy"}}));
  out.push_back(grid_entry("e2a_swap", "swap a <-> b on e2a from a", e2a_space(), {1, 0}, 0,
                           {{"solve", "orbit_not_r_cauchy"}}));

  out.push_back(finite_entry("sumline", "sigma(x,y)=x+y on {0,1,2,3}", sumline(kDefaultLine),
                             {{"class", "m_metric"},
                              {"induced_class", "partial_metric"},
                              {"m_open_vs_induced_p", "left_strictly_coarser"},
                              {"topology:asadi:m_open", "left_strictly_finer"},
                              {"separation:m_open", "T0_not_T1"},
                              {"separation:induced_p", "T1"}}));
  out.push_back(finite_entry("maxline", "sigma(x,y)=max(x,y) on {0,1,2,3}", maxline(kDefaultLine),
                             {{"class", "partial_metric"},
                              {"sigma_star_class", "metric"},
                              {"topology:m_open:standard_p", "equal"},
                              {"separation:m_open", "T0_not_T1"}}));

  out.push_back({"sumline_interval", Kind::functional_space, "sigma(x,y)=x+y on [0,1]",
                 sumline_interval(), {{"sampled_class", "m_metric"}}, {}});
  out.push_back({"maxline_interval", Kind::functional_space, "sigma(x,y)=max(x,y) on [0,1]",
                 maxline_interval(), {{"sampled_class", "partial_metric"}}, {}});

  out.push_back(affine_entry("halving", "f(x)=x/2 on [0,1], sigma=max, x0=1", maxline_interval(),
                             0.5, 0.0, 1.0,
                             {{"solve", "fixed_point"},
                              {"solve.point", "0"},
                              {"solve.branch", "woc_and_nonexpansive"},
                              {"banach:0.5", "0"},
                              {"kannan:0.2", "precondition_error"},
                              {"certify:phi_r:0:linear:0.5", "certified"}}));
  out.push_back(affine_entry("quartering", "f(x)=x/4 on [0,1], sigma=max, x0=1",
                             maxline_interval(), 0.25, 0.0, 1.0,
                             {{"solve", "fixed_point"},
                              {"solve.point", "0"},
                              {"kannan:0.25", "0"},
                              {"banach:0.25", "0"},
                              {"certify:c_r:0.5:0", "certified"},
                              {"certify:phi_r:0:linear:0.75", "certified"}}));
  out.push_back(affine_entry("thirding", "f(x)=x/3 on [0,1], sigma=max, x0=1", maxline_interval(),
                             1.0 / 3.0, 0.0, 1.0,
                             {{"solve.point", "0"}, {"banach:0.3333333333333333", "0"}}));
  out.push_back(affine_entry("constant_zero", "f(x)=0 on [0,1], sigma=max, x0=1",
                             maxline_interval(), 0.0, 0.0, 1.0,
                             {{"solve.point", "0"},
                              {"banach:0", "0"},
                              {"kannan:0", "0"},
                              {"certify:c_r:0.5:0", "certified"}}));
  out.push_back(affine_entry("affine_shift", "f(x)=x/2+1/2 on [0,1], sigma=max, x0=0",
                             maxline_interval(), 0.5, 0.5, 0.0,
                             {{"solve", "no_branch_verified"}}));

  out.push_back(grid_entry("halving_grid", "f(x)=floor(x/2) on maxline {0,1,2,3}, x0=3",
                           maxline(integers(4)), floor_div_image(4, 2), 3,
                           {{"solve", "fixed_point"},
                            {"solve.point", "0"},
                            {"special_limits", "1"},
                            {"banach:0.5", "0"},
                            {"certify:c_r:0.5:0", "certified"},
                            {"certify:phi_r:0:linear:0.5", "certified"}}));
  out.push_back(grid_entry("quartering_grid", "f(x)=floor(x/4) on maxline {0..7}, x0=7",
                           maxline(integers(8)), floor_div_image(8, 4), 7,
                           {{"solve", "fixed_point"},
                            {"solve.point", "0"},
                            {"special_limits", "1"},
                            {"kannan:0.25", "0"},
                            {"certify:c_r:0.5:0", "certified"}}));
  out.push_back(grid_entry("constant_grid", "f(x)=0 on maxline {0,1,2}, x0=2",
                           maxline(integers(3)), {0, 0, 0}, 2,
                           {{"solve", "fixed_point"},
                            {"solve.point", "0"},
                            {"special_limits", "1"},
                            {"banach:0", "0"},
                            {"kannan:0", "0"}}));
  out.push_back(grid_entry("constant_one_grid", "f(x)=1 on maxline {0,1,2}, x0=2",
                           maxline(integers(3)), {1, 1, 1}, 2,
                           {{"solve", "no_branch_verified"}, {"special_limits", "1"}}));
  out.push_back(grid_entry("expanding_grid", "0->1, 1->1, 2->0 on maxline {0,1,2}, x0=0",
                           maxline(integers(3)), {1, 1, 0}, 0,
                           {{"solve", "no_branch_verified"}, {"special_limits", "1"}}));
  return out;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = registry();
  return all;
}

std::optional<Entry> parameterised(std::string_view name) {
  const auto open = name.find('(');
  if (open == std::string_view::npos || name.back() != ')') return std::nullopt;
  const auto head = name.substr(0, open);
  if (head != "sumline" && head != "maxline") return std::nullopt;
  std::vector<double> points;
  for (auto part : split(name.substr(open + 1, name.size() - open - 2), ',')) {
    points.push_back(parse_real(part));
  }
  const bool sum = head == "sumline";
  auto space = sum ? sumline(points) : maxline(points);
  std::map<std::string, std::string> expected;
  expected["class"] = std::string(to_string(classify(space).space_class));
  return Entry{std::string(name), Kind::finite_space,
               std::string(sum ? "sigma(x,y)=x+y" : "sigma(x,y)=max(x,y)") + " on the listed points",
               std::move(space), std::move(expected), {}};
}

// --- verification ----------------------------------------------------------

const FiniteSpace* finite_of(const Payload& p) {
  if (auto s = std::get_if<FiniteSpace>(&p)) return s;
  if (auto s = std::get_if<FiniteSequence>(&p)) return &s->space;
  if (auto s = std::get_if<MapSystem<FiniteSpace>>(&p)) return &s->space;
  return nullptr;
}

std::string class_name(const FiniteSpace& s) { return std::string(to_string(classify(s).space_class)); }

template <DistanceSpace S>
std::string run_front_end(const MapSystem<S>& sys, std::string_view mode, double k) {
  try {
    const auto res = mode == "banach" ? banach(sys, k) : kannan(sys, k);
    return res.found() ? point_name(sys.space, *res.point) : std::string(to_string(res.status));
  } catch (const PreconditionError&) {
    return "precondition_error";
  }
}

template <DistanceSpace S>
std::string run_certify(const MapSystem<S>& sys, const std::vector<std::string_view>& parts) {
  ContractionCertificate cert;
  if (parts.size() == 4 && parts[1] == "c_r") {
    cert = check_c_r(sys, parse_real(parts[2]), parse_real(parts[3]), kDefaultCertificateDepth,
                     kDefaultSequenceTol);
  } else if (parts.size() >= 4 && parts[1] == "phi_r") {
    std::string phi_text;
    for (std::size_t i = 3; i < parts.size(); ++i) {
      if (i > 3) phi_text += ':';
      phi_text += parts[i];
    }
    cert = check_phi_r(sys, Phi::parse(phi_text), parse_real(parts[2]), kDefaultCertificateDepth,
                       kDefaultSequenceTol);
  } else {
    throw ArgumentError("malformed certify key");
  }
  return cert.certified() ? "certified" : "not_certified";
}

template <DistanceSpace S>
std::string check_map(const MapSystem<S>& sys, const std::string& key) {
  if (key == "solve" || key == "solve.point" || key == "solve.branch") {
    const auto res = solve(sys);
    if (key == "solve") return std::string(to_string(res.status));
    if (key == "solve.branch") return std::string(to_string(res.branch));
    return res.point ? point_name(sys.space, *res.point) : "none";
  }
  const auto parts = split(key, ':');
  if (parts[0] == "banach" || parts[0] == "kannan") {
    return run_front_end(sys, parts[0], parse_real(parts.at(1)));
  }
  if (parts[0] == "certify") return run_certify(sys, parts);
  if (key == "special_limits") {
    const auto report = trace_orbit(sys);
    if (!report.cauchy.is_r_cauchy()) return "0";
    if (report.special_limit) return "1";
    return std::to_string(report.competing_special_limits.size());
  }
  throw ArgumentError("no check for '" + key + "' on a map system");
}

std::string check_finite(const FiniteSpace& space, const std::string& key) {
  if (key == "class") return class_name(space);
  if (key == "sigma_star_class") {
    try {
      return class_name(sigma_star(space));
    } catch (const PreconditionError&) {
      return "precondition_error";
    }
  }
  if (key == "induced_class") return class_name(induce_partial(space));
  if (key == "m_open_vs_induced_p") {
    return std::string(to_string(compare(space, BallFamily::m_open, BallFamily::induced_p).relation));
  }
  const auto parts = split(key, ':');
  auto family = [&](std::string_view s) {
    const auto f = parse_ball_family(s);
    if (!f) throw ArgumentError("unknown ball family in '" + key + "'");
    return *f;
  };
  if (parts[0] == "topology" && parts.size() == 3) {
    return std::string(to_string(compare(space, family(parts[1]), family(parts[2])).relation));
  }
  if (parts[0] == "separation" && parts.size() == 2) {
    return std::string(to_string(separation(space, family(parts[1])).level));
  }
  throw ArgumentError("no check for '" + key + "' on a finite space");
}

std::string check(const Entry& entry, const std::string& key) {
  const auto& p = entry.payload;
  if (auto seq = std::get_if<FiniteSequence>(&p); seq && key == "cauchy") {
    return std::string(to_string(cauchy_analyze(seq->space, seq->terms).status));
  }
  if (auto sys = std::get_if<MapSystem<FiniteSpace>>(&p)) {
    if (key.rfind("solve", 0) == 0 || key.find(':') != std::string::npos || key == "special_limits") {
      return check_map(*sys, key);
    }
  }
  if (auto sys = std::get_if<MapSystem<FunctionalSpace>>(&p)) return check_map(*sys, key);
  if (auto fs = std::get_if<FunctionalSpace>(&p); fs && key == "sampled_class") {
    const auto points = sample_points(*fs, 9);
    return class_name(fs->restrict(points));
  }
  if (const auto* fin = finite_of(p)) return check_finite(*fin, key);
  throw ArgumentError("no check for '" + key + "' on entry '" + entry.name + "'");
}

}  // namespace

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::finite_space: return "finite_space";
    case Kind::functional_space: return "functional_space";
    case Kind::map_system: return "map_system";
    case Kind::sequence: return "sequence";
  }
  return "?";
}

FiniteSpace sumline(const std::vector<double>& points) {
  return line_space(points, [](double x, double y) { return x + y; });
}

FiniteSpace maxline(const std::vector<double>& points) {
  return line_space(points, [](double x, double y) { return std::max(x, y); });
}

FunctionalSpace sumline_interval(double lo, double hi) {
  return FunctionalSpace("sumline", lo, hi, [](double x, double y) { return x + y; }, 2.0 * lo,
                         true);
}

FunctionalSpace maxline_interval(double lo, double hi) {
  return FunctionalSpace("maxline", lo, hi, [](double x, double y) { return std::max(x, y); }, lo,
                         true);
}

Entry get(std::string_view name) {
  for (const auto& e : entries()) {
    if (e.name == name) return e;
  }
  if (auto e = parameterised(name)) return *e;
  throw ArgumentError("unknown corpus entry '" + std::string(name) + "'");
}

std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

nlohmann::json emit(const Entry& entry) {
  nlohmann::json doc;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FiniteSpace>) {
          doc = to_json(p);
        } else if constexpr (std::is_same_v<T, FunctionalSpace>) {
          doc = {{"name", p.name()}, {"domain", {p.lo(), p.hi()}}, {"complete", p.complete()}};
          doc["lower_bound"] = p.lower_bound() ? nlohmann::json(*p.lower_bound()) : nlohmann::json();
        } else if constexpr (std::is_same_v<T, FiniteSequence>) {
          doc["space"] = to_json(p.space);
          auto& terms = doc["terms"] = nlohmann::json::array();
          for (auto t : p.terms) terms.push_back(p.space.label(t));
        } else if constexpr (std::is_same_v<T, MapSystem<FiniteSpace>>) {
          doc["space"] = to_json(p.space);
          auto& map = doc["map"] = nlohmann::json::object();
          for (std::size_t i = 0; i < p.space.size(); ++i) {
            map[p.space.label(i)] = p.space.label(p.apply(i));
          }
          doc["x0"] = p.space.label(p.x0);
        } else {
          doc["space"] = {{"name", p.space.name()}, {"domain", {p.space.lo(), p.space.hi()}}};
          doc["map"] = entry.map_formula;
          doc["x0"] = p.x0;
        }
      },
      entry.payload);
  doc["name"] = entry.name;
  doc["kind"] = std::string(to_string(entry.kind));
  doc["description"] = entry.description;
  doc["expected"] = entry.expected;
  return doc;
}

std::vector<CheckOutcome> verify(const Entry& entry) {
  std::vector<CheckOutcome> out;
  for (const auto& [key, expected] : entry.expected) {
    CheckOutcome o{key, expected, {}, false};
    try {
      o.actual = check(entry, key);
    } catch (const Error& e) {
      o.actual = std::string("error: ") + e.what();
    }
    o.pass = o.actual == expected;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace mmetric::corpus
