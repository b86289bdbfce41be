#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmetric/contraction.hpp"
#include "mmetric/corpus.hpp"
#include "mmetric/distance.hpp"
#include "mmetric/fixedpoint.hpp"
#include "mmetric/phi.hpp"
#include "mmetric/report_json.hpp"
#include "mmetric/spacegen.hpp"
#include "mmetric/topology.hpp"

namespace mmetric::cli {

namespace {

using nlohmann::json;
using System = std::variant<MapSystem<FiniteSpace>, MapSystem<FunctionalSpace>>;

// ---------------------------------------------------------------------------
// Shared options and output

struct Common {
  std::string format = "json";
  double tol = 0.0;
  std::vector<CLI::Option*> tol_opts;  // one per subcommand
  std::uint64_t seed = 0;

  [[nodiscard]] double tol_or(double fallback) const {
    const bool given = std::any_of(tol_opts.begin(), tol_opts.end(),
                                   [](const CLI::Option* o) { return o->count() > 0; });
    return given ? tol : fallback;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  c.tol_opts.push_back(sub->add_option("--tol", c.tol, "Tolerance (1e-9 finite checks, 1e-6 iterative)")
                           ->check(CLI::NonNegativeNumber));
  sub->add_option("--seed", c.seed, "Seed for every random choice");
}

void flatten(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, path.empty() ? key : path + "." + key, out);
    }
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const json& v) {
      return v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& w) {
                                    return w.is_primitive();
                                  }));
    });
    if (scalars) {
      out << path << ": " << j.dump() << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const json& doc, const Common& c, std::ostream& out) {
  if (c.format == "text") {
    flatten(doc, "", out);
  } else {
    out << doc.dump(2) << "\n";
  }
}

double parse_real(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ArgumentError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t parse_point(const FiniteSpace& space, const std::string& text) {
  return space.index_of(text);
}
double parse_point(const FunctionalSpace& space, const std::string& text) {
  const double x = parse_real(text);
  if (!space.contains(x)) throw UnknownPoint("point " + text + " outside [" + format_real(space.lo()) + ", " + format_real(space.hi()) + "]");
  return x;
}

BallFamily family_of(const std::string& text) {
  const auto f = parse_ball_family(text);
  if (!f) throw ArgumentError("unknown ball family '" + text + "'");
  return *f;
}

// ---------------------------------------------------------------------------
// Space and system resolution

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    json doc;
    in >> doc;
    return doc;
  } catch (const json::parse_error& e) {
    throw InvalidSpace("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::optional<std::string> corpus_name(const std::string& ref) {
  constexpr std::string_view prefix = "corpus:";
  if (ref.rfind(prefix, 0) == 0) return ref.substr(prefix.size());
  return std::nullopt;
}

const FiniteSpace* finite_payload(const corpus::Entry& e) {
  if (auto s = std::get_if<FiniteSpace>(&e.payload)) return s;
  if (auto s = std::get_if<corpus::FiniteSequence>(&e.payload)) return &s->space;
  if (auto s = std::get_if<MapSystem<FiniteSpace>>(&e.payload)) return &s->space;
  return nullptr;
}

/// `corpus:<name>` or a path to a space file (a map-system file also works).
FiniteSpace resolve_space(const std::string& ref) {
  if (auto name = corpus_name(ref)) {
    const auto entry = corpus::get(*name);
    if (const auto* s = finite_payload(entry)) return *s;
    throw ArgumentError("corpus entry '" + *name + "' is not a finite space");
  }
  const auto doc = read_json_file(ref);
  return finite_space_from_json(doc.contains("space") ? doc.at("space") : doc);
}

struct SystemArgs {
  std::string system;
  std::string map;
  std::string x0;
  double alpha = 0.0;
  double beta = 0.0;
  CLI::Option* map_opt = nullptr;
  CLI::Option* x0_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* beta_opt = nullptr;

  [[nodiscard]] bool has(const CLI::Option* o) const { return o != nullptr && o->count() > 0; }
};

void add_system(CLI::App* sub, SystemArgs& a, bool required = true) {
  auto* opt = sub->add_option("--system", a.system,
                              "Corpus name, corpus:<name>, or a JSON space/system file");
  if (required) opt->required();
  a.map_opt = sub->add_option("--map", a.map, "Finite map as 'a:b,b:a' (unlisted points fixed)");
  a.x0_opt = sub->add_option("--x0", a.x0, "Base point (label, or number on an interval)");
  a.alpha_opt = sub->add_option("--alpha", a.alpha, "Affine map slope");
  a.beta_opt = sub->add_option("--beta", a.beta, "Affine map offset");
}

std::string map_spec_of(const json& map) {
  std::string spec;
  for (const auto& [from, to] : map.items()) {
    if (!spec.empty()) spec += ',';
    spec += from + ":" + to.get<std::string>();
  }
  return spec;
}

System finite_system(const FiniteSpace& space, const SystemArgs& a, const std::string& name) {
  if (!a.has(a.map_opt)) throw ArgumentError("--map is required for a finite space");
  if (!a.has(a.x0_opt)) throw ArgumentError("--x0 is required for a finite space");
  return finite_map_from_spec(space, a.map, a.x0, name);
}

System functional_system(const FunctionalSpace& space, const SystemArgs& a) {
  if (!a.has(a.alpha_opt) || !a.has(a.beta_opt) || !a.has(a.x0_opt)) {
    throw ArgumentError("--alpha, --beta and --x0 are required for an interval space");
  }
  return affine_map(space, a.alpha, a.beta, parse_point(space, a.x0));
}

System resolve_system(const SystemArgs& a) {
  const std::string name = corpus_name(a.system).value_or(a.system);
  if (!corpus_name(a.system) && std::filesystem::exists(a.system)) {
    const auto doc = read_json_file(a.system);
    const auto space = finite_space_from_json(doc.contains("space") ? doc.at("space") : doc);
    if (a.has(a.map_opt) || !doc.contains("map")) return finite_system(space, a, a.system);
    const std::string x0 = a.has(a.x0_opt) ? a.x0 : doc.value("x0", std::string());
    if (x0.empty()) throw ArgumentError("--x0 is required");
    return finite_map_from_spec(space, map_spec_of(doc.at("map")), x0, a.system);
  }

  const auto entry = corpus::get(name);
  if (auto sys = std::get_if<MapSystem<FiniteSpace>>(&entry.payload)) {
    if (a.has(a.map_opt)) return finite_system(sys->space, a, name);
    return a.has(a.x0_opt) ? sys->with_base(sys->space.index_of(a.x0)) : *sys;
  }
  if (auto sys = std::get_if<MapSystem<FunctionalSpace>>(&entry.payload)) {
    if (a.has(a.alpha_opt) || a.has(a.beta_opt)) {
      const double alpha = a.has(a.alpha_opt) ? a.alpha : 0.0;
      const double beta = a.has(a.beta_opt) ? a.beta : 0.0;
      const double x0 = a.has(a.x0_opt) ? parse_point(sys->space, a.x0) : sys->x0;
      return affine_map(sys->space, alpha, beta, x0);
    }
    return a.has(a.x0_opt) ? sys->with_base(parse_point(sys->space, a.x0)) : *sys;
  }
  if (auto space = std::get_if<FunctionalSpace>(&entry.payload)) return functional_system(*space, a);
  if (const auto* space = finite_payload(entry)) return finite_system(*space, a, name);
  throw ArgumentError("corpus entry '" + name + "' cannot be used as a system");
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_validate(const std::string& ref, const std::string& expect, const Common& c,
                 std::ostream& out) {
  const auto space = resolve_space(ref);
  const auto rep = classify(space, c.tol_or(kDefaultAxiomTol));
  auto doc = report::to_json(space, rep);
  doc["space"] = ref;
  if (!expect.empty()) {
    const auto want = parse_space_class(expect);
    if (!want) throw ArgumentError("unknown class '" + expect + "'");
    doc["expect"] = expect;
    doc["satisfied"] = rep.satisfies(*want);
    emit(doc, c, out);
    return rep.satisfies(*want) ? kVerified : kViolation;
  }
  emit(doc, c, out);
  return rep.space_class == SpaceClass::none ? kViolation : kVerified;
}

int cmd_derive(const std::string& ref, const std::string& kind, const Common& c, std::ostream& out) {
  const auto space = resolve_space(ref);
  const double tol = c.tol_or(kDefaultAxiomTol);
  const auto derived = kind == "sigma_star" ? sigma_star(space, tol) : induce_partial(space, tol);
  auto doc = to_json(derived);
  doc["derived"] = kind;
  doc["class"] = std::string(to_string(classify(derived, tol).space_class));
  emit(doc, c, out);
  return kVerified;
}

struct GenArgs {
  std::size_t n = 4;
  std::string kind = "m_metric";
  double diag_lo = -2.0, diag_hi = 2.0, d_lo = 0.0, d_hi = 3.0;
  bool distinct = false;
};

int cmd_gen(const GenArgs& g, const Common& c, std::ostream& out) {
  GenConfig cfg;
  cfg.n = g.n;
  cfg.diag_range = {g.diag_lo, g.diag_hi};
  cfg.d_range = {g.d_lo, g.d_hi};
  cfg.seed = c.seed;
  cfg.ensure_distinct_diag = g.distinct;
  const auto space = g.kind == "partial_metric" ? gen_partial_metric(cfg) : gen_m_metric(cfg);
  auto doc = to_json(space);
  doc["seed"] = c.seed;
  emit(doc, c, out);
  return kVerified;
}

int cmd_ball(const std::string& ref, const std::string& family, const std::string& center,
             double eps, const Common& c, std::ostream& out) {
  const auto space = resolve_space(ref);
  const auto x = space.index_of(center);
  const auto b = ball(space, family_of(family), x, eps, c.tol_or(kDefaultAxiomTol));
  json doc{{"family", family}, {"center", center}, {"eps", eps}, {"ball", report::to_json(space, b)}};
  emit(doc, c, out);
  return kVerified;
}

int cmd_topology(const std::string& ref, const std::string& family, std::size_t max_points,
                 const Common& c, std::ostream& out) {
  const auto space = resolve_space(ref);
  const TopologyOptions opts{max_points, c.tol_or(kDefaultAxiomTol)};
  const auto topo = generate_topology(space, family_of(family), opts);
  auto doc = report::to_json(space, topo);
  doc["separation"] = report::to_json(space, separation(topo));
  emit(doc, c, out);
  return kVerified;
}

int cmd_topology_compare(const std::string& ref, const std::string& left, const std::string& right,
                         const std::string& expect, std::size_t max_points, const Common& c,
                         std::ostream& out) {
  const auto space = resolve_space(ref);
  const TopologyOptions opts{max_points, c.tol_or(kDefaultAxiomTol)};
  const auto cmp = compare(space, family_of(left), family_of(right), opts);
  auto doc = report::to_json(space, cmp);
  doc["left"] = left;
  doc["right"] = right;
  emit(doc, c, out);
  if (!expect.empty()) return std::string(to_string(cmp.relation)) == expect ? kVerified : kViolation;
  return kVerified;
}

struct SequenceArgs {
  std::string space;
  std::string terms;
  std::string terms_file;
  std::size_t length = 64;
  std::size_t window = kDefaultWindow;
  std::string limit;
  SystemArgs sys;
};

template <DistanceSpace S>
int analyse_sequence(const S& space, const std::vector<point_t<S>>& terms, const SequenceArgs& a,
                     const Common& c, std::ostream& out) {
  const double tol = c.tol_or(kDefaultSequenceTol);
  const auto verdict = cauchy_analyze(space, terms, a.window, tol);
  json doc{{"length", terms.size()}, {"cauchy", report::to_json(verdict)}};
  if (!a.limit.empty() && verdict.is_r_cauchy()) {
    const auto point = parse_point(space, a.limit);
    doc["limit"] = report::to_json(is_limit(space, std::span<const point_t<S>>(terms), verdict, point, tol));
    doc["limit"]["point"] = a.limit;
  }
  emit(doc, c, out);
  return verdict.is_r_cauchy() ? kVerified : kViolation;
}

int cmd_sequence(const SequenceArgs& a, const Common& c, std::ostream& out) {
  if (!a.sys.system.empty()) {
    const auto name = corpus_name(a.sys.system).value_or(a.sys.system);
    if (!std::filesystem::exists(a.sys.system)) {
      const auto entry = corpus::get(name);
      if (auto seq = std::get_if<corpus::FiniteSequence>(&entry.payload)) {
        return analyse_sequence(seq->space, seq->terms, a, c, out);
      }
    }
    const auto sys = resolve_system(a.sys);
    return std::visit(
        [&](const auto& s) { return analyse_sequence(s.space, orbit(s, a.length), a, c, out); }, sys);
  }
  if (a.space.empty()) throw ArgumentError("give --system, or --space with --terms/--terms-file");
  const auto space = resolve_space(a.space);
  std::vector<std::string> labels;
  if (!a.terms_file.empty()) {
    labels = read_json_file(a.terms_file).get<std::vector<std::string>>();
  } else {
    labels = split_list(a.terms);
  }
  std::vector<std::size_t> terms;
  terms.reserve(labels.size());
  for (const auto& l : labels) terms.push_back(space.index_of(l));
  return analyse_sequence(space, terms, a, c, out);
}

struct IterArgs {
  std::size_t max_iter = 10'000;
  std::size_t window = kDefaultWindow;
};

int cmd_orbit(const SystemArgs& sa, const IterArgs& it, const Common& c, std::ostream& out) {
  const auto sys = resolve_system(sa);
  return std::visit(
      [&](const auto& s) {
        const auto rep = trace_orbit(s, OrbitOptions{it.max_iter, it.window, c.tol_or(kDefaultSequenceTol)});
        auto doc = report::to_json(s.space, rep);
        doc["system"] = s.name;
        emit(doc, c, out);
        return rep.special_limit ? kVerified : kViolation;
      },
      sys);
}

struct CertifyArgs {
  std::string kind;
  double c = 0.0;
  CLI::Option* c_opt = nullptr;
  double r = 0.0;
  std::string phi;
  std::size_t depth = kDefaultCertificateDepth;
};

int cmd_certify(const SystemArgs& sa, const CertifyArgs& ca, const Common& c, std::ostream& out) {
  const auto sys = resolve_system(sa);
  const double tol = c.tol_or(kDefaultSequenceTol);
  return std::visit(
      [&](const auto& s) {
        ContractionCertificate cert;
        if (ca.kind == "c_r") {
          if (ca.c_opt->count() == 0) throw ArgumentError("--c is required for --kind c_r");
          cert = check_c_r(s, ca.c, ca.r, ca.depth, tol);
        } else {
          if (ca.phi.empty()) throw ArgumentError("--phi is required for --kind phi_r");
          cert = check_phi_r(s, Phi::parse(ca.phi), ca.r, ca.depth, tol);
        }
        auto doc = report::to_json(cert);
        doc["system"] = s.name;
        emit(doc, c, out);
        return cert.certified() ? kVerified : kViolation;
      },
      sys);
}

struct FixpointArgs {
  std::string mode = "solve";
  double k = 0.0;
  CLI::Option* k_opt = nullptr;
  std::string branch;
};

int cmd_fixpoint(const SystemArgs& sa, const IterArgs& it, const FixpointArgs& fa, const Common& c,
                 std::ostream& out) {
  const auto sys = resolve_system(sa);
  SolveOptions opts;
  opts.max_iter = it.max_iter;
  opts.window = it.window;
  opts.tol = c.tol_or(kDefaultSequenceTol);
  if (!fa.branch.empty()) {
    opts.branch_hint = parse_branch(fa.branch);
    if (!opts.branch_hint) throw ArgumentError("unknown branch '" + fa.branch + "'");
  }
  if (fa.mode != "solve" && fa.k_opt->count() == 0) throw ArgumentError("--k is required for --mode " + fa.mode);
  return std::visit(
      [&](const auto& s) {
        const auto outcome = fa.mode == "banach"   ? banach_traced(s, fa.k, opts)
                             : fa.mode == "kannan" ? kannan_traced(s, fa.k, opts)
                                                   : solve_traced(s, opts);
        auto doc = report::to_json(s.space, outcome.result, &outcome.orbit);
        doc["system"] = s.name;
        emit(doc, c, out);
        return outcome.result.found() ? kVerified : kViolation;
      },
      sys);
}

int cmd_corpus_list(const Common& c, std::ostream& out) {
  json doc = json::array();
  for (const auto& name : corpus::list()) {
    const auto e = corpus::get(name);
    doc.push_back({{"name", e.name}, {"kind", std::string(to_string(e.kind))}, {"description", e.description}});
  }
  emit(doc, c, out);
  return kVerified;
}

int cmd_corpus_emit(const std::string& name, const std::string& path, const Common& c,
                    std::ostream& out) {
  const auto doc = corpus::emit(corpus::get(name));
  if (path.empty()) {
    emit(doc, c, out);
    return kVerified;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  file << doc.dump(2) << "\n";
  if (!file) throw Error("write to '" + path + "' failed");
  return kVerified;
}

int cmd_corpus_verify(std::vector<std::string> names, const Common& c, std::ostream& out) {
  if (names.empty()) names = corpus::list();
  json doc = json::array();
  bool all = true;
  for (const auto& name : names) {
    for (const auto& o : corpus::verify(corpus::get(name))) {
      all = all && o.pass;
      doc.push_back({{"entry", name}, {"check", o.key}, {"expected", o.expected}, {"actual", o.actual}, {"pass", o.pass}});
    }
  }
  emit(doc, c, out);
  return all ? kVerified : kViolation;
}

struct FuzzArgs {
  std::size_t trials = 200;
  std::size_t n_max = 6;
};

/// Random spaces against the structural results: the induced partial metric,
/// sigma_star of a partial metric, topology inclusion and T0.
int cmd_fuzz(const FuzzArgs& f, const Common& c, std::ostream& out) {
  if (f.n_max < 1) throw ArgumentError("--n-max must be >= 1");
  const double tol = c.tol_or(kDefaultAxiomTol);
  json failures = json::array();
  auto fail = [&](std::uint64_t seed, std::size_t n, const char* property, const std::string& detail) {
    failures.push_back({{"seed", seed}, {"n", n}, {"property", property}, {"detail", detail}});
  };
  for (std::size_t t = 0; t < f.trials; ++t) {
    GenConfig cfg;
    cfg.seed = c.seed + t;
    cfg.n = 1 + cfg.seed % f.n_max;
    const auto space = gen_m_metric(cfg);
    const auto cls = classify(space, tol).space_class;
    if (cls < SpaceClass::m_metric) fail(cfg.seed, cfg.n, "generated_m_metric", std::string(to_string(cls)));
    const auto induced = classify(induce_partial(space, tol), tol).space_class;
    if (induced < SpaceClass::partial_metric) {
      fail(cfg.seed, cfg.n, "induced_partial_metric", std::string(to_string(induced)));
    }
    const auto partial = gen_partial_metric(cfg);
    const auto star = classify(sigma_star(partial, tol), tol).space_class;
    if (star != SpaceClass::metric) fail(cfg.seed, cfg.n, "sigma_star_metric", std::string(to_string(star)));
    const auto rel = compare(space, BallFamily::m_open, BallFamily::induced_p).relation;
    if (rel != Relation::equal && rel != Relation::left_strictly_coarser) {
      fail(cfg.seed, cfg.n, "m_open_within_induced_p", std::string(to_string(rel)));
    }
    const auto sep = separation(space, BallFamily::m_open).level;
    if (sep == Separation::not_T0) fail(cfg.seed, cfg.n, "m_open_T0", std::string(to_string(sep)));
  }
  json doc{{"trials", f.trials}, {"seed", c.seed}, {"n_max", f.n_max}, {"failures", failures}};
  emit(doc, c, out);
  return failures.empty() ? kVerified : kViolation;
}

void report_error(std::ostream& err, const std::exception& e) { err << "error: " << e.what() << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"M-metric spaces: axioms, topologies, orbits and fixed points", "mmetric"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  std::string space_ref, expect, kind, family = "m_open", center, left = "m_open",
                                         right = "induced_p", out_path, corpus_entry;
  double eps = 1.0;
  std::size_t max_points = TopologyOptions{}.max_points;
  GenArgs gen;
  SequenceArgs seq;
  SystemArgs orbit_sys, cert_sys, fix_sys;
  IterArgs iter;
  CertifyArgs cert;
  FixpointArgs fix;
  FuzzArgs fuzz;
  std::vector<std::string> verify_names;
  const std::vector<std::string> families{"asadi", "m_open", "induced_p", "standard_p"};
  const std::vector<std::string> classes{"none", "m_metric", "partial_metric", "metric"};

  auto* validate = app.add_subcommand("validate", "Classify a space against the axiom sets");
  validate->add_option("space", space_ref, "corpus:<name> or a space JSON file")->required();
  validate->add_option("--expect", expect, "Exit 1 unless the space is at least this class")
      ->check(CLI::IsMember(classes));
  add_common(validate, common);

  auto* derive = app.add_subcommand("derive", "Emit sigma_star or the induced partial metric");
  derive->add_option("space", space_ref)->required();
  derive->add_option("--kind", kind)->required()->check(CLI::IsMember({"sigma_star", "induce_partial"}));
  add_common(derive, common);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random M-metric or partial-metric space");
  gen_cmd->add_option("--n", gen.n)->check(CLI::PositiveNumber)->capture_default_str();
  gen_cmd->add_option("--kind", gen.kind)
      ->check(CLI::IsMember({"m_metric", "partial_metric"}))
      ->capture_default_str();
  gen_cmd->add_option("--diag-lo", gen.diag_lo)->capture_default_str();
  gen_cmd->add_option("--diag-hi", gen.diag_hi)->capture_default_str();
  gen_cmd->add_option("--d-lo", gen.d_lo)->check(CLI::NonNegativeNumber)->capture_default_str();
  gen_cmd->add_option("--d-hi", gen.d_hi)->check(CLI::NonNegativeNumber)->capture_default_str();
  gen_cmd->add_flag("--distinct-diag", gen.distinct);
  add_common(gen_cmd, common);

  auto* ball_cmd = app.add_subcommand("ball", "Members of one open ball");
  ball_cmd->add_option("space", space_ref)->required();
  ball_cmd->add_option("--family", family)->check(CLI::IsMember(families))->capture_default_str();
  ball_cmd->add_option("--center", center)->required();
  ball_cmd->add_option("--eps", eps)->required();
  add_common(ball_cmd, common);

  auto* topo = app.add_subcommand("topology", "Open sets generated by a ball family");
  topo->add_option("space", space_ref)->required();
  topo->add_option("--family", family)->check(CLI::IsMember(families))->capture_default_str();
  topo->add_option("--max-points", max_points)->capture_default_str();
  add_common(topo, common);

  auto* topo_cmp = app.add_subcommand("topology-compare", "Compare the topologies of two ball families");
  topo_cmp->add_option("space", space_ref)->required();
  topo_cmp->add_option("--left", left)->check(CLI::IsMember(families))->capture_default_str();
  topo_cmp->add_option("--right", right)->check(CLI::IsMember(families))->capture_default_str();
  topo_cmp->add_option("--expect", expect, "Exit 1 unless the relation matches")
      ->check(CLI::IsMember({"equal", "left_strictly_coarser", "left_strictly_finer", "incomparable"}));
  topo_cmp->add_option("--max-points", max_points)->capture_default_str();
  add_common(topo_cmp, common);

  auto* seq_cmd = app.add_subcommand("sequence", "Cauchy analysis of a sequence prefix");
  seq_cmd->add_option("--space", seq.space, "corpus:<name> or a space JSON file");
  seq_cmd->add_option("--terms", seq.terms, "Comma-separated point labels");
  seq_cmd->add_option("--terms-file", seq.terms_file, "JSON array of point labels");
  add_system(seq_cmd, seq.sys, false);
  seq_cmd->add_option("--length", seq.length, "Orbit prefix length with --system")->capture_default_str();
  seq_cmd->add_option("--window", seq.window)->check(CLI::PositiveNumber)->capture_default_str();
  seq_cmd->add_option("--limit", seq.limit, "Also test this point as a limit");
  add_common(seq_cmd, common);

  auto* orbit_cmd = app.add_subcommand("orbit", "Iterate a system and locate its special limit");
  add_system(orbit_cmd, orbit_sys);
  orbit_cmd->add_option("--max-iter", iter.max_iter)->capture_default_str();
  orbit_cmd->add_option("--window", iter.window)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(orbit_cmd, common);

  auto* cert_cmd = app.add_subcommand("certify", "Check an orbital contraction certificate");
  add_system(cert_cmd, cert_sys);
  cert_cmd->add_option("--kind", cert.kind)->required()->check(CLI::IsMember({"c_r", "phi_r"}));
  cert.c_opt = cert_cmd->add_option("--c", cert.c);
  cert_cmd->add_option("--r", cert.r)->capture_default_str();
  cert_cmd->add_option("--phi", cert.phi, "linear:<slope>[:<origin>], power:<s>:<e>[:<o>], table:t=v,...");
  cert_cmd->add_option("--depth", cert.depth)->capture_default_str();
  add_common(cert_cmd, common);

  auto* fix_cmd = app.add_subcommand("fixpoint", "Find and certify a fixed point");
  add_system(fix_cmd, fix_sys);
  fix_cmd->add_option("--mode", fix.mode)
      ->check(CLI::IsMember({"solve", "banach", "kannan"}))
      ->capture_default_str();
  fix.k_opt = fix_cmd->add_option("--k", fix.k);
  fix_cmd->add_option("--max-iter", iter.max_iter)->capture_default_str();
  fix_cmd->add_option("--window", iter.window)->check(CLI::PositiveNumber)->capture_default_str();
  fix_cmd->add_option("--branch", fix.branch, "Preferred hypothesis pair");
  add_common(fix_cmd, common);

  auto* corpus_cmd = app.add_subcommand("corpus", "Named spaces and systems");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List entries");
  add_common(corpus_list, common);
  auto* corpus_emit = corpus_cmd->add_subcommand("emit", "Write an entry as JSON");
  corpus_emit->add_option("name", corpus_entry)->required();
  corpus_emit->add_option("--out", out_path, "Write to this file instead of stdout");
  add_common(corpus_emit, common);
  auto* corpus_verify = corpus_cmd->add_subcommand("verify", "Re-run every expected verdict");
  corpus_verify->add_option("names", verify_names);
  add_common(corpus_verify, common);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random-space property checks");
  fuzz_cmd->add_option("--trials", fuzz.trials)->capture_default_str();
  fuzz_cmd->add_option("--n-max", fuzz.n_max)->capture_default_str();
  add_common(fuzz_cmd, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kUsage;
  }

  try {
    if (*validate) return cmd_validate(space_ref, expect, common, out);
    if (*derive) return cmd_derive(space_ref, kind, common, out);
    if (*gen_cmd) return cmd_gen(gen, common, out);
    if (*ball_cmd) return cmd_ball(space_ref, family, center, eps, common, out);
    if (*topo) return cmd_topology(space_ref, family, max_points, common, out);
    if (*topo_cmp) return cmd_topology_compare(space_ref, left, right, expect, max_points, common, out);
    if (*seq_cmd) return cmd_sequence(seq, common, out);
    if (*orbit_cmd) return cmd_orbit(orbit_sys, iter, common, out);
    if (*cert_cmd) return cmd_certify(cert_sys, cert, common, out);
    if (*fix_cmd) return cmd_fixpoint(fix_sys, iter, fix, common, out);
    if (*corpus_list) return cmd_corpus_list(common, out);
    if (*corpus_emit) return cmd_corpus_emit(corpus_entry, out_path, common, out);
    if (*corpus_verify) return cmd_corpus_verify(verify_names, common, out);
    if (*fuzz_cmd) return cmd_fuzz(fuzz, common, out);
  } catch (const InvalidSpace& e) {
    report_error(err, e);
    if (e.has_witness()) err << "witness: (" << e.row() << "," << e.col() << ")\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    report_error(err, e);
    return kViolation;
  } catch (const AmbiguityError& e) {
    report_error(err, e);
    return kViolation;
  } catch (const Error& e) {
    report_error(err, e);
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    report_error(err, e);
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace mmetric::cli
