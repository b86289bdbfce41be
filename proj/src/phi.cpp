#include "mmetric/phi.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "mmetric/error.hpp"
#include "mmetric/finite_space.hpp"

namespace mmetric {

namespace {

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ArgumentError("'" + std::string(text) + "' is not a number");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Phi Phi::linear(double slope, double origin) {
  Phi phi(Kind::linear, "linear(" + format_real(slope) + (origin != 0.0 ? "," + format_real(origin) : "") + ")");
  phi.a_ = slope;
  phi.origin_ = origin;
  return phi;
}

Phi Phi::power(double scale, double exponent, double origin) {
  Phi phi(Kind::power, "power(" + format_real(scale) + "," + format_real(exponent) +
                           (origin != 0.0 ? "," + format_real(origin) : "") + ")");
  phi.a_ = scale;
  phi.b_ = exponent;
  phi.origin_ = origin;
  return phi;
}

Phi Phi::table(std::vector<std::pair<double, double>> knots) {
  if (knots.empty()) throw ArgumentError("phi table needs at least one knot");
  std::sort(knots.begin(), knots.end());
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (knots[i].first == knots[i - 1].first) throw ArgumentError("phi table knots must be distinct");
  }
  std::ostringstream name;
  name << "table(";
  for (std::size_t i = 0; i < knots.size(); ++i) {
    name << (i ? "," : "") << format_real(knots[i].first) << "=" << format_real(knots[i].second);
  }
  name << ")";
  Phi phi(Kind::table, name.str());
  phi.origin_ = knots.front().first;
  phi.knots_ = std::move(knots);
  return phi;
}

Phi Phi::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  const auto rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "linear") {
    const auto args = split(rest, ':');
    if (args.empty() || args.size() > 2 || args[0].empty()) throw ArgumentError("usage: linear:<slope>[:<origin>]");
    return linear(parse_number(args[0]), args.size() == 2 ? parse_number(args[1]) : 0.0);
  }
  if (kind == "power") {
    const auto args = split(rest, ':');
    if (args.size() < 2 || args.size() > 3) throw ArgumentError("usage: power:<scale>:<exponent>[:<origin>]");
    return power(parse_number(args[0]), parse_number(args[1]),
                 args.size() == 3 ? parse_number(args[2]) : 0.0);
  }
  if (kind == "table") {
    std::vector<std::pair<double, double>> knots;
    for (auto item : split(rest, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw ArgumentError("usage: table:<t>=<v>,<t>=<v>,...");
      knots.emplace_back(parse_number(item.substr(0, eq)), parse_number(item.substr(eq + 1)));
    }
    return table(std::move(knots));
  }
  throw ArgumentError("unknown phi kind '" + std::string(kind) + "' (linear, power, table)");
}

double Phi::operator()(double t) const {
  if (t <= origin_) return 0.0;
  switch (kind_) {
    case Kind::linear: return a_ * (t - origin_);
    case Kind::power: return a_ * std::pow(t - origin_, b_);
    case Kind::table: {
      if (t >= knots_.back().first) return knots_.back().second;
      const auto hi = std::upper_bound(knots_.begin(), knots_.end(), t,
                                       [](double v, const auto& k) { return v < k.first; });
      const auto lo = hi - 1;
      const double w = (t - lo->first) / (hi->first - lo->first);
      return lo->second + w * (hi->second - lo->second);
    }
  }
  return 0.0;
}

PhiContractReport validate_phi(const Phi& phi, double r, double span, std::size_t grid,
                               double tol) {
  if (grid < 2) grid = 2;
  if (!(span > 0.0)) span = 1.0;
  const double at_r = phi(r);
  if (!std::isfinite(at_r) || std::abs(at_r) > tol) {
    return {false, phi.name() + " is " + format_real(at_r) + " at r=" + format_real(r) + ", expected 0"};
  }
  double previous = at_r;
  for (std::size_t k = 1; k < grid; ++k) {
    const double t = r + span * static_cast<double>(k) / static_cast<double>(grid - 1);
    const double v = phi(t);
    if (!std::isfinite(v)) return {false, phi.name() + " is not finite at t=" + format_real(t)};
    if (!(v > 0.0)) {
      return {false, phi.name() + " vanishes at t=" + format_real(t) + " > r=" + format_real(r)};
    }
    if (v < previous) {
      return {false, phi.name() + " decreases before t=" + format_real(t)};
    }
    previous = v;
  }
  return {};
}

}  // namespace mmetric
