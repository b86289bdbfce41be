#include "mmetric/map_system.hpp"

#include <sstream>

namespace mmetric {

MapSystem<FiniteSpace> finite_map(FiniteSpace space, std::vector<std::size_t> image,
                                  std::size_t x0, std::string name) {
  if (image.size() != space.size()) {
    throw ArgumentError("map image table must list one image per point");
  }
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= space.size()) {
      throw ArgumentError("map sends " + space.label(i) + " outside the space");
    }
  }
  if (!space.contains(x0)) throw UnknownPoint("base point outside the space");
  MapSystem<FiniteSpace> sys{std::move(space), nullptr, x0, std::move(name)};
  sys.f = [table = std::move(image)](std::size_t x) { return table.at(x); };
  return sys;
}

MapSystem<FiniteSpace> finite_map_from_spec(FiniteSpace space, std::string_view spec,
                                            std::string_view x0, std::string name) {
  std::vector<std::size_t> image(space.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  std::stringstream in{std::string(spec)};
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ArgumentError("map entry '" + item + "' is not of the form from:to");
    }
    image[space.index_of(item.substr(0, colon))] = space.index_of(item.substr(colon + 1));
  }
  const std::size_t base = space.index_of(x0);
  return finite_map(std::move(space), std::move(image), base, std::move(name));
}

MapSystem<FunctionalSpace> affine_map(FunctionalSpace space, double alpha, double beta,
                                      double x0) {
  if (!space.contains(x0)) throw UnknownPoint("base point outside the domain");
  std::ostringstream name;
  name << "affine(" << format_real(alpha) << "x+" << format_real(beta) << ")";
  MapSystem<FunctionalSpace> sys{std::move(space), nullptr, x0, name.str()};
  sys.f = [alpha, beta](double x) { return alpha * x + beta; };
  return sys;
}

}  // namespace mmetric
