#include "mmetric/sampling.hpp"

#include <algorithm>

namespace mmetric {

double radical_inverse(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double scale = 1.0 / base;
  while (index > 0) {
    result += static_cast<double>(index % base) * scale;
    index /= base;
    scale /= base;
  }
  return result;
}

PairSample<std::size_t> sample_pairs(const FiniteSpace& space, std::size_t) {
  PairSample<std::size_t> out;
  out.exhaustive = true;
  out.pairs.reserve(space.size() * space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) out.pairs.emplace_back(i, j);
  }
  return out;
}

PairSample<double> sample_pairs(const FunctionalSpace& space, std::size_t budget) {
  const double lo = space.lo();
  const double width = space.hi() - space.lo();
  auto at = [&](double u) { return std::min(space.hi(), lo + width * u); };

  PairSample<double> out;
  out.pairs = {{space.lo(), space.lo()},
               {space.lo(), space.hi()},
               {space.hi(), space.lo()},
               {space.hi(), space.hi()}};
  const std::size_t diagonal = budget / 8;
  for (std::size_t i = 1; out.pairs.size() < budget && i <= diagonal; ++i) {
    const double x = at(radical_inverse(i, 2));
    out.pairs.emplace_back(x, x);
  }
  for (std::uint64_t i = 1; out.pairs.size() < budget; ++i) {
    out.pairs.emplace_back(at(radical_inverse(i, 2)), at(radical_inverse(i, 3)));
  }
  return out;
}

std::vector<double> sample_points(const FunctionalSpace& space, std::size_t count) {
  std::vector<double> out;
  if (count == 0) return out;
  out.push_back(space.lo());
  if (count > 1 && space.hi() != space.lo()) out.push_back(space.hi());
  const double width = space.hi() - space.lo();
  for (std::uint64_t i = 1; out.size() < count && width > 0; ++i) {
    out.push_back(space.lo() + width * radical_inverse(i, 2));
  }
  return out;
}

}  // namespace mmetric
