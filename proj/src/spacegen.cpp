#include "mmetric/spacegen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mmetric/distance.hpp"
#include "mmetric/error.hpp"

namespace mmetric {

namespace {

constexpr double kSeparationMargin = kDefaultAxiomTol;

void validate(const GenConfig& cfg) {
  if (cfg.n == 0) throw ArgumentError("GenConfig.n must be >= 1");
  if (cfg.d_range.lo < 0.0 || cfg.d_range.lo > cfg.d_range.hi) {
    throw ArgumentError("GenConfig.d_range must be a nonnegative interval");
  }
  if (cfg.diag_range.lo > cfg.diag_range.hi) {
    throw ArgumentError("GenConfig.diag_range must satisfy lo <= hi");
  }
  if (cfg.quantum < 0.0) throw ArgumentError("GenConfig.quantum must be >= 0");
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, double quantum) : rng_(seed), quantum_(quantum) {}

  double operator()(Interval range) {
    double v = range.lo;
    if (range.hi > range.lo) v = std::uniform_real_distribution<double>(range.lo, range.hi)(rng_);
    if (quantum_ > 0.0) {
      const double qlo = std::ceil(range.lo / quantum_) * quantum_;
      const double qhi = std::floor(range.hi / quantum_) * quantum_;
      // A range narrower than one step has no grid point; keep the raw draw.
      if (qlo <= qhi) v = std::clamp(std::round(v / quantum_) * quantum_, qlo, qhi);
    }
    return v;
  }

 private:
  std::mt19937_64 rng_;
  double quantum_;
};

bool near(double a, double b) { return std::abs(a - b) <= kSeparationMargin; }

std::vector<double> sample_diagonal(const GenConfig& cfg, Sampler& draw) {
  std::vector<double> s(cfg.n);
  for (auto& v : s) v = draw(cfg.diag_range);
  if (!cfg.ensure_distinct_diag) return s;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    std::size_t attempts = 0;
    auto collides = [&] {
      for (std::size_t j = 0; j < i; ++j) {
        if (near(s[i], s[j])) return true;
      }
      return false;
    };
    while (collides()) {
      if (++attempts > cfg.resample_budget) {
        throw CapacityError("cannot draw " + std::to_string(cfg.n) +
                            " distinct self-distances from the configured range");
      }
      s[i] = draw(cfg.diag_range);
    }
  }
  return s;
}

std::vector<std::vector<double>> closed_distances(const GenConfig& cfg, Sampler& draw) {
  const std::size_t n = cfg.n;
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = draw(cfg.d_range);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

}  // namespace

std::vector<std::string> generated_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
  return labels;
}

FiniteSpace gen_m_metric(const GenConfig& cfg) {
  validate(cfg);
  Sampler draw(cfg.seed, cfg.quantum);
  for (std::size_t attempt = 0; attempt <= cfg.resample_budget; ++attempt) {
    const auto s = sample_diagonal(cfg, draw);
    const auto d = closed_distances(cfg, draw);

    bool separated = true;
    for (std::size_t i = 0; i < cfg.n && separated; ++i) {
      for (std::size_t j = i + 1; j < cfg.n; ++j) {
        if (d[i][j] <= kSeparationMargin && near(s[i], s[j])) {
          separated = false;
          break;
        }
      }
    }
    if (!separated) continue;

    return FiniteSpace::from_function(generated_labels(cfg.n), [&](std::size_t i, std::size_t j) {
      return d[i][j] + std::min(s[i], s[j]);
    });
  }
  throw CapacityError("resample budget exhausted: configuration cannot produce a separated space");
}

FiniteSpace gen_partial_metric(const GenConfig& cfg) { return induce_partial(gen_m_metric(cfg)); }

}  // namespace mmetric
