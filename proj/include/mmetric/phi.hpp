#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmetric {

/// Rate functions for orbital phi_r-contractions, restricted to a small
/// registry so their side conditions can be validated:
///   linear  slope * (t - origin)
///   power   scale * (t - origin)^exponent
///   table   piecewise-linear through (t, value) knots, flat past the last knot
/// Arguments below the origin (or the first knot) evaluate to 0.
class Phi {
 public:
  static Phi linear(double slope, double origin = 0.0);
  static Phi power(double scale, double exponent, double origin = 0.0);
  static Phi table(std::vector<std::pair<double, double>> knots);

  /// "linear:<slope>[:<origin>]", "power:<scale>:<exponent>[:<origin>]",
  /// "table:<t>=<v>,<t>=<v>,...". Throws ArgumentError.
  static Phi parse(std::string_view spec);

  double operator()(double t) const;
  [[nodiscard]] const std::string& name() const noexcept { return name_; }

 private:
  enum class Kind { linear, power, table };
  Phi(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  double a_ = 0.0;  // slope or scale
  double b_ = 0.0;  // exponent
  double origin_ = 0.0;
  std::vector<std::pair<double, double>> knots_;
};

struct PhiContractReport {
  bool ok = true;
  std::string failure;
};

inline constexpr std::size_t kPhiGridPoints = 256;

/// Checks on a uniform grid over [r, r + span]: finite, phi(r) = 0 within tol,
/// phi(t) > 0 for t > r, and non-decreasing.
PhiContractReport validate_phi(const Phi& phi, double r, double span,
                               std::size_t grid = kPhiGridPoints, double tol = 1e-12);

}  // namespace mmetric
