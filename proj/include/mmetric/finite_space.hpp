#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mmetric {

/// A finite set of labelled points with a symmetric table of finite real
/// self- and cross-distances. Points are addressed by their index.
///
/// Construction validates the table: square, n >= 1, every entry finite and
/// sigma[i][j] == sigma[j][i] bit-for-bit. Violations throw InvalidSpace with
/// the offending (row, col).
class FiniteSpace {
 public:
  using point_type = std::size_t;

  FiniteSpace(std::vector<std::string> labels,
              std::vector<std::vector<double>> sigma);

  /// Builds a space from the upper triangle of a generator; the lower
  /// triangle is mirrored so symmetry holds by construction.
  template <class F>
  static FiniteSpace from_function(std::vector<std::string> labels, F&& fn) {
    const std::size_t n = labels.size();
    std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        table[i][j] = fn(i, j);
        table[j][i] = table[i][j];
      }
    }
    return FiniteSpace(std::move(labels), std::move(table));
  }

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] double sigma(std::size_t x, std::size_t y) const {
    return table_[x * labels_.size() + y];
  }
  [[nodiscard]] bool contains(std::size_t x) const noexcept { return x < size(); }

  [[nodiscard]] const std::string& label(std::size_t x) const { return labels_.at(x); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Index of a label; throws UnknownPoint.
  [[nodiscard]] std::size_t index_of(std::string_view label) const;
  [[nodiscard]] std::optional<std::size_t> find(std::string_view label) const;

  [[nodiscard]] std::vector<std::vector<double>> table() const;

  /// Smallest entry of the whole table.
  [[nodiscard]] double min_entry() const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<double> table_;  // row-major n x n
};

/// `{"points": [...], "sigma": [[...], ...]}`
nlohmann::json to_json(const FiniteSpace& space);
FiniteSpace finite_space_from_json(const nlohmann::json& doc);

FiniteSpace read_finite_space(const std::string& path);

/// Shortest decimal form that round-trips, used for labels of real points.
std::string format_real(double value);

}  // namespace mmetric
