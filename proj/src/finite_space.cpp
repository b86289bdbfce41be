#include "mmetric/finite_space.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "mmetric/error.hpp"

namespace mmetric {

FiniteSpace::FiniteSpace(std::vector<std::string> labels,
                         std::vector<std::vector<double>> sigma)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InvalidSpace("space must contain at least one point");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw InvalidSpace("point labels must be distinct");
  }
  if (sigma.size() != n) {
    throw InvalidSpace("sigma has " + std::to_string(sigma.size()) + " rows, expected " +
                       std::to_string(n));
  }
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i].size() != n) {
      throw InvalidSpace("sigma row " + std::to_string(i) + " has " +
                         std::to_string(sigma[i].size()) + " entries, expected " +
                         std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(sigma[i][j])) {
        throw InvalidSpace("sigma(" + labels_[i] + "," + labels_[j] + ") is not finite", i, j);
      }
      table_[i * n + j] = sigma[i][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sigma[i][j] != sigma[j][i]) {
        std::ostringstream msg;
        msg << "asymmetric table at (" << i << "," << j << "): sigma(" << labels_[i] << ","
            << labels_[j] << ")=" << format_real(sigma[i][j]) << " but sigma(" << labels_[j]
            << "," << labels_[i] << ")=" << format_real(sigma[j][i]);
        throw InvalidSpace(msg.str(), i, j);
      }
    }
  }
}

std::optional<std::size_t> FiniteSpace::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FiniteSpace::index_of(std::string_view label) const {
  if (auto idx = find(label)) return *idx;
  throw UnknownPoint("unknown point '" + std::string(label) + "'");
}

std::vector<std::vector<double>> FiniteSpace::table() const {
  const std::size_t n = size();
  std::vector<std::vector<double>> out(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = sigma(i, j);
  }
  return out;
}

double FiniteSpace::min_entry() const { return *std::min_element(table_.begin(), table_.end()); }

nlohmann::json to_json(const FiniteSpace& space) {
  return nlohmann::json{{"points", space.labels()}, {"sigma", space.table()}};
}

FiniteSpace finite_space_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("sigma")) {
    throw InvalidSpace("space JSON must be an object with \"points\" and \"sigma\"");
  }
  try {
    auto labels = doc.at("points").get<std::vector<std::string>>();
    auto table = doc.at("sigma").get<std::vector<std::vector<double>>>();
    return FiniteSpace(std::move(labels), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpace(std::string("malformed space JSON: ") + e.what());
  }
}

FiniteSpace read_finite_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidSpace("'" + path + "' is not valid JSON: " + e.what());
  }
  return finite_space_from_json(doc);
}

std::string format_real(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return std::to_string(value);
  return std::string(buf, end);
}

}  // namespace mmetric
