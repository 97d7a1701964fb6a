// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace encbound {

/// Numeric key=value parameters with use tracking, so callers can reject
/// keys nobody asked for.
class Params {
 public:
  Params() = default;
  explicit Params(std::map<std::string, double> values) : values_(std::move(values)) {}

  /// Parses "key=value"; throws std::invalid_argument on malformed input.
  void set_from_text(std::string_view assignment);
  void set(const std::string& key, double value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }

  double get(const std::string& key, double fallback) const;
  double require(const std::string& key) const;
  /// Integer-valued parameter; rejects fractional or negative values.
  std::uint64_t get_count(const std::string& key, std::uint64_t fallback) const;
  std::uint64_t require_count(const std::string& key) const;

  /// Keys that were supplied but never read.
  std::vector<std::string> unused() const;
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
  mutable std::set<std::string> used_;
};

}  // namespace encbound
