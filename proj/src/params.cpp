// SPDX-License-Identifier: Apache-2.0
#include "encbound/params.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace encbound {

namespace {

std::uint64_t as_count(const std::string& key, double v) {
  if (!(v >= 0.0) || v != std::floor(v) || v > 9.0e18) {
    throw std::invalid_argument("parameter " + key + " must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

void Params::set_from_text(std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw std::invalid_argument("expected key=value, got '" + std::string(assignment) + "'");
  }
  std::string key(assignment.substr(0, eq));
  std::string text(assignment.substr(eq + 1));
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("parameter " + key + " is not a number: '" + text + "'");
  }
  values_[key] = value;
}

double Params::get(const std::string& key, double fallback) const {
  used_.insert(key);
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Params::require(const std::string& key) const {
  used_.insert(key);
  auto it = values_.find(key);
  if (it == values_.end()) throw std::invalid_argument("missing required parameter " + key);
  return it->second;
}

std::uint64_t Params::get_count(const std::string& key, std::uint64_t fallback) const {
  used_.insert(key);
  auto it = values_.find(key);
  return it == values_.end() ? fallback : as_count(key, it->second);
}

std::uint64_t Params::require_count(const std::string& key) const { return as_count(key, require(key)); }

std::vector<std::string> Params::unused() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) {
    if (!used_.count(k)) out.push_back(k);
  }
  return out;
}

}  // namespace encbound
