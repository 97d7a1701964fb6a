// SPDX-License-Identifier: Apache-2.0
#include "encbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace encbound::report {

using nlohmann::json;
using experiments::Check;
using experiments::ExperimentReport;

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  if (x == std::trunc(x) && std::abs(x) < 0x1.0p53) return static_cast<std::int64_t>(x);
  return x;
}

json to_json(const NamedValues& values) {
  json out = json::object();
  for (const auto& [k, v] : values) out[k] = number(v);
  return out;
}

json to_json(const TailBound& b) {
  json out = json::object();
  out["theorem"] = b.theorem;
  out["params"] = to_json(b.params);
  out["t"] = b.threshold ? number(*b.threshold) : json(nullptr);
  out["savings"] = number(b.savings);
  out["probability"] = number(b.probability);
  out["asymptotic"] = b.asymptotic;
  out["clamped"] = b.clamped;
  out["extras"] = to_json(b.extras);
  return out;
}

json to_json(const Check& c) {
  json out = json::object();
  out["name"] = c.name;
  out["trials"] = c.trials;
  out["exceed_count"] = c.exceed;
  out["empirical_prob"] = number(c.empirical());
  out["mc_stderr"] = number(c.mc_stderr());
  out["exact"] = c.exact;
  out["verdict"] = std::string(experiments::to_string(c.verdict));
  out["bound"] = to_json(c.bound);
  return out;
}

json to_json(const ExperimentReport& r, bool include_timing) {
  const Check& head = r.primary();
  json out = json::object();
  out["experiment"] = r.experiment;
  out["params"] = to_json(r.params);
  out["trials"] = r.trials;
  out["seed"] = r.seed;
  out["exceed_count"] = head.exceed;
  out["empirical_prob"] = number(head.empirical());
  out["bound"] = number(head.bound.probability);
  out["threshold"] = head.bound.threshold ? number(*head.bound.threshold) : json(nullptr);
  out["mc_stderr"] = number(head.mc_stderr());
  out["asymptotic"] = head.bound.asymptotic;
  out["verdict"] = std::string(experiments::to_string(r.verdict()));
  if (include_timing) out["wall_ms"] = number(r.wall_ms);
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  out["checks"] = std::move(checks);
  out["stats"] = to_json(r.stats);
  json hist = json::object();
  for (const auto& h : r.histograms) hist[h.name] = h.counts;
  out["histograms"] = std::move(hist);
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

class CsvWriter {
 public:
  CsvWriter() { out_ << "record,name,field,value\n"; }
  void row(const std::string& record, const std::string& name, const std::string& field, double value) {
    out_ << record << ',' << name << ',' << field << ',' << format_number(value) << '\n';
  }
  void text(const std::string& record, const std::string& name, const std::string& field, std::string_view value) {
    out_ << record << ',' << name << ',' << field << ',' << value << '\n';
  }
  void bound(const std::string& record, const TailBound& b) {
    text(record, b.theorem, "theorem", b.theorem);
    for (const auto& [k, v] : b.params) row(record, b.theorem, "param." + k, v);
    if (b.threshold) row(record, b.theorem, "t", *b.threshold);
    row(record, b.theorem, "savings", b.savings);
    row(record, b.theorem, "probability", b.probability);
    row(record, b.theorem, "asymptotic", b.asymptotic ? 1.0 : 0.0);
    row(record, b.theorem, "clamped", b.clamped ? 1.0 : 0.0);
    for (const auto& [k, v] : b.extras) row(record, b.theorem, "extra." + k, v);
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace

std::string to_csv(const TailBound& bound) {
  CsvWriter w;
  w.bound("bound", bound);
  return w.str();
}

std::string to_csv(const ExperimentReport& r, bool include_timing) {
  CsvWriter w;
  const Check& head = r.primary();
  const std::string& e = r.experiment;
  for (const auto& [k, v] : r.params) w.row("param", e, k, v);
  w.row("report", e, "trials", static_cast<double>(r.trials));
  w.row("report", e, "seed", static_cast<double>(r.seed));
  w.row("report", e, "exceed_count", static_cast<double>(head.exceed));
  w.row("report", e, "empirical_prob", head.empirical());
  w.row("report", e, "bound", head.bound.probability);
  if (head.bound.threshold) w.row("report", e, "threshold", *head.bound.threshold);
  w.row("report", e, "mc_stderr", head.mc_stderr());
  w.row("report", e, "asymptotic", head.bound.asymptotic ? 1.0 : 0.0);
  w.text("report", e, "verdict", experiments::to_string(r.verdict()));
  if (include_timing) w.row("report", e, "wall_ms", r.wall_ms);
  for (const auto& c : r.checks) {
    w.row("check", c.name, "trials", static_cast<double>(c.trials));
    w.row("check", c.name, "exceed_count", static_cast<double>(c.exceed));
    w.row("check", c.name, "empirical_prob", c.empirical());
    w.row("check", c.name, "mc_stderr", c.mc_stderr());
    w.row("check", c.name, "exact", c.exact ? 1.0 : 0.0);
    w.text("check", c.name, "verdict", experiments::to_string(c.verdict));
    w.bound("check." + c.name, c.bound);
  }
  for (const auto& [k, v] : r.stats) w.row("stat", e, k, v);
  for (const auto& h : r.histograms) {
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
      w.row("histogram", h.name, std::to_string(i), static_cast<double>(h.counts[i]));
    }
  }
  return w.str();
}

}  // namespace encbound::report
