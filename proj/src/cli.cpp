// SPDX-License-Identifier: Apache-2.0
#include "encbound/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "encbound/bitcodes.hpp"
#include "encbound/bounds.hpp"
#include "encbound/experiments.hpp"
#include "encbound/graph.hpp"
#include "encbound/params.hpp"
#include "encbound/report.hpp"
#include "encbound/rng.hpp"
#include "encbound/suite.hpp"
#include "encbound/witnesses.hpp"

namespace encbound::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultTrials = 10'000;
constexpr std::uint64_t kDefaultSeed = 1;

/// Raised for bad invocations; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string out_path;
  std::string in_path;
  std::vector<std::string> params;
};

struct Invocation {
  Params params;
  std::vector<std::string> data;  // positional arguments without '='
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
};

Invocation split_arguments(const Options& o, const std::vector<std::string>& positional, std::uint64_t default_trials) {
  Invocation inv;
  for (const auto& a : positional) {
    if (a.find('=') == std::string::npos) {
      inv.data.push_back(a);
    } else {
      inv.params.set_from_text(a);
    }
  }
  for (const auto& a : o.params) inv.params.set_from_text(a);
  inv.trials = inv.params.get_count("trials", o.trials.value_or(default_trials));
  inv.seed = inv.params.get_count("seed", o.seed.value_or(kDefaultSeed));
  return inv;
}

void reject_unused(const Params& p) {
  const auto unused = p.unused();
  if (unused.empty()) return;
  std::string msg = "unknown parameter(s):";
  for (const auto& k : unused) msg += " " + k;
  throw UsageError(msg);
}

void reject_data(const Invocation& inv) {
  if (!inv.data.empty()) throw UsageError("unexpected argument: " + inv.data.front());
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + o.out_path);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Packed file format: 8-byte big-endian bit length, then the bytes.

void write_packed(const std::string& path, const BitString& bits) {
  const PackedBits packed = bits.to_packed();
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  for (int shift = 56; shift >= 0; shift -= 8) file.put(static_cast<char>((packed.bit_length >> shift) & 0xFF));
  file.write(reinterpret_cast<const char*>(packed.bytes.data()), static_cast<std::streamsize>(packed.bytes.size()));
}

BitString read_packed(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open input file " + path);
  std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  if (raw.size() < 8) throw UsageError("packed file shorter than its 8-byte header");
  PackedBits packed;
  for (int i = 0; i < 8; ++i) packed.bit_length = (packed.bit_length << 8) | raw[static_cast<std::size_t>(i)];
  packed.bytes.assign(raw.begin() + 8, raw.end());
  if (packed.bytes.size() != (packed.bit_length + 7) / 8) throw UsageError("packed file length does not match header");
  return BitString::from_packed(packed);
}

// Codecs

struct IntCodec {
  std::string_view id;
  void (*encode)(std::uint64_t, BitString&);
  std::uint64_t (*decode)(BitReader&);
  std::uint64_t (*length)(std::uint64_t);
  std::uint64_t min_value;
};

template <typename C>
IntCodec int_codec(std::string_view id) {
  return {id, &C::encode, &C::decode, &C::length, C::min_value};
}

std::optional<IntCodec> find_int_codec(std::string_view id) {
  static const std::vector<IntCodec> list = {
      int_codec<bitcodes::Unary>("unary"), int_codec<bitcodes::EliasGamma>("elias-gamma"),
      int_codec<bitcodes::EliasDelta>("elias-delta"), int_codec<bitcodes::EliasOmega>("elias-omega")};
  for (const auto& c : list) {
    if (c.id == id) return c;
  }
  return std::nullopt;
}

constexpr std::string_view kCodecIds = "unary elias-gamma elias-delta elias-omega runs urns clique inssort";

struct Tally {
  std::uint64_t domain = 0;
  std::uint64_t encoded = 0;
  std::uint64_t failures = 0;
};

bool roundtrip_int(const IntCodec& c, std::uint64_t v) {
  BitString bits;
  c.encode(v, bits);
  BitReader in(bits);
  return c.decode(in) == v && in.at_end() && bits.size() == c.length(v);
}

void check_runs(const BitString& x, std::size_t t, Tally& tally) {
  ++tally.domain;
  const auto code = witnesses::runs_encode(x, t);
  if (code.has_value() != witnesses::first_run(x, t).has_value()) ++tally.failures;
  if (!code) return;
  ++tally.encoded;
  if (code->size() != witnesses::runs_length(x.size(), t) || witnesses::runs_decode(*code, x.size(), t) != x) {
    ++tally.failures;
  }
}

void check_urns(const std::vector<std::uint64_t>& balls, std::size_t t, Tally& tally) {
  ++tally.domain;
  std::vector<std::uint64_t> load(balls.size(), 0);
  for (auto b : balls) ++load[b];
  const bool has = !load.empty() && *std::max_element(load.begin(), load.end()) >= t;
  const auto code = witnesses::urns_encode(balls, t);
  if (code.has_value() != has) ++tally.failures;
  if (!code) return;
  ++tally.encoded;
  if (code->size() != witnesses::urns_length(balls.size(), t) || witnesses::urns_decode(*code, balls.size(), t) != balls) {
    ++tally.failures;
  }
}

void check_clique(const Graph& g, std::size_t t, witnesses::VertexListMode mode, Tally& tally) {
  ++tally.domain;
  const std::size_t n = g.vertex_count();
  const auto code = witnesses::clique_encode(g, t, mode);
  if (code.has_value() != find_homogeneous_set(g, t).has_value()) ++tally.failures;
  if (!code) return;
  ++tally.encoded;
  if (code->size() != witnesses::clique_length(n, t, mode) || !(witnesses::clique_decode(*code, n, t, mode) == g)) {
    ++tally.failures;
  }
}

void check_inssort(const std::vector<std::uint64_t>& sigma, Tally& tally) {
  ++tally.domain;
  ++tally.encoded;
  const BitString code = witnesses::inssort_encode(sigma);
  const auto m = witnesses::insertion_sort_profile(sigma).total();
  if (code.size() != witnesses::inssort_length(sigma.size(), m) || witnesses::inssort_decode(code, sigma.size()) != sigma) {
    ++tally.failures;
  }
}

witnesses::VertexListMode clique_mode(const Params& p) {
  return p.get("rank", 0.0) != 0.0 ? witnesses::VertexListMode::subset_rank : witnesses::VertexListMode::indices;
}

std::size_t bounded(const Params& p, const std::string& key, std::uint64_t fallback, std::uint64_t lo, std::uint64_t hi,
                    const char* what) {
  const std::uint64_t v = p.get_count(key, fallback);
  if (v < lo || v > hi) {
    throw UsageError(std::string(what) + " needs " + std::to_string(lo) + " <= " + key + " <= " + std::to_string(hi));
  }
  return v;
}

Tally roundtrip_exhaustive(std::string_view id, const Params& p, json& used) {
  Tally tally;
  if (const auto c = find_int_codec(id)) {
    const std::uint64_t lo = p.get_count("lo", std::max<std::uint64_t>(c->min_value, 1));
    const std::uint64_t hi = p.get_count("hi", 65536);
    if (lo < c->min_value || hi < lo || hi - lo >= (std::uint64_t{1} << 24)) {
      throw UsageError("exhaustive range needs min_value <= lo <= hi and hi - lo < 2^24");
    }
    used = {{"lo", lo}, {"hi", hi}};
    for (std::uint64_t v = lo;; ++v) {
      ++tally.domain;
      ++tally.encoded;
      if (!roundtrip_int(*c, v)) ++tally.failures;
      if (v == hi) break;
    }
    return tally;
  }
  if (id == "runs") {
    const std::size_t n = bounded(p, "n", 12, 1, 20, "exhaustive runs");
    const std::size_t t = bounded(p, "t", 5, 1, n, "runs");
    used = {{"n", n}, {"t", t}};
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      BitString bits;
      bits.append_bits(x, static_cast<unsigned>(n));
      check_runs(bits, t, tally);
    }
    return tally;
  }
  if (id == "urns") {
    const std::size_t n = bounded(p, "n", 4, 1, 7, "exhaustive urns");
    const std::size_t t = bounded(p, "t", 3, 1, n, "urns");
    used = {{"n", n}, {"t", t}};
    std::vector<std::uint64_t> balls(n, 0);
    while (true) {
      check_urns(balls, t, tally);
      std::size_t i = 0;
      while (i < n && ++balls[i] == n) balls[i++] = 0;
      if (i == n) break;
    }
    return tally;
  }
  if (id == "clique") {
    const std::size_t n = bounded(p, "n", 5, 2, 6, "exhaustive clique");
    const std::size_t t = bounded(p, "t", 3, 1, n, "clique");
    const auto mode = clique_mode(p);
    used = {{"n", n}, {"t", t}, {"rank", mode == witnesses::VertexListMode::subset_rank ? 1 : 0}};
    const auto pairs = static_cast<unsigned>(pair_count(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      BitString bits;
      bits.append_bits(mask, pairs);
      check_clique(Graph::from_pair_bits(n, bits), t, mode, tally);
    }
    return tally;
  }
  if (id == "inssort") {
    const std::size_t n = bounded(p, "n", 6, 1, 9, "exhaustive inssort");
    used = {{"n", n}};
    std::vector<std::uint64_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::uint64_t{1});
    do {
      check_inssort(sigma, tally);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return tally;
  }
  throw UsageError("unknown codec: " + std::string(id) + " (valid: " + std::string(kCodecIds) + ")");
}

Tally roundtrip_random(std::string_view id, const Params& p, std::uint64_t trials, std::uint64_t seed, json& used) {
  Tally tally;
  Rng rng(seed);
  if (const auto c = find_int_codec(id)) {
    const std::uint64_t hi = p.get_count("max", id == "unary" ? 65536 : std::uint64_t{1} << 32);
    if (hi < c->min_value) throw UsageError("max must be at least the codec's smallest value");
    used = {{"max", hi}};
    for (std::uint64_t i = 0; i < trials; ++i) {
      ++tally.domain;
      ++tally.encoded;
      if (!roundtrip_int(*c, c->min_value + rng.below(hi - c->min_value + 1))) ++tally.failures;
    }
    return tally;
  }
  if (id == "runs") {
    const std::size_t n = bounded(p, "n", 1024, 1, 1 << 24, "runs");
    const std::size_t t = bounded(p, "t", 10, 1, n, "runs");
    used = {{"n", n}, {"t", t}};
    for (std::uint64_t i = 0; i < trials; ++i) {
      BitString bits;
      for (std::size_t j = 0; j < n; ++j) bits.push_back(rng.coin());
      check_runs(bits, t, tally);
    }
    return tally;
  }
  if (id == "urns") {
    const std::size_t n = bounded(p, "n", 64, 1, 1 << 20, "urns");
    const std::size_t t = bounded(p, "t", 4, 1, n, "urns");
    used = {{"n", n}, {"t", t}};
    std::vector<std::uint64_t> balls(n);
    for (std::uint64_t i = 0; i < trials; ++i) {
      for (auto& b : balls) b = rng.below(n);
      check_urns(balls, t, tally);
    }
    return tally;
  }
  if (id == "clique") {
    const std::size_t n = bounded(p, "n", 16, 2, 24, "clique");
    const std::size_t t = bounded(p, "t", 4, 1, n, "clique");
    const auto mode = clique_mode(p);
    used = {{"n", n}, {"t", t}, {"rank", mode == witnesses::VertexListMode::subset_rank ? 1 : 0}};
    for (std::uint64_t i = 0; i < trials; ++i) check_clique(experiments::sample_gnp(n, 0.5, rng), t, mode, tally);
    return tally;
  }
  if (id == "inssort") {
    const std::size_t n = bounded(p, "n", 1000, 1, 1 << 20, "inssort");
    used = {{"n", n}};
    for (std::uint64_t i = 0; i < trials; ++i) check_inssort(experiments::random_permutation(n, rng), tally);
    return tally;
  }
  throw UsageError("unknown codec: " + std::string(id) + " (valid: " + std::string(kCodecIds) + ")");
}

std::uint64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') throw UsageError("not a non-negative integer: " + text);
  return v;
}

std::vector<std::uint64_t> parse_list(const std::vector<std::string>& data) {
  std::vector<std::uint64_t> values;
  for (const auto& d : data) {
    std::stringstream in(d);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) values.push_back(parse_count(item));
    }
  }
  return values;
}

BitString bits_input(const Options& o, const Invocation& inv) {
  if (!o.in_path.empty()) {
    if (!inv.data.empty()) throw UsageError("give either --in or a bit string, not both");
    return read_packed(o.in_path);
  }
  if (inv.data.size() != 1) throw UsageError("expected one bit string argument");
  try {
    return BitString::from_string(inv.data.front());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json values_json(const std::vector<std::uint64_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

json codec_encode(std::string_view id, const Invocation& inv, BitString& bits) {
  const Params& p = inv.params;
  json out = {{"codec", std::string(id)}, {"mode", "encode"}};
  if (const auto c = find_int_codec(id)) {
    const auto values = parse_list(inv.data);
    if (values.empty()) throw UsageError("encode needs at least one value");
    for (auto v : values) {
      if (v < c->min_value) throw UsageError("value below the codec's smallest value");
      c->encode(v, bits);
    }
    out["values"] = values_json(values);
  } else if (id == "runs") {
    if (inv.data.size() != 1) throw UsageError("runs encode takes one bit string");
    const BitString x = BitString::from_string(inv.data.front());
    const std::size_t t = p.require_count("t");
    const auto code = witnesses::runs_encode(x, t);
    if (!code) throw UsageError("input has no run of " + std::to_string(t) + " ones");
    bits = *code;
    out["params"] = {{"n", x.size()}, {"t", t}};
  } else if (id == "urns") {
    const auto balls = parse_list(inv.data);
    const std::size_t t = p.require_count("t");
    for (auto b : balls) {
      if (b >= balls.size()) throw UsageError("urn indices must be below the number of balls");
    }
    const auto code = witnesses::urns_encode(balls, t);
    if (!code) throw UsageError("no urn holds " + std::to_string(t) + " balls");
    bits = *code;
    out["params"] = {{"n", balls.size()}, {"t", t}};
  } else if (id == "clique") {
    if (inv.data.size() != 1) throw UsageError("clique encode takes one pair bit string");
    const std::size_t n = p.require_count("n");
    const std::size_t t = p.require_count("t");
    const auto mode = clique_mode(p);
    const Graph g = Graph::from_pair_bits(n, BitString::from_string(inv.data.front()));
    const auto code = witnesses::clique_encode(g, t, mode);
    if (!code) throw UsageError("graph has no clique or independent set of size " + std::to_string(t));
    bits = *code;
    out["params"] = {{"n", n}, {"t", t}};
  } else if (id == "inssort") {
    const auto sigma = parse_list(inv.data);
    bits = witnesses::inssort_encode(sigma);
    out["params"] = {{"n", sigma.size()}};
  } else {
    throw UsageError("unknown codec: " + std::string(id) + " (valid: " + std::string(kCodecIds) + ")");
  }
  out["bits"] = bits.to_string();
  out["length"] = bits.size();
  return out;
}

json codec_decode(std::string_view id, const Options& o, const Invocation& inv) {
  const Params& p = inv.params;
  const BitString bits = bits_input(o, inv);
  json out = {{"codec", std::string(id)}, {"mode", "decode"}, {"length", bits.size()}};
  if (const auto c = find_int_codec(id)) {
    BitReader in(bits);
    std::vector<std::uint64_t> values;
    while (!in.at_end()) values.push_back(c->decode(in));
    out["values"] = values_json(values);
  } else if (id == "runs") {
    const std::size_t n = p.require_count("n");
    out["bits"] = witnesses::runs_decode(bits, n, p.require_count("t")).to_string();
  } else if (id == "urns") {
    const std::size_t n = p.require_count("n");
    out["balls"] = values_json(witnesses::urns_decode(bits, n, p.require_count("t")));
  } else if (id == "clique") {
    const std::size_t n = p.require_count("n");
    const std::size_t t = p.require_count("t");
    out["pair_bits"] = witnesses::clique_decode(bits, n, t, clique_mode(p)).pair_bits().to_string();
  } else if (id == "inssort") {
    out["permutation"] = values_json(witnesses::inssort_decode(bits, p.require_count("n")));
  } else {
    throw UsageError("unknown codec: " + std::string(id) + " (valid: " + std::string(kCodecIds) + ")");
  }
  return out;
}

// Subcommands

std::string theorem_list() {
  std::string s;
  for (const auto& t : bounds::theorems()) s += (s.empty() ? "" : " ") + t.id;
  return s;
}

std::string experiment_list() {
  std::string s;
  for (const auto& e : experiments::experiment_ids()) s += (s.empty() ? "" : " ") + e.id;
  return s;
}

int do_bound(const Options& o, const std::string& theorem, const std::vector<std::string>& positional, std::ostream& out) {
  const auto& list = bounds::theorems();
  if (std::none_of(list.begin(), list.end(), [&](const auto& t) { return t.id == theorem; })) {
    throw UsageError("unknown theorem: " + theorem + " (valid: " + theorem_list() + ")");
  }
  Invocation inv;
  for (const auto& a : positional) inv.params.set_from_text(a);
  for (const auto& a : o.params) inv.params.set_from_text(a);
  const TailBound b = bounds::evaluate(theorem, inv.params);
  reject_unused(inv.params);
  emit(o, out, o.format == "csv" ? report::to_csv(b) : dump(report::to_json(b)));
  return kExitOk;
}

int do_codec(const Options& o, const std::string& id, const std::string& mode, const std::vector<std::string>& positional,
             std::ostream& out) {
  Invocation inv = split_arguments(o, positional, 1000);
  json result;
  int code = kExitOk;
  if (mode == "roundtrip-exhaustive" || mode == "roundtrip-random") {
    reject_data(inv);
    json used;
    const Tally tally = mode == "roundtrip-exhaustive" ? roundtrip_exhaustive(id, inv.params, used)
                                                       : roundtrip_random(id, inv.params, inv.trials, inv.seed, used);
    result = {{"codec", id}, {"mode", mode}, {"params", used}};
    if (mode == "roundtrip-random") {
      result["trials"] = inv.trials;
      result["seed"] = inv.seed;
    }
    result["domain_size"] = tally.domain;
    result["encoded"] = tally.encoded;
    result["failures"] = tally.failures;
    if (tally.failures != 0) code = kExitViolation;
  } else if (mode == "encode") {
    BitString bits;
    result = codec_encode(id, inv, bits);
    if (!o.out_path.empty()) {
      reject_unused(inv.params);
      write_packed(o.out_path, bits);
      return kExitOk;
    }
  } else if (mode == "decode") {
    result = codec_decode(id, o, inv);
  } else {
    throw UsageError("unknown codec mode: " + mode + " (valid: roundtrip-exhaustive roundtrip-random encode decode)");
  }
  reject_unused(inv.params);
  if (o.format == "csv") {
    std::string csv = "record,name,field,value\n";
    for (const auto& [k, v] : result.items()) {
      if (v.is_primitive()) csv += "codec," + id + "," + k + "," + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
    emit(o, out, csv);
  } else {
    emit(o, out, dump(result));
  }
  return code;
}

int do_experiment(const Options& o, const std::string& id, const std::vector<std::string>& positional,
                  std::ostream& out) {
  const auto& list = experiments::experiment_ids();
  if (std::none_of(list.begin(), list.end(), [&](const auto& e) { return e.id == id; })) {
    throw UsageError("unknown experiment: " + id + " (valid: " + experiment_list() + ")");
  }
  Invocation inv = split_arguments(o, positional, kDefaultTrials);
  reject_data(inv);
  const auto rep = experiments::run_experiment(id, inv.params, inv.trials, inv.seed);
  reject_unused(inv.params);
  emit(o, out, o.format == "csv" ? report::to_csv(rep) : dump(report::to_json(rep)));
  return rep.verdict() == experiments::Verdict::fail ? kExitViolation : kExitOk;
}

std::string suite_csv(const suite::SuiteResult& s) {
  std::string csv = "record,name,field,value\n";
  for (const auto& c : s.criteria) {
    const std::string name = std::to_string(c.id) + " " + c.name;
    csv += "criterion," + name + ",pass," + (c.pass ? "1" : "0") + "\n";
    for (const auto& [k, v] : c.values) csv += "criterion," + name + "," + k + "," + report::format_number(v) + "\n";
    csv += "criterion," + name + ",wall_ms," + report::format_number(c.wall_ms) + "\n";
  }
  return csv;
}

int do_suite(const Options& o, const std::string& name, std::ostream& out, std::ostream& err) {
  if (name != "acceptance" && name != "quick") throw UsageError("unknown suite: " + name + " (valid: acceptance quick)");
  const auto result = suite::run_suite(name);
  for (const auto& c : result.criteria) err << suite::summary_line(c) << "\n";
  emit(o, out, o.format == "csv" ? suite_csv(result) : dump(suite::to_json(result)));
  return result.pass() ? kExitOk : kExitViolation;
}

void add_common(CLI::App* cmd, Options& o, bool with_trials) {
  if (with_trials) {
    cmd->add_option("--trials", o.trials, "Number of trials (default 10000; codec roundtrip-random 1000)");
    cmd->add_option("--seed", o.seed, "Master seed (default 1)");
  }
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("--out", o.out_path, "Write the report to PATH instead of stdout");
  cmd->add_option("--params,--param", o.params, "Extra key=value parameters");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Encoding-argument tail bounds: calculators, codecs and simulations"};
  app.require_subcommand(1);
  Options o;

  std::string theorem;
  std::vector<std::string> bound_args;
  auto* bound = app.add_subcommand("bound", "Evaluate a tail-bound calculator");
  bound->add_option("theorem", theorem, "Calculator id")->required();
  bound->add_option("assignments", bound_args, "key=value parameters");
  add_common(bound, o, false);
  std::string bound_help = "Calculators (parameters, defaults after '='):\n";
  for (const auto& t : bounds::theorems()) bound_help += "  " + t.id + ": " + t.params + "  " + t.summary + "\n";
  bound->footer(bound_help);

  std::string codec_id;
  std::string codec_mode;
  std::vector<std::string> codec_args;
  auto* codec = app.add_subcommand("codec", "Encode, decode or roundtrip-check a codec");
  codec->add_option("codec", codec_id, "Codec id")->required();
  codec->add_option("mode", codec_mode, "roundtrip-exhaustive | roundtrip-random | encode | decode")->required();
  codec->add_option("args", codec_args, "Values, bit strings and key=value parameters");
  codec->add_option("--in", o.in_path, "Read the codeword from a packed file (decode)");
  add_common(codec, o, true);
  codec->footer(
      "Codecs: unary elias-gamma elias-delta elias-omega runs urns clique inssort\n"
      "Exhaustive defaults: integer codes lo=1 hi=65536; runs n=12 t=5 (n<=20); urns n=4 t=3 (n<=7);\n"
      "  clique n=5 t=3 rank=0 (n<=6); inssort n=6 (n<=9)\n"
      "Random defaults: max=2^32 (unary 65536); runs n=1024 t=10; urns n=64 t=4; clique n=16 t=4; inssort n=1000\n"
      "Packed files hold an 8-byte big-endian bit length followed by the bytes.");

  std::string experiment_id;
  std::vector<std::string> experiment_args;
  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo or exhaustive experiment");
  experiment->add_option("id", experiment_id, "Experiment id")->required();
  experiment->add_option("assignments", experiment_args, "key=value parameters (trials= and seed= accepted)");
  add_common(experiment, o, true);
  std::string experiment_help = "Experiments (defaults):\n";
  for (const auto& e : experiments::experiment_ids()) experiment_help += "  " + e.id + ": " + e.params + "\n";
  experiment_help += "Exit code 2 when any check's verdict is fail.";
  experiment->footer(experiment_help);

  std::string suite_name;
  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance battery");
  suite_cmd->add_option("name", suite_name, "acceptance | quick")->required();
  add_common(suite_cmd, o, false);

  app.footer("Exit codes: 0 ok, 1 usage error, 2 bound or roundtrip violation. ENCBOUND_THREADS caps worker threads.");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*bound) return do_bound(o, theorem, bound_args, out);
    if (*codec) return do_codec(o, codec_id, codec_mode, codec_args, out);
    if (*experiment) return do_experiment(o, experiment_id, experiment_args, out);
    return do_suite(o, suite_name, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DecodeError& e) {
    err << "decode error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace encbound::cli
