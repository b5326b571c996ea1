#pragma once

// Run configuration: a flat key = value text format with [section] headers.
//
//   # comment
//   [params]   a, A
//   [run]      mode, tau_end, step, seed, samples, out, svg, renormalize
//   [initial]  u0, udot0, uddot0      (four comma-separated numbers each)
//   [helix]    omega, phase
//   [sweep]    A_over_a, omega        (comma-separated list or start:stop:count)

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zitterlab/lagrangians.hpp"
#include "zitterlab/minkowski.hpp"

namespace zitterlab {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Simulate, Check, Sweep };

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Simulate: return "simulate";
    case Mode::Check: return "check";
    case Mode::Sweep: return "sweep";
  }
  return "?";
}

struct InitialData {
  FourVector u0;
  FourVector udot0;
  FourVector uddot0;
};

struct HelixSpec {
  double omega = 0.0;
  double phase = 0.0;
};

struct SweepGrid {
  std::vector<double> A_over_a;
  std::vector<double> omega;

  std::size_t size() const { return A_over_a.size() * omega.size(); }
};

struct RunConfig {
  BoppParams params{1.0, 1.0};
  std::optional<Mode> mode;
  std::optional<InitialData> initial;
  std::optional<HelixSpec> helix;
  SweepGrid sweep;
  double tau_end = 20.0;
  double step = 1e-3;
  std::uint64_t seed = 42;
  std::size_t sample_count = 1000;
  std::string out_dir = "out";
  bool svg = false;
  bool renormalize = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_number(std::string_view text, const std::string& key) {
  text = trim(text);
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ConfigError("'" + key + "': not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

inline std::uint64_t parse_unsigned(std::string_view text, const std::string& key) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("'" + key + "': not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

inline bool parse_bool(std::string_view text, const std::string& key) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("'" + key + "': expected true/false");
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline FourVector parse_four_vector(std::string_view text, const std::string& key) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw ConfigError("'" + key + "': expected four comma-separated numbers");
  FourVector v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = parse_number(parts[i], key);
  return v;
}

/// "v1, v2, ..." or "start:stop:count" (inclusive, evenly spaced).
inline std::vector<double> parse_grid(std::string_view text, const std::string& key) {
  std::vector<double> values;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("'" + key + "': range must be start:stop:count");
    const double start = parse_number(parts[0], key);
    const double stop = parse_number(parts[1], key);
    const auto count = parse_unsigned(parts[2], key);
    for (std::uint64_t i = 0; i < count; ++i) {
      values.push_back(count == 1 ? start
                                  : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return values;
  }
  if (trim(text).empty()) return values;
  for (auto part : split(text, ',')) values.push_back(parse_number(part, key));
  return values;
}

}  // namespace detail

inline RunConfig parse_config(std::istream& in) {
  static const std::map<std::string, std::set<std::string>> known = {
      {"params", {"a", "A"}},
      {"run", {"mode", "tau_end", "step", "seed", "samples", "out", "svg", "renormalize"}},
      {"initial", {"u0", "udot0", "uddot0"}},
      {"helix", {"omega", "phase"}},
      {"sweep", {"A_over_a", "omega"}},
  };
  std::map<std::string, std::map<std::string, std::string>> entries;
  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (view.front() == '[') {
      if (view.back() != ']') throw ConfigError(where + ": malformed section header");
      section = std::string(detail::trim(view.substr(1, view.size() - 2)));
      if (!known.contains(section)) throw ConfigError(where + ": unknown section [" + section + "]");
      entries[section];
      continue;
    }
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected key = value");
    if (section.empty()) throw ConfigError(where + ": key outside of a section");
    const std::string key(detail::trim(view.substr(0, eq)));
    const std::string value(detail::trim(view.substr(eq + 1)));
    if (!known.at(section).contains(key)) throw ConfigError(where + ": unknown key '" + key + "' in [" + section + "]");
    if (!entries[section].emplace(key, value).second) throw ConfigError(where + ": duplicate key '" + key + "'");
  }

  RunConfig cfg;
  auto get = [&](const std::string& sec, const std::string& key) -> const std::string* {
    const auto s = entries.find(sec);
    if (s == entries.end()) return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  };
  if (auto v = get("params", "a")) cfg.params.a = detail::parse_number(*v, "a");
  if (auto v = get("params", "A")) cfg.params.A = detail::parse_number(*v, "A");
  if (auto v = get("run", "mode")) {
    if (*v == "simulate") cfg.mode = Mode::Simulate;
    else if (*v == "check") cfg.mode = Mode::Check;
    else if (*v == "sweep") cfg.mode = Mode::Sweep;
    else throw ConfigError("'mode': expected simulate, check or sweep");
  }
  if (auto v = get("run", "tau_end")) cfg.tau_end = detail::parse_number(*v, "tau_end");
  if (auto v = get("run", "step")) cfg.step = detail::parse_number(*v, "step");
  if (auto v = get("run", "seed")) cfg.seed = detail::parse_unsigned(*v, "seed");
  if (auto v = get("run", "samples")) cfg.sample_count = detail::parse_unsigned(*v, "samples");
  if (auto v = get("run", "out")) cfg.out_dir = *v;
  if (auto v = get("run", "svg")) cfg.svg = detail::parse_bool(*v, "svg");
  if (auto v = get("run", "renormalize")) cfg.renormalize = detail::parse_bool(*v, "renormalize");
  if (entries.contains("initial")) {
    InitialData init{};
    const std::string* u0 = get("initial", "u0");
    if (u0 == nullptr) throw ConfigError("[initial] requires u0");
    init.u0 = detail::parse_four_vector(*u0, "u0");
    if (auto v = get("initial", "udot0")) init.udot0 = detail::parse_four_vector(*v, "udot0");
    if (auto v = get("initial", "uddot0")) init.uddot0 = detail::parse_four_vector(*v, "uddot0");
    cfg.initial = init;
  }
  if (entries.contains("helix")) {
    HelixSpec spec;
    const std::string* omega = get("helix", "omega");
    if (omega == nullptr) throw ConfigError("[helix] requires omega");
    spec.omega = detail::parse_number(*omega, "omega");
    if (auto v = get("helix", "phase")) spec.phase = detail::parse_number(*v, "phase");
    cfg.helix = spec;
  }
  if (auto v = get("sweep", "A_over_a")) cfg.sweep.A_over_a = detail::parse_grid(*v, "A_over_a");
  if (auto v = get("sweep", "omega")) cfg.sweep.omega = detail::parse_grid(*v, "omega");
  return cfg;
}

inline RunConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  return parse_config(in);
}

/// Throws ConfigError unless cfg is runnable in the given mode.
inline void validate(const RunConfig& cfg, Mode mode) {
  if (cfg.mode && *cfg.mode != mode) {
    throw ConfigError("config says mode = " + std::string(to_string(*cfg.mode)) + " but '" +
                      std::string(to_string(mode)) + "' was requested");
  }
  if (cfg.params.a == 0.0) {
    throw ConfigError("a = 0 violates the rank condition: the u-dot Hessian of the Lagrangian must have rank 3");
  }
  if (!(cfg.tau_end > 0.0)) throw ConfigError("tau_end must be > 0");
  if (!(cfg.step > 0.0)) throw ConfigError("step must be > 0");
  switch (mode) {
    case Mode::Check:
      if (cfg.sample_count == 0) throw ConfigError("samples must be >= 1 (an empty suite is not a pass)");
      break;
    case Mode::Simulate:
      if (cfg.initial.has_value() == cfg.helix.has_value()) {
        throw ConfigError("simulate needs exactly one of [initial] or [helix]");
      }
      break;
    case Mode::Sweep:
      if (cfg.sweep.size() == 0) throw ConfigError("sweep grid is empty (need A_over_a and omega values)");
      break;
  }
}

}  // namespace zitterlab
