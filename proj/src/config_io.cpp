#include "mobnet/config_io.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace mobnet {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

template <typename Int>
Int to_integer(std::string_view text) {
  text = trim(text);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return value;
}

Vec to_vec(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ConfigError("unterminated '['");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<double> values;
  while (true) {
    const auto comma = text.find(',');
    values.push_back(to_double(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (values.size() < 1 || values.size() > Vec::kMaxDim) {
    throw ConfigError("vectors need 1 to 3 components, got " + std::to_string(values.size()));
  }
  Vec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
  return v;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_vec(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += fmt_double(v[i]);
  }
  return out;
}

SelectiveScope parse_scope(std::string_view text) {
  if (text == "diffusions_only") return SelectiveScope::diffusions_only;
  if (text == "all_neighbor_uses") return SelectiveScope::all_neighbor_uses;
  throw ConfigError("expected diffusions_only or all_neighbor_uses, got '" + std::string(text) + "'");
}

struct Field {
  std::function<void(SimConfig&, std::string_view)> set;
  std::function<std::string(const SimConfig&)> get;
};

template <typename Member>
Field real(Member member) {
  return {[member](SimConfig& c, std::string_view v) { std::invoke(member, c) = to_double(v); },
          [member](const SimConfig& c) { return fmt_double(std::invoke(member, c)); }};
}

template <typename Member>
Field count(Member member) {
  return {[member](SimConfig& c, std::string_view v) {
            std::invoke(member, c) = to_integer<std::size_t>(v);
          },
          [member](const SimConfig& c) { return std::to_string(std::invoke(member, c)); }};
}

template <typename Member>
Field vector(Member member) {
  return {[member](SimConfig& c, std::string_view v) { std::invoke(member, c) = to_vec(v); },
          [member](const SimConfig& c) { return fmt_vec(std::invoke(member, c)); }};
}

// Ordered so format_config output groups by section.
const std::map<std::string, Field, std::less<>>& fields() {
  static const std::map<std::string, Field, std::less<>> table = {
      {"dim", count(&SimConfig::dim)},
      {"nodes", count(&SimConfig::n_nodes)},
      {"target", vector(&SimConfig::target)},
      {"mode",
       {[](SimConfig& c, std::string_view v) { c.mode = parse_mode(v); },
        [](const SimConfig& c) { return std::string(to_string(c.mode)); }}},
      {"sensing.kappa", real(&SimConfig::kappa)},
      {"network.radius", real(&SimConfig::radius)},
      {"baseline.mu", real(&SimConfig::baseline_mu)},
      {"baseline.k", count(&SimConfig::baseline_k)},
      {"step.mu_init", real(&SimConfig::mu_init)},
      {"step.alpha", real([](auto& c) -> auto& { return c.step_policy.alpha; })},
      {"step.beta", real([](auto& c) -> auto& { return c.step_policy.beta; })},
      {"step.gamma", real([](auto& c) -> auto& { return c.step_policy.gamma; })},
      {"step.mu_min", real([](auto& c) -> auto& { return c.step_policy.mu_min; })},
      {"step.mu_max", real([](auto& c) -> auto& { return c.step_policy.mu_max; })},
      {"step.far_threshold", real([](auto& c) -> auto& { return c.step_policy.far_threshold; })},
      {"variance.eta", real(&SimConfig::eta)},
      {"selection.candidates", count(&SimConfig::selection_candidates)},
      {"selection.scope",
       {[](SimConfig& c, std::string_view v) { c.selective_scope = parse_scope(v); },
        [](const SimConfig& c) { return std::string(to_string(c.selective_scope)); }}},
      {"motion.xi1", real([](auto& c) -> auto& { return c.motion_policy.xi1; })},
      {"motion.xi2", real([](auto& c) -> auto& { return c.motion_policy.xi2; })},
      {"motion.xi3", real([](auto& c) -> auto& { return c.motion_policy.xi3; })},
      {"motion.spacing", real([](auto& c) -> auto& { return c.motion_policy.spacing; })},
      {"motion.delta", real([](auto& c) -> auto& { return c.motion_policy.delta; })},
      {"motion.dt", real([](auto& c) -> auto& { return c.motion_policy.dt; })},
      {"motion.collision_k", count(&SimConfig::collision_k)},
      {"init.cube_side", real(&SimConfig::init_cube_side)},
      {"init.w", vector(&SimConfig::w_init)},
      {"run.iterations", count(&SimConfig::n_iterations)},
      {"run.runs", count(&SimConfig::n_runs)},
      {"run.base_seed", count(&SimConfig::base_seed)},
      {"run.snapshot_every", count(&SimConfig::snapshot_every)},
  };
  return table;
}

}  // namespace

Mode parse_mode(std::string_view text) {
  if (text == "proposed") return Mode::proposed;
  if (text == "baseline_atc") return Mode::baseline_atc;
  throw ConfigError("expected proposed or baseline_atc, got '" + std::string(text) + "'");
}

std::vector<std::size_t> parse_iteration_list(std::string_view text) {
  std::vector<std::size_t> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(to_integer<std::size_t>(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

SimConfig parse_config(std::string_view text, std::string_view origin) {
  SimConfig config;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t, std::less<>> seen;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    const auto field = fields().find(key);
    if (field == fields().end()) throw ConfigError(where + ": unknown key '" + std::string(key) + "'");
    if (const auto prev = seen.find(key); prev != seen.end()) {
      throw ConfigError(where + ": duplicate key '" + std::string(key) + "' (first set on line " +
                        std::to_string(prev->second) + ")");
    }
    seen.emplace(std::string(key), line_no);
    try {
      field->second.set(config, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + std::string(key) + ": " + e.what());
    }
  }
  // A 3D config without explicit vectors gets the default vectors lifted to 3D.
  if (config.dim == 3) {
    if (!seen.contains("target") && config.target.dim() == 2) config.target = Vec{120.0, 120.0, 0.0};
    if (!seen.contains("init.w") && config.w_init.dim() == 2) config.w_init = Vec(3);
  }
  config.validate();
  return config;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config file: " + path.string());
  return parse_config(buf.str(), path.string());
}

std::string format_config(const SimConfig& config) {
  std::string out;
  for (const auto& [key, field] : fields()) out += key + " = " + field.get(config) + "\n";
  return out;
}

}  // namespace mobnet
