#include "dualfield/config.hpp"

#include <cstdlib>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace dualfield::config {

namespace pt = boost::property_tree;

namespace {

double number(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad number for '" + key + "': '" + text + "'");
  }
}

cplx complex_pair(const std::string& key, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {number(key, text), 0.0};
  return {number(key, text.substr(0, comma)), number(key, text.substr(comma + 1))};
}

double get(const pt::ptree& tree, const std::string& path, double fallback) {
  const auto v = tree.get_optional<std::string>(path);
  return v ? number(path, *v) : fallback;
}

RunConfig from_tree(const pt::ptree& tree) {
  RunConfig cfg;
  cfg.length = get(tree, "cavity.length", cfg.length);
  cfg.volume = get(tree, "cavity.volume", cfg.volume);
  const double max_modes = get(tree, "cavity.max_modes", static_cast<double>(cfg.max_modes));
  const double fock = get(tree, "cavity.fock_dim", cfg.fock_dim);
  const double cap = get(tree, "cavity.dimension_cap", static_cast<double>(cfg.dimension_cap));
  if (max_modes < 1 || fock < 2 || cap < 2) throw ConfigError("cavity limits out of range");
  cfg.max_modes = static_cast<std::size_t>(max_modes);
  cfg.fock_dim = static_cast<int>(fock);
  cfg.dimension_cap = static_cast<std::size_t>(cap);

  auto& pc = cfg.constants;
  pc.c = get(tree, "constants.c", pc.c);
  pc.mu0 = get(tree, "constants.mu0", pc.mu0);
  pc.eps0 = get(tree, "constants.eps0", 1.0 / (pc.mu0 * pc.c * pc.c));
  pc.hbar = get(tree, "constants.hbar", pc.hbar);
  pc.e_charge = get(tree, "constants.e", pc.e_charge);
  try {
    pc.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  for (const auto& [name, section] : tree) {
    if (name.rfind("mode.", 0) != 0) continue;
    if (cfg.modes.size() == cfg.max_modes) break;
    const double alpha = get(section, "alpha", 0.0);
    if (alpha < 1 || alpha != static_cast<int>(alpha)) throw ConfigError(name + ": alpha must be a positive integer");
    const auto c1 = section.get_optional<std::string>("c1");
    const auto c2 = section.get_optional<std::string>("c2");
    try {
      cfg.modes.emplace_back(static_cast<int>(alpha), cfg.length, cfg.volume, get(section, "mass", 1.0),
                             c1 ? complex_pair(name + ".c1", *c1) : cplx{},
                             c2 ? complex_pair(name + ".c2", *c2) : cplx{}, pc);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(name + ": " + e.what());
    }
  }
  if (cfg.modes.empty()) cfg.modes = default_config().modes;
  if (cfg.modes.front().length() != cfg.length || cfg.modes.front().volume() != cfg.volume ||
      cfg.modes.front().constants().c != pc.c) {
    // Default mode must follow the configured geometry and constants.
    const auto& m = cfg.modes.front();
    cfg.modes = {cavity::CavityMode(m.alpha(), cfg.length, cfg.volume, m.mass(), m.C1(), m.C2(), pc)};
  }
  return cfg;
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  cfg.modes.emplace_back(1, cfg.length, cfg.volume, 1.0, cplx{0.5, 0.0}, cplx{0.5, 0.0}, cfg.constants);
  return cfg;
}

RunConfig parse(const std::string& text) {
  pt::ptree tree;
  std::istringstream is(text);
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  return from_tree(tree);
}

RunConfig load(const std::filesystem::path& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.what());
  }
  return from_tree(tree);
}

std::optional<std::filesystem::path> resolve_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("DUALFIELD_CONFIG"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace dualfield::config
