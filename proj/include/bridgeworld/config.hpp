#pragma once

// WorldConfig serialization: flat JSON config files plus key=value overrides,
// merged defaults -> file -> overrides, everything validated before a run.

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bridgeworld/world.hpp"

namespace bridgeworld {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string_view etype_name(EType etype) {
  switch (etype) {
    case EType::None: return "none";
    case EType::Selfish: return "selfish";
    case EType::PraiseBlame: return "praise_blame";
    default: return "selfish_selfless";
  }
}

inline std::optional<EType> parse_etype(std::string_view name) {
  if (name == "none") return EType::None;
  if (name == "selfish") return EType::Selfish;
  if (name == "praise_blame") return EType::PraiseBlame;
  if (name == "selfish_selfless") return EType::SelfishSelfless;
  return std::nullopt;
}

inline nlohmann::json to_json(const WorldConfig& cfg) {
  return nlohmann::json{
      {"starting_reserve", cfg.starting_reserve},
      {"maximum_reserve", cfg.maximum_reserve},
      {"food_value", cfg.food_value},
      {"food_update_frequency", cfg.food_update_frequency},
      {"falling_chance", cfg.falling_chance},
      {"mutation_chance", cfg.mutation_chance},
      {"begging_threshold", cfg.begging_threshold},
      {"learning_rate", cfg.learn.learning_rate},
      {"scale_by_magnitude", cfg.learn.scale_by_magnitude},
      {"population", cfg.population},
      {"etype", std::string(etype_name(cfg.etype))},
      {"learning_enabled", cfg.learning_enabled},
      {"exemplars_enabled", cfg.exemplars_enabled},
      {"bf_use_selfishness", cfg.bf_use_selfishness},
      {"ask_gated_by_generosity", cfg.ask_gated_by_generosity},
  };
}

namespace detail {

inline double as_real(const nlohmann::json& value, std::string_view key) {
  if (!value.is_number()) {
    throw ConfigError(std::string(key) + ": expected a number");
  }
  return value.get<double>();
}

inline int as_int(const nlohmann::json& value, std::string_view key) {
  if (!value.is_number_integer()) {
    throw ConfigError(std::string(key) + ": expected an integer");
  }
  return value.get<int>();
}

inline bool as_bool(const nlohmann::json& value, std::string_view key) {
  if (!value.is_boolean()) {
    throw ConfigError(std::string(key) + ": expected a boolean");
  }
  return value.get<bool>();
}

inline EType as_etype(const nlohmann::json& value, std::string_view key) {
  if (value.is_string()) {
    if (const auto etype = parse_etype(value.get<std::string>())) return *etype;
  }
  throw ConfigError(std::string(key) +
                    ": expected one of none|selfish|praise_blame|selfish_selfless");
}

}  // namespace detail

// Sets one field by its JSON name; unknown keys are rejected.
inline void set_config_field(WorldConfig& cfg, std::string_view key,
                             const nlohmann::json& value) {
  using namespace detail;
  if (key == "starting_reserve") cfg.starting_reserve = as_real(value, key);
  else if (key == "maximum_reserve") cfg.maximum_reserve = as_real(value, key);
  else if (key == "food_value") cfg.food_value = as_real(value, key);
  else if (key == "food_update_frequency") cfg.food_update_frequency = as_int(value, key);
  else if (key == "falling_chance") cfg.falling_chance = as_real(value, key);
  else if (key == "mutation_chance") cfg.mutation_chance = as_real(value, key);
  else if (key == "begging_threshold") cfg.begging_threshold = as_real(value, key);
  else if (key == "learning_rate") cfg.learn.learning_rate = as_real(value, key);
  else if (key == "scale_by_magnitude") cfg.learn.scale_by_magnitude = as_bool(value, key);
  else if (key == "population") cfg.population = as_int(value, key);
  else if (key == "etype") cfg.etype = as_etype(value, key);
  else if (key == "learning_enabled") cfg.learning_enabled = as_bool(value, key);
  else if (key == "exemplars_enabled") cfg.exemplars_enabled = as_bool(value, key);
  else if (key == "bf_use_selfishness") cfg.bf_use_selfishness = as_bool(value, key);
  else if (key == "ask_gated_by_generosity") cfg.ask_gated_by_generosity = as_bool(value, key);
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

// Merges a flat JSON object into `base`.
inline WorldConfig apply_json(WorldConfig base, const nlohmann::json& object) {
  if (!object.is_object()) throw ConfigError("config: expected a flat JSON object");
  for (const auto& [key, value] : object.items()) {
    set_config_field(base, key, value);
  }
  return base;
}

inline WorldConfig load_config_file(WorldConfig base, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw ConfigError("malformed config file '" + path + "': " + err.what());
  }
  return apply_json(std::move(base), parsed);
}

// Applies one "key=value" override; the value grammar matches the JSON field
// types (numbers, true/false, e-type names).
inline void apply_override(WorldConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError("override '" + std::string(assignment) +
                      "': expected key=value");
  }
  const std::string_view key = assignment.substr(0, eq);
  const std::string value(assignment.substr(eq + 1));
  if (value == "true" || value == "false") {
    set_config_field(cfg, key, nlohmann::json(value == "true"));
    return;
  }
  if (const auto etype = parse_etype(value); etype && key == "etype") {
    set_config_field(cfg, key, nlohmann::json(value));
    return;
  }
  try {
    std::size_t consumed = 0;
    if (value.find('.') == std::string::npos &&
        value.find('e') == std::string::npos &&
        value.find('E') == std::string::npos) {
      const long long integral = std::stoll(value, &consumed);
      if (consumed == value.size()) {
        set_config_field(cfg, key, nlohmann::json(integral));
        return;
      }
    }
    const double real = std::stod(value, &consumed);
    if (consumed == value.size()) {
      set_config_field(cfg, key, nlohmann::json(real));
      return;
    }
  } catch (const std::logic_error&) {
    // falls through to the error below
  }
  throw ConfigError(std::string(key) + ": cannot parse value '" + value + "'");
}

}  // namespace bridgeworld
