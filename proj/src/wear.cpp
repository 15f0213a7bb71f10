#include "tendonplan/wear.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace tendon {

using nlohmann::json;

int motor_for_axis(int section, int axis) {
  if (section != kLowerSection && section != kUpperSection) {
    throw std::invalid_argument("unknown section id " + std::to_string(section));
  }
  if (axis != 0 && axis != 1) {
    throw std::invalid_argument("axis must be 0 (X) or 1 (Y)");
  }
  return 2 * section + axis;
}

SegmentKey make_segment_key(int section, int node_a, int node_b) {
  SegmentKey key;
  key.section = section;
  key.a = std::min(node_a, node_b);
  key.b = std::max(node_a, node_b);
  return key;
}

std::int64_t WearState::motor_steps(int motor) const {
  if (motor < 0 || motor >= kMotorCount) {
    throw std::invalid_argument("unknown motor id " + std::to_string(motor));
  }
  return motor_steps_[static_cast<std::size_t>(motor)];
}

std::int64_t WearState::segment_use(int section, int node_a, int node_b) const {
  const auto it = segment_use_.find(make_segment_key(section, node_a, node_b));
  return it == segment_use_.end() ? 0 : it->second;
}

void WearState::add_motor_steps(int motor, std::int64_t steps) {
  if (motor < 0 || motor >= kMotorCount) {
    throw std::invalid_argument("unknown motor id " + std::to_string(motor));
  }
  if (steps < 0) {
    throw std::invalid_argument("motor steps must be non-negative");
  }
  motor_steps_[static_cast<std::size_t>(motor)] += steps;
}

void WearState::add_segment_use(const SegmentKey& key, std::int64_t count) {
  if (count < 0) {
    throw std::invalid_argument("segment use count must be non-negative");
  }
  if (count > 0) segment_use_[key] += count;
}

WearState apply_path(const SectionEnv& env, const WearState& state, const Path& path) {
  require_valid_path(env, path);
  WearState next = state;
  for (std::size_t n = 1; n < path.nodes.size(); ++n) {
    const Node& from = env.node(path.nodes[n - 1]);
    const Node& to = env.node(path.nodes[n]);
    const int axis = from.i != to.i ? 0 : 1;
    next.add_motor_steps(motor_for_axis(path.section, axis),
                         static_cast<std::int64_t>(kStepSpacing));
    next.add_segment_use(make_segment_key(path.section, from.id, to.id), 1);
  }
  return next;
}

std::string to_json_string(const WearState& state) {
  json motors = json::object();
  for (int m = 0; m < kMotorCount; ++m) {
    motors[std::to_string(m)] = state.motor_steps(m);
  }
  json segments = json::array();
  for (const auto& [key, count] : state.segments()) {
    segments.push_back({{"a", key.a},
                        {"b", key.b},
                        {"count", count},
                        {"section", key.section}});
  }
  const json doc = {{"motors", motors}, {"segments", segments}};
  return doc.dump(2) + "\n";
}

namespace {

std::int64_t require_count(const json& value, const std::string& what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw std::runtime_error(what + ": expected a non-negative integer");
  }
  return value.get<std::int64_t>();
}

}  // namespace

WearState wear_from_json_string(const std::string& text, const SectionEnv& env) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::runtime_error(std::string("wear store is not valid JSON: ") + err.what());
  }
  if (!doc.is_object()) {
    throw std::runtime_error("wear store: top-level value must be an object");
  }

  WearState state;
  if (doc.contains("motors")) {
    const json& motors = doc.at("motors");
    if (!motors.is_object()) {
      throw std::runtime_error("wear store: \"motors\" must be an object");
    }
    for (const auto& [key, value] : motors.items()) {
      int motor = -1;
      try {
        motor = std::stoi(key);
      } catch (const std::exception&) {
      }
      if (motor < 0 || motor >= kMotorCount) {
        throw std::runtime_error("wear store: unknown motor key \"" + key + "\"");
      }
      state.add_motor_steps(motor, require_count(value, "wear store: motor " + key));
    }
  }
  if (doc.contains("segments")) {
    const json& segments = doc.at("segments");
    if (!segments.is_array()) {
      throw std::runtime_error("wear store: \"segments\" must be an array");
    }
    std::size_t index = 0;
    for (const json& entry : segments) {
      const std::string what = "wear store: segment " + std::to_string(index);
      if (!entry.is_object() || !entry.contains("section") || !entry.contains("a") ||
          !entry.contains("b") || !entry.contains("count")) {
        throw std::runtime_error(what + ": expected {section, a, b, count}");
      }
      const int section = entry.at("section").get<int>();
      const int a = entry.at("a").get<int>();
      const int b = entry.at("b").get<int>();
      if (section != kLowerSection && section != kUpperSection) {
        throw std::runtime_error(what + ": unknown section " + std::to_string(section));
      }
      if (!env.valid_id(a) || !env.valid_id(b) || !env.adjacent(a, b)) {
        throw std::runtime_error(what + ": nodes " + std::to_string(a) + "," +
                                 std::to_string(b) + " are not an adjacent pair");
      }
      const SegmentKey key = make_segment_key(section, a, b);
      if (state.segment_use(key.section, key.a, key.b) != 0) {
        throw std::runtime_error(what + ": duplicate segment entry");
      }
      state.add_segment_use(key, require_count(entry.at("count"), what));
      ++index;
    }
  }
  return state;
}

WearState load_wear(const std::filesystem::path& file, const SectionEnv& env) {
  std::ifstream in(file);
  if (!in) return WearState{};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return wear_from_json_string(buffer.str(), env);
  } catch (const std::runtime_error& err) {
    throw std::runtime_error(file.string() + ": " + err.what());
  }
}

void save_wear(const WearState& state, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open wear store for writing: " + file.string());
  }
  out << to_json_string(state);
  if (!out) {
    throw std::runtime_error("failed writing wear store: " + file.string());
  }
}

}  // namespace tendon
