#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "tendonplan/env.hpp"

namespace tendon {

inline constexpr int kMotorCount = 4;

/// Motor driving `axis` (0 = X, 1 = Y) of `section`: motors 0-1 belong to
/// the lower section, 2-3 to the upper.
int motor_for_axis(int section, int axis);

/// Unordered adjacent node pair within one section, stored low id first.
struct SegmentKey {
  int section = kLowerSection;
  int a = 0;
  int b = 0;

  auto operator<=>(const SegmentKey&) const = default;
};

SegmentKey make_segment_key(int section, int node_a, int node_b);

/// Accumulated motor steps and segment usage counts. Values are immutable;
/// apply_path returns an updated copy.
class WearState {
 public:
  std::int64_t motor_steps(int motor) const;
  std::int64_t segment_use(int section, int node_a, int node_b) const;

  const std::array<std::int64_t, kMotorCount>& motors() const { return motor_steps_; }
  const std::map<SegmentKey, std::int64_t>& segments() const { return segment_use_; }

  void add_motor_steps(int motor, std::int64_t steps);
  void add_segment_use(const SegmentKey& key, std::int64_t count);

  bool operator==(const WearState&) const = default;

 private:
  std::array<std::int64_t, kMotorCount> motor_steps_{0, 0, 0, 0};
  std::map<SegmentKey, std::int64_t> segment_use_;
};

/// Adds each traversed edge to the state: kStepSpacing steps on the moved
/// axis motor, one use on the segment. Throws on invalid paths, leaving
/// `state` untouched.
WearState apply_path(const SectionEnv& env, const WearState& state, const Path& path);

/// Canonical JSON document (fixed key order, sorted segments, two-space
/// indent, trailing newline). save/load round-trip bit-exactly.
std::string to_json_string(const WearState& state);

/// Parses and validates a wear document against the section layout.
/// Throws std::runtime_error naming the offending record.
WearState wear_from_json_string(const std::string& text, const SectionEnv& env);

/// Absent file yields the all-zero state.
WearState load_wear(const std::filesystem::path& file, const SectionEnv& env);

void save_wear(const WearState& state, const std::filesystem::path& file);

}  // namespace tendon
