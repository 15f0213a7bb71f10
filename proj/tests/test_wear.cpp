#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "oracles.hpp"
#include "tendonplan/ga.hpp"
#include "tendonplan/wear.hpp"

using namespace tendon;

namespace {

std::filesystem::path temp_file(const std::string& stem) {
  static int counter = 0;
  return std::filesystem::temp_directory_path() /
         (stem + "_" + std::to_string(::getpid()) + "_" +
          std::to_string(counter++) + ".json");
}

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("motor axis mapping: motor 2k is X, 2k+1 is Y of section k") {
  CHECK(motor_for_axis(0, 0) == 0);
  CHECK(motor_for_axis(0, 1) == 1);
  CHECK(motor_for_axis(1, 0) == 2);
  CHECK(motor_for_axis(1, 1) == 3);
  CHECK_THROWS_AS(motor_for_axis(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(motor_for_axis(0, 2), std::invalid_argument);
}

TEST_CASE("segment keys normalize to low id first") {
  CHECK(make_segment_key(1, 31, 30) == make_segment_key(1, 30, 31));
  CHECK(make_segment_key(0, 30, 31) != make_segment_key(1, 30, 31));
}

TEST_CASE("apply_path accumulates steps on the moved axis") {
  const SectionEnv env = build_section_env();
  const WearState zero;

  SUBCASE("single X move on the lower section") {
    // 30 = (0,0), 31 = (1,0)
    const WearState next = apply_path(env, zero, Path{kLowerSection, {30, 31}});
    CHECK(next.motor_steps(0) == 70);
    CHECK(next.motor_steps(1) == 0);
    CHECK(next.motor_steps(2) == 0);
    CHECK(next.segment_use(kLowerSection, 30, 31) == 1);
    CHECK(next.segment_use(kLowerSection, 31, 30) == 1);
    CHECK(next.segment_use(kUpperSection, 30, 31) == 0);
    CHECK(zero.motor_steps(0) == 0);  // input untouched
  }

  SUBCASE("Y move on the upper section hits motor 3") {
    // 30 = (0,0), 20 = (0,1)
    const WearState next = apply_path(env, zero, Path{kUpperSection, {30, 20}});
    CHECK(next.motor_steps(3) == 70);
    CHECK(next.motor_steps(2) == 0);
    CHECK(next.segment_use(kUpperSection, 20, 30) == 1);
  }

  SUBCASE("single-node path changes nothing") {
    CHECK(apply_path(env, zero, Path{kLowerSection, {30}}) == zero);
  }

  SUBCASE("revisiting a segment counts twice") {
    const WearState next =
        apply_path(env, zero, Path{kLowerSection, {30, 31, 30, 31}});
    CHECK(next.segment_use(kLowerSection, 30, 31) == 3);
    CHECK(next.motor_steps(0) == 210);
  }

  SUBCASE("invalid paths leave the state untouched") {
    CHECK_THROWS_AS(apply_path(env, zero, Path{kLowerSection, {30, 32}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_path(env, zero, Path{5, {30, 31}}),
                    std::invalid_argument);
  }
}

TEST_CASE("apply_path is additive over concatenation") {
  const SectionEnv env = build_section_env();
  const Path p{kLowerSection, {50, 42, 32, 22}};
  const Path q{kLowerSection, {22, 21, 13}};
  const Path joined{kLowerSection, {50, 42, 32, 22, 21, 13}};
  const WearState zero;
  const WearState split = apply_path(env, apply_path(env, zero, p), q);
  const WearState whole = apply_path(env, zero, joined);
  CHECK(split == whole);
  std::int64_t total = 0;
  for (int m = 0; m < kMotorCount; ++m) {
    total += whole.motor_steps(m);
  }
  CHECK(total == 70 * 5);
}

TEST_CASE("json round-trip is lossless and canonical") {
  const SectionEnv env = build_section_env();
  Rng rng = make_rng(2024);
  for (int round = 0; round < 25; ++round) {
    const WearState state = test::random_wear(env, rng);
    const std::string text = to_json_string(state);
    const WearState parsed = wear_from_json_string(text, env);
    CHECK(parsed == state);
    CHECK(to_json_string(parsed) == text);
  }
}

TEST_CASE("save and load round-trip through a file") {
  const SectionEnv env = build_section_env();
  Rng rng = make_rng(7);
  const WearState state = test::random_wear(env, rng);
  const auto file = temp_file("wear_roundtrip");
  save_wear(state, file);
  CHECK(load_wear(file, env) == state);
  CHECK(slurp(file) == to_json_string(state));
  std::filesystem::remove(file);
}

TEST_CASE("absent file loads as the pristine state") {
  const SectionEnv env = build_section_env();
  const WearState state = load_wear("does_not_exist_anywhere.json", env);
  CHECK(state == WearState{});
  for (int m = 0; m < kMotorCount; ++m) {
    CHECK(state.motor_steps(m) == 0);
  }
}

TEST_CASE("parse errors name the offending record") {
  const SectionEnv env = build_section_env();

  SUBCASE("unknown motor id") {
    const std::string text = R"({"motors": {"7": 10}, "segments": []})";
    CHECK_THROWS_AS(wear_from_json_string(text, env), std::runtime_error);
  }

  SUBCASE("negative count") {
    const std::string text =
        R"({"motors": {"0": -5, "1": 0, "2": 0, "3": 0}, "segments": []})";
    CHECK_THROWS_AS(wear_from_json_string(text, env), std::runtime_error);
  }

  SUBCASE("non-adjacent segment") {
    const std::string text =
        R"({"motors": {"0": 0, "1": 0, "2": 0, "3": 0},
            "segments": [{"a": 30, "b": 32, "count": 1, "section": 0}]})";
    CHECK_THROWS_WITH_AS(wear_from_json_string(text, env),
                         doctest::Contains("segment 0"), std::runtime_error);
  }

  SUBCASE("duplicate segment") {
    const std::string text =
        R"({"motors": {"0": 0, "1": 0, "2": 0, "3": 0},
            "segments": [{"a": 30, "b": 31, "count": 1, "section": 0},
                         {"a": 31, "b": 30, "count": 2, "section": 0}]})";
    CHECK_THROWS_WITH_AS(wear_from_json_string(text, env),
                         doctest::Contains("segment 1"), std::runtime_error);
  }

  SUBCASE("not json at all") {
    CHECK_THROWS_AS(wear_from_json_string("oops", env), std::runtime_error);
  }
}

TEST_CASE("counts stay monotone across apply operations") {
  const SectionEnv env = build_section_env();
  Rng rng = make_rng(99);
  WearState state;
  for (int round = 0; round < 10; ++round) {
    const WearState before = state;
    const int start = static_cast<int>(uniform_index(rng, 61));
    const int goal = static_cast<int>(uniform_index(rng, 61));
    const Path path{kLowerSection, loop_erased_walk(env, start, goal, rng)};
    state = apply_path(env, state, path);
    for (int m = 0; m < kMotorCount; ++m) {
      CHECK(state.motor_steps(m) >= before.motor_steps(m));
    }
  }
}
