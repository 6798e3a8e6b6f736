#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqfix/errors.hpp"
#include "eqfix/scene.hpp"

using namespace eqfix;
using nlohmann::json;

namespace {

std::string scene_path(const std::string& name) {
  return (std::filesystem::path(EQFIX_SCENES_DIR) / name).string();
}

json run_shipped(const std::string& name) {
  Scene scene = parse_scene_file(scene_path(name));
  REQUIRE(scene.command.is_object());
  std::string command = scene.command.at("name").get<std::string>();
  std::string out = run_scene_command(scene, command, OutputFormat::json);
  REQUIRE(!out.empty());
  REQUIRE(out.back() == '\n');
  return json::parse(out);
}

json base_s3() {
  return json::parse(R"({
    "group": {"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}
  })");
}

}  // namespace

TEST_CASE("every shipped scene runs and reports the expected values") {
  json group_info = run_shipped("s3_group.json");
  CHECK(group_info["class_count"] == 4);
  CHECK(group_info["group_order"] == 6);
  std::vector<int> weyl;
  for (const auto& c : group_info["classes"]) weyl.push_back(c["weyl_order"].get<int>());
  CHECK(weyl == std::vector<int>{6, 1, 2, 1});

  json marks_doc = run_shipped("c2_marks.json");
  CHECK(marks_doc["marks"] == json::parse(R"([["2","1"],["0","1"]])"));

  json mul_doc = run_shipped("s4_mul.json");
  CHECK(mul_doc["coefficients"][0] == "24");
  CHECK(mul_doc["marks"][0] == "576");

  json eta_doc = run_shipped("s3_eta.json");
  CHECK(eta_doc["coefficients"] == json::parse(R"(["1"])"));
  CHECK(eta_doc["weyl_order"] == 1);

  json induce_doc = run_shipped("s3_induce.json");
  CHECK(induce_doc["element"] == "[G/H1]");

  json restrict_doc = run_shipped("s3_restrict.json");
  CHECK(restrict_doc["coefficients"] == json::parse(R"(["1","0"])"));

  json degree_doc = run_shipped("degree_sign.json");
  CHECK(degree_doc["marks"] == json::parse(R"(["-1","1"])"));

  json cubic_doc = run_shipped("c2_cubic.json");
  CHECK(cubic_doc["coefficients"] == json::parse(R"(["-1","1"])"));
  CHECK(cubic_doc["marks"] == json::parse(R"(["-1","1"])"));
  CHECK(cubic_doc["element"] == "-[G/H0] + [G/H1]");

  json marks_route_doc = run_shipped("s3_lefschetz_marks.json");
  CHECK(marks_route_doc["element"] == "[G/H0] + [G/H3]");

  json circle_doc = run_shipped("cellular_circle.json");
  CHECK(circle_doc["value"] == "-1");

  json fuller_doc = run_shipped("fuller_third.json");
  CHECK(fuller_doc["coefficients"] == json::parse(R"(["1/3"])"));
  CHECK(fuller_doc["detection"][0]["detected"] == true);

  json sign_orbit_doc = run_shipped("c2_fuller_sign.json");
  CHECK(sign_orbit_doc["coefficients"] == json::parse(R"(["0","1"])"));
  CHECK(sign_orbit_doc["detection"][0]["detected"] == true);
  CHECK(sign_orbit_doc["detection"][1]["detected"] == true);
}

TEST_CASE("library output is deterministic and json survives a round trip") {
  std::vector<std::string> names{
      "s3_group.json",   "c2_marks.json",     "s4_mul.json",          "s3_eta.json",
      "s3_induce.json",  "s3_restrict.json",  "degree_sign.json",     "c2_cubic.json",
      "cellular_circle.json", "fuller_third.json", "c2_fuller_sign.json",
      "s3_lefschetz_marks.json"};
  for (const auto& name : names) {
    Scene scene = parse_scene_file(scene_path(name));
    std::string command = scene.command.at("name").get<std::string>();
    for (OutputFormat format : {OutputFormat::json, OutputFormat::text}) {
      std::string first = run_scene_command(scene, command, format);
      Scene again = parse_scene_file(scene_path(name));
      std::string second = run_scene_command(again, command, format);
      CHECK(first == second);
    }
    std::string machine = run_scene_command(scene, command, OutputFormat::json);
    CHECK(json::parse(machine).dump() + "\n" == machine);
  }
}

TEST_CASE("scene structure problems are scene errors") {
  json doc = base_s3();
  doc["surprise"] = 1;
  CHECK_THROWS_AS(parse_scene_json(doc), SceneError);

  CHECK_THROWS_AS(parse_scene_json(json::parse(R"({"command": {"name": "marks"}})")), SceneError);
  CHECK_THROWS_AS(parse_scene_json(json::parse(R"({"group": {"degree": 3}})")), SceneError);
  CHECK_THROWS_AS(parse_scene_json(json::parse(R"({"group": {"degree": 3, "generators": [[0, 0, 1]]}})")),
                  SceneError);
  CHECK_THROWS_AS(parse_scene_json(json::parse(R"({"group": {"degree": 3, "generators": [[1, 0]]}})")),
                  SceneError);
  CHECK_THROWS_AS(parse_scene_json(json::parse(R"({"group": 5})")), SceneError);
  CHECK_THROWS_AS(parse_scene_json(json::parse(R"([1, 2])")), SceneError);

  json reserved = base_s3();
  reserved["subgroups"] = json::parse(R"({"G": {"generators": []}})");
  CHECK_THROWS_AS(parse_scene_json(reserved), SceneError);

  json stranger = base_s3();
  stranger["subgroups"] = json::parse(R"({"K": {"generators": [[0, 1, 2, 3]]}})");
  CHECK_THROWS_AS(parse_scene_json(stranger), SceneError);

  json not_member = base_s3();
  not_member["group"] = json::parse(R"({"degree": 3, "generators": [[1, 2, 0]]})");
  not_member["subgroups"] = json::parse(R"({"K": {"generators": [[1, 0, 2]]}})");
  CHECK_THROWS_AS(parse_scene_json(not_member), SceneError);

  json bad_rep = base_s3();
  bad_rep["representations"] =
      json::parse(R"({"r": {"dimension": 1, "generator_images": [[["1"]]]}})");
  CHECK_THROWS_AS(parse_scene_json(bad_rep), SceneError);  // two generators, one image

  json unknown_rep = base_s3();
  unknown_rep["maps"] = json::parse(R"({"m": {"representation": "ghost", "matrix": [["1"]]}})");
  CHECK_THROWS_AS(parse_scene_json(unknown_rep), SceneError);

  json bad_orbit = base_s3();
  bad_orbit["representations"] = json::parse(
      R"({"r": {"dimension": 1, "generator_images": [[["-1"]], [["1"]]]}})");
  bad_orbit["maps"] = json::parse(R"({"m": {"representation": "r", "matrix": [["2"]]}})");
  bad_orbit["subgroups"] = json::parse(R"({"K": {"generators": [[0, 2, 1]]}})");
  bad_orbit["fixed_orbits"] =
      json::parse(R"([{"isotropy": "K", "slice": "r", "normal_derivative": "m"}])");
  CHECK_THROWS_AS(parse_scene_json(bad_orbit), SceneError);  // slice lives over G, not K

  json zero_mult = base_s3();
  zero_mult["representations"] = json::parse(
      R"({"r": {"dimension": 1, "generator_images": [[["-1"]], [["1"]]]}})");
  zero_mult["maps"] = json::parse(R"({"m": {"representation": "r", "matrix": [["2"]]}})");
  zero_mult["periodic_orbits"] = json::parse(
      R"([{"isotropy": "G", "slice": "r", "poincare": "m", "multiplicity": 0}])");
  CHECK_THROWS_AS(parse_scene_json(zero_mult), SceneError);

  json bad_fraction = base_s3();
  bad_fraction["representations"] =
      json::parse(R"({"r": {"dimension": 1, "generator_images": [[["1/0"]], [["1"]]]}})");
  CHECK_THROWS_AS(parse_scene_json(bad_fraction), InputError);

  json word_fraction = base_s3();
  word_fraction["representations"] =
      json::parse(R"({"r": {"dimension": 1, "generator_images": [[["abc"]], [["1"]]]}})");
  CHECK_THROWS_AS(parse_scene_json(word_fraction), InputError);
}

TEST_CASE("command dispatch validates names and arguments") {
  json doc = base_s3();
  doc["command"] = json::parse(R"({"name": "marks"})");
  Scene scene = parse_scene_json(doc);
  CHECK_THROWS_AS(run_scene_command(scene, "group-info", OutputFormat::text), SceneError);
  CHECK_NOTHROW(run_scene_command(scene, "marks", OutputFormat::text));

  Scene bare = parse_scene_json(base_s3());
  CHECK_THROWS_AS(run_scene_command(bare, "no-such-command", OutputFormat::text), SceneError);
  // burnside-mul needs x and y
  CHECK_THROWS_AS(run_scene_command(bare, "burnside-mul", OutputFormat::text), SceneError);

  json short_vector = base_s3();
  short_vector["command"] = json::parse(R"({"name": "burnside-mul", "x": [1, 0], "y": [1, 0, 0, 0]})");
  CHECK_THROWS_AS(run_scene_command(parse_scene_json(short_vector), "burnside-mul",
                                    OutputFormat::text),
                  SceneError);

  json fractional_coeff = base_s3();
  fractional_coeff["command"] =
      json::parse(R"({"name": "burnside-mul", "x": ["1/2", 0, 0, 0], "y": [1, 0, 0, 0]})");
  CHECK_THROWS_AS(run_scene_command(parse_scene_json(fractional_coeff), "burnside-mul",
                                    OutputFormat::text),
                  SceneError);
}

TEST_CASE("the order cap applies to scene groups") {
  json doc = json::parse(R"({"group": {"degree": 4, "generators": [[1, 0, 2, 3], [1, 2, 3, 0]]}})");
  CHECK_THROWS_AS(parse_scene_json(doc, 23), OrderCapError);
  CHECK_NOTHROW(parse_scene_json(doc, 24));
}

TEST_CASE("mathematically invalid scene data keeps its own error type") {
  json doc = base_s3();
  doc["representations"] = json::parse(R"({
    "plane": {"dimension": 2,
              "generator_images": [[["-1", "1"], ["0", "1"]], [["0", "-1"], ["1", "-1"]]]}
  })");
  doc["maps"] = json::parse(R"({"shear": {"representation": "plane", "matrix": [["1", "1"], ["0", "1"]]}})");
  CHECK_THROWS_AS(parse_scene_json(doc), EquivarianceError);

  json singular = base_s3();
  singular["representations"] =
      json::parse(R"({"r": {"dimension": 1, "generator_images": [[["0"]], [["1"]]]}})");
  CHECK_THROWS_AS(parse_scene_json(singular), SingularImageError);

  json marks_cmd = json::parse(R"({
    "group": {"degree": 2, "generators": [[1, 0]]},
    "command": {"name": "lefschetz-marks", "marks": [1, 0]}
  })");
  CHECK_THROWS_AS(run_scene_command(parse_scene_json(marks_cmd), "lefschetz-marks",
                                    OutputFormat::text),
                  NotInImageError);
}

TEST_CASE("missing files and invalid json are input errors") {
  CHECK_THROWS_AS(parse_scene_file(scene_path("no_such_scene.json")), SceneError);
}
