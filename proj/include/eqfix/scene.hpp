#ifndef EQFIX_SCENE_HPP
#define EQFIX_SCENE_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqfix/fuller.hpp"
#include "eqfix/group.hpp"
#include "eqfix/lefschetz.hpp"
#include "eqfix/representation.hpp"

namespace eqfix {

// A scene file describes one group with named subgroups, representations and
// equivariant maps, plus optional fixed or periodic orbit data and the
// command to run. All structural problems in a scene surface as SceneError
// (or another InputError); mathematically invalid data keeps its own
// precondition errors.
struct SceneSubgroup {
  Subgroup subgroup;
  PromotedSubgroup promoted;
  std::vector<int> generator_members;
};

struct SceneRep {
  RepRef rep;
  std::string subgroup_name;  // "G" for the whole group
};

struct SceneMap {
  EquivariantLinearMap map;
  std::string rep_name;
};

struct Scene {
  GroupRef group;
  SceneSubgroup whole;
  std::map<std::string, SceneSubgroup> subgroups;
  std::map<std::string, SceneRep> representations;
  std::map<std::string, SceneMap> maps;
  std::vector<FixedOrbitDatum> fixed_orbits;
  std::vector<PeriodicOrbitDatum> periodic_orbits;
  nlohmann::json command;  // null when the scene names no command
};

enum class OutputFormat { text, json };

Scene parse_scene_json(const nlohmann::json& doc, int max_order = kDefaultOrderCap);
Scene parse_scene_file(const std::string& path, int max_order = kDefaultOrderCap);

// Runs one of the canonical commands ("group-info", "marks", "burnside-mul",
// "burnside-eta", "burnside-induce", "burnside-restrict", "degree",
// "lefschetz-orbits", "lefschetz-marks", "lefschetz-cellular", "fuller")
// against the scene and renders the result. If the scene itself names a
// command, it must be the same one.
std::string run_scene_command(const Scene& scene, const std::string& command_name,
                              OutputFormat format);

}  // namespace eqfix

#endif
