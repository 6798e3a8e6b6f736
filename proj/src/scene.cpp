#include "eqfix/scene.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "eqfix/errors.hpp"

namespace eqfix {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw SceneError(message); }

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + " is missing '" + key + "'");
  return *it;
}

int to_count(const json& j, const std::string& where, int max = 1 << 20) {
  if (!j.is_number_integer()) fail(where + " must be an integer");
  long long v = j.get<long long>();
  if (v < 0 || v > max) fail(where + " is out of range");
  return static_cast<int>(v);
}

Int to_bigint(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rat r = parse_fraction(j.get<std::string>());
    if (!is_integral(r)) fail(where + " must be an integer");
    return r.get_num();
  }
  fail(where + " must be an integer or an integer string");
}

Rat to_rat(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_fraction(j.get<std::string>());
  fail(where + " must be an integer or a 'p/q' string");
}

Permutation to_perm(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + " must be an array of point images");
  std::vector<int> images;
  images.reserve(j.size());
  for (const auto& e : j) images.push_back(to_count(e, where + " entry"));
  try {
    return Permutation(std::move(images));
  } catch (const InputError& e) {
    fail(where + ": " + e.what());
  }
}

QMat to_qmat(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + " must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows ? -1 : 0;
  std::vector<std::vector<Rat>> entries;
  for (const auto& row : j) {
    if (!row.is_array()) fail(where + " rows must be arrays");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols) fail(where + " rows have mixed lengths");
    std::vector<Rat> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(to_rat(e, where + " entry"));
    entries.push_back(std::move(r));
  }
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = entries[i][c];
  return m;
}

IMat to_imat(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + " must be an array of rows");
  IMat m;
  std::size_t cols = 0;
  for (const auto& row : j) {
    if (!row.is_array()) fail(where + " rows must be arrays");
    if (m.empty())
      cols = row.size();
    else if (row.size() != cols)
      fail(where + " rows have mixed lengths");
    std::vector<Int> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(to_bigint(e, where + " entry"));
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<Int> to_int_vector(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + " must be an array");
  std::vector<Int> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(to_bigint(e, where + " entry"));
  return v;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (allowed.find(key) == allowed.end()) fail(where + " has unknown key '" + key + "'");
}

const SceneSubgroup& find_subgroup(const Scene& scene, const std::string& name,
                                   const std::string& where) {
  if (name == "G") return scene.whole;
  auto it = scene.subgroups.find(name);
  if (it == scene.subgroups.end()) fail(where + " names unknown subgroup '" + name + "'");
  return it->second;
}

const SceneRep& find_rep(const Scene& scene, const std::string& name, const std::string& where) {
  auto it = scene.representations.find(name);
  if (it == scene.representations.end())
    fail(where + " names unknown representation '" + name + "'");
  return it->second;
}

const SceneMap& find_map(const Scene& scene, const std::string& name, const std::string& where) {
  auto it = scene.maps.find(name);
  if (it == scene.maps.end()) fail(where + " names unknown map '" + name + "'");
  return it->second;
}

void parse_orbit_common(const Scene& scene, const json& entry, const std::string& where,
                        const char* map_key, const SceneSubgroup** iso_out,
                        const SceneMap** map_out) {
  std::string iso_name = require(entry, "isotropy", where).get<std::string>();
  std::string slice_name = require(entry, "slice", where).get<std::string>();
  std::string map_name = require(entry, map_key, where).get<std::string>();
  const SceneSubgroup& iso = find_subgroup(scene, iso_name, where);
  const SceneRep& slice = find_rep(scene, slice_name, where);
  const SceneMap& map = find_map(scene, map_name, where);
  if (slice.subgroup_name != iso_name)
    fail(where + ": slice representation is over '" + slice.subgroup_name + "', not the isotropy '" +
         iso_name + "'");
  if (map.rep_name != slice_name)
    fail(where + ": map '" + map_name + "' is not a map of representation '" + slice_name + "'");
  *iso_out = &iso;
  *map_out = &map;
}

}  // namespace

Scene parse_scene_json(const json& doc, int max_order) {
  try {
    if (!doc.is_object()) fail("scene must be a JSON object");
    check_keys(doc,
               {"group", "subgroups", "representations", "maps", "fixed_orbits", "periodic_orbits",
                "command"},
               "scene");

    Scene scene;
    const json& group = require(doc, "group", "scene");
    check_keys(group, {"degree", "generators"}, "group");
    int degree = to_count(require(group, "degree", "group"), "group degree", kHardOrderCap);
    const json& gens = require(group, "generators", "group");
    if (!gens.is_array()) fail("group generators must be an array");
    std::vector<Permutation> generators;
    for (const auto& g : gens) {
      Permutation p = to_perm(g, "group generator");
      if (p.degree() != degree) fail("group generator degree does not match the group degree");
      generators.push_back(std::move(p));
    }
    scene.group = group_closure(degree, generators, max_order);

    std::vector<int> whole_gen_members;
    whole_gen_members.reserve(generators.size());
    for (const auto& g : generators) whole_gen_members.push_back(scene.group->element_index(g));
    scene.whole.subgroup = full_subgroup(scene.group);
    scene.whole.generator_members = whole_gen_members;
    scene.whole.promoted = promote(scene.whole.subgroup, whole_gen_members);

    if (doc.contains("subgroups")) {
      const json& subs = doc.at("subgroups");
      if (!subs.is_object()) fail("subgroups must be an object");
      for (const auto& [name, body] : subs.items()) {
        if (name == "G") fail("subgroup name 'G' is reserved for the whole group");
        check_keys(body, {"generators"}, "subgroup '" + name + "'");
        const json& sgens = require(body, "generators", "subgroup '" + name + "'");
        if (!sgens.is_array()) fail("subgroup '" + name + "' generators must be an array");
        SceneSubgroup entry;
        for (const auto& g : sgens) {
          Permutation p = to_perm(g, "subgroup '" + name + "' generator");
          if (p.degree() != degree) fail("subgroup '" + name + "' generator has the wrong degree");
          int idx = scene.group->find_element(p);
          if (idx < 0) fail("subgroup '" + name + "' generator is not an element of the group");
          entry.generator_members.push_back(idx);
        }
        entry.subgroup = subgroup_from_generators(scene.group, entry.generator_members);
        entry.promoted = promote(entry.subgroup, entry.generator_members);
        scene.subgroups.emplace(name, std::move(entry));
      }
    }

    if (doc.contains("representations")) {
      const json& reps = doc.at("representations");
      if (!reps.is_object()) fail("representations must be an object");
      for (const auto& [name, body] : reps.items()) {
        std::string where = "representation '" + name + "'";
        check_keys(body, {"subgroup", "dimension", "generator_images"}, where);
        std::string over = body.contains("subgroup") ? body.at("subgroup").get<std::string>() : "G";
        const SceneSubgroup& target = find_subgroup(scene, over, where);
        int dim = to_count(require(body, "dimension", where), where + " dimension", 64);
        const json& images = require(body, "generator_images", where);
        if (!images.is_array()) fail(where + " generator_images must be an array");
        if (images.size() != target.promoted.group->generators().size())
          fail(where + " needs one image per subgroup generator");
        std::vector<QMat> mats;
        for (const auto& img : images) {
          QMat m = to_qmat(img, where + " image");
          if (m.rows() != dim || m.cols() != dim) fail(where + " image shape must match dimension");
          mats.push_back(std::move(m));
        }
        scene.representations.emplace(
            name, SceneRep{rep_from_generators(target.promoted.group, dim, mats), over});
      }
    }

    if (doc.contains("maps")) {
      const json& maps = doc.at("maps");
      if (!maps.is_object()) fail("maps must be an object");
      for (const auto& [name, body] : maps.items()) {
        std::string where = "map '" + name + "'";
        check_keys(body, {"representation", "matrix"}, where);
        std::string rep_name = require(body, "representation", where).get<std::string>();
        const SceneRep& rep = find_rep(scene, rep_name, where);
        QMat m = to_qmat(require(body, "matrix", where), where + " matrix");
        scene.maps.emplace(name, SceneMap{EquivariantLinearMap(rep.rep, std::move(m)), rep_name});
      }
    }

    if (doc.contains("fixed_orbits")) {
      const json& orbits = doc.at("fixed_orbits");
      if (!orbits.is_array()) fail("fixed_orbits must be an array");
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        std::string where = "fixed orbit " + std::to_string(i);
        check_keys(orbits[i], {"isotropy", "slice", "normal_derivative"}, where);
        const SceneSubgroup* iso = nullptr;
        const SceneMap* map = nullptr;
        parse_orbit_common(scene, orbits[i], where, "normal_derivative", &iso, &map);
        scene.fixed_orbits.push_back(FixedOrbitDatum{iso->subgroup, map->map});
      }
    }

    if (doc.contains("periodic_orbits")) {
      const json& orbits = doc.at("periodic_orbits");
      if (!orbits.is_array()) fail("periodic_orbits must be an array");
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        std::string where = "periodic orbit " + std::to_string(i);
        check_keys(orbits[i], {"isotropy", "slice", "poincare", "multiplicity"}, where);
        const SceneSubgroup* iso = nullptr;
        const SceneMap* map = nullptr;
        parse_orbit_common(scene, orbits[i], where, "poincare", &iso, &map);
        int mult = to_count(require(orbits[i], "multiplicity", where), where + " multiplicity");
        if (mult < 1) fail(where + " multiplicity must be at least 1");
        scene.periodic_orbits.push_back(PeriodicOrbitDatum{iso->subgroup, map->map, mult});
      }
    }

    scene.command = doc.contains("command") ? doc.at("command") : json();
    if (!scene.command.is_null()) {
      if (!scene.command.is_object()) fail("command must be an object");
      require(scene.command, "name", "command");
      if (!scene.command.at("name").is_string()) fail("command name must be a string");
    }
    return scene;
  } catch (const json::exception& e) {
    fail(std::string("scene structure error: ") + e.what());
  }
}

Scene parse_scene_file(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw SceneError(std::string("scene is not valid JSON: ") + e.what());
  }
  return parse_scene_json(doc, max_order);
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string coeff_tuple(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

std::string coeff_tuple(const std::vector<Rat>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fraction_str(v[i]);
  }
  return out + ")";
}

json coeff_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

json coeff_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(fraction_str(c));
  return out;
}

std::string render(const json& doc, OutputFormat format, const std::vector<std::string>& lines) {
  if (format == OutputFormat::json) return doc.dump() + "\n";
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += "\n";
  }
  return out;
}

const json& command_arg(const Scene& scene, const char* key, const std::string& command) {
  if (scene.command.is_null())
    fail("command '" + command + "' needs a command object with '" + key + "' in the scene");
  return require(scene.command, key, "command '" + command + "'");
}

BurnsideElement element_arg(const Scene& scene, const GroupRef& group, const char* key,
                            const std::string& command) {
  std::vector<Int> coeffs = to_int_vector(command_arg(scene, key, command),
                                          "command '" + command + "' argument '" + key + "'");
  int expected = subgroup_classes(group).count();
  if (static_cast<int>(coeffs.size()) != expected)
    fail("command '" + command + "' argument '" + key + "' needs " + std::to_string(expected) +
         " coefficients");
  return BurnsideElement{group, std::move(coeffs)};
}

std::string subgroup_arg(const Scene& scene, const std::string& command) {
  const json& j = command_arg(scene, "subgroup", command);
  if (!j.is_string()) fail("command '" + command + "' subgroup must be a name");
  return j.get<std::string>();
}

std::string run_group_info(const Scene& scene, OutputFormat format) {
  const auto& g = *scene.group;
  const SubgroupClassList& classes = subgroup_classes(scene.group);

  json jclasses = json::array();
  std::vector<std::string> lines;
  lines.push_back("group: degree " + std::to_string(g.degree()) + ", order " +
                  std::to_string(g.order()));
  std::string gen_line = "generators:";
  json jgens = json::array();
  for (const auto& p : g.generators()) {
    gen_line += " " + p.str();
    jgens.push_back(p.images());
  }
  if (g.generators().empty()) gen_line += " (none)";
  lines.push_back(gen_line);
  lines.push_back("subgroup classes: " + std::to_string(classes.count()));
  for (int c = 0; c < classes.count(); ++c) {
    const Subgroup& rep = classes.classes[c];
    WeylGroup w = weyl_group(rep);
    json jc;
    jc["index"] = c;
    jc["order"] = rep.order();
    jc["members"] = rep.members;
    jc["normalizer_order"] = w.normalizer.order();
    jc["weyl_order"] = w.group->order();
    jclasses.push_back(jc);
    lines.push_back("H" + std::to_string(c) + ": order " + std::to_string(rep.order()) + ", weyl " +
                    std::to_string(w.group->order()) + ", members " + join_ints(rep.members));
  }

  json doc;
  doc["class_count"] = classes.count();
  doc["classes"] = jclasses;
  doc["degree"] = g.degree();
  doc["generators"] = jgens;
  doc["group_order"] = g.order();
  return render(doc, format, lines);
}

std::string run_marks(const Scene& scene, OutputFormat format) {
  const TableOfMarks& t = table_of_marks(scene.group);
  const SubgroupClassList& classes = subgroup_classes(scene.group);

  std::vector<std::string> lines;
  std::string head = "classes:";
  json jorders = json::array();
  for (int c = 0; c < classes.count(); ++c) {
    head += " H" + std::to_string(c) + "(order " + std::to_string(classes.classes[c].order()) + ")";
    jorders.push_back(classes.classes[c].order());
  }
  lines.push_back(head);
  json jmarks = json::array();
  for (int i = 0; i < t.size(); ++i) {
    std::string row = "row H" + std::to_string(i) + ":";
    json jrow = json::array();
    for (int j = 0; j < t.size(); ++j) {
      row += " " + t.marks[i][j].get_str();
      jrow.push_back(t.marks[i][j].get_str());
    }
    lines.push_back(row);
    jmarks.push_back(jrow);
  }

  json doc;
  doc["class_count"] = classes.count();
  doc["class_orders"] = jorders;
  doc["marks"] = jmarks;
  return render(doc, format, lines);
}

std::string run_burnside_mul(const Scene& scene, OutputFormat format) {
  BurnsideElement x = element_arg(scene, scene.group, "x", "burnside-mul");
  BurnsideElement y = element_arg(scene, scene.group, "y", "burnside-mul");
  BurnsideElement product = mul(x, y);
  MarkVector v = marks(product);

  json doc;
  doc["coefficients"] = coeff_json(product.coeffs);
  doc["element"] = format_element(product);
  doc["marks"] = coeff_json(v.values);
  return render(doc, format,
                {"element: " + format_element(product),
                 "coefficients: " + coeff_tuple(product.coeffs), "marks: " + format_marks(v)});
}

std::string run_burnside_eta(const Scene& scene, OutputFormat format) {
  BurnsideElement x = element_arg(scene, scene.group, "x", "burnside-eta");
  std::string name = subgroup_arg(scene, "burnside-eta");
  const SceneSubgroup& h = find_subgroup(scene, name, "command 'burnside-eta'");
  WeylGroup w = weyl_group(h.subgroup);
  BurnsideElement result = eta(w, x);

  json doc;
  doc["coefficients"] = coeff_json(result.coeffs);
  doc["element"] = format_element(result);
  doc["subgroup"] = name;
  doc["weyl_class_count"] = subgroup_classes(w.group).count();
  doc["weyl_order"] = w.group->order();
  return render(doc, format,
                {"subgroup: " + name, "weyl order: " + std::to_string(w.group->order()),
                 "element: " + format_element(result),
                 "coefficients: " + coeff_tuple(result.coeffs)});
}

std::string run_burnside_induce(const Scene& scene, OutputFormat format) {
  std::string name = subgroup_arg(scene, "burnside-induce");
  const SceneSubgroup& h = find_subgroup(scene, name, "command 'burnside-induce'");
  BurnsideElement x = element_arg(scene, h.promoted.group, "x", "burnside-induce");
  BurnsideElement result = induce(scene.group, h.subgroup, x);

  json doc;
  doc["coefficients"] = coeff_json(result.coeffs);
  doc["element"] = format_element(result);
  doc["subgroup"] = name;
  return render(doc, format,
                {"subgroup: " + name, "element: " + format_element(result),
                 "coefficients: " + coeff_tuple(result.coeffs)});
}

std::string run_burnside_restrict(const Scene& scene, OutputFormat format) {
  std::string name = subgroup_arg(scene, "burnside-restrict");
  const SceneSubgroup& h = find_subgroup(scene, name, "command 'burnside-restrict'");
  BurnsideElement x = element_arg(scene, scene.group, "x", "burnside-restrict");
  BurnsideElement result = restrict_to(h.subgroup, x);

  json doc;
  doc["coefficients"] = coeff_json(result.coeffs);
  doc["element"] = format_element(result);
  doc["subgroup"] = name;
  doc["subgroup_class_count"] = subgroup_classes(h.promoted.group).count();
  return render(doc, format,
                {"subgroup: " + name, "element: " + format_element(result),
                 "coefficients: " + coeff_tuple(result.coeffs)});
}

std::string run_degree(const Scene& scene, OutputFormat format) {
  const json& j = command_arg(scene, "map", "degree");
  if (!j.is_string()) fail("command 'degree' map must be a name");
  std::string name = j.get<std::string>();
  const SceneMap& m = find_map(scene, name, "command 'degree'");
  const SceneRep& rep = find_rep(scene, m.rep_name, "command 'degree'");

  BurnsideElement deg = equivariant_degree(m.map);
  std::string over = rep.subgroup_name;
  if (over == "G") deg = induce(scene.group, scene.whole.subgroup, deg);
  MarkVector v = marks(deg);

  json doc;
  doc["coefficients"] = coeff_json(deg.coeffs);
  doc["element"] = format_element(deg);
  doc["map"] = name;
  doc["marks"] = coeff_json(v.values);
  doc["over"] = over;
  return render(doc, format,
                {"map: " + name, "over: " + over, "element: " + format_element(deg),
                 "coefficients: " + coeff_tuple(deg.coeffs), "marks: " + format_marks(v)});
}

std::string run_lefschetz_orbits(const Scene& scene, OutputFormat format) {
  BurnsideElement result = lefschetz_from_orbits(scene.group, scene.fixed_orbits);
  MarkVector v = marks(result);

  json doc;
  doc["coefficients"] = coeff_json(result.coeffs);
  doc["element"] = format_element(result);
  doc["marks"] = coeff_json(v.values);
  doc["orbit_count"] = static_cast<int>(scene.fixed_orbits.size());
  return render(doc, format,
                {"orbits: " + std::to_string(scene.fixed_orbits.size()),
                 "element: " + format_element(result),
                 "coefficients: " + coeff_tuple(result.coeffs), "marks: " + format_marks(v)});
}

std::string run_lefschetz_marks(const Scene& scene, OutputFormat format) {
  std::vector<Int> values = to_int_vector(command_arg(scene, "marks", "lefschetz-marks"),
                                          "command 'lefschetz-marks' argument 'marks'");
  int expected = subgroup_classes(scene.group).count();
  if (static_cast<int>(values.size()) != expected)
    fail("command 'lefschetz-marks' needs " + std::to_string(expected) + " mark values");
  BurnsideElement result = lefschetz_from_marks(MarkVector{scene.group, std::move(values)});

  json doc;
  doc["coefficients"] = coeff_json(result.coeffs);
  doc["element"] = format_element(result);
  return render(doc, format,
                {"element: " + format_element(result),
                 "coefficients: " + coeff_tuple(result.coeffs)});
}

std::string run_lefschetz_cellular(const Scene& scene, OutputFormat format) {
  const json& chain = command_arg(scene, "chain", "lefschetz-cellular");
  check_keys(chain, {"maps", "boundaries"}, "command 'lefschetz-cellular' chain");
  const json& jmaps = require(chain, "maps", "command 'lefschetz-cellular' chain");
  if (!jmaps.is_array()) fail("chain maps must be an array of matrices");
  ChainMapData data;
  for (std::size_t k = 0; k < jmaps.size(); ++k)
    data.maps.push_back(to_imat(jmaps[k], "chain map in degree " + std::to_string(k)));
  if (chain.contains("boundaries")) {
    const json& jb = chain.at("boundaries");
    if (!jb.is_array()) fail("chain boundaries must be an array of matrices");
    for (std::size_t k = 0; k < jb.size(); ++k)
      data.boundaries.push_back(to_imat(jb[k], "boundary in degree " + std::to_string(k)));
  }
  Int value = hopf_lefschetz(data);

  json doc;
  doc["value"] = value.get_str();
  return render(doc, format, {"lefschetz number: " + value.get_str()});
}

std::string run_fuller(const Scene& scene, OutputFormat format) {
  RationalBurnsideElement index = fuller_sum(scene.group, scene.periodic_orbits);
  const SubgroupClassList& classes = subgroup_classes(scene.group);

  json jdetect = json::array();
  std::vector<std::string> lines;
  lines.push_back("orbits: " + std::to_string(scene.periodic_orbits.size()));
  lines.push_back("index: " + format_element(index));
  lines.push_back("coefficients: " + coeff_tuple(index.coeffs));
  for (int c = 0; c < classes.count(); ++c) {
    bool hit = fuller_detect(classes.classes[c], index);
    json jc;
    jc["class"] = c;
    jc["detected"] = hit;
    jdetect.push_back(jc);
    lines.push_back("detected at H" + std::to_string(c) + ": " + (hit ? "yes" : "no"));
  }

  json doc;
  doc["coefficients"] = coeff_json(index.coeffs);
  doc["detection"] = jdetect;
  doc["element"] = format_element(index);
  doc["orbit_count"] = static_cast<int>(scene.periodic_orbits.size());
  return render(doc, format, lines);
}

}  // namespace

std::string run_scene_command(const Scene& scene, const std::string& command_name,
                              OutputFormat format) {
  if (!scene.command.is_null()) {
    std::string requested = scene.command.at("name").get<std::string>();
    if (requested != command_name)
      fail("scene requests command '" + requested + "' but '" + command_name + "' was invoked");
  }

  if (command_name == "group-info") return run_group_info(scene, format);
  if (command_name == "marks") return run_marks(scene, format);
  if (command_name == "burnside-mul") return run_burnside_mul(scene, format);
  if (command_name == "burnside-eta") return run_burnside_eta(scene, format);
  if (command_name == "burnside-induce") return run_burnside_induce(scene, format);
  if (command_name == "burnside-restrict") return run_burnside_restrict(scene, format);
  if (command_name == "degree") return run_degree(scene, format);
  if (command_name == "lefschetz-orbits") return run_lefschetz_orbits(scene, format);
  if (command_name == "lefschetz-marks") return run_lefschetz_marks(scene, format);
  if (command_name == "lefschetz-cellular") return run_lefschetz_cellular(scene, format);
  if (command_name == "fuller") return run_fuller(scene, format);
  fail("unknown command '" + command_name + "'");
}

}  // namespace eqfix
