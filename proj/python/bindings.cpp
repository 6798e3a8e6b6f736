#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqfix/burnside.hpp"
#include "eqfix/errors.hpp"
#include "eqfix/fuller.hpp"
#include "eqfix/group.hpp"
#include "eqfix/lefschetz.hpp"
#include "eqfix/representation.hpp"
#include "eqfix/scene.hpp"

namespace py = pybind11;
using namespace eqfix;

namespace {

using MutableGroup = std::shared_ptr<FiniteGroup>;
using MutableRep = std::shared_ptr<RationalRepresentation>;

MutableGroup unconst(const GroupRef& g) { return std::const_pointer_cast<FiniteGroup>(g); }

py::object py_int(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object py_fraction(const Rat& v) {
  return py::module_::import("fractions").attr("Fraction")(fraction_str(v));
}

Int int_from_py(const py::handle& obj) {
  Rat r = parse_fraction(py::str(obj).cast<std::string>());
  return to_int(r);
}

Rat rat_from_py(const py::handle& obj) {
  return parse_fraction(py::str(obj).cast<std::string>());
}

std::vector<Permutation> perms_from_py(const std::vector<std::vector<int>>& images) {
  std::vector<Permutation> out;
  out.reserve(images.size());
  for (const auto& im : images) out.emplace_back(im);
  return out;
}

BurnsideElement element_from_py(const GroupRef& group, const py::sequence& coeffs) {
  BurnsideElement x{group, {}};
  x.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) x.coeffs.push_back(int_from_py(c));
  if (x.coeffs.size() != static_cast<std::size_t>(subgroup_classes(group).count()))
    throw InputError("coefficient count does not match the subgroup class count");
  return x;
}

RationalBurnsideElement rational_from_py(const GroupRef& group, const py::sequence& coeffs) {
  RationalBurnsideElement x{group, {}};
  x.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) x.coeffs.push_back(rat_from_py(c));
  if (x.coeffs.size() != static_cast<std::size_t>(subgroup_classes(group).count()))
    throw InputError("coefficient count does not match the subgroup class count");
  return x;
}

py::list ints_to_py(const std::vector<Int>& v) {
  py::list out;
  for (const auto& c : v) out.append(py_int(c));
  return out;
}

py::list rats_to_py(const std::vector<Rat>& v) {
  py::list out;
  for (const auto& c : v) out.append(py_fraction(c));
  return out;
}

QMat qmat_from_py(const py::sequence& rows) {
  int r = static_cast<int>(rows.size());
  int c = -1;
  std::vector<std::vector<Rat>> entries;
  for (const auto& row : rows) {
    py::sequence s = py::reinterpret_borrow<py::sequence>(row);
    if (c < 0) c = static_cast<int>(s.size());
    if (static_cast<int>(s.size()) != c) throw InputError("matrix rows have mixed lengths");
    std::vector<Rat> out_row;
    for (const auto& e : s) out_row.push_back(rat_from_py(e));
    entries.push_back(std::move(out_row));
  }
  if (c < 0) c = 0;
  QMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = entries[i][j];
  return m;
}

IMat imat_from_py(const py::sequence& rows) {
  IMat m;
  for (const auto& row : rows) {
    py::sequence s = py::reinterpret_borrow<py::sequence>(row);
    std::vector<Int> out_row;
    for (const auto& e : s) out_row.push_back(int_from_py(e));
    m.push_back(std::move(out_row));
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Burnside ring invariants for finite group actions";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);

  py::class_<FiniteGroup, MutableGroup>(m, "Group")
      .def_property_readonly("degree", &FiniteGroup::degree)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("elements",
           [](const FiniteGroup& g) {
             std::vector<std::vector<int>> out;
             out.reserve(g.order());
             for (const auto& p : g.elements()) out.push_back(p.images());
             return out;
           })
      .def("generators", [](const FiniteGroup& g) {
        std::vector<std::vector<int>> out;
        for (const auto& p : g.generators()) out.push_back(p.images());
        return out;
      });

  py::class_<Subgroup>(m, "Subgroup")
      .def_property_readonly("order", &Subgroup::order)
      .def_property_readonly("members", [](const Subgroup& h) { return h.members; })
      .def_property_readonly("group", [](const Subgroup& h) { return unconst(h.parent); });

  py::class_<RationalRepresentation, MutableRep>(m, "Representation")
      .def_property_readonly("dimension",
                             [](const RationalRepresentation& r) { return r.dimension; })
      .def_property_readonly("group",
                             [](const RationalRepresentation& r) { return unconst(r.group); });

  py::class_<EquivariantLinearMap>(m, "LinearMap")
      .def_property_readonly("representation",
                             [](const EquivariantLinearMap& f) {
                               return std::const_pointer_cast<RationalRepresentation>(f.rep_ptr());
                             })
      .def("matrix", [](const EquivariantLinearMap& f) {
        std::vector<std::vector<std::string>> out;
        for (int i = 0; i < f.matrix().rows(); ++i) {
          std::vector<std::string> row;
          for (int j = 0; j < f.matrix().cols(); ++j) row.push_back(fraction_str(f.matrix().at(i, j)));
          out.push_back(std::move(row));
        }
        return out;
      });

  m.def(
      "make_group",
      [](int degree, const std::vector<std::vector<int>>& generators, int max_order) {
        return unconst(group_closure(degree, perms_from_py(generators), max_order));
      },
      py::arg("degree"), py::arg("generators"), py::arg("max_order") = kDefaultOrderCap);

  m.def("subgroup", [](const MutableGroup& g, const std::vector<std::vector<int>>& generators) {
    std::vector<int> indices;
    for (const auto& im : generators) indices.push_back(g->element_index(Permutation(im)));
    return subgroup_from_generators(g, indices);
  });
  m.def("subgroup_from_members", [](const MutableGroup& g, std::vector<int> members) {
    return make_subgroup(g, std::move(members));
  });
  m.def("trivial_subgroup", [](const MutableGroup& g) { return trivial_subgroup(g); });
  m.def("full_subgroup", [](const MutableGroup& g) { return full_subgroup(g); });

  m.def("class_count", [](const MutableGroup& g) { return subgroup_classes(g).count(); });
  m.def("class_representatives", [](const MutableGroup& g) {
    std::vector<Subgroup> out = subgroup_classes(g).classes;
    return out;
  });
  m.def("class_of", [](const MutableGroup& g, const Subgroup& h) {
    return subgroup_classes(g).class_of(h);
  });

  m.def("normalizer", &normalizer);
  m.def("weyl_group", [](const Subgroup& h) { return unconst(weyl_group(h).group); });
  m.def("is_subconjugate", &is_subconjugate);
  m.def("promote", [](const Subgroup& h) { return unconst(promote(h).group); });

  m.def("table_of_marks", [](const MutableGroup& g) {
    py::list out;
    for (const auto& row : table_of_marks(g).marks) out.append(ints_to_py(row));
    return out;
  });

  m.def("marks", [](const MutableGroup& g, const py::sequence& coeffs) {
    return ints_to_py(marks(element_from_py(g, coeffs)).values);
  });
  m.def("from_marks", [](const MutableGroup& g, const py::sequence& values) {
    MarkVector v{g, {}};
    for (const auto& e : values) v.values.push_back(int_from_py(e));
    return ints_to_py(from_marks(v).coeffs);
  });
  m.def("mul", [](const MutableGroup& g, const py::sequence& x, const py::sequence& y) {
    return ints_to_py(mul(element_from_py(g, x), element_from_py(g, y)).coeffs);
  });
  m.def("format_element", [](const MutableGroup& g, const py::sequence& coeffs) {
    return format_element(element_from_py(g, coeffs));
  });

  m.def("eta", [](const MutableGroup& g, const Subgroup& h, const py::sequence& coeffs) {
    return ints_to_py(eta(h, element_from_py(g, coeffs)).coeffs);
  });
  m.def("induce", [](const MutableGroup& g, const Subgroup& h, const py::sequence& coeffs) {
    return ints_to_py(induce(g, h, element_from_py(promote(h).group, coeffs)).coeffs);
  });
  m.def("restrict", [](const MutableGroup& g, const Subgroup& h, const py::sequence& coeffs) {
    return ints_to_py(restrict_to(h, element_from_py(g, coeffs)).coeffs);
  });

  m.def(
      "representation",
      [](const MutableGroup& g, int dimension, const py::sequence& generator_images) {
        std::vector<QMat> images;
        for (const auto& img : generator_images)
          images.push_back(qmat_from_py(py::reinterpret_borrow<py::sequence>(img)));
        return std::const_pointer_cast<RationalRepresentation>(
            rep_from_generators(g, dimension, images));
      },
      py::arg("group"), py::arg("dimension"), py::arg("generator_images"));
  m.def("trivial_representation", [](const MutableGroup& g, int dimension) {
    return std::const_pointer_cast<RationalRepresentation>(trivial_rep(g, dimension));
  });
  m.def("restrict_representation", [](const MutableRep& rep, const Subgroup& h) {
    return std::const_pointer_cast<RationalRepresentation>(restrict_rep(rep, h));
  });
  m.def("fixed_subspace_dimension", [](const MutableRep& rep, const Subgroup& k) {
    return fixed_subspace(*rep, k).dimension();
  });

  m.def("linear_map", [](const MutableRep& rep, const py::sequence& matrix) {
    return EquivariantLinearMap(rep, qmat_from_py(matrix));
  });
  m.def("equivariant_degree", [](const EquivariantLinearMap& f) {
    return ints_to_py(equivariant_degree(f).coeffs);
  });

  m.def(
      "lefschetz_from_orbits",
      [](const MutableGroup& g,
         const std::vector<std::pair<Subgroup, EquivariantLinearMap>>& orbits) {
        std::vector<FixedOrbitDatum> data;
        for (const auto& [iso, map] : orbits) data.push_back(FixedOrbitDatum{iso, map});
        return ints_to_py(lefschetz_from_orbits(g, data).coeffs);
      },
      py::arg("group"), py::arg("orbits"));
  m.def("lefschetz_from_marks", [](const MutableGroup& g, const py::sequence& values) {
    MarkVector v{g, {}};
    for (const auto& e : values) v.values.push_back(int_from_py(e));
    return ints_to_py(lefschetz_from_marks(v).coeffs);
  });
  m.def(
      "hopf_lefschetz",
      [](const py::sequence& maps, const py::sequence& boundaries) {
        ChainMapData data;
        for (const auto& f : maps) data.maps.push_back(imat_from_py(py::reinterpret_borrow<py::sequence>(f)));
        for (const auto& d : boundaries)
          data.boundaries.push_back(imat_from_py(py::reinterpret_borrow<py::sequence>(d)));
        return py_int(hopf_lefschetz(data));
      },
      py::arg("maps"), py::arg("boundaries") = py::list());

  m.def(
      "fuller_single",
      [](const MutableGroup& g, const Subgroup& iso, const EquivariantLinearMap& poincare,
         int multiplicity) {
        return rats_to_py(fuller_single(g, PeriodicOrbitDatum{iso, poincare, multiplicity}).coeffs);
      },
      py::arg("group"), py::arg("isotropy"), py::arg("poincare"), py::arg("multiplicity") = 1);
  m.def("fuller_detect", [](const MutableGroup& g, const Subgroup& h, const py::sequence& coeffs) {
    return fuller_detect(h, rational_from_py(g, coeffs));
  });

  m.def(
      "run_scene",
      [](const std::string& text, const std::string& command, const std::string& format,
         int max_order) {
        Scene scene = parse_scene_json(nlohmann::json::parse(text), max_order);
        return run_scene_command(scene, command,
                                 format == "json" ? OutputFormat::json : OutputFormat::text);
      },
      py::arg("scene_json"), py::arg("command"), py::arg("format") = "json",
      py::arg("max_order") = kDefaultOrderCap);
}
