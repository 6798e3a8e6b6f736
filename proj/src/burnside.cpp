#include "eqfix/burnside.hpp"

#include <algorithm>

#include "cache.hpp"
#include "eqfix/errors.hpp"

namespace eqfix {

namespace {

TableOfMarks build_table(const GroupRef& group) {
  const SubgroupClassList& classes = subgroup_classes(group);
  int n = classes.count();
  TableOfMarks t;
  t.group = group;
  t.marks.assign(n, std::vector<Int>(n, 0));
  for (int j = 0; j < n; ++j) {
    GSetAction act = coset_action(classes.classes[j]);
    int points = static_cast<int>(act.point_labels.size());
    for (int i = 0; i <= j; ++i) {
      const auto& fixer = classes.classes[i].members;
      Int count = 0;
      for (int p = 0; p < points; ++p) {
        bool fixed = true;
        for (int m : fixer) {
          if (act.action[m](p) != p) {
            fixed = false;
            break;
          }
        }
        if (fixed) ++count;
      }
      t.marks[i][j] = count;
    }
  }
  return t;
}

PerGroupCache<TableOfMarks>& table_cache() {
  static PerGroupCache<TableOfMarks> cache;
  return cache;
}

void check_same_group(const GroupRef& a, const GroupRef& b, const char* what) {
  if (!same_group(a, b)) throw GroupMismatchError(std::string(what) + ": groups differ");
}

void check_width(const GroupRef& group, std::size_t width, const char* what) {
  if (width != static_cast<std::size_t>(subgroup_classes(group).count()))
    throw InputError(std::string(what) + ": coefficient count does not match class count");
}

// The W(H)-set of H-fixed cosets of G/K, for K = class c of the parent.
BurnsideElement eta_basis(const WeylGroup& w, int class_index) {
  const GroupRef& g = w.subgroup.parent;
  const SubgroupClassList& classes = subgroup_classes(g);
  GSetAction act = coset_action(classes.classes[class_index]);
  int points = static_cast<int>(act.point_labels.size());

  std::vector<int> fixed;
  for (int p = 0; p < points; ++p) {
    bool ok = true;
    for (int m : w.subgroup.members) {
      if (act.action[m](p) != p) {
        ok = false;
        break;
      }
    }
    if (ok) fixed.push_back(p);
  }

  std::vector<int> slot(points, -1);
  for (int s = 0; s < static_cast<int>(fixed.size()); ++s) slot[fixed[s]] = s;

  GSetAction wact;
  wact.group = w.group;
  wact.point_labels.reserve(fixed.size());
  for (int p : fixed) wact.point_labels.push_back(act.point_labels[p]);
  wact.action.reserve(w.group->order());
  for (int e = 0; e < w.group->order(); ++e) {
    int n = w.normalizer.members[w.section[e]];
    std::vector<int> images(fixed.size());
    for (int s = 0; s < static_cast<int>(fixed.size()); ++s) {
      int q = act.action[n](fixed[s]);
      if (slot[q] < 0) throw Error("normalizer moved a fixed coset off the fixed set");
      images[s] = slot[q];
    }
    wact.action.emplace_back(std::move(images));
  }
  return gset_to_element(wact);
}

}  // namespace

const TableOfMarks& table_of_marks(const GroupRef& group) {
  if (!group) throw InputError("null group");
  return *table_cache().get_or_compute(group, [&] { return build_table(group); });
}

BurnsideElement zero_element(const GroupRef& group) {
  return BurnsideElement{group, std::vector<Int>(subgroup_classes(group).count(), Int(0))};
}

BurnsideElement basis_element(const GroupRef& group, int class_index) {
  BurnsideElement x = zero_element(group);
  if (class_index < 0 || class_index >= static_cast<int>(x.coeffs.size()))
    throw InputError("subgroup class index out of range");
  x.coeffs[class_index] = 1;
  return x;
}

BurnsideElement unit_element(const GroupRef& group) {
  return basis_element(group, subgroup_classes(group).count() - 1);
}

BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) {
  check_same_group(x.group, y.group, "add");
  BurnsideElement out = x;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += y.coeffs[i];
  return out;
}

BurnsideElement negate(const BurnsideElement& x) {
  BurnsideElement out = x;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

bool equal(const BurnsideElement& x, const BurnsideElement& y) {
  return same_group(x.group, y.group) && x.coeffs == y.coeffs;
}

bool is_zero(const BurnsideElement& x) {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](const Int& c) { return c == 0; });
}

MarkVector marks(const BurnsideElement& x) {
  check_width(x.group, x.coeffs.size(), "marks");
  const TableOfMarks& t = table_of_marks(x.group);
  int n = t.size();
  MarkVector v{x.group, std::vector<Int>(n, 0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.values[i] += t.marks[i][j] * x.coeffs[j];
  return v;
}

BurnsideElement from_marks(const MarkVector& v) {
  check_width(v.group, v.values.size(), "from_marks");
  const TableOfMarks& t = table_of_marks(v.group);
  int n = t.size();
  BurnsideElement x{v.group, std::vector<Int>(n, 0)};
  for (int i = n - 1; i >= 0; --i) {
    Int rest = v.values[i];
    for (int j = i + 1; j < n; ++j) rest -= t.marks[i][j] * x.coeffs[j];
    if (rest % t.marks[i][i] != 0)
      throw NotInImageError("mark vector is not the mark vector of any element");
    x.coeffs[i] = rest / t.marks[i][i];
  }
  return x;
}

BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y) {
  check_same_group(x.group, y.group, "mul");
  MarkVector mx = marks(x);
  MarkVector my = marks(y);
  MarkVector product{x.group, std::vector<Int>(mx.values.size())};
  for (std::size_t i = 0; i < mx.values.size(); ++i) product.values[i] = mx.values[i] * my.values[i];
  try {
    return from_marks(product);
  } catch (const NotInImageError&) {
    throw Error("pointwise product of mark vectors left the image of the marks map");
  }
}

BurnsideElement gset_to_element(const GSetAction& action) {
  const GroupRef& g = action.group;
  if (!g) throw InputError("G-set without a group");
  if (static_cast<int>(action.action.size()) != g->order())
    throw InputError("G-set action must list one permutation per group element");
  int points = action.action.empty() ? 0 : action.action.front().degree();
  for (const auto& p : action.action)
    if (p.degree() != points) throw InputError("G-set permutations have mixed degrees");
  if (!action.action[0].is_identity()) throw InputError("G-set action of the identity is not trivial");
  for (int i = 0; i < g->order(); ++i)
    for (int j = 0; j < g->order(); ++j)
      if (!(compose(action.action[i], action.action[j]) == action.action[g->mul(i, j)]))
        throw InputError("G-set action is not a homomorphism");

  const SubgroupClassList& classes = subgroup_classes(g);
  BurnsideElement out = zero_element(g);
  std::vector<char> visited(points, 0);
  for (int p = 0; p < points; ++p) {
    if (visited[p]) continue;
    std::vector<int> stab;
    for (int i = 0; i < g->order(); ++i) {
      int q = action.action[i](p);
      visited[q] = 1;
      if (q == p) stab.push_back(i);
    }
    out.coeffs[classes.class_of(make_subgroup(g, stab))] += 1;
  }
  return out;
}

BurnsideElement induce(const GroupRef& g, const Subgroup& h, const BurnsideElement& x) {
  if (!same_group(h.parent, g)) throw GroupMismatchError("induce: subgroup is not a subgroup of the target");
  PromotedSubgroup p = promote(h);
  check_same_group(x.group, p.group, "induce: element does not live over the promoted subgroup");
  check_width(x.group, x.coeffs.size(), "induce");

  const SubgroupClassList& sub_classes = subgroup_classes(p.group);
  const SubgroupClassList& big_classes = subgroup_classes(g);
  BurnsideElement out = zero_element(g);
  for (int c = 0; c < sub_classes.count(); ++c) {
    if (x.coeffs[c] == 0) continue;
    std::vector<int> members;
    members.reserve(sub_classes.classes[c].members.size());
    for (int i : sub_classes.classes[c].members) members.push_back(h.members[i]);
    out.coeffs[big_classes.class_of(Subgroup{g, std::move(members)})] += x.coeffs[c];
  }
  return out;
}

BurnsideElement restrict_to(const Subgroup& h, const BurnsideElement& x) {
  check_same_group(x.group, h.parent, "restrict: element group and subgroup parent");
  check_width(x.group, x.coeffs.size(), "restrict");
  PromotedSubgroup p = promote(h);
  const SubgroupClassList& classes = subgroup_classes(x.group);

  BurnsideElement out = zero_element(p.group);
  for (int c = 0; c < classes.count(); ++c) {
    if (x.coeffs[c] == 0) continue;
    GSetAction full = coset_action(classes.classes[c]);
    GSetAction restricted;
    restricted.group = p.group;
    restricted.point_labels = full.point_labels;
    restricted.action.reserve(h.order());
    for (int m : h.members) restricted.action.push_back(full.action[m]);
    BurnsideElement piece = gset_to_element(restricted);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += x.coeffs[c] * piece.coeffs[i];
  }
  return out;
}

BurnsideElement eta(const WeylGroup& w, const BurnsideElement& x) {
  check_same_group(x.group, w.subgroup.parent, "eta: element group and subgroup parent");
  check_width(x.group, x.coeffs.size(), "eta");
  BurnsideElement out = zero_element(w.group);
  for (int c = 0; c < static_cast<int>(x.coeffs.size()); ++c) {
    if (x.coeffs[c] == 0) continue;
    BurnsideElement piece = eta_basis(w, c);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += x.coeffs[c] * piece.coeffs[i];
  }
  return out;
}

BurnsideElement eta(const Subgroup& h, const BurnsideElement& x) { return eta(weyl_group(h), x); }

RationalBurnsideElement to_rational(const BurnsideElement& x) {
  RationalBurnsideElement out{x.group, {}};
  out.coeffs.reserve(x.coeffs.size());
  for (const auto& c : x.coeffs) out.coeffs.emplace_back(c);
  return out;
}

RationalBurnsideElement rational_zero(const GroupRef& group) {
  return RationalBurnsideElement{group, std::vector<Rat>(subgroup_classes(group).count(), Rat(0))};
}

RationalBurnsideElement rational_add(const RationalBurnsideElement& x, const RationalBurnsideElement& y) {
  check_same_group(x.group, y.group, "rational_add");
  RationalBurnsideElement out = x;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += y.coeffs[i];
  return out;
}

RationalBurnsideElement rational_scale(const Rat& s, const RationalBurnsideElement& x) {
  RationalBurnsideElement out = x;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

RationalBurnsideElement rational_eta(const WeylGroup& w, const RationalBurnsideElement& x) {
  check_same_group(x.group, w.subgroup.parent, "rational_eta: element group and subgroup parent");
  check_width(x.group, x.coeffs.size(), "rational_eta");
  RationalBurnsideElement out = rational_zero(w.group);
  for (int c = 0; c < static_cast<int>(x.coeffs.size()); ++c) {
    if (x.coeffs[c] == 0) continue;
    BurnsideElement piece = eta_basis(w, c);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += x.coeffs[c] * piece.coeffs[i];
  }
  return out;
}

bool rational_is_zero(const RationalBurnsideElement& x) {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](const Rat& c) { return c == 0; });
}

namespace {

template <typename Coeff>
std::string format_terms(const std::vector<Coeff>& coeffs, const std::string& (*none)(),
                         std::string (*magnitude)(const Coeff&)) {
  std::string out;
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    if (coeffs[c] == 0) continue;
    bool negative = coeffs[c] < 0;
    Coeff mag = negative ? Coeff(-coeffs[c]) : coeffs[c];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string m = magnitude(mag);
    if (m != "1") out += m + "*";
    out += "[G/H" + std::to_string(c) + "]";
  }
  if (out.empty()) return none();
  return out;
}

const std::string& zero_string() {
  static const std::string z = "0";
  return z;
}

}  // namespace

std::string format_element(const BurnsideElement& x) {
  return format_terms<Int>(x.coeffs, zero_string, [](const Int& m) { return m.get_str(); });
}

std::string format_element(const RationalBurnsideElement& x) {
  return format_terms<Rat>(x.coeffs, zero_string, [](const Rat& m) { return fraction_str(m); });
}

std::string format_marks(const MarkVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    if (i) out += ", ";
    out += v.values[i].get_str();
  }
  return out + ")";
}

}  // namespace eqfix
