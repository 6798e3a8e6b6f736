#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eqfix/burnside.hpp"
#include "eqfix/errors.hpp"
#include "oracles.hpp"

using namespace eqfix;
using namespace eqfix::testing;

namespace {

std::vector<GroupRef> table_groups() {
  return {cyclic_group(2), cyclic_group(4), klein4(), symmetric3(), dihedral8(), alternating4(),
          symmetric4()};
}

}  // namespace

TEST_CASE("small tables of marks by hand") {
  const TableOfMarks& c2 = table_of_marks(cyclic_group(2));
  REQUIRE(c2.size() == 2);
  CHECK(c2.marks[0] == std::vector<Int>{2, 1});
  CHECK(c2.marks[1] == std::vector<Int>{0, 1});

  const TableOfMarks& s3 = table_of_marks(symmetric3());
  REQUIRE(s3.size() == 4);
  CHECK(s3.marks[0] == std::vector<Int>{6, 3, 2, 1});
  CHECK(s3.marks[1] == std::vector<Int>{0, 1, 0, 1});
  CHECK(s3.marks[2] == std::vector<Int>{0, 0, 2, 1});
  CHECK(s3.marks[3] == std::vector<Int>{0, 0, 0, 1});
}

TEST_CASE("tables are triangular with the expected diagonal and top row") {
  for (const GroupRef& g : table_groups()) {
    const TableOfMarks& t = table_of_marks(g);
    const SubgroupClassList& classes = subgroup_classes(g);
    REQUIRE(t.size() == classes.count());
    for (int i = 0; i < t.size(); ++i) {
      WeylGroup w = weyl_group(classes.classes[i]);
      CHECK(t.marks[i][i] == w.group->order());
      CHECK(t.marks[i][i] == w.normalizer.order() / classes.classes[i].order());
      CHECK(t.marks[0][i] == g->order() / classes.classes[i].order());
      for (int j = 0; j < t.size(); ++j) {
        CHECK((t.marks[i][j] != 0) == is_subconjugate(classes.classes[i], classes.classes[j]));
        if (j < i) CHECK(t.marks[i][j] == 0);
      }
    }
  }
}

TEST_CASE("marks counts fixed cosets directly") {
  // independent recount straight from the coset actions
  for (const GroupRef& g : {symmetric3(), dihedral8()}) {
    const TableOfMarks& t = table_of_marks(g);
    const SubgroupClassList& classes = subgroup_classes(g);
    for (int j = 0; j < classes.count(); ++j) {
      GSetAction act = coset_action(classes.classes[j]);
      for (int i = 0; i < classes.count(); ++i) {
        Int fixed = 0;
        for (std::size_t p = 0; p < act.point_labels.size(); ++p) {
          bool all = true;
          for (int m : classes.classes[i].members)
            if (act.action[m](static_cast<int>(p)) != static_cast<int>(p)) {
              all = false;
              break;
            }
          if (all) fixed += 1;
        }
        CHECK(t.marks[i][j] == fixed);
      }
    }
  }
}

TEST_CASE("marks then from_marks is the identity") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (const GroupRef& g : table_groups()) {
    int n = subgroup_classes(g).count();
    for (int c = 0; c < n; ++c) {
      BurnsideElement x = basis_element(g, c);
      CHECK(equal(from_marks(marks(x)), x));
    }
    for (int trial = 0; trial < 25; ++trial) {
      BurnsideElement x = zero_element(g);
      for (int c = 0; c < n; ++c) x.coeffs[c] = coeff(rng);
      CHECK(equal(from_marks(marks(x)), x));
    }
  }
}

TEST_CASE("vectors outside the mark image are rejected") {
  GroupRef g = cyclic_group(2);
  CHECK_THROWS_AS(from_marks(MarkVector{g, {1, 0}}), NotInImageError);
  CHECK_NOTHROW(from_marks(MarkVector{g, {2, 0}}));
  GroupRef s3 = symmetric3();
  CHECK_THROWS_AS(from_marks(MarkVector{s3, {0, 2, 0, 1}}), NotInImageError);
  CHECK_THROWS_AS(from_marks(MarkVector{s3, {1, 1, 1}}), InputError);  // wrong length
}

TEST_CASE("multiplication agrees with orbit decomposition of coset pairs") {
  for (const GroupRef& g : {cyclic_group(4), klein4(), symmetric3(), dihedral8(), alternating4()}) {
    int n = subgroup_classes(g).count();
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        BurnsideElement product = mul(basis_element(g, j), basis_element(g, k));
        CHECK(product.coeffs == product_by_orbits(g, j, k));
      }
  }
}

TEST_CASE("the ring laws hold") {
  GroupRef g = symmetric3();
  int n = subgroup_classes(g).count();
  BurnsideElement one = unit_element(g);
  for (int j = 0; j < n; ++j) {
    BurnsideElement x = basis_element(g, j);
    CHECK(equal(mul(x, one), x));
    CHECK(equal(mul(one, x), x));
    for (int k = 0; k < n; ++k) {
      BurnsideElement y = basis_element(g, k);
      CHECK(equal(mul(x, y), mul(y, x)));
      for (int l = 0; l < n; ++l) {
        BurnsideElement z = basis_element(g, l);
        CHECK(equal(mul(mul(x, y), z), mul(x, mul(y, z))));
        CHECK(equal(mul(x, add(y, z)), add(mul(x, y), mul(x, z))));
      }
    }
  }
}

TEST_CASE("the free orbit squares to its multiple") {
  for (const GroupRef& g : {cyclic_group(2), symmetric3(), dihedral8()}) {
    BurnsideElement free_orbit = basis_element(g, 0);
    BurnsideElement square = mul(free_orbit, free_orbit);
    BurnsideElement expected = zero_element(g);
    expected.coeffs[0] = g->order();
    CHECK(equal(square, expected));
  }
}

TEST_CASE("mixing elements of different groups is rejected") {
  BurnsideElement x = basis_element(cyclic_group(2), 0);
  BurnsideElement y = basis_element(symmetric3(), 0);
  CHECK_THROWS_AS(add(x, y), GroupMismatchError);
  CHECK_THROWS_AS(mul(x, y), GroupMismatchError);
}

TEST_CASE("explicit actions decompose into transitive pieces") {
  GroupRef g = symmetric3();
  const SubgroupClassList& classes = subgroup_classes(g);
  for (int c = 0; c < classes.count(); ++c) {
    BurnsideElement x = gset_to_element(coset_action(classes.classes[c]));
    CHECK(equal(x, basis_element(g, c)));
  }

  // disjoint union of two coset spaces
  GSetAction a = coset_action(classes.classes[1]);
  GSetAction b = coset_action(classes.classes[2]);
  int na = static_cast<int>(a.point_labels.size());
  int nb = static_cast<int>(b.point_labels.size());
  GSetAction both;
  both.group = g;
  both.point_labels.resize(na + nb);
  for (int e = 0; e < g->order(); ++e) {
    std::vector<int> img(na + nb);
    for (int x = 0; x < na; ++x) img[x] = a.action[e](x);
    for (int y = 0; y < nb; ++y) img[na + y] = na + b.action[e](y);
    both.action.emplace_back(std::move(img));
  }
  CHECK(equal(gset_to_element(both), add(basis_element(g, 1), basis_element(g, 2))));
}

TEST_CASE("non actions are rejected") {
  GroupRef g = cyclic_group(2);
  GSetAction bad;
  bad.group = g;
  bad.point_labels = {0, 1};
  bad.action = {Permutation({1, 0}), Permutation({0, 1})};  // identity must act trivially
  CHECK_THROWS_AS(gset_to_element(bad), InputError);

  GSetAction short_list;
  short_list.group = g;
  short_list.point_labels = {0};
  short_list.action = {Permutation({0})};
  CHECK_THROWS_AS(gset_to_element(short_list), InputError);
}

TEST_CASE("induction matches the balanced product") {
  for (const GroupRef& g : {symmetric3(), cyclic_group(4), dihedral8()}) {
    const SubgroupClassList& classes = subgroup_classes(g);
    for (int c = 0; c < classes.count(); ++c) {
      const Subgroup& h = classes.classes[c];
      PromotedSubgroup p = promote(h);
      int hn = subgroup_classes(p.group).count();
      for (int k = 0; k < hn; ++k) {
        BurnsideElement image = induce(g, h, basis_element(p.group, k));
        CHECK(image.coeffs == induced_basis_by_balanced_product(g, h, k));
      }
    }
  }
}

TEST_CASE("induction sends free and full basis classes where they must go") {
  GroupRef g = symmetric3();
  const SubgroupClassList& classes = subgroup_classes(g);
  const TableOfMarks& t = table_of_marks(g);
  for (int c = 0; c < classes.count(); ++c) {
    const Subgroup& h = classes.classes[c];
    PromotedSubgroup p = promote(h);
    const SubgroupClassList& hclasses = subgroup_classes(p.group);
    for (int k = 0; k < hclasses.count(); ++k) {
      BurnsideElement image = induce(g, h, basis_element(p.group, k));
      // top mark counts the points of the induced set
      Int top = 0;
      for (int j = 0; j < classes.count(); ++j) top += image.coeffs[j] * t.marks[0][j];
      CHECK(top == g->order() / hclasses.classes[k].order());
    }
    // the full class of the subgroup goes to the transitive set on its cosets
    BurnsideElement whole = induce(g, h, unit_element(p.group));
    CHECK(equal(whole, basis_element(g, c)));
  }
}

TEST_CASE("induction rejects elements over the wrong group") {
  GroupRef g = symmetric3();
  Subgroup h = subgroup_classes(g).classes[1];
  CHECK_THROWS_AS(induce(g, h, basis_element(g, 0)), GroupMismatchError);
  Subgroup foreign = trivial_subgroup(cyclic_group(2));
  PromotedSubgroup p = promote(h);
  CHECK_THROWS_AS(induce(g, foreign, basis_element(p.group, 0)), GroupMismatchError);
}

TEST_CASE("restriction is a ring homomorphism") {
  for (const GroupRef& g : {symmetric3(), dihedral8()}) {
    const SubgroupClassList& classes = subgroup_classes(g);
    int n = classes.count();
    for (int c = 0; c < n; ++c) {
      const Subgroup& h = classes.classes[c];
      PromotedSubgroup p = promote(h);
      CHECK(equal(restrict_to(h, unit_element(g)), unit_element(p.group)));
      for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
          BurnsideElement x = basis_element(g, j);
          BurnsideElement y = basis_element(g, k);
          CHECK(equal(restrict_to(h, mul(x, y)), mul(restrict_to(h, x), restrict_to(h, y))));
        }
    }
  }
}

TEST_CASE("induction and restriction satisfy the projection formula") {
  for (const GroupRef& g : {symmetric3(), dihedral8()}) {
    const SubgroupClassList& classes = subgroup_classes(g);
    for (int c = 0; c < classes.count(); ++c) {
      const Subgroup& h = classes.classes[c];
      PromotedSubgroup p = promote(h);
      int hn = subgroup_classes(p.group).count();
      for (int k = 0; k < hn; ++k)
        for (int j = 0; j < classes.count(); ++j) {
          BurnsideElement x = basis_element(p.group, k);
          BurnsideElement y = basis_element(g, j);
          BurnsideElement left = mul(induce(g, h, x), y);
          BurnsideElement right = induce(g, h, mul(x, restrict_to(h, y)));
          CHECK(equal(left, right));
        }
    }
  }
}

TEST_CASE("the fixed point functor is a ring homomorphism") {
  for (const GroupRef& g : {symmetric3(), dihedral8()}) {
    const SubgroupClassList& classes = subgroup_classes(g);
    int n = classes.count();
    for (int c = 0; c < n; ++c) {
      WeylGroup w = weyl_group(classes.classes[c]);
      CHECK(equal(eta(w, unit_element(g)), unit_element(w.group)));
      for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
          BurnsideElement x = basis_element(g, j);
          BurnsideElement y = basis_element(g, k);
          CHECK(equal(eta(w, mul(x, y)), mul(eta(w, x), eta(w, y))));
          CHECK(equal(eta(w, add(x, y)), add(eta(w, x), eta(w, y))));
        }
      // the subgroup overload routes through the same functor
      CHECK(equal(eta(classes.classes[c], basis_element(g, 0)),
                  eta(w, basis_element(g, 0))));
    }
  }
}

TEST_CASE("fixed points under the trivial subgroup change nothing") {
  for (const GroupRef& g : {cyclic_group(2), symmetric3()}) {
    WeylGroup w = weyl_group(trivial_subgroup(g));
    int n = subgroup_classes(g).count();
    REQUIRE(subgroup_classes(w.group).count() == n);
    for (int c = 0; c < n; ++c) {
      BurnsideElement image = eta(w, basis_element(g, c));
      CHECK(image.coeffs == basis_element(g, c).coeffs);
    }
  }
}

TEST_CASE("fixed points under the whole group read off the last mark") {
  for (const GroupRef& g : {symmetric3(), dihedral8()}) {
    const TableOfMarks& t = table_of_marks(g);
    WeylGroup w = weyl_group(full_subgroup(g));
    REQUIRE(w.group->order() == 1);
    int n = subgroup_classes(g).count();
    for (int c = 0; c < n; ++c) {
      BurnsideElement image = eta(w, basis_element(g, c));
      REQUIRE(image.coeffs.size() == 1);
      CHECK(image.coeffs[0] == t.marks[n - 1][c]);
    }
  }
}

TEST_CASE("rational scalars behave") {
  GroupRef g = symmetric3();
  RationalBurnsideElement x = to_rational(basis_element(g, 1));
  RationalBurnsideElement scaled = rational_scale(make_rat(1, 3), x);
  CHECK(scaled.coeffs[1] == make_rat(1, 3));
  CHECK(rational_is_zero(rational_add(scaled, rational_scale(make_rat(-1, 3), x))));
  CHECK(rational_is_zero(rational_zero(g)));
  CHECK(!rational_is_zero(x));

  // the rational functor extends the integral one
  for (int c = 0; c < subgroup_classes(g).count(); ++c) {
    WeylGroup w = weyl_group(subgroup_classes(g).classes[c]);
    BurnsideElement b = basis_element(g, 2);
    RationalBurnsideElement lifted = rational_eta(w, to_rational(b));
    CHECK(lifted.coeffs == to_rational(eta(w, b)).coeffs);
  }
}

TEST_CASE("element rendering") {
  GroupRef g = cyclic_group(2);
  CHECK(format_element(zero_element(g)) == "0");
  CHECK(format_element(basis_element(g, 0)) == "[G/H0]");
  CHECK(format_element(negate(basis_element(g, 0))) == "-[G/H0]");
  BurnsideElement x = zero_element(g);
  x.coeffs = {-1, 2};
  CHECK(format_element(x) == "-[G/H0] + 2*[G/H1]");
  CHECK(format_marks(marks(x)) == "(0, 2)");

  RationalBurnsideElement r = rational_scale(make_rat(1, 3), to_rational(basis_element(g, 0)));
  CHECK(format_element(r) == "1/3*[G/H0]");
}
