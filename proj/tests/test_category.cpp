#include <doctest.h>

#include <algorithm>

#include "catana/builder.hpp"
#include "catana/category.hpp"
#include "fixtures.hpp"

using namespace catana;

namespace {

// tiny hand-built domain: 1, B, E = {x, y}, one attribute f with f(x) = true
FiniteCategory tiny() {
  FiniteCategory cat;
  ObjId unit = cat.add_object(ObjectSyntax::unit(), {Element{"*"}});
  cat.add_identity(unit);
  ObjId b = cat.add_object(ObjectSyntax::booleans(), {Element{"true"}, Element{"false"}});
  cat.add_identity(b);
  ObjId e = cat.add_object(ObjectSyntax::entities(), {Element{"x"}, Element{"y"}});
  cat.add_identity(e);
  cat.add_primitive("f", e, b, {0, 1});
  cat.close();
  return cat;
}

} // namespace

TEST_CASE("composition with an element collapses to the element of the image") {
  FiniteCategory cat = tiny();
  ObjId e = cat.require_object("E");
  ObjId b = cat.require_object("B");
  ObjId unit = cat.require_object("1");
  MorId f = *cat.find_mor(e, b, "f");
  MorId x = *cat.find_mor(unit, e, "x");
  MorId y = *cat.find_mor(unit, e, "y");
  CHECK(cat.mor(cat.compose(f, x)).name == "true");
  CHECK(cat.mor(cat.compose(f, y)).name == "false");
  CHECK(cat.compose(cat.identity(e), x) == x);
  CHECK(cat.compose(f, cat.identity(e)) == f);
}

TEST_CASE("tiny category validates cleanly") {
  FiniteCategory cat = tiny();
  ValidationReport report = cat.validate();
  CHECK(report.ok());
}

TEST_CASE("missing identity is reported") {
  FiniteCategory cat;
  ObjId unit = cat.add_object(ObjectSyntax::unit(), {Element{"*"}});
  cat.add_identity(unit);
  ObjId e = cat.add_object(ObjectSyntax::entities(), {Element{"x"}});
  // no identity for E
  cat.mark_closed();
  ValidationReport report = cat.validate();
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.kind == ViolationKind::MissingIdentity && v.message.find("E") != std::string::npos)
      found = true;
  CHECK(found);
  (void)e;
}

TEST_CASE("unit cardinality mismatch is reported") {
  FiniteCategory cat;
  // entities added before the unit exists, so element morphisms are manual
  ObjId e = cat.add_object(ObjectSyntax::entities(),
                           {Element{"a"}, Element{"b"}, Element{"c"}});
  cat.add_identity(e);
  ObjId unit = cat.add_object(ObjectSyntax::unit(), {Element{"*"}});
  cat.add_identity(unit);
  cat.add_element_morphism(e, 0);
  cat.add_element_morphism(e, 1); // |Mor(1,E)| = 2 but |E| = 3
  cat.mark_closed();
  ValidationReport report = cat.validate();
  bool found = false;
  for (const auto& v : report.violations)
    if (v.kind == ViolationKind::UnitCardinalityMismatch) found = true;
  CHECK(found);
}

TEST_CASE("hom sets are ordered by kind rank then name") {
  DomainSpec spec = testing::solar_spec();
  spec.relations.clear();
  spec.higher_order.clear();
  FiniteCategory cat = build_base(spec);
  ObjId unit = cat.require_object("1");
  ObjId e = cat.require_object("E");
  ObjId b = cat.require_object("B");

  std::vector<std::string> names;
  for (MorId m : cat.hom(unit, e)) names.push_back(cat.mor(m).name);
  CHECK(names == std::vector<std::string>{"mars", "sun", "venus"});

  names.clear();
  for (MorId m : cat.hom(unit, b)) names.push_back(cat.mor(m).name);
  CHECK(names == std::vector<std::string>{"false", "true"});
}

TEST_CASE("subcategory selection: exclusion, closure, missing identity") {
  DomainSpec spec = testing::solar_spec();
  spec.relations.clear();
  spec.higher_order.clear();
  FiniteCategory cat = build_base(spec);
  ObjId e = cat.require_object("E");
  ObjId b = cat.require_object("B");
  MorId hot = *cat.find_mor(e, b, "hot");

  SUBCASE("dropping an attribute and its composites stays a category") {
    Selection sel = cat.exclude_morphisms({hot});
    CHECK_FALSE(sel.has_mor(hot));
    Selection ok = cat.subcategory(sel);
    CHECK(cat.validate(&ok).ok());
  }
  SUBCASE("dropping an identity is rejected") {
    Selection sel = cat.full_selection();
    sel.mors[cat.identity(e)] = false;
    CHECK_THROWS_WITH_AS(cat.subcategory(sel), doctest::Contains("E"), EngineError);
  }
  SUBCASE("full selection validates and equals the category") {
    Selection sel = cat.subcategory(cat.full_selection());
    CHECK(sel.mor_count() == cat.morphism_count());
    CHECK(cat.validate(&sel).ok());
  }
}

TEST_CASE("non-composable morphisms are rejected") {
  FiniteCategory cat = tiny();
  ObjId e = cat.require_object("E");
  ObjId b = cat.require_object("B");
  MorId f = *cat.find_mor(e, b, "f");
  CHECK_THROWS_AS((void)cat.compose(f, f), EngineError);
}
