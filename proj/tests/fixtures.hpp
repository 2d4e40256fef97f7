#pragma once

#include <string>

#include "catana/domain_spec.hpp"

namespace catana::testing {

// Solar system domain: entities, one attribute, three binary relations,
// a conjunction application and a declared causal link.
inline DomainSpec solar_spec() {
  DomainSpec spec;
  spec.name = "solar";
  spec.entities = {"sun", "venus", "mars"};
  spec.attributes["hot"] = {{"sun", true}, {"venus", false}, {"mars", false}};
  spec.relations["attracts"] =
      RelationSpec{2, {{"sun", "venus"}, {"sun", "mars"}, {"venus", "sun"}, {"mars", "sun"}}};
  spec.relations["more_massive"] = RelationSpec{2, {{"sun", "venus"}, {"sun", "mars"}}};
  spec.relations["revolves_around"] = RelationSpec{2, {{"venus", "sun"}, {"mars", "sun"}}};

  HigherOrderDecl conj;
  conj.name = "and1";
  conj.kind = HigherOrderKind::And1;
  conj.applications.push_back(
      {"attracts", "more_massive", "(attracts and1 more_massive)", std::nullopt});
  spec.higher_order.push_back(conj);

  HigherOrderDecl causes;
  causes.name = "causes";
  causes.kind = HigherOrderKind::Causes;
  HigherOrderApplication app;
  app.left = "attracts";
  app.right = "revolves_around∘sigma";
  app.result_name = "(attracts causes revolves_around∘sigma)";
  app.result_table = {{{"sun", "venus"}, {"sun", "mars"}}};
  causes.applications.push_back(app);
  spec.higher_order.push_back(causes);
  return spec;
}

// Hydrogen atom domain: two entities, no attributes, mirrored relations
// and higher-order structure.
inline DomainSpec atom_spec() {
  DomainSpec spec;
  spec.name = "atom";
  spec.entities = {"nucleus", "electron"};
  spec.relations["attracts"] = RelationSpec{2, {{"nucleus", "electron"}, {"electron", "nucleus"}}};
  spec.relations["more_massive"] = RelationSpec{2, {{"nucleus", "electron"}}};
  spec.relations["revolves_around"] = RelationSpec{2, {{"electron", "nucleus"}}};

  HigherOrderDecl conj;
  conj.name = "and1";
  conj.kind = HigherOrderKind::And1;
  conj.applications.push_back(
      {"attracts", "more_massive", "(attracts and1 more_massive)", std::nullopt});
  spec.higher_order.push_back(conj);

  HigherOrderDecl causes;
  causes.name = "causes";
  causes.kind = HigherOrderKind::Causes;
  HigherOrderApplication app;
  app.left = "attracts";
  app.right = "revolves_around∘sigma";
  app.result_name = "(attracts causes revolves_around∘sigma)";
  app.result_table = {{{"nucleus", "electron"}}};
  causes.applications.push_back(app);
  spec.higher_order.push_back(causes);
  return spec;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(CATANA_FIXTURE_DIR) + "/" + name;
}

} // namespace catana::testing
