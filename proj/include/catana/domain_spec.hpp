#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catana/syntax.hpp"

namespace catana {

enum class HigherOrderKind { And1, Causes, And2, Custom };

struct HigherOrderApplication {
  std::string left, right;       // operand morphism names over E^2 -> B
  std::string result_name;
  // explicit result table as true tuples (required for causes/custom)
  std::optional<std::vector<std::vector<std::string>>> result_table;
};

struct HigherOrderDecl {
  std::string name;
  HigherOrderKind kind = HigherOrderKind::And1;
  std::optional<ObjectSyntax> custom_dom, custom_cod;
  std::vector<HigherOrderApplication> applications;
};

struct RelationSpec {
  int arity = 2;
  std::vector<std::vector<std::string>> true_tuples;
};

struct DomainOptions {
  bool and_commutative = true;
  bool and_associative = true;
  int ho_depth = 1;
};

struct DomainSpec {
  std::string name;
  std::vector<std::string> entities;
  // attribute name -> per-entity truth (absent entries default to false)
  std::map<std::string, std::map<std::string, bool>> attributes;
  std::map<std::string, RelationSpec> relations;
  std::vector<HigherOrderDecl> higher_order;
  DomainOptions options;
};

struct SpecReport {
  std::vector<std::string> errors;
  std::vector<std::string> advisories;
  bool ok() const { return errors.empty(); }
};

// Structural validation: unique labels, tuple arities, known entities,
// known operand relations, depth bounds. Advisories list truth-table
// entries defaulted to false.
SpecReport validate_spec(const DomainSpec& spec);

const char* higher_order_kind_name(HigherOrderKind kind);

} // namespace catana
