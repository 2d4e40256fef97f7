#include "catana/domain_spec.hpp"

#include <set>

#include "catana/errors.hpp"

namespace catana {

const char* higher_order_kind_name(HigherOrderKind kind) {
  switch (kind) {
    case HigherOrderKind::And1: return "and1";
    case HigherOrderKind::Causes: return "causes";
    case HigherOrderKind::And2: return "and2";
    case HigherOrderKind::Custom: return "custom";
  }
  return "?";
}

SpecReport validate_spec(const DomainSpec& spec) {
  SpecReport report;
  auto err = [&](const std::string& msg) { report.errors.push_back(msg); };

  std::set<std::string> entity_set;
  for (const auto& e : spec.entities) {
    if (e.empty()) err("empty entity label");
    if (!entity_set.insert(e).second) err("duplicate entity: " + e);
  }
  if (entity_set.empty()) err("domain has no entities");

  std::set<std::string> names(entity_set);
  auto claim = [&](const std::string& n, const std::string& what) {
    if (n.empty()) { err("empty " + what + " name"); return; }
    if (n.find("∘") != std::string::npos)
      err(what + " name may not contain the composition mark: " + n);
    if (!names.insert(n).second) err("duplicate name: " + n);
  };

  for (const auto& [name, table] : spec.attributes) {
    claim(name, "attribute");
    std::set<std::string> seen;
    for (const auto& [entity, value] : table) {
      (void)value;
      if (!entity_set.count(entity)) err("unknown entity in attribute " + name + ": " + entity);
      seen.insert(entity);
    }
    for (const auto& e : spec.entities)
      if (!seen.count(e))
        report.advisories.push_back("attribute " + name + " defaults " + e + " to false");
  }

  for (const auto& [name, rel] : spec.relations) {
    claim(name, "relation");
    if (rel.arity < 2) err("relation " + name + " must have arity >= 2");
    std::set<std::vector<std::string>> seen;
    for (const auto& tuple : rel.true_tuples) {
      if (static_cast<int>(tuple.size()) != rel.arity)
        err("relation " + name + ": tuple arity mismatch");
      for (const auto& part : tuple)
        if (!entity_set.count(part)) err("relation " + name + ": unknown entity " + part);
      if (!seen.insert(tuple).second)
        report.advisories.push_back("relation " + name + ": duplicate tuple listed");
    }
  }

  if (spec.options.ho_depth < 1) err("ho_depth must be >= 1");

  // operand references may name declared relations or their sigma composites;
  // nesting on earlier results is gated by ho_depth
  std::set<std::string> operand_names;
  for (const auto& [name, rel] : spec.relations)
    if (rel.arity == 2) {
      operand_names.insert(name);
      operand_names.insert(name + "∘sigma");
    }
  std::set<std::string> result_names;
  std::map<std::string, int> result_depth;
  std::set<std::string> op_names;
  for (const auto& decl : spec.higher_order) {
    if (!op_names.insert(decl.name).second) err("duplicate operator: " + decl.name);
    if (names.count(decl.name)) err("operator name collides: " + decl.name);
    if (decl.kind == HigherOrderKind::Custom && (!decl.custom_dom || !decl.custom_cod))
      err("custom operator " + decl.name + " needs domain and codomain");
    for (const auto& app : decl.applications) {
      int depth = 0;
      for (const std::string* opnd : {&app.left, &app.right}) {
        if (operand_names.count(*opnd)) continue;
        auto it = result_depth.find(*opnd);
        if (it != result_depth.end()) {
          depth = std::max(depth, it->second);
          if (it->second >= spec.options.ho_depth)
            err("DepthExceeded: operand " + *opnd + " of " + decl.name +
                " exceeds ho_depth " + std::to_string(spec.options.ho_depth));
          continue;
        }
        err("UnknownRelation: operand " + *opnd + " of " + decl.name);
      }
      if (app.result_name.empty()) err("application of " + decl.name + " missing result_name");
      else if (!names.insert(app.result_name).second)
        err("duplicate name: " + app.result_name);
      if ((decl.kind == HigherOrderKind::Causes || decl.kind == HigherOrderKind::Custom) &&
          !app.result_table)
        err("MissingResultTable: " + decl.name + " application " + app.result_name);
      if (app.result_table) {
        size_t arity = decl.kind == HigherOrderKind::And2 ? 4 : 2;
        for (const auto& tuple : *app.result_table) {
          if (tuple.size() != arity)
            err("result table for " + app.result_name + ": tuple arity mismatch");
          for (const auto& part : tuple)
            if (!entity_set.count(part))
              err("result table for " + app.result_name + ": unknown entity " + part);
        }
      }
      if (!app.result_name.empty()) {
        result_names.insert(app.result_name);
        result_depth[app.result_name] = depth + 1;
      }
    }
  }
  return report;
}

} // namespace catana
