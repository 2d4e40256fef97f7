#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "catana/category.hpp"
#include "catana/domain_spec.hpp"

namespace catana {

// Builds a domain category from a declarative spec: base objects 1, B, E,
// element morphisms, attributes, entity products for n-ary relations,
// exponentials housing objectified relations, higher-order operators, and
// the composition closure tying it all together.
class DomainBuilder {
public:
  explicit DomainBuilder(DomainSpec spec);

  // base objects, element morphisms, attributes; no products yet
  void build_base();
  ObjId ensure_product(ObjId x, ObjId y);
  ObjId ensure_exponential(ObjId base, ObjId exponent); // base^exponent
  ObjId ensure_entity_power(int n);                     // left-associated E^n
  MorId add_relation(const std::string& name, int arity,
                     const std::vector<std::vector<std::string>>& true_tuples);
  std::vector<MorId> add_higher_order(const HigherOrderDecl& decl);
  // run the closure with carrier/currying enrichment until stable
  void close(const ClosureLimits& limits = {});

  // the full pipeline: base, products, relations, exponentials, operators, closure
  void build_all();

  FiniteCategory& category() { return cat_; }
  const FiniteCategory& category() const { return cat_; }
  FiniteCategory take() { return std::move(cat_); }
  const DomainSpec& spec() const { return spec_; }

private:
  struct OperatorConfig {
    HigherOrderKind kind;
    ObjId dom = npos32;        // operand pair object
    ObjId result_obj = npos32; // exponential holding results
    bool commutative = true;
    // canonical (left label, right label) -> result morphism name
    std::map<std::pair<std::string, std::string>, std::string> declared;
  };

  ObjId ensure_syntax(const ObjectSyntax& syn);
  MorId resolve_operand(const std::string& name);
  bool enrich(FiniteCategory& cat);
  bool sync_products();
  bool sync_exponential(ObjId exp);
  bool sync_operators();
  void install_operator_hook(MorId op, const OperatorConfig& cfg);
  uint32_t encode_tuple(const std::vector<std::string>& tuple, int arity) const;
  std::vector<uint32_t> relation_extension(int arity,
                                           const std::vector<std::vector<std::string>>& tuples) const;

  DomainSpec spec_;
  FiniteCategory cat_;
  ObjId unit_ = npos32, bool_ = npos32, ent_ = npos32;
  ElemId true_elem_ = 0, false_elem_ = 1;
  std::vector<ObjId> entity_powers_; // [0] unused, [1] = E, [2] = E^2, ...
  std::set<ObjId> exponentials_;
  std::map<ObjId, MorId> evaluations_; // exponential -> eval
  std::set<MorId> curried_;            // parents already handled
  // operator-staging products: evaluation plumbing, not curry sources
  std::set<ObjId> staging_;
  std::vector<std::pair<MorId, OperatorConfig>> operators_;
};

// Spec-surface wrappers.
FiniteCategory build_base(const DomainSpec& spec);
FiniteCategory build_domain(const DomainSpec& spec);

} // namespace catana
