#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catana/errors.hpp"
#include "catana/syntax.hpp"

namespace catana {

using ObjId = uint32_t;
using MorId = uint32_t;
using ElemId = uint32_t;
inline constexpr uint32_t npos32 = 0xffffffffu;

enum class Kind : uint8_t { Identity, Element, Primitive, Derived };

enum class Ctor : uint8_t {
  None,
  Composite,
  Projection1,
  Projection2,
  Pairing,
  Diagonal,
  Swap,
  Evaluation,
  Curry,
  ProductMap,
  Pointwise, // operator value materialized outside the declared applications
};

// One element of a carrier set. Product elements are pairs of component
// indices; exponential elements carry the underlying function table
// (index into the exponent's carrier -> index into the base's carrier).
struct Element {
  std::string label;
  uint32_t first = npos32;  // product: index into left factor carrier
  uint32_t second = npos32; // product: index into right factor carrier
  std::vector<uint32_t> table; // exponential: underlying function
  MorId named_mor = npos32;    // exponential: the morphism this element names
  MorId slice_parent = npos32; // exponential: curried slice f(z,.) of f
  ElemId slice_arg = npos32;   //   ... at z
};

struct ObjectData {
  explicit ObjectData(ObjectSyntax s) : syntax(std::move(s)) {}

  ObjectSyntax syntax;
  std::vector<Element> elems;
  std::map<std::string, ElemId> elem_by_label;
  std::map<std::pair<uint32_t, uint32_t>, ElemId> pair_index; // products
  std::map<std::pair<MorId, ElemId>, ElemId> slice_index;     // exponentials
  std::map<std::vector<uint32_t>, ElemId> shared_table_index; // foldable slices
  ObjId left = npos32, right = npos32;  // components for product/exponential
  MorId proj1 = npos32, proj2 = npos32; // projections, for products

  const std::string& key() const { return syntax.key(); }
};

struct Morphism {
  std::string name;
  ObjId dom = npos32, cod = npos32;
  Kind kind = Kind::Primitive;
  Ctor ctor = Ctor::None;
  std::vector<uint32_t> ext; // total map dom-elem index -> cod-elem index
  // Composite: (outer, inner) witness; Pairing/ProductMap/Pointwise: components;
  // Curry: part_a = the curried parent
  MorId part_a = npos32, part_b = npos32;
  ElemId elem = npos32; // Element: target carrier index
};

enum class ViolationKind {
  MissingIdentity,
  NonTotalExtension,
  MissingComposite,
  IdentityLaw,
  Associativity,
  UnitCardinalityMismatch,
  NotClosed,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> advisories;
  bool ok() const { return violations.empty(); }
};

// Subset of a category: objects, morphisms, and excluded carrier elements
// (exponential entries naming excluded morphisms, pairs built from them).
struct Selection {
  std::set<ObjId> objects;
  std::vector<bool> mors; // indexed by MorId
  std::map<ObjId, std::set<ElemId>> excluded_elems;

  bool has_mor(MorId m) const { return m < mors.size() && mors[m]; }
  bool has_obj(ObjId o) const { return objects.count(o) != 0; }
  bool has_elem(ObjId o, ElemId e) const {
    auto it = excluded_elems.find(o);
    return it == excluded_elems.end() || it->second.count(e) == 0;
  }
  size_t mor_count() const;
};

struct ClosureLimits {
  size_t max_hom_size = 10000;
  size_t max_morphisms = 4000000;
};

// A finite category of named functions between finite carriers.
// Identity: primitives are nominal; derived morphisms are canonical by
// (dom, cod, extension), so composition closure terminates. Declared
// law equations (evaluation after currying) override extension lookup
// for their exact factor pair.
class FiniteCategory {
public:
  // -- construction (used by the domain builder and tests) -------------------
  ObjId add_object(const ObjectSyntax& syntax, std::vector<Element> elems,
                   ObjId left = npos32, ObjId right = npos32);
  MorId add_identity(ObjId obj);
  MorId add_element_morphism(ObjId obj, ElemId elem);
  MorId add_primitive(const std::string& name, ObjId dom, ObjId cod,
                      std::vector<uint32_t> ext);
  // derived morphism with structural extension; returns the canonical
  // representative if one with the same extension already exists
  MorId add_structural(const std::string& name, ObjId dom, ObjId cod, Ctor ctor,
                       MorId part_a = npos32, MorId part_b = npos32);
  // g after f equals m, overriding extension lookup for this exact pair
  void add_equation(MorId g, MorId f, MorId m);
  // operator value materialized outside declared applications; parts are the
  // operand pair's element morphisms (for dependency tracking)
  MorId add_pointwise(const std::string& name, ObjId dom, ObjId cod,
                      std::vector<uint32_t> ext, MorId part_a, MorId part_b);
  void note_curry(MorId parent, MorId lam) { curry_by_parent_.emplace(parent, lam); }
  void note_product_map(MorId a, MorId b, MorId pm) { product_maps_.emplace(std::make_pair(a, b), pm); }
  void note_shared_table(ObjId exp, const std::vector<uint32_t>& table, ElemId target) {
    objects_.at(exp).shared_table_index.emplace(table, target);
  }
  ElemId add_carrier_element(ObjId obj, Element elem); // also adds 1->obj morphism
  void update_element_table(ObjId obj, ElemId elem, std::vector<uint32_t> table);
  void map_slice(ObjId exp_obj, MorId parent, ElemId z, ElemId target);
  // extension hook for primitives whose carriers may still grow (operators)
  void set_extension_hook(MorId m, std::function<uint32_t(const FiniteCategory&, ElemId)> hook);

  // canonical pairing <a, b>; recognizes identities, pair elements, delta, sigma
  MorId pairing_of(MorId a, MorId b);
  MorId compose_mut(MorId g, MorId f);
  // run pairwise composition to a fixpoint; enrichment steps (exponential
  // carriers, currying) are interleaved via the callback
  void close(const ClosureLimits& limits = {},
             const std::function<bool(FiniteCategory&)>& enrich = nullptr);
  void refresh_extensions();
  void mark_closed() { closed_ = true; }

  // -- queries ----------------------------------------------------------------
  bool closed() const { return closed_; }
  size_t object_count() const { return objects_.size(); }
  size_t morphism_count() const { return mors_.size(); }

  const ObjectData& object(ObjId o) const { return objects_.at(o); }
  const Morphism& mor(MorId m) const { return mors_.at(m); }
  std::optional<ObjId> find_object(const std::string& key) const;
  ObjId require_object(const std::string& key) const;
  std::optional<MorId> find_mor(ObjId dom, ObjId cod, const std::string& name) const;
  std::optional<MorId> find_mor_by_name(const std::string& name) const;
  MorId identity(ObjId obj) const;
  MorId element_morphism(ObjId obj, ElemId elem) const;
  std::optional<MorId> find_canonical_by_ext(ObjId dom, ObjId cod,
                                           const std::vector<uint32_t>& ext) const;
  std::optional<MorId> curry_of(MorId parent) const;   // lambda(parent), if built
  std::optional<MorId> product_map_of(MorId a, MorId b) const; // a x b, if built
  std::optional<ObjId> unit() const;
  ObjId unit_required() const;

  // composition on a closed category: pure lookup, never creates
  MorId compose(MorId g, MorId f) const;
  // deterministically ordered hom-set (kind rank, then name)
  std::vector<MorId> hom(ObjId x, ObjId y) const;
  const std::vector<MorId>& hom_raw(ObjId x, ObjId y) const; // creation order
  std::vector<std::pair<ObjId, ObjId>> nonempty_homs() const;
  std::vector<ObjId> object_ids() const; // sorted by key

  ValidationReport validate(const Selection* sel = nullptr,
                            bool check_unit_cardinality = true) const;

  Selection full_selection() const;
  // closure-consistent exclusion: drops the seeds, everything structurally
  // built from them, and every carrier element naming them; composites that
  // remain derivable from the surviving morphisms are kept
  Selection exclude_morphisms(const std::vector<MorId>& seeds) const;
  // validated subcategory view; throws NotClosed/MissingIdentity
  Selection subcategory(const Selection& sel) const;

  std::string describe(MorId m) const; // "name : dom -> cod"

private:
  friend class DomainBuilder;

  MorId compose_impl(MorId g, MorId f, bool allow_create);
  MorId pairing_impl(MorId a, MorId b, bool allow_create);
  std::vector<uint32_t> composed_ext(MorId g, MorId f) const;
  bool is_identity_ext(ObjId dom, ObjId cod, const std::vector<uint32_t>& ext) const;
  void recompute_extension(MorId m);
  MorId register_mor(Morphism m);

  std::vector<ObjectData> objects_;
  std::map<std::string, ObjId> object_by_key_;
  std::vector<Morphism> mors_;
  std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> homs_;
  std::map<std::tuple<ObjId, ObjId, std::string>, MorId> mor_by_name_;
  std::map<std::tuple<ObjId, ObjId, std::vector<uint32_t>>, MorId> canonical_by_ext_;
  std::map<std::pair<MorId, MorId>, MorId> equations_;
  std::map<std::pair<ObjId, ElemId>, MorId> element_mors_;
  std::map<MorId, MorId> curry_by_parent_;
  std::map<std::pair<MorId, MorId>, MorId> product_maps_;
  std::vector<MorId> identities_; // indexed by ObjId
  std::map<MorId, std::function<uint32_t(const FiniteCategory&, ElemId)>> ext_hooks_;
  bool closed_ = false;
};

int kind_rank(Kind k);

} // namespace catana
