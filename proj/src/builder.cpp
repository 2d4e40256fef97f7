#include "catana/builder.hpp"

#include <algorithm>
#include <cassert>

namespace catana {

namespace {

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

} // namespace

DomainBuilder::DomainBuilder(DomainSpec spec) : spec_(std::move(spec)) {
  SpecReport report = validate_spec(spec_);
  if (!report.ok()) fail(ErrorCode::SemanticError, report.errors.front());
}

void DomainBuilder::build_base() {
  unit_ = cat_.add_object(ObjectSyntax::unit(), {Element{"*"}});
  cat_.add_identity(unit_);
  bool_ = cat_.add_object(ObjectSyntax::booleans(), {Element{"true"}, Element{"false"}});
  cat_.add_identity(bool_);
  std::vector<Element> ents;
  for (const auto& e : spec_.entities) ents.push_back(Element{e});
  ent_ = cat_.add_object(ObjectSyntax::entities(), std::move(ents));
  cat_.add_identity(ent_);
  entity_powers_ = {npos32, ent_};

  for (const auto& [name, table] : spec_.attributes) {
    std::vector<uint32_t> ext(spec_.entities.size(), false_elem_);
    for (size_t i = 0; i < spec_.entities.size(); ++i) {
      auto it = table.find(spec_.entities[i]);
      if (it != table.end() && it->second) ext[i] = true_elem_;
    }
    cat_.add_primitive(name, ent_, bool_, std::move(ext));
  }
}

ObjId DomainBuilder::ensure_product(ObjId x, ObjId y) {
  ObjectSyntax syntax =
      ObjectSyntax::product(cat_.object(x).syntax, cat_.object(y).syntax);
  if (auto found = cat_.find_object(syntax.key())) return *found;

  std::vector<Element> elems;
  const auto& ex = cat_.object(x).elems;
  const auto& ey = cat_.object(y).elems;
  for (uint32_t a = 0; a < ex.size(); ++a)
    for (uint32_t b = 0; b < ey.size(); ++b) {
      Element e{pair_label(ex[a].label, ey[b].label)};
      e.first = a;
      e.second = b;
      elems.push_back(std::move(e));
    }
  ObjId obj = cat_.add_object(syntax, std::move(elems), x, y);
  cat_.add_identity(obj);
  cat_.add_structural("pi1", obj, x, Ctor::Projection1);
  cat_.add_structural("pi2", obj, y, Ctor::Projection2);

  // pairings over every existing (f : Z -> X, g : Z -> Y); elements cover
  // Z = 1 and composition closure canonicalizes the rest on demand
  struct Pending { MorId f, g; };
  std::vector<Pending> pending;
  for (ObjId z = 0; z < cat_.object_count(); ++z) {
    if (z == unit_) continue;
    for (MorId f : cat_.hom_raw(z, x)) {
      if (cat_.mor(f).kind == Kind::Element) continue;
      for (MorId g : cat_.hom_raw(z, y)) {
        if (cat_.mor(g).kind == Kind::Element) continue;
        pending.push_back({f, g});
      }
    }
  }
  for (const auto& [f, g] : pending) cat_.pairing_of(f, g);
  return obj;
}

ObjId DomainBuilder::ensure_entity_power(int n) {
  if (n < 1) fail(ErrorCode::Internal, "entity power < 1");
  while (static_cast<int>(entity_powers_.size()) <= n) {
    ObjId prev = entity_powers_.back();
    entity_powers_.push_back(ensure_product(prev, ent_));
  }
  return entity_powers_[n];
}

ObjId DomainBuilder::ensure_exponential(ObjId base, ObjId exponent) {
  ObjectSyntax syntax =
      ObjectSyntax::exponential(cat_.object(base).syntax, cat_.object(exponent).syntax);
  if (auto found = cat_.find_object(syntax.key())) return *found;
  ObjId exp = cat_.add_object(syntax, {}, base, exponent);
  cat_.add_identity(exp);
  exponentials_.insert(exp);
  ObjId prod = ensure_product(exp, exponent);
  MorId eval = cat_.add_structural("eval", prod, base, Ctor::Evaluation);
  evaluations_[exp] = eval;
  return exp;
}

ObjId DomainBuilder::ensure_syntax(const ObjectSyntax& syn) {
  if (auto found = cat_.find_object(syn.key())) return *found;
  switch (syn.node()) {
    case ObjectSyntax::Node::Product:
      return ensure_product(ensure_syntax(syn.left()), ensure_syntax(syn.right()));
    case ObjectSyntax::Node::Exponential:
      return ensure_exponential(ensure_syntax(syn.left()), ensure_syntax(syn.right()));
    default:
      fail(ErrorCode::UnknownObject, syn.key());
  }
}

uint32_t DomainBuilder::encode_tuple(const std::vector<std::string>& tuple, int arity) const {
  const ObjectData& ent = cat_.object(ent_);
  auto entity_index = [&](const std::string& name) {
    auto it = ent.elem_by_label.find(name);
    if (it == ent.elem_by_label.end()) fail(ErrorCode::UnknownEntity, name);
    return it->second;
  };
  uint32_t cur = entity_index(tuple.at(0));
  for (int i = 1; i < arity; ++i) {
    const ObjectData& power = cat_.object(entity_powers_.at(i + 1));
    cur = power.pair_index.at({cur, entity_index(tuple.at(static_cast<size_t>(i)))});
  }
  return cur;
}

std::vector<uint32_t> DomainBuilder::relation_extension(
    int arity, const std::vector<std::vector<std::string>>& tuples) const {
  const ObjectData& dom = cat_.object(entity_powers_.at(arity));
  std::vector<uint32_t> ext(dom.elems.size(), false_elem_);
  for (const auto& tuple : tuples) {
    if (static_cast<int>(tuple.size()) != arity)
      fail(ErrorCode::ArityMismatch, "tuple of arity " + std::to_string(tuple.size()));
    ext.at(encode_tuple(tuple, arity)) = true_elem_;
  }
  return ext;
}

MorId DomainBuilder::add_relation(const std::string& name, int arity,
                                  const std::vector<std::vector<std::string>>& true_tuples) {
  ObjId dom = ensure_entity_power(arity);
  return cat_.add_primitive(name, dom, bool_, relation_extension(arity, true_tuples));
}

MorId DomainBuilder::resolve_operand(const std::string& name) {
  static const std::string suffix = "∘sigma";
  std::string base = name;
  bool swapped = false;
  if (name.size() > suffix.size() &&
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
    base = name.substr(0, name.size() - suffix.size());
    swapped = true;
  }
  ObjId e2 = ensure_entity_power(2);
  auto rel = cat_.find_mor(e2, bool_, base);
  if (!rel) fail(ErrorCode::UnknownRelation, name);
  if (!swapped) return *rel;
  auto sigma = cat_.find_mor(e2, e2, "sigma");
  if (!sigma) fail(ErrorCode::Internal, "sigma missing on E^2");
  return cat_.compose_mut(*rel, *sigma);
}

std::vector<MorId> DomainBuilder::add_higher_order(const HigherOrderDecl& decl) {
  ObjId e2 = ensure_entity_power(2);
  ObjId bdd = ensure_exponential(bool_, e2); // objectified binary relations
  ensure_exponential(bool_, ent_);           // unary slices of the relations

  ObjId op_dom = npos32, op_cod = npos32, result_dom = npos32;
  switch (decl.kind) {
    case HigherOrderKind::And1:
    case HigherOrderKind::Causes: {
      op_dom = ensure_product(bdd, bdd);
      op_cod = bdd;
      result_dom = e2;
      break;
    }
    case HigherOrderKind::And2: {
      op_dom = ensure_product(bdd, bdd);
      ObjId e4 = ensure_entity_power(4);
      op_cod = ensure_exponential(bool_, e4);
      result_dom = e4;
      break;
    }
    case HigherOrderKind::Custom: {
      op_dom = ensure_syntax(*decl.custom_dom);
      op_cod = ensure_syntax(*decl.custom_cod);
      const ObjectData& cod = cat_.object(op_cod);
      if (!cod.syntax.is_exponential() || cod.left != bool_)
        fail(ErrorCode::SemanticError,
             "custom operator codomain must be an exponential over B: " + cod.key());
      result_dom = cod.right;
      break;
    }
  }
  ensure_product(bdd, e2); // evaluation domain for objectified relations

  // objectify the operator and stage the two-step evaluation objects
  ObjId op_exp = ensure_exponential(op_cod, op_dom);
  ObjId staged = ensure_product(op_exp, op_dom);
  ObjId staged_full = ensure_product(staged, result_dom);
  ObjId staged_cod = ensure_product(op_cod, result_dom);
  staging_.insert(staged);
  staging_.insert(staged_full);
  // first-stage evaluation alongside the entity tuple
  MorId ev = evaluations_.at(op_exp);
  MorId idr = cat_.identity(result_dom);
  if (!cat_.product_map_of(ev, idr)) {
    MorId pm = cat_.add_structural(cat_.mor(ev).name + "×" + cat_.mor(idr).name, staged_full,
                                   staged_cod, Ctor::ProductMap, ev, idr);
    cat_.note_product_map(ev, idr, pm);
  }

  OperatorConfig cfg;
  cfg.kind = decl.kind;
  cfg.dom = op_dom;
  cfg.result_obj = op_cod;
  cfg.commutative = (decl.kind == HigherOrderKind::And1 || decl.kind == HigherOrderKind::And2) &&
                    spec_.options.and_commutative;

  std::vector<MorId> added;
  int arity = decl.kind == HigherOrderKind::And2 ? 4 : 2;
  if (decl.kind == HigherOrderKind::Custom) {
    // result tables are spelled as entity tuples; the result domain must be a
    // left-associated entity power
    arity = 1;
    ObjId walk = result_dom;
    while (cat_.object(walk).syntax.is_product() && cat_.object(walk).right == ent_) {
      ++arity;
      walk = cat_.object(walk).left;
    }
    if (walk != ent_ || arity < 2)
      fail(ErrorCode::SemanticError,
           "custom operator result domain must be an entity power: " +
               cat_.object(result_dom).key());
    ensure_entity_power(arity);
  }

  for (const auto& app : decl.applications) {
    MorId left = resolve_operand(app.left);
    MorId right = resolve_operand(app.right);
    std::vector<uint32_t> ext;
    if (decl.kind == HigherOrderKind::And1) {
      const auto& la = cat_.mor(left).ext;
      const auto& lb = cat_.mor(right).ext;
      ext.resize(la.size());
      for (size_t i = 0; i < la.size(); ++i)
        ext[i] = (la[i] == true_elem_ && lb[i] == true_elem_) ? true_elem_ : false_elem_;
      if (app.result_table) {
        std::vector<uint32_t> declared = relation_extension(2, *app.result_table);
        if (declared != ext)
          fail(ErrorCode::SemanticError,
               "declared table for " + app.result_name + " is not the pointwise conjunction");
      }
    } else if (decl.kind == HigherOrderKind::And2) {
      const ObjectData& quad = cat_.object(result_dom);
      const ObjectData& triple = cat_.object(entity_powers_.at(3));
      const ObjectData& pair = cat_.object(entity_powers_.at(2));
      const auto& la = cat_.mor(left).ext;
      const auto& lb = cat_.mor(right).ext;
      ext.resize(quad.elems.size());
      for (uint32_t q = 0; q < quad.elems.size(); ++q) {
        uint32_t tri = quad.elems[q].first;
        uint32_t e4 = quad.elems[q].second;
        uint32_t p12 = triple.elems.at(tri).first;
        uint32_t e3 = triple.elems.at(tri).second;
        uint32_t p34 = pair.pair_index.at({e3, e4});
        ext[q] = (la.at(p12) == true_elem_ && lb.at(p34) == true_elem_) ? true_elem_ : false_elem_;
      }
    } else {
      if (!app.result_table) fail(ErrorCode::MissingResultTable, app.result_name);
      ext = relation_extension(arity, *app.result_table);
    }
    MorId result = cat_.add_primitive(app.result_name, result_dom, bool_, std::move(ext));
    added.push_back(result);

    std::string ln = cat_.mor(left).name, rn = cat_.mor(right).name;
    if (cfg.commutative && rn < ln) std::swap(ln, rn);
    auto key = std::make_pair(ln, rn);
    auto it = cfg.declared.find(key);
    if (it != cfg.declared.end() && it->second != app.result_name)
      fail(ErrorCode::DuplicateName, "conflicting applications for (" + ln + ", " + rn + ")");
    cfg.declared[key] = app.result_name;
  }

  MorId op = cat_.add_primitive(decl.name, op_dom, op_cod, {});
  install_operator_hook(op, cfg);
  operators_.push_back({op, cfg});
  added.push_back(op);
  return added;
}

void DomainBuilder::install_operator_hook(MorId op, const OperatorConfig& cfg) {
  HigherOrderKind kind = cfg.kind;
  ObjId result_obj = cfg.result_obj;
  ObjId op_dom = cfg.dom;
  bool commutative = cfg.commutative;
  uint32_t t = true_elem_, f = false_elem_;
  auto declared = cfg.declared;
  cat_.set_extension_hook(op, [kind, result_obj, commutative, declared, t, f,
                               op_dom](const FiniteCategory& cat, ElemId pair_elem) -> uint32_t {
    const ObjectData& dom = cat.object(op_dom);
    const ObjectData& res = cat.object(result_obj);
    const Element& pe = dom.elems.at(pair_elem);
    const ObjectData& left_obj = cat.object(dom.left);
    const ObjectData& right_obj = cat.object(dom.right);
    std::string ln = left_obj.elems.at(pe.first).label;
    std::string rn = right_obj.elems.at(pe.second).label;
    if (commutative && rn < ln) std::swap(ln, rn);
    auto decl_it = declared.find({ln, rn});
    if (decl_it != declared.end()) {
      auto elem_it = res.elem_by_label.find(decl_it->second);
      if (elem_it != res.elem_by_label.end()) return elem_it->second;
    }
    std::vector<uint32_t> table;
    if (kind == HigherOrderKind::And1) {
      const auto& ta = left_obj.elems.at(pe.first).table;
      const auto& tb = right_obj.elems.at(pe.second).table;
      table.resize(ta.size());
      for (size_t i = 0; i < ta.size(); ++i)
        table[i] = (ta[i] == t && i < tb.size() && tb[i] == t) ? t : f;
    } else if (kind == HigherOrderKind::And2) {
      const ObjectData& quad = cat.object(res.right);
      const ObjectData& triple = cat.object(quad.left);
      const ObjectData& pair_obj = cat.object(triple.left);
      const auto& ta = left_obj.elems.at(pe.first).table;
      const auto& tb = right_obj.elems.at(pe.second).table;
      table.resize(quad.elems.size());
      for (uint32_t q = 0; q < quad.elems.size(); ++q) {
        uint32_t tri = quad.elems[q].first;
        uint32_t e4 = quad.elems[q].second;
        uint32_t p12 = triple.elems.at(tri).first;
        uint32_t e3 = triple.elems.at(tri).second;
        uint32_t p34 = pair_obj.pair_index.at({e3, e4});
        table[q] = (p12 < ta.size() && ta[p12] == t && p34 < tb.size() && tb[p34] == t) ? t : f;
      }
    } else {
      // causes/custom outside declared applications: the never-true relation
      table.assign(cat.object(res.right).elems.size(), f);
    }
    for (ElemId e = 0; e < res.elems.size(); ++e)
      if (res.elems[e].table == table) return e;
    return 0; // transient during enrichment; resolved before the category seals
  });
}

bool DomainBuilder::sync_products() {
  bool changed = false;
  for (ObjId o = 0; o < cat_.object_count(); ++o) {
    const ObjectData& obj = cat_.object(o);
    if (!obj.syntax.is_product()) continue;
    const auto& ex = cat_.object(obj.left).elems;
    const auto& ey = cat_.object(obj.right).elems;
    if (obj.elems.size() == ex.size() * ey.size()) continue;
    for (uint32_t a = 0; a < ex.size(); ++a)
      for (uint32_t b = 0; b < ey.size(); ++b) {
        if (cat_.object(o).pair_index.count({a, b})) continue;
        Element e{pair_label(ex[a].label, ey[b].label)};
        e.first = a;
        e.second = b;
        cat_.add_carrier_element(o, std::move(e));
        changed = true;
      }
  }
  return changed;
}

bool DomainBuilder::sync_exponential(ObjId exp) {
  bool changed = false;
  const ObjId base = cat_.object(exp).left;
  const ObjId exponent = cat_.object(exp).right;
  MorId eval = evaluations_.at(exp);

  // (a) every named function X -> Y is an element
  std::set<MorId> named;
  for (const Element& e : cat_.object(exp).elems)
    if (e.named_mor != npos32) named.insert(e.named_mor);
  for (MorId m : cat_.hom_raw(exponent, base)) {
    if (named.count(m)) continue;
    Element e{cat_.mor(m).name};
    e.named_mor = m;
    e.table = cat_.mor(m).ext;
    cat_.add_carrier_element(exp, std::move(e));
    changed = true;
  }
  // keep element tables in step with their morphisms (operator carriers grow)
  for (ElemId i = 0; i < cat_.object(exp).elems.size(); ++i) {
    const Element& e = cat_.object(exp).elems[i];
    if (e.named_mor != npos32 && e.table != cat_.mor(e.named_mor).ext) {
      cat_.update_element_table(exp, i, cat_.mor(e.named_mor).ext);
      changed = true;
    }
  }

  // (b) curried slices f(z, .) for every f : Z x X -> Y. Slices of the
  //     evaluation are the elements themselves; slices of canonical derived
  //     morphisms fold extensionally; slices of named primitives stay
  //     private to their parent so each primitive keeps its own currying.
  for (ObjId p = 0; p < cat_.object_count(); ++p) {
    const ObjectData& pobj = cat_.object(p);
    if (!pobj.syntax.is_product() || pobj.right != exponent) continue;
    ObjId zobj = pobj.left;
    bool staging = staging_.count(p) > 0;
    std::vector<MorId> parents = cat_.hom_raw(p, base);
    for (MorId parent : parents) {
      if (staging && parent != eval) continue;
      // the arena reallocates as slice elements are added; copy what we need
      const Kind parent_kind = cat_.mor(parent).kind;
      const std::string parent_name = cat_.mor(parent).name;
      const std::vector<uint32_t> parent_ext = cat_.mor(parent).ext;
      if (parent_kind == Kind::Element) continue;
      size_t zcount = cat_.object(zobj).elems.size();
      bool p_in_sync = cat_.object(p).elems.size() ==
                       zcount * cat_.object(exponent).elems.size();
      if (!p_in_sync || parent_ext.size() != cat_.object(p).elems.size()) {
        changed = true; // wait for the grown domain to settle
        continue;
      }
      bool is_eval_here = (parent == eval);
      for (ElemId z = 0; z < zcount; ++z) {
        if (cat_.object(exp).slice_index.count({parent, z})) continue;
        changed = true;
        if (is_eval_here) {
          cat_.map_slice(exp, parent, z, z);
          continue;
        }
        std::vector<uint32_t> table(cat_.object(exponent).elems.size());
        for (uint32_t xv = 0; xv < table.size(); ++xv)
          table[xv] = parent_ext.at(cat_.object(p).pair_index.at({z, xv}));
        bool shareable = parent_kind == Kind::Derived;
        if (shareable) {
          auto fold = cat_.object(exp).shared_table_index.find(table);
          if (fold != cat_.object(exp).shared_table_index.end()) {
            cat_.map_slice(exp, parent, z, fold->second);
            continue;
          }
          // named elements with the same table also absorb derived slices;
          // slices of primitives stay private to keep their currying distinct
          ElemId found = npos32;
          for (ElemId i = 0; i < cat_.object(exp).elems.size(); ++i) {
            const Element& cand = cat_.object(exp).elems[i];
            if (cand.named_mor != npos32 && cand.table == table) { found = i; break; }
          }
          if (found != npos32) {
            cat_.map_slice(exp, parent, z, found);
            cat_.note_shared_table(exp, table, found);
            continue;
          }
        }
        Element e{parent_name + "(" + cat_.object(zobj).elems[z].label + ",·)"};
        e.table = table;
        e.slice_parent = parent;
        e.slice_arg = z;
        ElemId target = cat_.add_carrier_element(exp, std::move(e));
        cat_.map_slice(exp, parent, z, target);
        if (shareable) cat_.note_shared_table(exp, table, target);
      }
    }
    // currying: lambda(f) : Z -> Y^X per parent, with eval o (lambda(f) x id) = f.
    // Deferred until the carrier and the evaluation domain are settled, so the
    // canonical-extension index sees the final lambda extensions.
    ObjId evdom = cat_.mor(eval).dom;
    bool settled = !changed &&
                   cat_.object(evdom).elems.size() ==
                       cat_.object(exp).elems.size() * cat_.object(exponent).elems.size();
    for (MorId parent : parents) {
      if (staging && parent != eval) continue;
      if (cat_.mor(parent).kind == Kind::Element || curried_.count(parent)) continue;
      if (!settled || cat_.mor(parent).ext.size() != cat_.object(p).elems.size()) {
        changed = true; // wait for the carrier to settle
        continue;
      }
      curried_.insert(parent);
      changed = true;
      if (parent == eval) {
        cat_.note_curry(parent, cat_.identity(exp)); // lambda(eval) = id
        continue;
      }
      const std::string parent_name = cat_.mor(parent).name;
      MorId lam = cat_.add_structural("lambda(" + parent_name + ")", zobj, exp, Ctor::Curry, parent);
      cat_.note_curry(parent, lam);
      MorId id_x = cat_.identity(exponent);
      MorId pmap = cat_.product_map_of(lam, id_x)
                       ? *cat_.product_map_of(lam, id_x)
                       : cat_.add_structural(cat_.mor(lam).name + "×" + cat_.mor(id_x).name, p,
                                             cat_.mor(eval).dom, Ctor::ProductMap, lam, id_x);
      cat_.note_product_map(lam, id_x, pmap);
      cat_.add_equation(eval, pmap, parent);
    }
  }
  return changed;
}

bool DomainBuilder::sync_operators() {
  bool changed = false;
  for (const auto& [op, cfg] : operators_) {
    const ObjectData& dom = cat_.object(cfg.dom);
    const ObjectData& res = cat_.object(cfg.result_obj);
    ObjId table_dom = res.right;
    size_t width = cat_.object(table_dom).elems.size();
    const ObjectData& lo = cat_.object(dom.left);
    const ObjectData& ro = cat_.object(dom.right);
    // deterministic order: first pair producing each missing table names it
    std::vector<std::pair<std::vector<uint32_t>, ElemId>> needed; // table, witness pair
    std::set<std::vector<uint32_t>> seen;
    for (ElemId pe = 0; pe < dom.elems.size(); ++pe) {
      const Element& e = dom.elems[pe];
      std::string ln = lo.elems.at(e.first).label;
      std::string rn = ro.elems.at(e.second).label;
      if (cfg.commutative && rn < ln) std::swap(ln, rn);
      if (cfg.declared.count({ln, rn})) continue;
      std::vector<uint32_t> table;
      if (cfg.kind == HigherOrderKind::And1) {
        const auto& ta = lo.elems.at(e.first).table;
        const auto& tb = ro.elems.at(e.second).table;
        if (ta.size() != width || tb.size() != width) continue;
        table.resize(width);
        for (size_t i = 0; i < width; ++i)
          table[i] = (ta[i] == true_elem_ && tb[i] == true_elem_) ? true_elem_ : false_elem_;
      } else if (cfg.kind == HigherOrderKind::And2) {
        const ObjectData& quad = cat_.object(table_dom);
        const ObjectData& triple = cat_.object(quad.left);
        const ObjectData& pair = cat_.object(triple.left);
        const auto& ta = lo.elems.at(e.first).table;
        const auto& tb = ro.elems.at(e.second).table;
        table.resize(width);
        for (uint32_t q = 0; q < width; ++q) {
          uint32_t tri = quad.elems[q].first;
          uint32_t e4 = quad.elems[q].second;
          uint32_t p12 = triple.elems.at(tri).first;
          uint32_t e3 = triple.elems.at(tri).second;
          uint32_t p34 = pair.pair_index.at({e3, e4});
          bool on = p12 < ta.size() && ta[p12] == true_elem_ && p34 < tb.size() &&
                    tb[p34] == true_elem_;
          table[q] = on ? true_elem_ : false_elem_;
        }
      } else {
        table.assign(width, false_elem_);
      }
      bool found = false;
      for (const Element& re : res.elems)
        if (re.table == table) { found = true; break; }
      if (!found && seen.insert(table).second) needed.push_back({table, pe});
    }
    for (const auto& [table, pe] : needed) {
      const Element& e = dom.elems.at(pe);
      bool constant_false = std::all_of(table.begin(), table.end(),
                                        [&](uint32_t v) { return v == false_elem_; });
      if (constant_false) {
        if (!cat_.find_mor(table_dom, bool_, "never")) {
          cat_.add_primitive("never", table_dom, bool_, std::vector<uint32_t>(table));
          changed = true;
        }
        continue;
      }
      std::string ln = lo.elems.at(e.first).label;
      std::string rn = ro.elems.at(e.second).label;
      if (cfg.commutative && rn < ln) std::swap(ln, rn);
      std::string name = "(" + ln + " " + cat_.mor(op).name + " " + rn + ")";
      if (cat_.find_mor(table_dom, bool_, name)) continue;
      MorId la = cat_.element_morphism(dom.left, e.first);
      MorId lb = cat_.element_morphism(dom.right, e.second);
      cat_.add_pointwise(name, table_dom, bool_, std::vector<uint32_t>(table), la, lb);
      changed = true;
    }
  }
  return changed;
}

bool DomainBuilder::enrich(FiniteCategory& cat) {
  (void)cat;
  bool changed = false;
  if (sync_products()) changed = true;
  for (ObjId exp : exponentials_)
    if (sync_exponential(exp)) changed = true;
  if (sync_operators()) changed = true;
  return changed;
}

void DomainBuilder::close(const ClosureLimits& limits) {
  cat_.close(limits, [this](FiniteCategory& c) { return enrich(c); });
}

void DomainBuilder::build_all() {
  build_base();
  int max_arity = 0;
  for (const auto& [name, rel] : spec_.relations) max_arity = std::max(max_arity, rel.arity);
  if (max_arity >= 2 || !spec_.higher_order.empty()) ensure_entity_power(std::max(max_arity, 2));
  for (const auto& [name, rel] : spec_.relations)
    add_relation(name, rel.arity, rel.true_tuples);
  for (const auto& decl : spec_.higher_order) add_higher_order(decl);
  close();
}

FiniteCategory build_base(const DomainSpec& spec) {
  DomainBuilder b(spec);
  b.build_base();
  b.close();
  return b.take();
}

FiniteCategory build_domain(const DomainSpec& spec) {
  DomainBuilder b(spec);
  b.build_all();
  return b.take();
}

} // namespace catana
