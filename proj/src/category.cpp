#include "catana/category.hpp"

#include <algorithm>
#include <cassert>

namespace catana {

int kind_rank(Kind k) {
  switch (k) {
    case Kind::Identity: return 0;
    case Kind::Element: return 1;
    case Kind::Primitive: return 2;
    case Kind::Derived: return 3;
  }
  return 4;
}

size_t Selection::mor_count() const {
  size_t n = 0;
  for (bool b : mors) n += b ? 1 : 0;
  return n;
}

ObjId FiniteCategory::add_object(const ObjectSyntax& syntax, std::vector<Element> elems,
                                 ObjId left, ObjId right) {
  if (object_by_key_.count(syntax.key()))
    fail(ErrorCode::DuplicateName, "object " + syntax.key());
  ObjId id = static_cast<ObjId>(objects_.size());
  ObjectData data(syntax);
  data.left = left;
  data.right = right;
  objects_.push_back(std::move(data));
  object_by_key_[syntax.key()] = id;
  identities_.resize(objects_.size(), npos32);
  for (auto& e : elems) add_carrier_element(id, std::move(e));
  return id;
}

ElemId FiniteCategory::add_carrier_element(ObjId obj, Element elem) {
  ObjectData& o = objects_.at(obj);
  if (o.elem_by_label.count(elem.label))
    fail(ErrorCode::DuplicateName, "element " + elem.label + " in " + o.key());
  ElemId id = static_cast<ElemId>(o.elems.size());
  o.elem_by_label[elem.label] = id;
  if (elem.first != npos32) o.pair_index[{elem.first, elem.second}] = id;
  o.elems.push_back(std::move(elem));
  // the unit object's sole morphism 1 -> 1 is its identity
  if (o.syntax.node() != ObjectSyntax::Node::Unit && unit().has_value())
    add_element_morphism(obj, id);
  return id;
}

void FiniteCategory::update_element_table(ObjId obj, ElemId elem, std::vector<uint32_t> table) {
  objects_.at(obj).elems.at(elem).table = std::move(table);
}

void FiniteCategory::map_slice(ObjId exp_obj, MorId parent, ElemId z, ElemId target) {
  objects_.at(exp_obj).slice_index[{parent, z}] = target;
}

MorId FiniteCategory::register_mor(Morphism m) {
  MorId id = static_cast<MorId>(mors_.size());
  auto key = std::make_tuple(m.dom, m.cod, m.name);
  if (mor_by_name_.count(key))
    fail(ErrorCode::DuplicateName, "morphism " + m.name + " in hom(" + objects_.at(m.dom).key() +
                                       ", " + objects_.at(m.cod).key() + ")");
  mor_by_name_[key] = id;
  homs_[{m.dom, m.cod}].push_back(id);
  if (m.ctor == Ctor::Projection1 && objects_.at(m.dom).proj1 == npos32)
    objects_.at(m.dom).proj1 = id;
  if (m.ctor == Ctor::Projection2 && objects_.at(m.dom).proj2 == npos32)
    objects_.at(m.dom).proj2 = id;
  // composite lookup prefers the first morphism carrying each extension;
  // primitives seed the index so composition paths reach them nominally
  if (m.kind == Kind::Derived || m.kind == Kind::Primitive)
    canonical_by_ext_.emplace(std::make_tuple(m.dom, m.cod, m.ext), id);
  if (m.ctor == Ctor::Curry) curry_by_parent_[m.part_a] = id;
  if (m.ctor == Ctor::ProductMap) product_maps_[{m.part_a, m.part_b}] = id;
  mors_.push_back(std::move(m));
  return id;
}

MorId FiniteCategory::add_identity(ObjId obj) {
  const ObjectData& o = objects_.at(obj);
  Morphism m;
  m.name = "id_" + o.key();
  m.dom = m.cod = obj;
  m.kind = Kind::Identity;
  m.ext.resize(o.elems.size());
  for (uint32_t i = 0; i < m.ext.size(); ++i) m.ext[i] = i;
  MorId id = register_mor(std::move(m));
  identities_.at(obj) = id;
  if (o.syntax.node() == ObjectSyntax::Node::Unit && !o.elems.empty())
    element_mors_[{obj, 0}] = id;
  return id;
}

MorId FiniteCategory::add_element_morphism(ObjId obj, ElemId elem) {
  auto it = element_mors_.find({obj, elem});
  if (it != element_mors_.end()) return it->second;
  Morphism m;
  m.name = objects_.at(obj).elems.at(elem).label;
  m.dom = unit_required();
  m.cod = obj;
  m.kind = Kind::Element;
  m.elem = elem;
  m.ext = {elem};
  MorId id = register_mor(std::move(m));
  element_mors_[{obj, elem}] = id;
  return id;
}

MorId FiniteCategory::add_primitive(const std::string& name, ObjId dom, ObjId cod,
                                    std::vector<uint32_t> ext) {
  if (find_mor(dom, cod, name))
    fail(ErrorCode::DuplicateName, "morphism " + name);
  Morphism m;
  m.name = name;
  m.dom = dom;
  m.cod = cod;
  m.kind = Kind::Primitive;
  m.ext = std::move(ext);
  return register_mor(std::move(m));
}

MorId FiniteCategory::add_structural(const std::string& name, ObjId dom, ObjId cod, Ctor ctor,
                                     MorId part_a, MorId part_b) {
  Morphism m;
  m.name = name;
  m.dom = dom;
  m.cod = cod;
  m.kind = Kind::Derived;
  m.ctor = ctor;
  m.part_a = part_a;
  m.part_b = part_b;
  mors_.push_back(m); // staged so recompute can see parts
  recompute_extension(static_cast<MorId>(mors_.size() - 1));
  Morphism staged = std::move(mors_.back());
  mors_.pop_back();
  auto canon = canonical_by_ext_.find({dom, cod, staged.ext});
  if (canon != canonical_by_ext_.end()) return canon->second;
  if (is_identity_ext(dom, cod, staged.ext)) return identity(dom);
  return register_mor(std::move(staged));
}

MorId FiniteCategory::add_pointwise(const std::string& name, ObjId dom, ObjId cod,
                                    std::vector<uint32_t> ext, MorId part_a, MorId part_b) {
  auto canon = canonical_by_ext_.find({dom, cod, ext});
  if (canon != canonical_by_ext_.end()) return canon->second;
  Morphism m;
  m.name = name;
  m.dom = dom;
  m.cod = cod;
  m.kind = Kind::Derived;
  m.ctor = Ctor::Pointwise;
  m.ext = std::move(ext);
  m.part_a = part_a;
  m.part_b = part_b;
  return register_mor(std::move(m));
}

void FiniteCategory::add_equation(MorId g, MorId f, MorId m) {
  auto key = std::make_pair(g, f);
  auto it = equations_.find(key);
  if (it != equations_.end() && it->second != m)
    fail(ErrorCode::Internal, "conflicting equation for " + mors_.at(g).name + " after " +
                                  mors_.at(f).name);
  equations_[key] = m;
}

void FiniteCategory::set_extension_hook(MorId m,
                                        std::function<uint32_t(const FiniteCategory&, ElemId)> hook) {
  ext_hooks_[m] = std::move(hook);
}

std::optional<ObjId> FiniteCategory::find_object(const std::string& key) const {
  auto it = object_by_key_.find(key);
  if (it == object_by_key_.end()) return std::nullopt;
  return it->second;
}

ObjId FiniteCategory::require_object(const std::string& key) const {
  auto o = find_object(key);
  if (!o) fail(ErrorCode::UnknownObject, key);
  return *o;
}

std::optional<MorId> FiniteCategory::find_mor(ObjId dom, ObjId cod, const std::string& name) const {
  auto it = mor_by_name_.find(std::make_tuple(dom, cod, name));
  if (it == mor_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FiniteCategory::find_mor_by_name(const std::string& name) const {
  std::optional<MorId> found;
  for (const auto& [key, id] : mor_by_name_) {
    if (std::get<2>(key) == name) {
      if (found) return std::nullopt; // ambiguous
      found = id;
    }
  }
  return found;
}

MorId FiniteCategory::identity(ObjId obj) const {
  MorId id = identities_.at(obj);
  if (id == npos32) fail(ErrorCode::MissingIdentity, objects_.at(obj).key());
  return id;
}

MorId FiniteCategory::element_morphism(ObjId obj, ElemId elem) const {
  auto it = element_mors_.find({obj, elem});
  if (it == element_mors_.end())
    fail(ErrorCode::UnknownMorphism,
         "element morphism for " + objects_.at(obj).elems.at(elem).label);
  return it->second;
}

std::optional<MorId> FiniteCategory::find_canonical_by_ext(ObjId dom, ObjId cod,
                                                         const std::vector<uint32_t>& ext) const {
  auto it = canonical_by_ext_.find({dom, cod, ext});
  if (it == canonical_by_ext_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FiniteCategory::curry_of(MorId parent) const {
  auto it = curry_by_parent_.find(parent);
  if (it == curry_by_parent_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FiniteCategory::product_map_of(MorId a, MorId b) const {
  auto it = product_maps_.find({a, b});
  if (it == product_maps_.end()) return std::nullopt;
  return it->second;
}

std::optional<ObjId> FiniteCategory::unit() const {
  auto it = object_by_key_.find("1");
  if (it == object_by_key_.end()) return std::nullopt;
  return it->second;
}

ObjId FiniteCategory::unit_required() const {
  auto u = unit();
  if (!u) fail(ErrorCode::UnknownObject, "unit object");
  return *u;
}

std::string FiniteCategory::describe(MorId m) const {
  const Morphism& mm = mors_.at(m);
  return mm.name + " : " + objects_.at(mm.dom).key() + " -> " + objects_.at(mm.cod).key();
}

std::vector<uint32_t> FiniteCategory::composed_ext(MorId g, MorId f) const {
  const std::vector<uint32_t>& ef = mors_.at(f).ext;
  const std::vector<uint32_t>& eg = mors_.at(g).ext;
  std::vector<uint32_t> out(ef.size());
  for (size_t i = 0; i < ef.size(); ++i) out[i] = eg.at(ef[i]);
  return out;
}

bool FiniteCategory::is_identity_ext(ObjId dom, ObjId cod,
                                     const std::vector<uint32_t>& ext) const {
  if (dom != cod) return false;
  for (uint32_t i = 0; i < ext.size(); ++i)
    if (ext[i] != i) return false;
  return ext.size() == objects_.at(dom).elems.size();
}

std::pair<MorId, MorId> pairing_parts_of(const FiniteCategory& cat, MorId p);

MorId FiniteCategory::pairing_impl(MorId a, MorId b, bool allow_create) {
  const Morphism& ma = mors_.at(a);
  const Morphism& mb = mors_.at(b);
  if (ma.dom != mb.dom)
    fail(ErrorCode::NonComposable, "pairing of morphisms with distinct domains");
  ObjectSyntax syn = ObjectSyntax::product(objects_.at(ma.cod).syntax, objects_.at(mb.cod).syntax);
  auto prod_found = find_object(syn.key());
  if (!prod_found) fail(ErrorCode::UnknownObject, "pairing target " + syn.key());
  ObjId prod = *prod_found;
  const ObjectData& pobj = objects_.at(prod);

  if (ma.kind == Kind::Element && mb.kind == Kind::Element)
    return element_morphism(prod, pobj.pair_index.at({ma.elem, mb.elem}));

  std::vector<uint32_t> ext(mors_.at(a).ext.size());
  for (uint32_t i = 0; i < ext.size(); ++i)
    ext[i] = pobj.pair_index.at({ma.ext.at(i), mb.ext.at(i)});
  if (is_identity_ext(ma.dom, prod, ext)) return identity(prod);
  auto canon = canonical_by_ext_.find({ma.dom, prod, ext});
  if (canon != canonical_by_ext_.end()) return canon->second;
  if (!allow_create)
    fail(ErrorCode::Internal,
         "pairing <" + ma.name + "," + mb.name + "> missing in closed category");

  Morphism m;
  m.dom = ma.dom;
  m.cod = prod;
  m.kind = Kind::Derived;
  m.part_a = a;
  m.part_b = b;
  m.ext = std::move(ext);
  if (ma.kind == Kind::Identity && mb.kind == Kind::Identity) {
    m.name = "delta";
    m.ctor = Ctor::Diagonal;
  } else if (ma.dom == prod && a == pobj.proj2 && b == pobj.proj1) {
    m.name = "sigma";
    m.ctor = Ctor::Swap;
  } else {
    m.name = "<" + ma.name + "," + mb.name + ">";
    m.ctor = Ctor::Pairing;
  }
  return register_mor(std::move(m));
}

MorId FiniteCategory::pairing_of(MorId a, MorId b) { return pairing_impl(a, b, true); }

MorId FiniteCategory::compose_impl(MorId g, MorId f, bool allow_create) {
  const Morphism& G = mors_.at(g);
  const Morphism& F = mors_.at(f);
  if (F.cod != G.dom) fail(ErrorCode::NonComposable, G.name + " after " + F.name);
  if (G.kind == Kind::Identity) return f;
  if (F.kind == Kind::Identity) return g;
  if (F.kind == Kind::Element) {
    uint32_t t = G.ext.at(F.elem);
    auto it = element_mors_.find({G.cod, t});
    if (it == element_mors_.end()) fail(ErrorCode::Internal, "collapse target missing");
    return it->second;
  }
  auto eq = equations_.find({g, f});
  if (eq != equations_.end()) return eq->second;

  std::vector<uint32_t> ext = composed_ext(g, f);
  if (is_identity_ext(F.dom, G.cod, ext)) return identity(F.dom);
  auto canon = canonical_by_ext_.find({F.dom, G.cod, ext});
  if (canon != canonical_by_ext_.end()) return canon->second;
  if (!allow_create)
    fail(ErrorCode::Internal,
         "category not closed under composition: " + G.name + " ∘ " + F.name);
  Morphism m;
  m.name = G.name + "∘" + F.name;
  m.dom = F.dom;
  m.cod = G.cod;
  m.kind = Kind::Derived;
  m.ctor = Ctor::Composite;
  m.part_a = g;
  m.part_b = f;
  m.ext = std::move(ext);
  if (mor_by_name_.count({m.dom, m.cod, m.name})) {
    // same factor names through different routes; qualify deterministically
    int n = 2;
    std::string base = m.name;
    while (mor_by_name_.count({m.dom, m.cod, m.name})) m.name = base + "#" + std::to_string(n++);
  }
  return register_mor(std::move(m));
}

MorId FiniteCategory::compose_mut(MorId g, MorId f) { return compose_impl(g, f, true); }

MorId FiniteCategory::compose(MorId g, MorId f) const {
  if (g >= mors_.size() || f >= mors_.size()) fail(ErrorCode::UnknownMorphism, "id out of range");
  // lookup-only: composition on a closed category creates nothing
  return const_cast<FiniteCategory*>(this)->compose_impl(g, f, false);
}

void FiniteCategory::close(const ClosureLimits& limits,
                           const std::function<bool(FiniteCategory&)>& enrich) {
  bool work = true;
  size_t mark = 0;
  while (work) {
    work = false;
    // enrichment first, to a fixpoint: carriers, slices and curried
    // morphisms settle before any composite is keyed by its extension
    if (enrich) {
      size_t guard = 0;
      while (enrich(*this)) {
        refresh_extensions();
        work = true;
        if (++guard > 1000) fail(ErrorCode::Internal, "enrichment did not stabilize");
      }
      refresh_extensions();
    }
    bool comp_changed = true;
    while (comp_changed) {
      comp_changed = false;
      size_t n = mors_.size();
      if (n > limits.max_morphisms) fail(ErrorCode::ClosureExploded, "morphism cap exceeded");
      std::map<ObjId, std::vector<MorId>> by_cod;
      std::vector<MorId> outers;
      for (MorId i = 0; i < n; ++i) {
        const Morphism& m = mors_[i];
        if (m.kind == Kind::Identity || m.kind == Kind::Element) continue;
        by_cod[m.cod].push_back(i);
        outers.push_back(i);
      }
      for (MorId g : outers) {
        auto it = by_cod.find(mors_[g].dom);
        if (it == by_cod.end()) continue;
        for (MorId f : it->second) {
          if (g < mark && f < mark) continue;
          size_t before = mors_.size();
          compose_mut(g, f);
          if (mors_.size() != before) {
            comp_changed = work = true;
            auto& hs = homs_[{mors_.back().dom, mors_.back().cod}];
            if (hs.size() > limits.max_hom_size)
              fail(ErrorCode::ClosureExploded,
                   "hom-set cap exceeded at hom(" + objects_.at(mors_.back().dom).key() + ", " +
                       objects_.at(mors_.back().cod).key() + ")");
          }
        }
      }
      mark = n;
    }
  }
  refresh_extensions();
  closed_ = true;
}

namespace {
// transiently-missing pairs settle by the end of enrichment
uint32_t lookup_pair(const ObjectData& obj, uint32_t a, uint32_t b) {
  auto it = obj.pair_index.find({a, b});
  return it != obj.pair_index.end() ? it->second : 0;
}
} // namespace

void FiniteCategory::recompute_extension(MorId id) {
  Morphism& m = mors_.at(id);
  const ObjectData& dom = objects_.at(m.dom);
  const ObjectData& cod = objects_.at(m.cod);
  size_t n = dom.elems.size();
  switch (m.ctor) {
    case Ctor::None: {
      if (m.kind == Kind::Identity) {
        m.ext.resize(n);
        for (uint32_t i = 0; i < n; ++i) m.ext[i] = i;
      } else if (m.kind == Kind::Element) {
        m.ext = {m.elem};
      } else {
        auto hook = ext_hooks_.find(id);
        if (hook != ext_hooks_.end()) {
          m.ext.resize(n);
          for (uint32_t i = 0; i < n; ++i) m.ext[i] = hook->second(*this, i);
        }
      }
      break;
    }
    case Ctor::Pointwise: // fixed table computed at creation
      break;
    case Ctor::Projection1:
    case Ctor::Projection2: {
      m.ext.resize(n);
      for (uint32_t i = 0; i < n; ++i)
        m.ext[i] = m.ctor == Ctor::Projection1 ? dom.elems[i].first : dom.elems[i].second;
      break;
    }
    case Ctor::Diagonal: {
      m.ext.resize(n);
      for (uint32_t i = 0; i < n; ++i) m.ext[i] = lookup_pair(cod, i, i);
      break;
    }
    case Ctor::Swap: {
      m.ext.resize(n);
      for (uint32_t i = 0; i < n; ++i)
        m.ext[i] = lookup_pair(cod, dom.elems[i].second, dom.elems[i].first);
      break;
    }
    case Ctor::Pairing: {
      const auto& fa = mors_.at(m.part_a).ext;
      const auto& fb = mors_.at(m.part_b).ext;
      m.ext.resize(n);
      for (uint32_t i = 0; i < n; ++i)
        m.ext[i] = (i < fa.size() && i < fb.size()) ? lookup_pair(cod, fa[i], fb[i]) : 0;
      break;
    }
    case Ctor::ProductMap: {
      const auto& fa = mors_.at(m.part_a).ext;
      const auto& fb = mors_.at(m.part_b).ext;
      m.ext.resize(n);
      for (uint32_t i = 0; i < n; ++i) {
        uint32_t a = dom.elems[i].first, b = dom.elems[i].second;
        m.ext[i] = (a < fa.size() && b < fb.size()) ? lookup_pair(cod, fa[a], fb[b]) : 0;
      }
      break;
    }
    case Ctor::Evaluation: {
      // dom = Y^X x X; element (fn, x) evaluates fn's table at x
      const ObjectData& expo = objects_.at(dom.left);
      m.ext.resize(n);
      for (uint32_t i = 0; i < n; ++i) {
        const auto& table = expo.elems.at(dom.elems[i].first).table;
        uint32_t x = dom.elems[i].second;
        m.ext[i] = x < table.size() ? table[x] : 0; // settled by enrichment
      }
      break;
    }
    case Ctor::Curry: {
      m.ext.resize(n);
      for (uint32_t i = 0; i < n; ++i) {
        auto it = cod.slice_index.find({m.part_a, i});
        m.ext[i] = it != cod.slice_index.end() ? it->second : 0; // settled by enrichment
      }
      break;
    }
    case Ctor::Composite: {
      const auto& inner = mors_.at(m.part_b).ext;
      const auto& outer = mors_.at(m.part_a).ext;
      m.ext.resize(inner.size());
      for (size_t i = 0; i < inner.size(); ++i) m.ext[i] = outer.at(inner[i]);
      break;
    }
  }
}

void FiniteCategory::refresh_extensions() {
  auto recomputable = [&](MorId id) {
    const Morphism& m = mors_[id];
    if (m.kind == Kind::Identity) return true; // identity grows with its carrier
    if (m.kind != Kind::Derived) return m.kind == Kind::Primitive && ext_hooks_.count(id) > 0;
    return m.ctor != Ctor::Pointwise;
  };
  bool stable = false;
  for (int round = 0; round < 64 && !stable; ++round) {
    stable = true;
    for (MorId i = 0; i < mors_.size(); ++i) {
      if (!recomputable(i)) continue;
      std::vector<uint32_t> before = mors_[i].ext;
      recompute_extension(i);
      if (mors_[i].ext != before) stable = false;
    }
  }
  if (!stable) fail(ErrorCode::Internal, "extension refresh did not stabilize");
  // re-key canonical representatives on the settled extensions; growth is
  // append-only, so distinct derived morphisms never truly converge
  canonical_by_ext_.clear();
  for (MorId i = 0; i < mors_.size(); ++i) {
    if (mors_[i].kind != Kind::Derived) continue;
    auto [it, fresh] =
        canonical_by_ext_.emplace(std::make_tuple(mors_[i].dom, mors_[i].cod, mors_[i].ext), i);
    if (!fresh && it->second != i)
      fail(ErrorCode::Internal,
           "derived canonicity collision: " + describe(i) + " vs " + describe(it->second));
  }
}

std::vector<MorId> FiniteCategory::hom(ObjId x, ObjId y) const {
  std::vector<MorId> out = hom_raw(x, y);
  std::sort(out.begin(), out.end(), [&](MorId a, MorId b) {
    const Morphism& ma = mors_.at(a);
    const Morphism& mb = mors_.at(b);
    int ra = kind_rank(ma.kind), rb = kind_rank(mb.kind);
    if (ra != rb) return ra < rb;
    return ma.name < mb.name;
  });
  return out;
}

const std::vector<MorId>& FiniteCategory::hom_raw(ObjId x, ObjId y) const {
  static const std::vector<MorId> empty;
  if (x >= objects_.size() || y >= objects_.size())
    fail(ErrorCode::UnknownObject, "hom endpoint out of range");
  auto it = homs_.find({x, y});
  return it == homs_.end() ? empty : it->second;
}

std::vector<std::pair<ObjId, ObjId>> FiniteCategory::nonempty_homs() const {
  std::vector<std::pair<ObjId, ObjId>> out;
  for (const auto& [key, list] : homs_)
    if (!list.empty()) out.push_back(key);
  return out;
}

std::vector<ObjId> FiniteCategory::object_ids() const {
  std::vector<ObjId> out;
  out.reserve(objects_.size());
  for (const auto& [key, id] : object_by_key_) out.push_back(id);
  return out;
}

Selection FiniteCategory::full_selection() const {
  Selection sel;
  for (ObjId o = 0; o < objects_.size(); ++o) sel.objects.insert(o);
  sel.mors.assign(mors_.size(), true);
  return sel;
}

Selection FiniteCategory::exclude_morphisms(const std::vector<MorId>& seeds) const {
  Selection sel = full_selection();
  for (MorId s : seeds) sel.mors.at(s) = false;

  auto structural_pass = [&]() {
    bool changed = false;
    for (MorId i = 0; i < mors_.size(); ++i) {
      if (!sel.mors[i]) continue;
      const Morphism& m = mors_[i];
      bool drop = false;
      switch (m.ctor) {
        case Ctor::Composite:
        case Ctor::Pairing:
        case Ctor::ProductMap:
        case Ctor::Pointwise:
          drop = !sel.mors[m.part_a] || !sel.mors[m.part_b];
          break;
        case Ctor::Curry:
          drop = !sel.mors[m.part_a];
          break;
        default:
          if (m.kind == Kind::Element) drop = !sel.has_elem(m.cod, m.elem);
          break;
      }
      if (drop) {
        sel.mors[i] = false;
        changed = true;
      }
    }
    for (ObjId o = 0; o < objects_.size(); ++o) {
      const ObjectData& obj = objects_[o];
      for (ElemId e = 0; e < obj.elems.size(); ++e) {
        if (!sel.has_elem(o, e)) continue;
        const Element& el = obj.elems[e];
        bool drop = false;
        if (el.named_mor != npos32 && !sel.mors[el.named_mor]) drop = true;
        if (!drop && el.slice_parent != npos32) {
          if (!sel.mors[el.slice_parent]) drop = true;
          else {
            ObjId zobj = objects_.at(mors_.at(el.slice_parent).dom).left;
            if (zobj != npos32 && !sel.has_elem(zobj, el.slice_arg)) drop = true;
          }
        }
        if (!drop && el.first != npos32 &&
            (!sel.has_elem(obj.left, el.first) || !sel.has_elem(obj.right, el.second)))
          drop = true;
        if (drop) {
          sel.excluded_elems[o].insert(e);
          changed = true;
        }
      }
    }
    return changed;
  };

  // drop everything structurally built on the seeds, then put back any
  // composite still derivable from two surviving morphisms
  while (structural_pass()) {}
  bool grew = true;
  while (grew) {
    grew = false;
    std::map<ObjId, std::vector<MorId>> by_cod;
    std::vector<MorId> gens;
    for (MorId i = 0; i < mors_.size(); ++i) {
      if (!sel.mors[i]) continue;
      if (mors_[i].kind == Kind::Identity || mors_[i].kind == Kind::Element) continue;
      by_cod[mors_[i].cod].push_back(i);
      gens.push_back(i);
    }
    for (MorId g : gens) {
      auto it = by_cod.find(mors_[g].dom);
      if (it == by_cod.end()) continue;
      for (MorId f : it->second) {
        MorId c = compose(g, f);
        bool seed = false;
        for (MorId s : seeds)
          if (s == c) seed = true;
        if (!seed && !sel.mors[c] && mors_[c].kind == Kind::Derived) {
          sel.mors[c] = true;
          grew = true;
        }
      }
    }
  }
  return sel;
}

Selection FiniteCategory::subcategory(const Selection& sel) const {
  for (ObjId o : sel.objects) {
    MorId id = identities_.at(o);
    if (id == npos32 || !sel.has_mor(id))
      fail(ErrorCode::MissingIdentity, objects_.at(o).key());
  }
  std::vector<std::string> witnesses;
  std::map<ObjId, std::vector<MorId>> by_cod;
  std::vector<MorId> members;
  for (MorId i = 0; i < mors_.size() && i < sel.mors.size(); ++i) {
    if (!sel.mors[i]) continue;
    if (!sel.has_obj(mors_[i].dom) || !sel.has_obj(mors_[i].cod))
      fail(ErrorCode::UnknownObject, "selected morphism with unselected endpoint: " + describe(i));
    if (mors_[i].kind == Kind::Element || mors_[i].kind == Kind::Identity) continue;
    by_cod[mors_[i].cod].push_back(i);
    members.push_back(i);
  }
  for (MorId g : members) {
    auto it = by_cod.find(mors_[g].dom);
    if (it == by_cod.end()) continue;
    for (MorId f : it->second) {
      MorId c = compose(g, f);
      if (!sel.has_mor(c)) {
        witnesses.push_back(mors_[g].name + " ∘ " + mors_[f].name);
        if (witnesses.size() >= 5) break;
      }
    }
    if (witnesses.size() >= 5) break;
  }
  if (!witnesses.empty()) {
    std::string msg = "selection not closed under composition:";
    for (const auto& w : witnesses) msg += " " + w + ";";
    fail(ErrorCode::NotClosed, msg);
  }
  return sel;
}

ValidationReport FiniteCategory::validate(const Selection* selp, bool check_unit_cardinality) const {
  ValidationReport report;
  Selection all;
  const Selection& sel = selp ? *selp : (all = full_selection());
  auto selected = [&](MorId m) { return sel.has_mor(m); };

  for (ObjId o : sel.objects) {
    MorId id = (o < identities_.size()) ? identities_[o] : npos32;
    if (id == npos32 || !selected(id))
      report.violations.push_back({ViolationKind::MissingIdentity,
                                   "MissingIdentity(" + objects_.at(o).key() + ")"});
  }

  // extension totality within the selection
  for (MorId i = 0; i < mors_.size(); ++i) {
    if (!selected(i)) continue;
    const Morphism& m = mors_[i];
    const ObjectData& dom = objects_.at(m.dom);
    if (m.ext.size() != dom.elems.size()) {
      report.violations.push_back({ViolationKind::NonTotalExtension,
                                   "NonTotalExtension(" + m.name + ")"});
      continue;
    }
    for (ElemId e = 0; e < dom.elems.size(); ++e) {
      if (!sel.has_elem(m.dom, e)) continue;
      uint32_t v = m.ext[e];
      if (v >= objects_.at(m.cod).elems.size() || !sel.has_elem(m.cod, v)) {
        report.violations.push_back(
            {ViolationKind::NonTotalExtension,
             "NonTotalExtension(" + m.name + " at " + dom.elems[e].label + ")"});
        break;
      }
    }
  }

  if (check_unit_cardinality && unit()) {
    ObjId u = *unit();
    if (sel.has_obj(u)) {
      for (ObjId o : sel.objects) {
        size_t elems = 0;
        const ObjectData& obj = objects_.at(o);
        for (ElemId e = 0; e < obj.elems.size(); ++e)
          if (sel.has_elem(o, e)) ++elems;
        size_t arrows = 0;
        for (MorId m : hom_raw(u, o))
          if (selected(m)) ++arrows;
        if (arrows != elems)
          report.violations.push_back(
              {ViolationKind::UnitCardinalityMismatch,
               "UnitCardinalityMismatch(" + obj.key() + "): |Mor(1,X)| = " + std::to_string(arrows) +
                   ", |X| = " + std::to_string(elems)});
      }
    }
  }

  std::map<ObjId, std::vector<MorId>> gen_by_cod, gen_by_dom;
  std::vector<MorId> gens;
  std::map<ObjId, std::vector<MorId>> elems_by_cod;
  for (MorId i = 0; i < mors_.size(); ++i) {
    if (!selected(i)) continue;
    const Morphism& m = mors_[i];
    if (m.kind == Kind::Element) {
      elems_by_cod[m.cod].push_back(i);
      continue;
    }
    if (m.kind == Kind::Identity) continue;
    gens.push_back(i);
    gen_by_cod[m.cod].push_back(i);
    gen_by_dom[m.dom].push_back(i);
  }

  std::map<std::pair<MorId, MorId>, MorId> memo;
  size_t missing = 0;
  auto comp = [&](MorId g, MorId f) -> std::optional<MorId> {
    auto key = std::make_pair(g, f);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    try {
      MorId r = compose(g, f);
      memo[key] = r;
      return r;
    } catch (const EngineError&) {
      if (missing++ < 10)
        report.violations.push_back({ViolationKind::MissingComposite,
                                     "MissingComposite(" + mors_.at(g).name + " ∘ " +
                                         mors_.at(f).name + ")"});
      return std::nullopt;
    }
  };

  for (MorId f : gens) {
    const Morphism& m = mors_.at(f);
    MorId idc = identities_.at(m.cod), idd = identities_.at(m.dom);
    if (idc == npos32 || idd == npos32) continue;
    auto l = comp(idc, f);
    auto r = comp(f, idd);
    if (l && *l != f)
      report.violations.push_back({ViolationKind::IdentityLaw, "id ∘ " + m.name + " != " + m.name});
    if (r && *r != f)
      report.violations.push_back({ViolationKind::IdentityLaw, m.name + " ∘ id != " + m.name});
  }

  size_t closure_reports = 0;
  for (MorId g : gens) {
    auto check_pair = [&](MorId f) {
      auto c = comp(g, f);
      if (c && !selected(*c) && closure_reports++ < 10)
        report.violations.push_back(
            {ViolationKind::NotClosed, "composite not selected: " + mors_.at(*c).name});
    };
    auto it = gen_by_cod.find(mors_[g].dom);
    if (it != gen_by_cod.end())
      for (MorId f : it->second) check_pair(f);
    auto ie = elems_by_cod.find(mors_[g].dom);
    if (ie != elems_by_cod.end())
      for (MorId f : ie->second) check_pair(f);
  }

  size_t assoc_reports = 0;
  auto check_triple = [&](MorId h, MorId g, MorId f) {
    auto gf = comp(g, f);
    auto hg = comp(h, g);
    if (!gf || !hg) return;
    auto l = comp(h, *gf);
    auto r = comp(*hg, f);
    if (l && r && *l != *r && assoc_reports++ < 10)
      report.violations.push_back(
          {ViolationKind::Associativity,
           "associativity: " + mors_.at(h).name + " ∘ " + mors_.at(g).name + " ∘ " +
               mors_.at(f).name + " -> " + mors_.at(*l).name + " vs " + mors_.at(*r).name});
  };
  for (MorId g : gens) {
    auto hs = gen_by_dom.find(mors_[g].cod);
    if (hs == gen_by_dom.end()) continue;
    auto fs = gen_by_cod.find(mors_[g].dom);
    if (fs != gen_by_cod.end())
      for (MorId f : fs->second)
        for (MorId h : hs->second) check_triple(h, g, f);
    auto fe = elems_by_cod.find(mors_[g].dom);
    if (fe != elems_by_cod.end())
      for (MorId f : fe->second)
        for (MorId h : hs->second) check_triple(h, g, f);
  }
  return report;
}

} // namespace catana
