#include "subdiv/fincat.hpp"

#include <algorithm>
#include <numeric>

namespace subdiv {

namespace {

std::string describe_morphism(MorphismId m) { return "m" + std::to_string(m); }

}  // namespace

FinCategory::FinCategory(ObjectId n_objects, std::vector<Arrow> arrows,
                         const std::vector<std::array<MorphismId, 3>>& compositions)
    : n_objects_(n_objects), arrows_(std::move(arrows)) {
  const MorphismId m = morphism_count();
  if (m < n_objects_)
    throw CategoryInvalid("fewer morphisms than objects; identities missing");
  for (ObjectId o = 0; o < n_objects_; ++o)
    if (arrows_[o].dom != o || arrows_[o].cod != o)
      throw CategoryInvalid("morphism " + std::to_string(o) +
                            " must be the identity of object " + std::to_string(o));
  for (const Arrow& a : arrows_)
    if (a.dom >= n_objects_ || a.cod >= n_objects_)
      throw CategoryInvalid("arrow endpoint out of range");

  table_.assign(static_cast<std::size_t>(m) * m, kNoMorphism);
  auto cell = [&](MorphismId g, MorphismId f) -> MorphismId& {
    return table_[static_cast<std::size_t>(g) * m + f];
  };

  // Identity compositions are forced by the axioms.
  for (MorphismId f = 0; f < m; ++f) {
    cell(identity(cod(f)), f) = f;
    cell(f, identity(dom(f))) = f;
  }

  for (const auto& t : compositions) {
    MorphismId g = t[0], f = t[1], gf = t[2];
    if (g >= m || f >= m || gf >= m)
      throw CategoryInvalid("composition entry out of range");
    if (!composable(g, f))
      throw CategoryInvalid("composition listed for non-composable pair " +
                            describe_morphism(g) + ", " + describe_morphism(f));
    if (dom(gf) != dom(f) || cod(gf) != cod(g))
      throw CategoryInvalid("composite has wrong endpoints for " +
                            describe_morphism(g) + " after " + describe_morphism(f));
    MorphismId& c = cell(g, f);
    if (c != kNoMorphism && c != gf)
      throw CategoryInvalid("conflicting composition entries for " +
                            describe_morphism(g) + " after " + describe_morphism(f));
    c = gf;
  }

  for (MorphismId g = 0; g < m; ++g)
    for (MorphismId f = 0; f < m; ++f)
      if (composable(g, f) && cell(g, f) == kNoMorphism)
        throw CategoryInvalid("composable pair " + describe_morphism(g) + ", " +
                              describe_morphism(f) + " has no composite");

  out_.resize(n_objects_);
  in_.resize(n_objects_);
  for (MorphismId f = 0; f < m; ++f) {
    out_[dom(f)].push_back(f);
    in_[cod(f)].push_back(f);
  }
  hom_size_.assign(static_cast<std::size_t>(n_objects_) * n_objects_, 0);
  for (MorphismId f = 0; f < m; ++f)
    ++hom_size_[static_cast<std::size_t>(dom(f)) * n_objects_ + cod(f)];
}

MorphismId FinCategory::compose(MorphismId g, MorphismId f) const {
  MorphismId r = try_compose(g, f);
  if (r == kNoMorphism)
    throw CategoryInvalid("compose called on non-composable pair " +
                          describe_morphism(g) + ", " + describe_morphism(f));
  return r;
}

MorphismId FinCategory::try_compose(MorphismId g, MorphismId f) const {
  return table_[static_cast<std::size_t>(g) * morphism_count() + f];
}

std::vector<MorphismId> FinCategory::hom(ObjectId x, ObjectId y) const {
  std::vector<MorphismId> r;
  for (MorphismId f : out_[x])
    if (cod(f) == y) r.push_back(f);
  return r;
}

bool FinCategory::operator==(const FinCategory& other) const {
  return n_objects_ == other.n_objects_ && arrows_ == other.arrows_ &&
         table_ == other.table_;
}

void validate_category(const FinCategory& c) {
  const MorphismId m = c.morphism_count();
  for (MorphismId f = 0; f < m; ++f) {
    if (c.compose(c.identity(c.cod(f)), f) != f || c.compose(f, c.identity(c.dom(f))) != f)
      throw CategoryInvalid("identity law fails at " + describe_morphism(f));
  }
  for (MorphismId f = 0; f < m; ++f) {
    for (MorphismId g : c.morphisms_from(c.cod(f))) {
      MorphismId gf = c.compose(g, f);
      if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
        throw CategoryInvalid("composite endpoints wrong at " + describe_morphism(g) +
                              ", " + describe_morphism(f));
      for (MorphismId h : c.morphisms_from(c.cod(g))) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          throw CategoryInvalid("associativity fails at " + describe_morphism(h) + ", " +
                                describe_morphism(g) + ", " + describe_morphism(f));
      }
    }
  }
}

FinGroupoid::FinGroupoid(FinCategory c) : cat_(std::move(c)) {
  const MorphismId m = cat_.morphism_count();
  inv_.assign(m, kNoMorphism);
  for (MorphismId f = 0; f < m; ++f) {
    for (MorphismId g : cat_.morphisms_from(cat_.cod(f))) {
      if (cat_.cod(g) != cat_.dom(f)) continue;
      if (cat_.compose(g, f) == cat_.identity(cat_.dom(f)) &&
          cat_.compose(f, g) == cat_.identity(cat_.cod(f))) {
        inv_[f] = g;
        break;
      }
    }
    if (inv_[f] == kNoMorphism)
      throw NotAGroupoid(f, "morphism " + describe_morphism(f) + " has no two-sided inverse");
  }
}

FinGroupoid as_groupoid(const FinCategory& c) { return FinGroupoid(c); }

FinCategory opposite(const FinCategory& c) {
  std::vector<Arrow> arrows;
  arrows.reserve(c.morphism_count());
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    arrows.push_back({c.cod(f), c.dom(f)});
  std::vector<std::array<MorphismId, 3>> comps;
  for (MorphismId g = 0; g < c.morphism_count(); ++g) {
    if (c.is_identity(g)) continue;
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f)) continue;
      if (c.composable(f, g)) comps.push_back({g, f, c.compose(f, g)});
    }
  }
  return FinCategory(c.object_count(), std::move(arrows), comps);
}

Coproduct coproduct(const std::vector<const FinCategory*>& parts) {
  ObjectId n_objects = 0;
  MorphismId n_nonid = 0;
  for (const FinCategory* p : parts) {
    n_objects += p->object_count();
    n_nonid += p->morphism_count() - p->object_count();
  }

  Coproduct r{FinCategory(0, {}, {}), {}, {}};
  std::vector<Arrow> arrows(n_objects + n_nonid);
  r.object_map.resize(parts.size());
  r.morphism_map.resize(parts.size());

  ObjectId obj_base = 0;
  MorphismId nonid_base = n_objects;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const FinCategory& c = *parts[p];
    r.object_map[p].resize(c.object_count());
    r.morphism_map[p].resize(c.morphism_count());
    for (ObjectId o = 0; o < c.object_count(); ++o) {
      r.object_map[p][o] = obj_base + o;
      r.morphism_map[p][o] = obj_base + o;
      arrows[obj_base + o] = {obj_base + o, obj_base + o};
    }
    for (MorphismId f = c.object_count(); f < c.morphism_count(); ++f) {
      MorphismId global = nonid_base + (f - c.object_count());
      r.morphism_map[p][f] = global;
      arrows[global] = {obj_base + c.dom(f), obj_base + c.cod(f)};
    }
    obj_base += c.object_count();
    nonid_base += c.morphism_count() - c.object_count();
  }

  std::vector<std::array<MorphismId, 3>> comps;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const FinCategory& c = *parts[p];
    for (MorphismId g = c.object_count(); g < c.morphism_count(); ++g)
      for (MorphismId f = c.object_count(); f < c.morphism_count(); ++f)
        if (c.composable(g, f))
          comps.push_back({r.morphism_map[p][g], r.morphism_map[p][f],
                           r.morphism_map[p][c.compose(g, f)]});
  }
  r.cat = FinCategory(n_objects, std::move(arrows), comps);
  return r;
}

Components connected_components(const FinCategory& c) {
  std::vector<ObjectId> parent(c.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ObjectId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    ObjectId a = find(c.dom(f)), b = find(c.cod(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  Components r;
  r.object_component.assign(c.object_count(), -1);
  for (ObjectId o = 0; o < c.object_count(); ++o) {
    ObjectId root = find(o);
    if (r.object_component[root] < 0) {
      r.object_component[root] = static_cast<int>(r.members.size());
      r.members.emplace_back();
    }
    r.object_component[o] = r.object_component[root];
    r.members[static_cast<std::size_t>(r.object_component[o])].push_back(o);
  }
  return r;
}

void check_functor(const FinCategory& dom, const FinCategory& cod, const Functor& f) {
  if (f.objects.size() != dom.object_count() ||
      f.morphisms.size() != dom.morphism_count())
    throw CategoryInvalid("functor map sizes do not match the source category");
  for (ObjectId o : f.objects)
    if (o >= cod.object_count()) throw CategoryInvalid("functor object image out of range");
  for (MorphismId m : f.morphisms)
    if (m >= cod.morphism_count())
      throw CategoryInvalid("functor morphism image out of range");
  for (ObjectId o = 0; o < dom.object_count(); ++o)
    if (f.morphisms[dom.identity(o)] != cod.identity(f.objects[o]))
      throw CategoryInvalid("functor does not preserve the identity of object " +
                            std::to_string(o));
  for (MorphismId m = 0; m < dom.morphism_count(); ++m) {
    if (cod.dom(f.morphisms[m]) != f.objects[dom.dom(m)] ||
        cod.cod(f.morphisms[m]) != f.objects[dom.cod(m)])
      throw CategoryInvalid("functor breaks endpoints at " + describe_morphism(m));
  }
  for (MorphismId a = 0; a < dom.morphism_count(); ++a)
    for (MorphismId b : dom.morphisms_from(dom.cod(a)))
      if (cod.compose(f.morphisms[b], f.morphisms[a]) != f.morphisms[dom.compose(b, a)])
        throw CategoryInvalid("functor breaks composition at " + describe_morphism(b) +
                              ", " + describe_morphism(a));
}

bool is_functor(const FinCategory& dom, const FinCategory& cod, const Functor& f) {
  try {
    check_functor(dom, cod, f);
    return true;
  } catch (const CategoryInvalid&) {
    return false;
  }
}

bool is_isomorphism(const FinCategory& dom, const FinCategory& cod, const Functor& f) {
  if (!is_functor(dom, cod, f)) return false;
  if (dom.object_count() != cod.object_count() ||
      dom.morphism_count() != cod.morphism_count())
    return false;
  std::vector<bool> seen_obj(cod.object_count(), false);
  for (ObjectId o : f.objects) {
    if (seen_obj[o]) return false;
    seen_obj[o] = true;
  }
  std::vector<bool> seen_mor(cod.morphism_count(), false);
  for (MorphismId m : f.morphisms) {
    if (seen_mor[m]) return false;
    seen_mor[m] = true;
  }
  return true;
}

Functor identity_functor(const FinCategory& c) {
  Functor f;
  f.objects.resize(c.object_count());
  f.morphisms.resize(c.morphism_count());
  std::iota(f.objects.begin(), f.objects.end(), 0);
  std::iota(f.morphisms.begin(), f.morphisms.end(), 0);
  return f;
}

Functor compose(const Functor& outer, const Functor& inner) {
  Functor f;
  f.objects.reserve(inner.objects.size());
  f.morphisms.reserve(inner.morphisms.size());
  for (ObjectId o : inner.objects) f.objects.push_back(outer.objects[o]);
  for (MorphismId m : inner.morphisms) f.morphisms.push_back(outer.morphisms[m]);
  return f;
}

}  // namespace subdiv
