#include "subdiv/reconstruct.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace subdiv {

GraphMap extract_psi(const SdCategory& sd_g, const SdCategory& sd_h,
                     const Functor& big) {
  const FinCategory& g = sd_g.base();
  const FinCategory& h = sd_h.base();
  if (big.objects.size() != sd_g.category().object_count() ||
      big.morphisms.size() != sd_g.category().morphism_count())
    throw NotAnIsomorphism("map size does not match the subdivision");

  GraphMap psi;
  psi.objects.assign(g.object_count(), kNoObject);
  psi.morphisms.assign(g.morphism_count(), kNoMorphism);

  for (ObjectId o = 0; o < g.object_count(); ++o) {
    const ObjectId image = big.objects[sd_g.object_of(object_simplex(o))];
    if (image >= sd_h.category().object_count())
      throw NotAnIsomorphism("object image out of range");
    const Simplex& s = sd_h.simplex(image);
    if (s.dim() != 0)
      throw NotAnIsomorphism("a vertex simplex maps to a higher simplex");
    psi.objects[o] = s.base;
  }
  for (ObjectId o = 0; o < g.object_count(); ++o)
    psi.morphisms[g.identity(o)] = h.identity(psi.objects[o]);

  for (MorphismId m = g.object_count(); m < g.morphism_count(); ++m) {
    const ObjectId image = big.objects[sd_g.object_of(chain_simplex(g, {m}))];
    if (image >= sd_h.category().object_count())
      throw NotAnIsomorphism("object image out of range");
    const Simplex& s = sd_h.simplex(image);
    if (s.dim() != 1)
      throw NotAnIsomorphism("an edge simplex does not map to an edge simplex");
    const MorphismId mh = s.chain[0];
    const std::pair<ObjectId, ObjectId> se =
        std::minmax(psi.objects[g.dom(m)], psi.objects[g.cod(m)]);
    const std::pair<ObjectId, ObjectId> te = std::minmax(h.dom(mh), h.cod(mh));
    if (se != te)
      throw NotAnIsomorphism("edge image does not join the image endpoints");
    psi.morphisms[m] = mh;
  }
  return psi;
}

namespace {

// Exhaustive composition test over the endomorphisms of one object;
// flip swaps the factor order on the target side.
bool vertex_map_respects_products(const FinCategory& g, const FinCategory& h,
                                  const GraphMap& psi, ObjectId at, bool flip) {
  const auto& homs = g.morphisms_from(at);
  for (MorphismId m1 : homs)
    for (MorphismId m2 : homs) {
      const MorphismId c = g.compose(m2, m1);
      const MorphismId lhs = psi.morphisms[c];
      const MorphismId rhs =
          flip ? h.try_compose(psi.morphisms[m1], psi.morphisms[m2])
               : h.try_compose(psi.morphisms[m2], psi.morphisms[m1]);
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

Functor assemble(const FinCategory& g, const FinCategory& h, const GraphMap& psi) {
  if (psi.objects.size() != g.object_count() ||
      psi.morphisms.size() != g.morphism_count())
    throw NotAnIsomorphism("translation size does not match the category");
  for (ObjectId o : psi.objects)
    if (o >= h.object_count()) throw NotAnIsomorphism("object image out of range");
  for (MorphismId m : psi.morphisms)
    if (m >= h.morphism_count())
      throw NotAnIsomorphism("morphism image out of range");

  std::optional<FinGroupoid> inv_source;
  auto inverse_in_h = [&](MorphismId m) {
    if (!inv_source) inv_source.emplace(h);
    return inv_source->inverse(m);
  };

  const Components comps = connected_components(g);
  Functor out;
  out.objects = psi.objects;
  out.morphisms.assign(g.morphism_count(), kNoMorphism);

  for (int c = 0; c < comps.count(); ++c) {
    const auto& members = comps.members[static_cast<std::size_t>(c)];
    std::vector<MorphismId> local;
    for (ObjectId o : members)
      for (MorphismId m : g.morphisms_from(o)) local.push_back(m);

    bool contravariant = false;
    if (members.size() == 1) {
      if (vertex_map_respects_products(g, h, psi, members[0], false)) {
        contravariant = false;
      } else if (vertex_map_respects_products(g, h, psi, members[0], true)) {
        contravariant = true;
      } else {
        throw BourbakiViolated("vertex map is neither direct nor reversing");
      }
    } else {
      MorphismId probe = kNoMorphism;
      for (MorphismId m : local)
        if (g.dom(m) != g.cod(m)) {
          probe = m;
          break;
        }
      if (probe == kNoMorphism)
        throw VarianceInconsistent("component spans objects with no crossing morphism");
      contravariant = psi.objects[g.dom(probe)] != h.dom(psi.morphisms[probe]);
      for (MorphismId m : local) {
        const ObjectId d = psi.objects[g.dom(m)];
        const ObjectId e = psi.objects[g.cod(m)];
        const MorphismId v = psi.morphisms[m];
        const bool ok = contravariant ? (h.dom(v) == e && h.cod(v) == d)
                                      : (h.dom(v) == d && h.cod(v) == e);
        if (!ok)
          throw VarianceInconsistent("component mixes both orientations");
      }
    }
    for (MorphismId m : local)
      out.morphisms[m] =
          contravariant ? inverse_in_h(psi.morphisms[m]) : psi.morphisms[m];
  }

  if (!is_functor(g, h, out) || !is_isomorphism(g, h, out))
    throw NotAnIsomorphism("assembled map fails the functor or bijection test");
  return out;
}

Functor reconstruct_functor(const SdCategory& sd_g, const SdCategory& sd_h,
                            const Functor& big) {
  return assemble(sd_g.base(), sd_h.base(), extract_psi(sd_g, sd_h, big));
}

bool conservativity_check(const FinCategory& g, const FinCategory& h,
                          const SdCategory& sd_g, const SdCategory& sd_h,
                          const Functor& base_iso) {
  const Functor big = sd_of_functor(base_iso, sd_g, sd_h);
  return reconstruct_functor(sd_g, sd_h, big) == base_iso;
}

}  // namespace subdiv
