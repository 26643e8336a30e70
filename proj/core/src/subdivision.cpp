#include "subdiv/subdivision.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <string>

namespace subdiv {

Simplex object_simplex(ObjectId o) { return Simplex{o, {}}; }

Simplex chain_simplex(const FinCategory& base, std::vector<MorphismId> chain) {
  assert(!chain.empty());
  Simplex x{base.dom(chain.front()), std::move(chain)};
  for (std::size_t i = 1; i < x.chain.size(); ++i)
    assert(base.dom(x.chain[i]) == base.cod(x.chain[i - 1]));
  return x;
}

ObjectId simplex_vertex(const FinCategory& base, const Simplex& x, int i) {
  assert(i >= 0 && i <= x.dim());
  if (i == 0) return x.base;
  return base.cod(x.chain[static_cast<std::size_t>(i) - 1]);
}

Simplex restrict_simplex(const FinCategory& base, const Simplex& y, VertexSubset s) {
  std::vector<int> picks = subset_elements(s);
  assert(!picks.empty() && picks.back() <= y.dim());
  Simplex r;
  r.base = simplex_vertex(base, y, picks.front());
  for (std::size_t t = 1; t < picks.size(); ++t) {
    MorphismId m = y.chain[static_cast<std::size_t>(picks[t - 1])];
    for (int q = picks[t - 1] + 1; q < picks[t]; ++q)
      m = base.compose(y.chain[static_cast<std::size_t>(q)], m);
    r.chain.push_back(m);
  }
  return r;
}

NondegRoot nondeg_root(const FinCategory& base, const Simplex& x) {
  NondegRoot r;
  r.root.base = x.base;
  r.eta.values.push_back(0);
  for (MorphismId m : x.chain) {
    if (!base.is_identity(m)) r.root.chain.push_back(m);
    r.eta.values.push_back(static_cast<int>(r.root.chain.size()));
  }
  r.eta.target_rank = r.root.dim();
  if (r.root.dim() > 0) r.root.base = base.dom(r.root.chain.front());
  return r;
}

SdCategory::SdCategory(FinCategory base, FinCategory cat, int truncation, int max_dim,
                       std::vector<Simplex> simplices, std::vector<VertexSubset> subsets)
    : base_(std::move(base)),
      cat_(std::move(cat)),
      truncation_(truncation),
      max_dim_(max_dim),
      simplices_(std::move(simplices)),
      subsets_(std::move(subsets)) {
  for (ObjectId o = 0; o < simplices_.size(); ++o) object_index_[simplices_[o]] = o;
  for (MorphismId m = 0; m < subsets_.size(); ++m)
    morphism_index_[{cat_.cod(m), subsets_[m]}] = m;
}

ObjectId SdCategory::object_of(const Simplex& x) const {
  auto it = object_index_.find(x);
  return it == object_index_.end() ? kNoObject : it->second;
}

MorphismId SdCategory::morphism_of(ObjectId target, VertexSubset s) const {
  auto it = morphism_index_.find({target, s});
  return it == morphism_index_.end() ? kNoMorphism : it->second;
}

DeltaMap SdCategory::epi(MorphismId m) const {
  const Simplex& y = simplices_[cat_.cod(m)];
  return nondeg_root(base_, restrict_simplex(base_, y, subsets_[m])).eta;
}

namespace {

void require_loop_free(const FinCategory& c) {
  for (MorphismId f = c.object_count(); f < c.morphism_count(); ++f)
    if (c.dom(f) == c.cod(f))
      throw NotLoopFree("non-identity endomorphism at object " +
                        std::to_string(c.dom(f)));
  // Colors: 0 unvisited, 1 on stack, 2 done.
  std::vector<int> color(c.object_count(), 0);
  std::vector<ObjectId> stack;
  for (ObjectId start = 0; start < c.object_count(); ++start) {
    if (color[start]) continue;
    stack.push_back(start);
    while (!stack.empty()) {
      ObjectId o = stack.back();
      if (color[o] == 0) {
        color[o] = 1;
        for (MorphismId f : c.morphisms_from(o)) {
          if (c.is_identity(f)) continue;
          ObjectId t = c.cod(f);
          if (color[t] == 1)
            throw NotLoopFree("directed cycle through object " + std::to_string(t));
          if (color[t] == 0) stack.push_back(t);
        }
      } else {
        color[o] = 2;
        stack.pop_back();
      }
    }
  }
}

}  // namespace

SdCategory build_sd(const FinCategory& base, int truncation) {
  if (truncation != kFullSubdivision && truncation < 2)
    throw TruncationTooSmall("truncation must be at least 2 (got " +
                             std::to_string(truncation) + ")");
  if (truncation == kFullSubdivision) require_loop_free(base);

  std::vector<Simplex> simplices;
  std::vector<std::pair<std::size_t, std::size_t>> dim_range;  // [first, last)
  for (ObjectId o = 0; o < base.object_count(); ++o)
    simplices.push_back(object_simplex(o));
  dim_range.emplace_back(0, simplices.size());

  for (int d = 1; truncation == kFullSubdivision || d <= truncation; ++d) {
    if (d >= 62) throw Error("simplex dimension exceeds the subset bitmask width");
    std::size_t first = simplices.size();
    if (d == 1) {
      for (MorphismId f = base.object_count(); f < base.morphism_count(); ++f)
        simplices.push_back(chain_simplex(base, {f}));
    } else {
      auto [lo, hi] = dim_range.back();
      for (std::size_t i = lo; i < hi; ++i) {
        const Simplex prev = simplices[i];  // copy: simplices reallocates
        for (MorphismId f : base.morphisms_from(base.cod(prev.chain.back()))) {
          if (base.is_identity(f)) continue;
          Simplex next = prev;
          next.chain.push_back(f);
          simplices.push_back(std::move(next));
        }
      }
    }
    if (simplices.size() == first) break;  // full subdivision exhausted
    dim_range.emplace_back(first, simplices.size());
  }
  const int max_dim = static_cast<int>(dim_range.size()) - 1;

  std::map<Simplex, ObjectId> object_index;
  for (ObjectId o = 0; o < simplices.size(); ++o) object_index[simplices[o]] = o;

  const ObjectId n_obj = static_cast<ObjectId>(simplices.size());
  std::vector<Arrow> arrows;
  std::vector<VertexSubset> subsets;
  for (ObjectId o = 0; o < n_obj; ++o) {
    arrows.push_back({o, o});
    subsets.push_back(full_subset(simplices[o].dim()));
  }

  // eta of each non-identity morphism, for the composition pass.
  std::vector<DeltaMap> etas(n_obj);  // identities: unused
  std::map<std::pair<ObjectId, VertexSubset>, MorphismId> morphism_index;
  std::vector<std::vector<MorphismId>> into(n_obj);  // non-identity, per target
  for (ObjectId y = 0; y < n_obj; ++y) {
    const Simplex& sy = simplices[y];
    const VertexSubset full = full_subset(sy.dim());
    morphism_index[{y, full}] = y;  // the identity of y
    for (VertexSubset s = 1; s < full; ++s) {
      NondegRoot root = nondeg_root(base, restrict_simplex(base, sy, s));
      auto it = object_index.find(root.root);
      assert(it != object_index.end());
      MorphismId m = static_cast<MorphismId>(arrows.size());
      arrows.push_back({it->second, y});
      subsets.push_back(s);
      etas.push_back(std::move(root.eta));
      morphism_index[{y, s}] = m;
      into[y].push_back(m);
    }
  }

  std::vector<std::array<MorphismId, 3>> comps;
  for (ObjectId z = 0; z < n_obj; ++z) {
    for (MorphismId m2 : into[z]) {
      const ObjectId y = arrows[m2].dom;
      const DeltaMap& eta2 = etas[m2];
      const std::vector<int> nu2 = subset_elements(subsets[m2]);
      for (MorphismId m1 : into[y]) {
        const VertexSubset s1 = subsets[m1];
        VertexSubset s = 0;
        for (std::size_t t = 0; t < nu2.size(); ++t)
          if (s1 & (VertexSubset{1} << eta2(static_cast<int>(t))))
            s |= VertexSubset{1} << nu2[t];
        comps.push_back({m2, m1, morphism_index.at({z, s})});
      }
    }
  }

  FinCategory cat(n_obj, std::move(arrows), comps);
  return SdCategory(base, std::move(cat), truncation, max_dim, std::move(simplices),
                    std::move(subsets));
}

Functor sd_of_functor(const Functor& f, const SdCategory& sd_dom,
                      const SdCategory& sd_cod) {
  const FinCategory& b = sd_dom.base();
  const FinCategory& c = sd_cod.base();
  check_functor(b, c, f);

  Functor r;
  std::vector<DeltaMap> collapse(sd_dom.category().object_count());
  for (ObjectId o = 0; o < sd_dom.category().object_count(); ++o) {
    const Simplex& x = sd_dom.simplex(o);
    Simplex image{f.objects[x.base], {}};
    for (MorphismId m : x.chain) image.chain.push_back(f.morphisms[m]);
    NondegRoot root = nondeg_root(c, image);
    ObjectId target = sd_cod.object_of(root.root);
    if (target == kNoObject)
      throw TruncationMismatch("functor image needs dimension " +
                               std::to_string(root.root.dim()) +
                               " beyond the target truncation");
    r.objects.push_back(target);
    collapse[o] = std::move(root.eta);
  }
  for (MorphismId m = 0; m < sd_dom.category().morphism_count(); ++m) {
    const ObjectId y = sd_dom.category().cod(m);
    const DeltaMap& eta = collapse[y];
    VertexSubset s = 0;
    for (int v : subset_elements(sd_dom.subset(m)))
      s |= VertexSubset{1} << eta(v);
    MorphismId im = sd_cod.morphism_of(r.objects[y], s);
    assert(im != kNoMorphism);
    r.morphisms.push_back(im);
  }
  return r;
}

namespace {

Functor remap_simplices(const SdCategory& sd_dom, const SdCategory& sd_cod,
                        const std::function<Simplex(const Simplex&)>& on_simplex) {
  Functor r;
  for (ObjectId o = 0; o < sd_dom.category().object_count(); ++o) {
    ObjectId target = sd_cod.object_of(on_simplex(sd_dom.simplex(o)));
    if (target == kNoObject)
      throw TruncationMismatch("image simplex is missing from the target");
    r.objects.push_back(target);
  }
  for (MorphismId m = 0; m < sd_dom.category().morphism_count(); ++m) {
    const ObjectId y = sd_dom.category().cod(m);
    VertexSubset s = reflect_subset(sd_dom.subset(m), sd_dom.simplex(y).dim());
    MorphismId im = sd_cod.morphism_of(r.objects[y], s);
    assert(im != kNoMorphism);
    r.morphisms.push_back(im);
  }
  return r;
}

}  // namespace

Functor op_iso(const SdCategory& sd, const SdCategory& sd_op) {
  const FinCategory& opbase = sd_op.base();
  return remap_simplices(sd, sd_op, [&opbase](const Simplex& x) {
    if (x.dim() == 0) return x;
    Simplex rev = x;
    std::reverse(rev.chain.begin(), rev.chain.end());
    rev.base = opbase.dom(rev.chain.front());
    return rev;
  });
}

Functor alpha(const SdCategory& sd, const FinGroupoid& g) {
  assert(sd.base() == g.category());
  return remap_simplices(sd, sd, [&](const Simplex& x) {
    if (x.dim() == 0) return x;
    std::vector<MorphismId> chain;
    for (auto it = x.chain.rbegin(); it != x.chain.rend(); ++it)
      chain.push_back(g.inverse(*it));
    return chain_simplex(g.category(), std::move(chain));
  });
}

SdCoproductIso sd_coproduct_iso(const std::vector<const SdCategory*>& part_sds,
                                const Coproduct& base_parts,
                                const SdCategory& sd_of_union) {
  std::vector<const FinCategory*> cats;
  cats.reserve(part_sds.size());
  for (const SdCategory* sd : part_sds) cats.push_back(&sd->category());
  SdCoproductIso r{coproduct(cats), {}};

  const ObjectId n_obj = r.parts.cat.object_count();
  r.iso.objects.assign(n_obj, kNoObject);
  r.iso.morphisms.assign(r.parts.cat.morphism_count(), kNoMorphism);
  for (std::size_t p = 0; p < part_sds.size(); ++p) {
    const SdCategory& sd = *part_sds[p];
    for (ObjectId o = 0; o < sd.category().object_count(); ++o) {
      Simplex x = sd.simplex(o);
      Simplex global{base_parts.object_map[p][x.base], {}};
      for (MorphismId m : x.chain)
        global.chain.push_back(base_parts.morphism_map[p][m]);
      if (global.dim() > 0)
        global.base = sd_of_union.base().dom(global.chain.front());
      ObjectId target = sd_of_union.object_of(global);
      assert(target != kNoObject);
      r.iso.objects[r.parts.object_map[p][o]] = target;
    }
    for (MorphismId m = 0; m < sd.category().morphism_count(); ++m) {
      ObjectId gy = r.iso.objects[r.parts.object_map[p][sd.category().cod(m)]];
      MorphismId im = sd_of_union.morphism_of(gy, sd.subset(m));
      assert(im != kNoMorphism);
      r.iso.morphisms[r.parts.morphism_map[p][m]] = im;
    }
  }
  return r;
}

}  // namespace subdiv
