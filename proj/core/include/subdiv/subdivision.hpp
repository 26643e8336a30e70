#pragma once

#include <map>
#include <utility>
#include <vector>

#include "subdiv/delta.hpp"
#include "subdiv/fincat.hpp"

namespace subdiv {

// A nondegenerate simplex of the nerve: an object (dim 0) or a chain
// [f1, ..., fm] of composable non-identity morphisms, dom f_{i+1} == cod f_i,
// read left to right in composition order (f1 first).
//
// Transient values produced by restrict_simplex may contain identity
// entries; interned simplices never do.
struct Simplex {
  ObjectId base = kNoObject;  // dom f1, or the object itself when dim 0
  std::vector<MorphismId> chain;

  int dim() const { return static_cast<int>(chain.size()); }
  bool operator==(const Simplex&) const = default;
  bool operator<(const Simplex& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    if (chain != o.chain) return chain < o.chain;
    return base < o.base;
  }
};

Simplex object_simplex(ObjectId o);
Simplex chain_simplex(const FinCategory& base, std::vector<MorphismId> chain);

// Vertex i of x as an object of the base category.
ObjectId simplex_vertex(const FinCategory& base, const Simplex& x, int i);

// S*y: restriction of y to the selected vertices; entry t is the composite
// of y's chain between consecutive selected vertices (may be an identity).
Simplex restrict_simplex(const FinCategory& base, const Simplex& y, VertexSubset s);

// Deletes identity entries. eta is the vertex collapse map onto the root:
// eta(0) = 0 and eta(i) = eta(i-1) + (0 or 1 as the i-th entry is an
// identity or not).
struct NondegRoot {
  Simplex root;
  DeltaMap eta;
};
NondegRoot nondeg_root(const FinCategory& base, const Simplex& x);

inline constexpr int kFullSubdivision = -1;

// The categorical subdivision of a finite category, itself a finite
// category, together with the two-way simplex index.
//
// Objects are the nondegenerate simplices of the nerve up to the
// truncation dimension (all of them for kFullSubdivision, which requires
// the base to have no directed cycle through non-identity morphisms).
// A morphism into y is keyed by a nonempty vertex subset S of y; its
// source is the nondegenerate root of S*y and the identity of y is keyed
// by the full subset. Composition of (S1 : x -> y) followed by
// (S2 : y -> z) is keyed by nu_S2(eta2^-1(S1)), the image of S1's vertices
// through the canonical factorization of S2 : this realizes relational
// composition of the underlying vertex correspondences.
//
// Object ids are dimension-major, chains ordered lexicographically within
// a dimension; non-identity morphism ids are ordered by (target, subset).
class SdCategory {
public:
  const FinCategory& category() const { return cat_; }
  const FinCategory& base() const { return base_; }
  int truncation() const { return truncation_; }
  int max_dim() const { return max_dim_; }

  const Simplex& simplex(ObjectId o) const { return simplices_[o]; }
  ObjectId object_of(const Simplex& x) const;
  VertexSubset subset(MorphismId m) const { return subsets_[m]; }
  MorphismId morphism_of(ObjectId target, VertexSubset s) const;
  DeltaMap epi(MorphismId m) const;

private:
  friend SdCategory build_sd(const FinCategory&, int);
  SdCategory(FinCategory base, FinCategory cat, int truncation, int max_dim,
             std::vector<Simplex> simplices, std::vector<VertexSubset> subsets);

  FinCategory base_;
  FinCategory cat_;
  int truncation_;
  int max_dim_;
  std::vector<Simplex> simplices_;
  std::vector<VertexSubset> subsets_;
  std::map<Simplex, ObjectId> object_index_;
  std::map<std::pair<ObjectId, VertexSubset>, MorphismId> morphism_index_;
};

SdCategory build_sd(const FinCategory& base, int truncation = 2);

// Image of a functor under subdivision: simplices map to the nondegenerate
// root of their image chain, a morphism keyed by S maps to the one keyed
// by the collapse image of S.
Functor sd_of_functor(const Functor& f, const SdCategory& sd_dom,
                      const SdCategory& sd_cod);

// Chain reversal Sd C -> Sd C^op; subsets reflect.
Functor op_iso(const SdCategory& sd, const SdCategory& sd_op);

// The inversion automorphism of the subdivision of a groupoid:
// [f1, ..., fm] -> [fm^-1, ..., f1^-1], subsets reflect. Fixes every
// 0-simplex; not induced by any base automorphism in general.
Functor alpha(const SdCategory& sd, const FinGroupoid& g);

// Subdivision commutes with disjoint union: an isomorphism from the
// coproduct of the part subdivisions onto the subdivision of the coproduct.
struct SdCoproductIso {
  Coproduct parts;
  Functor iso;
};
SdCoproductIso sd_coproduct_iso(const std::vector<const SdCategory*>& part_sds,
                                const Coproduct& base_parts,
                                const SdCategory& sd_of_union);

}  // namespace subdiv
