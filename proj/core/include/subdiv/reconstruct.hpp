#pragma once

#include <vector>

#include "subdiv/errors.hpp"
#include "subdiv/fincat.hpp"
#include "subdiv/subdivision.hpp"

namespace subdiv {

// Raw object and morphism translation between two base categories, with no
// functoriality promised yet. Identities map to identities.
struct GraphMap {
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
  bool operator==(const GraphMap&) const = default;
};

// Reads the base translation off a functor between two subdivisions, using
// only where it sends the dimension-0 and dimension-1 simplex objects.
// Checks dimensions and unordered endpoint sets; violations mean the input
// could not have been an isomorphism of subdivisions.
GraphMap extract_psi(const SdCategory& sd_g, const SdCategory& sd_h,
                     const Functor& big);

// Upgrades a raw translation to an isomorphism g -> h, choosing covariant
// or contravariant reading per connected component (inverting morphism
// images on contravariant components). Throws BourbakiViolated when a
// one-object component passes neither reading, VarianceInconsistent when a
// multi-object component mixes orientations, and NotAnIsomorphism when the
// assembled map fails the final functor-and-bijectivity check.
Functor assemble(const FinCategory& g, const FinCategory& h, const GraphMap& psi);

// extract_psi followed by assemble.
Functor reconstruct_functor(const SdCategory& sd_g, const SdCategory& sd_h,
                            const Functor& big);

// Round trip: subdivide a base isomorphism, reconstruct from the result,
// and compare with the original. True when they agree exactly.
bool conservativity_check(const FinCategory& g, const FinCategory& h,
                          const SdCategory& sd_g, const SdCategory& sd_h,
                          const Functor& base_iso);

}  // namespace subdiv
