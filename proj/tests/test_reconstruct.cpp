#include <utility>

#include "doctest.h"
#include "subdiv/fincat.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/reconstruct.hpp"
#include "subdiv/subdivision.hpp"

using namespace subdiv;

namespace {

ObjectId edge_of(const SdCategory& sd, MorphismId m) {
  return sd.object_of(chain_simplex(sd.base(), {m}));
}

}  // namespace

TEST_CASE("extraction undoes subdivision of a functor") {
  const FinCategory d3 = dihedral_group(3);
  const SdCategory sd = build_sd(d3);
  for (const Functor& xi : automorphism_group(d3).isos) {
    const Functor big = sd_of_functor(xi, sd, sd);
    const GraphMap psi = extract_psi(sd, sd, big);
    CHECK(psi == GraphMap{xi.objects, xi.morphisms});
    CHECK(reconstruct_functor(sd, sd, big) == xi);
  }
}

TEST_CASE("round trips over base automorphisms") {
  const FinCategory p3 = pair_groupoid(3);
  const SdCategory sd = build_sd(p3);
  for (const Functor& xi : automorphism_group(p3).isos) {
    CHECK(conservativity_check(p3, p3, sd, sd, xi));
  }

  const FinCategory q8 = quaternion_group();
  const FinCategory dic = dicyclic(2);
  const SdCategory sd_q = build_sd(q8);
  const SdCategory sd_d = build_sd(dic);
  const Functor xi = find_isomorphisms(q8, dic).isos.front();
  CHECK(conservativity_check(q8, dic, sd_q, sd_d, xi));
}

TEST_CASE("the inversion twist reconstructs to the identity") {
  const FinCategory d3 = dihedral_group(3);
  const SdCategory sd = build_sd(d3);
  const Functor tw = alpha(sd, as_groupoid(d3));
  CHECK(reconstruct_functor(sd, sd, tw) == identity_functor(d3));

  // composing the twist with a subdivided automorphism still lands on it
  const Functor conj{{0}, {0, 2, 1, 3, 5, 4}};
  const Functor mixed = compose(tw, sd_of_functor(conj, sd, sd));
  CHECK(reconstruct_functor(sd, sd, mixed) == conj);
}

TEST_CASE("single-object assembly picks the working orientation") {
  const FinCategory q8 = quaternion_group();
  const FinGroupoid gp = as_groupoid(q8);
  GraphMap inv_map{{0}, {}};
  for (MorphismId m = 0; m < q8.morphism_count(); ++m)
    inv_map.morphisms.push_back(gp.inverse(m));
  // inversion reverses products, so only the flipped reading verifies
  CHECK(assemble(q8, q8, inv_map) == identity_functor(q8));

  const FinCategory d3 = dihedral_group(3);
  const GraphMap neither{{0}, {0, 3, 2, 1, 4, 5}};  // swaps r and s
  CHECK_THROWS_AS(assemble(d3, d3, neither), BourbakiViolated);
}

TEST_CASE("multi-object assembly tracks variance per component") {
  const FinCategory p2 = pair_groupoid(2);
  const MorphismId a = p2.hom(0, 1).front(), b = p2.hom(1, 0).front();
  GraphMap swapped{{0, 1}, {0, 1, 0, 0}};
  swapped.morphisms[a] = b;
  swapped.morphisms[b] = a;
  CHECK(assemble(p2, p2, swapped) == identity_functor(p2));

  // reversing one arrow but not another cannot be read either way
  const FinCategory p3 = pair_groupoid(3);
  GraphMap spliced{{0, 1, 2}, {}};
  for (MorphismId m = 0; m < p3.morphism_count(); ++m)
    spliced.morphisms.push_back(m);
  const MorphismId e01 = p3.hom(0, 1).front(), e10 = p3.hom(1, 0).front();
  spliced.morphisms[e01] = e10;
  spliced.morphisms[e10] = e01;
  CHECK_THROWS_AS(assemble(p3, p3, spliced), VarianceInconsistent);
}

TEST_CASE("non-bijective translations are rejected") {
  const FinCategory d3 = dihedral_group(3);
  const GraphMap crush{{0}, {0, 0, 0, 0, 0, 0}};
  CHECK_THROWS_AS(assemble(d3, d3, crush), NotAnIsomorphism);
}

TEST_CASE("extraction validates dimensions and endpoints") {
  const FinCategory d3 = dihedral_group(3);
  const SdCategory sd = build_sd(d3);
  Functor bad = identity_functor(sd.category());
  bad.objects[0] = edge_of(sd, 1);  // vertex object sent to an edge object
  CHECK_THROWS_AS(extract_psi(sd, sd, bad), NotAnIsomorphism);

  const FinCategory p3 = pair_groupoid(3);
  const SdCategory sd3 = build_sd(p3);
  Functor mismatched = identity_functor(sd3.category());
  mismatched.objects[edge_of(sd3, p3.hom(0, 1).front())] =
      edge_of(sd3, p3.hom(1, 2).front());
  CHECK_THROWS_AS(extract_psi(sd3, sd3, mismatched), NotAnIsomorphism);

  Functor tiny{{0}, {0}};
  CHECK_THROWS_AS(extract_psi(sd, sd, tiny), NotAnIsomorphism);
}
