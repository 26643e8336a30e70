#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "subdiv/fincat.hpp"
#include "subdiv/subdivision.hpp"

using namespace subdiv;

namespace {

// The vertex correspondence of an Sd morphism: pairs (source vertex,
// target vertex) read off the subset and the collapse map.
using Rel = std::set<std::pair<int, int>>;

Rel rel_of(const SdCategory& sd, MorphismId m) {
  Rel r;
  const auto elems = subset_elements(sd.subset(m));
  const DeltaMap eta = sd.epi(m);
  for (std::size_t k = 0; k < elems.size(); ++k)
    r.insert({eta(static_cast<int>(k)), elems[k]});
  return r;
}

Rel compose_rel(const Rel& first, const Rel& second) {
  Rel out;
  for (const auto& [a, b] : first)
    for (const auto& [b2, c] : second)
      if (b == b2) out.insert({a, c});
  return out;
}

void check_relational_composition(const SdCategory& sd) {
  const FinCategory& c = sd.category();
  for (MorphismId m1 = 0; m1 < c.morphism_count(); ++m1) {
    const Rel r1 = rel_of(sd, m1);
    for (MorphismId m2 = 0; m2 < c.morphism_count(); ++m2) {
      if (!c.composable(m2, m1)) continue;
      CHECK(rel_of(sd, c.compose(m2, m1)) == compose_rel(r1, rel_of(sd, m2)));
    }
  }
}

void check_shape_laws(const SdCategory& sd) {
  const FinCategory& c = sd.category();
  int last_dim = 0;
  for (ObjectId o = 0; o < c.object_count(); ++o) {
    const int d = sd.simplex(o).dim();
    CHECK(d >= last_dim);  // ids are dimension-major
    last_dim = d;
    CHECK(c.morphisms_into(o).size() == (1u << (d + 1)) - 1);
    CHECK(sd.subset(c.identity(o)) == full_subset(d));
    CHECK(sd.object_of(sd.simplex(o)) == o);
  }
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const int dy = sd.simplex(c.cod(m)).dim();
    CHECK(sd.simplex(c.dom(m)).dim() < dy);
    CHECK(sd.morphism_of(c.cod(m), sd.subset(m)) == m);
    const DeltaMap eta = sd.epi(m);
    CHECK(is_epi(eta));
    CHECK(eta.source_rank() == subset_size(sd.subset(m)) - 1);
    CHECK(eta.target_rank == sd.simplex(c.dom(m)).dim());
  }
}

}  // namespace

TEST_CASE("simplex restriction and nondegenerate root") {
  const FinCategory d3 = dihedral_group(3);
  const Simplex rs = chain_simplex(d3, {1, 3});  // r then s
  CHECK(rs.dim() == 2);
  CHECK(simplex_vertex(d3, rs, 0) == 0);

  CHECK(restrict_simplex(d3, rs, 0b011).chain == std::vector<MorphismId>{1});
  CHECK(restrict_simplex(d3, rs, 0b110).chain == std::vector<MorphismId>{3});
  // skipping the middle vertex composes: s after r = sr
  CHECK(restrict_simplex(d3, rs, 0b101).chain == std::vector<MorphismId>{4});
  CHECK(restrict_simplex(d3, rs, 0b010) == object_simplex(0));

  // a round trip in a pair groupoid collapses to an identity entry
  const FinCategory p2 = pair_groupoid(2);
  const MorphismId a = p2.hom(0, 1).front();
  const MorphismId b = p2.hom(1, 0).front();
  const Simplex loop = chain_simplex(p2, {a, b});
  const Simplex collapsed = restrict_simplex(p2, loop, 0b101);
  REQUIRE(collapsed.chain.size() == 1);
  CHECK(p2.is_identity(collapsed.chain.front()));

  const NondegRoot root = nondeg_root(p2, collapsed);
  CHECK(root.root == object_simplex(0));
  CHECK(root.eta.values == std::vector<int>{0, 0});

  const NondegRoot keep = nondeg_root(d3, rs);
  CHECK(keep.root == rs);
  CHECK(keep.eta == identity_map(2));
}

TEST_CASE("simplex ordering is dimension-major") {
  CHECK(object_simplex(3) < chain_simplex(cyclic_group(2), {1}));
  const FinCategory d3 = dihedral_group(3);
  CHECK(chain_simplex(d3, {1}) < chain_simplex(d3, {2}));
  CHECK(chain_simplex(d3, {5}) < chain_simplex(d3, {1, 1}));
}

TEST_CASE("subdivision sizes for pinned cases") {
  const SdCategory sd_z2 = build_sd(cyclic_group(2));
  CHECK(sd_z2.category().object_count() == 3);
  CHECK(sd_z2.category().morphism_count() == 11);

  const SdCategory sd_p2 = build_sd(pair_groupoid(2));
  CHECK(sd_p2.category().object_count() == 6);
  CHECK(sd_p2.category().morphism_count() == 22);

  const SdCategory sd_d3 = build_sd(dihedral_group(3));
  CHECK(sd_d3.category().object_count() == 31);
  CHECK(sd_d3.category().morphism_count() == 191);

  const SdCategory sd_iv = build_sd(poset_interval(3), kFullSubdivision);
  CHECK(sd_iv.category().object_count() == 15);
  CHECK(sd_iv.category().morphism_count() == 65);
  CHECK(sd_iv.max_dim() == 3);
}

TEST_CASE("subdivision of a pair groupoid, full index") {
  const FinCategory p2 = pair_groupoid(2);
  const SdCategory sd = build_sd(p2);
  const MorphismId a = p2.hom(0, 1).front();
  const MorphismId b = p2.hom(1, 0).front();
  CHECK(sd.simplex(0) == object_simplex(0));
  CHECK(sd.simplex(1) == object_simplex(1));
  CHECK(sd.simplex(2) == chain_simplex(p2, {a}));
  CHECK(sd.simplex(3) == chain_simplex(p2, {b}));
  CHECK(sd.simplex(4) == chain_simplex(p2, {a, b}));
  CHECK(sd.simplex(5) == chain_simplex(p2, {b, a}));
}

TEST_CASE("subdivisions satisfy the category axioms and shape laws") {
  for (const FinCategory& c :
       {cyclic_group(3), klein_four(), pair_groupoid(3),
        vertex_group_groupoid(cyclic_group(2), 2), poset_interval(2)}) {
    const SdCategory sd = build_sd(c);
    validate_category(sd.category());
    check_shape_laws(sd);
  }
  const SdCategory deep = build_sd(dihedral_group(3), 3);
  validate_category(deep.category());
  check_shape_laws(deep);
}

TEST_CASE("composition realizes relational composition of correspondences") {
  check_relational_composition(build_sd(cyclic_group(4)));
  check_relational_composition(build_sd(pair_groupoid(3)));
  check_relational_composition(build_sd(zigzag(3), kFullSubdivision));
  check_relational_composition(build_sd(cyclic_group(2), 3));
}

TEST_CASE("subdivision of a functor") {
  const FinCategory d3 = dihedral_group(3);
  const SdCategory sd = build_sd(d3);
  const Functor conj{{0}, {0, 2, 1, 3, 5, 4}};
  const Functor big = sd_of_functor(conj, sd, sd);
  CHECK(is_functor(sd.category(), sd.category(), big));
  CHECK(is_isomorphism(sd.category(), sd.category(), big));
  CHECK(big.objects[sd.object_of(chain_simplex(d3, {4}))] ==
        sd.object_of(chain_simplex(d3, {5})));
  CHECK(big.objects[sd.object_of(chain_simplex(d3, {1, 1}))] ==
        sd.object_of(chain_simplex(d3, {2, 2})));
  CHECK(sd_of_functor(identity_functor(d3), sd, sd) ==
        identity_functor(sd.category()));

  // a chain may map onto a degenerate one and collapse to its root
  const FinCategory p2 = pair_groupoid(2);
  const SdCategory sd_p2 = build_sd(p2);
  const Functor crush{{0, 0}, {0, 0, 0, 0}};
  REQUIRE(is_functor(p2, p2, crush));
  const Functor big_crush = sd_of_functor(crush, sd_p2, sd_p2);
  CHECK(is_functor(sd_p2.category(), sd_p2.category(), big_crush));
  CHECK(big_crush.objects[4] == 0);  // the round-trip 2-simplex collapses

  // image simplices beyond the target truncation are rejected
  const SdCategory sd3 = build_sd(d3, 3);
  CHECK_THROWS_AS(sd_of_functor(identity_functor(d3), sd3, sd), TruncationMismatch);
}

TEST_CASE("chain reversal onto the opposite subdivision") {
  const FinCategory d3 = dihedral_group(3);
  const FinCategory d3op = opposite(d3);
  const SdCategory sd = build_sd(d3);
  const SdCategory sd_op = build_sd(d3op);
  const Functor fwd = op_iso(sd, sd_op);
  CHECK(is_isomorphism(sd.category(), sd_op.category(), fwd));

  const ObjectId cell = sd.object_of(chain_simplex(d3, {1, 3}));
  CHECK(sd_op.simplex(fwd.objects[cell]).chain == std::vector<MorphismId>{3, 1});

  const SdCategory sd_back = build_sd(opposite(d3op));
  const Functor back = op_iso(sd_op, sd_back);
  CHECK(compose(back, fwd) == identity_functor(sd.category()));
}

TEST_CASE("inversion automorphism of a groupoid subdivision") {
  const FinCategory d3 = dihedral_group(3);
  const SdCategory sd = build_sd(d3);
  const FinGroupoid g = as_groupoid(d3);
  const Functor tw = alpha(sd, g);
  CHECK(is_isomorphism(sd.category(), sd.category(), tw));
  CHECK(compose(tw, tw) == identity_functor(sd.category()));
  for (ObjectId o = 0; o < sd.category().object_count(); ++o)
    if (sd.simplex(o).dim() == 0) CHECK(tw.objects[o] == o);
  CHECK(tw.objects[sd.object_of(chain_simplex(d3, {1}))] ==
        sd.object_of(chain_simplex(d3, {2})));
  CHECK(tw.objects[sd.object_of(chain_simplex(d3, {1, 3}))] ==
        sd.object_of(chain_simplex(d3, {3, 2})));
}

TEST_CASE("subdivision commutes with disjoint union") {
  const FinCategory z3 = cyclic_group(3);
  const FinCategory p2 = pair_groupoid(2);
  const SdCategory sd_z3 = build_sd(z3);
  const SdCategory sd_p2 = build_sd(p2);
  const Coproduct base = coproduct({&z3, &p2});
  const SdCategory sd_union = build_sd(base.cat);
  const SdCoproductIso r = sd_coproduct_iso({&sd_z3, &sd_p2}, base, sd_union);
  CHECK(r.parts.cat.object_count() == sd_union.category().object_count());
  CHECK(is_isomorphism(r.parts.cat, sd_union.category(), r.iso));
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(build_sd(dihedral_group(3), 1), TruncationTooSmall);
  CHECK_THROWS_AS(build_sd(dihedral_group(3), kFullSubdivision), NotLoopFree);
  CHECK_THROWS_AS(build_sd(poset_interval(2), 0), TruncationTooSmall);

  const SdCategory sd_zz = build_sd(zigzag(2), kFullSubdivision);
  CHECK(sd_zz.category().object_count() == 5);
  CHECK(sd_zz.category().morphism_count() == 9);
  CHECK(sd_zz.max_dim() == 1);
}
