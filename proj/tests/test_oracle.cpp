#include <array>

#include "doctest.h"
#include "subdiv/fincat.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/subdivision.hpp"

using namespace subdiv;

TEST_CASE("automorphism counts of small categories") {
  CHECK(automorphism_group(cyclic_group(6)).isos.size() == 2);
  CHECK(automorphism_group(dihedral_group(3)).isos.size() == 6);
  CHECK(automorphism_group(klein_four()).isos.size() == 6);
  CHECK(automorphism_group(pair_groupoid(3)).isos.size() == 6);
  CHECK(automorphism_group(discrete(3)).isos.size() == 6);
  CHECK(automorphism_group(zigzag(2)).isos.size() == 2);

  const IsoSearchResult r = automorphism_group(dihedral_group(3));
  CHECK(r.complete);
  for (const Functor& f : r.isos)
    CHECK(is_isomorphism(dihedral_group(3), dihedral_group(3), f));
}

TEST_CASE("non-isomorphic categories are refuted") {
  CHECK(find_isomorphisms(cyclic_group(6), dihedral_group(3)).isos.empty());
  CHECK(find_isomorphisms(cyclic_group(4), klein_four()).isos.empty());
  CHECK(find_isomorphisms(cyclic_group(4), cyclic_group(5)).isos.empty());
  CHECK(find_isomorphisms(metacyclic(8, 2, 5), metacyclic(8, 2, 3)).isos.empty());
  CHECK(find_isomorphisms(cyclic_group(6), dihedral_group(3)).complete);
}

TEST_CASE("isomorphic presentations are matched") {
  const IsoSearchResult q = find_isomorphisms(quaternion_group(), dicyclic(2));
  CHECK(!q.isos.empty());
  for (const Functor& f : q.isos)
    CHECK(is_isomorphism(quaternion_group(), dicyclic(2), f));

  const IsoSearchResult d =
      find_isomorphisms(metacyclic(8, 2, 7), dihedral_group(8));
  CHECK(!d.isos.empty());

  // a cyclic group of composite order against its direct-product form
  const FinCategory z2 = cyclic_group(2), z3 = cyclic_group(3);
  CHECK(!find_isomorphisms(cyclic_group(6), cyclic_group(6)).isos.empty());
  CHECK(find_isomorphisms(coproduct({&z2, &z3}).cat,
                          coproduct({&z3, &z2}).cat)
            .isos.size() == 2);
}

TEST_CASE("search budget") {
  IsoSearchConfig cfg;
  cfg.node_limit = 2;
  CHECK_THROWS_AS(find_isomorphisms(dihedral_group(3), dihedral_group(3), cfg),
                  SearchBudgetExceeded);
  try {
    find_isomorphisms(dihedral_group(3), dihedral_group(3), cfg);
  } catch (const SearchBudgetExceeded& e) {
    CHECK_FALSE(e.partial().complete);
    CHECK(e.partial().nodes >= 2);
  }
}

TEST_CASE("result limit stops the search early") {
  IsoSearchConfig cfg;
  cfg.result_limit = 2;
  const IsoSearchResult r = automorphism_group(pair_groupoid(3), cfg);
  CHECK(r.isos.size() == 2);
  CHECK_FALSE(r.complete);
}

TEST_CASE("pruning options do not change the answer") {
  IsoSearchConfig plain;
  plain.use_object_signatures = false;
  plain.use_pairwise_hom_check = false;
  CHECK(automorphism_group(cyclic_group(6), plain).isos.size() == 2);
  CHECK(automorphism_group(zigzag(2), plain).isos.size() == 2);
  CHECK(find_isomorphisms(cyclic_group(6), dihedral_group(3), plain).isos.empty());
  CHECK(automorphism_group(pair_groupoid(3), plain).isos.size() == 6);
}

TEST_CASE("automorphisms of subdivisions") {
  const SdCategory sd_p2 = build_sd(pair_groupoid(2));
  CHECK(automorphism_group(sd_p2.category()).isos.size() == 4);

  const SdCategory sd_q8 = build_sd(quaternion_group());
  CHECK(automorphism_group(sd_q8.category()).isos.size() == 48);
}

TEST_CASE("triangle census of the quaternion group") {
  const TriangleCensus c = brute_triangle_census(quaternion_group());
  CHECK(c.forms.at({2, 4, 6}) == 3);
  CHECK(c.forms.at({2, 4, 7}) == 3);
  CHECK(c.collapsed.at({1, 1}) == 1);
  CHECK(c.collapsed.at({2, 3}) == 2);

  int total = 0;
  for (const auto& [k, n] : c.forms) total += n;
  for (const auto& [k, n] : c.collapsed) total += n;
  CHECK(total == 49);  // all composable non-identity pairs
}

TEST_CASE("triangle census of a dihedral group") {
  const TriangleCensus c = brute_triangle_census(dihedral_group(3));
  CHECK(c.collapsed.at({1, 2}) == 2);
  CHECK(c.collapsed.at({3, 3}) == 1);
  CHECK(c.forms.at({1, 3, 4}) == 3);
  CHECK(c.forms.at({1, 3, 5}) == 3);
}

TEST_CASE("the corpus is fixed") {
  const auto& entries = corpus();
  REQUIRE(entries.size() == 19);
  CHECK(entries.front().name == "cyclic2");
  CHECK(entries[11].name == "frobenius21");
  CHECK(entries.back().name == "discrete2+klein_four");
  for (const auto& e : entries) {
    validate_category(e.cat);
    as_groupoid(e.cat);  // every corpus entry is a groupoid
  }
}
