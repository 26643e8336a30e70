#include <vector>

#include "doctest.h"
#include "subdiv/delta.hpp"

using namespace subdiv;

namespace {

// All monotone maps [m] -> [n], built by extending value vectors.
std::vector<DeltaMap> all_monotone(int m, int n) {
  std::vector<std::vector<int>> partial{{}};
  for (int i = 0; i <= m; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& p : partial) {
      const int lo = p.empty() ? 0 : p.back();
      for (int v = lo; v <= n; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    partial = std::move(next);
  }
  std::vector<DeltaMap> out;
  for (auto& p : partial) out.push_back({std::move(p), n});
  return out;
}

}  // namespace

TEST_CASE("identity map and basic predicates") {
  const DeltaMap id = identity_map(3);
  CHECK(id.values == std::vector<int>{0, 1, 2, 3});
  CHECK(id.source_rank() == 3);
  CHECK(id.target_rank == 3);
  CHECK(is_monotone(id));
  CHECK(is_mono(id));
  CHECK(is_epi(id));

  const DeltaMap down{{2, 1}, 2};
  CHECK_FALSE(is_monotone(down));

  const DeltaMap collapse{{0, 0, 1}, 1};
  CHECK(is_monotone(collapse));
  CHECK(is_epi(collapse));
  CHECK_FALSE(is_mono(collapse));

  const DeltaMap skip{{0, 2}, 2};
  CHECK(is_mono(skip));
  CHECK_FALSE(is_epi(skip));
}

TEST_CASE("composition") {
  const DeltaMap inner{{0, 0, 1}, 1};   // [2] -> [1]
  const DeltaMap outer{{1, 3}, 3};      // [1] -> [3]
  const DeltaMap c = compose(outer, inner);
  CHECK(c.values == std::vector<int>{1, 1, 3});
  CHECK(c.target_rank == 3);

  const DeltaMap id2 = identity_map(2);
  CHECK(compose(c, id2) == c);
  CHECK(compose(identity_map(3), c) == c);
}

TEST_CASE("epi-mono factorization is correct and unique on small ranks") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const DeltaMap& f : all_monotone(m, n)) {
        const auto [epi, mono] = epi_mono_factor(f);
        CHECK(is_epi(epi));
        CHECK(is_mono(mono));
        CHECK(epi.source_rank() == f.source_rank());
        CHECK(mono.target_rank == f.target_rank);
        CHECK(epi.target_rank == mono.source_rank());
        CHECK(compose(mono, epi) == f);
        // Uniqueness: the middle rank is pinned by the image size, and an
        // epi followed by a mono with matching composite is forced.
        int image = 0;
        for (std::size_t i = 0; i < f.values.size(); ++i)
          if (i == 0 || f.values[i] != f.values[i - 1]) ++image;
        CHECK(epi.target_rank == image - 1);
      }
    }
  }
}

TEST_CASE("prime dual is an involution and preserves mono/epi") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const DeltaMap& f : all_monotone(m, n)) {
        const DeltaMap d = prime_dual(f);
        CHECK(is_monotone(d));
        CHECK(prime_dual(d) == f);
        CHECK(is_mono(d) == is_mono(f));
        CHECK(is_epi(d) == is_epi(f));
      }
    }
  }
  const DeltaMap f{{0, 0, 2}, 2};
  CHECK(prime_dual(f).values == std::vector<int>{0, 2, 2});
}

TEST_CASE("epi fibers are consecutive intervals covering the source") {
  const DeltaMap e{{0, 0, 1, 2, 2, 2}, 2};
  const auto fibers = epi_fibers(e);
  REQUIRE(fibers.size() == 3);
  CHECK(fibers[0] == std::pair<int, int>{0, 1});
  CHECK(fibers[1] == std::pair<int, int>{2, 2});
  CHECK(fibers[2] == std::pair<int, int>{3, 5});

  for (const DeltaMap& f : all_monotone(3, 2)) {
    if (!is_epi(f)) continue;
    const auto fb = epi_fibers(f);
    REQUIRE(static_cast<int>(fb.size()) == f.target_rank + 1);
    int expect_first = 0;
    for (int v = 0; v <= f.target_rank; ++v) {
      CHECK(fb[v].first == expect_first);
      for (int i = fb[v].first; i <= fb[v].second; ++i) CHECK(f(i) == v);
      expect_first = fb[v].second + 1;
    }
    CHECK(expect_first == f.source_rank() + 1);
  }
}

TEST_CASE("vertex subsets round-trip through monos") {
  const int rank = 4;
  for (VertexSubset s = 1; s < (1u << (rank + 1)); ++s) {
    const DeltaMap mono = subset_to_mono(s, rank);
    CHECK(is_mono(mono));
    CHECK(mono.target_rank == rank);
    CHECK(mono_to_subset(mono) == s);
    CHECK(subset_size(s) == mono.source_rank() + 1);
    const auto elems = subset_elements(s);
    REQUIRE(static_cast<int>(elems.size()) == subset_size(s));
    for (std::size_t i = 0; i < elems.size(); ++i)
      CHECK(mono(static_cast<int>(i)) == elems[i]);
  }
  CHECK(full_subset(2) == 0b111u);
  CHECK(subset_to_mono(full_subset(3), 3) == identity_map(3));
}

TEST_CASE("subset reflection") {
  CHECK(reflect_subset(0b1u, 3) == 0b1000u);
  CHECK(reflect_subset(0b1011u, 3) == 0b1101u);
  for (VertexSubset s = 1; s < (1u << 5); ++s) {
    CHECK(reflect_subset(reflect_subset(s, 4), 4) == s);
    CHECK(subset_size(reflect_subset(s, 4)) == subset_size(s));
  }
  CHECK(reflect_subset(full_subset(4), 4) == full_subset(4));
}
