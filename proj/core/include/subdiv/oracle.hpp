#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "subdiv/errors.hpp"
#include "subdiv/fincat.hpp"

namespace subdiv {

struct IsoSearchConfig {
  long long node_limit = -1;     // < 0: unbounded
  std::size_t result_limit = 0;  // 0: collect all
  bool use_object_signatures = true;
  bool use_pairwise_hom_check = true;
};

struct IsoSearchResult {
  std::vector<Functor> isos;
  bool complete = true;  // the whole search tree was exhausted
  long long nodes = 0;
};

// Node budget ran out; carries whatever had been found by then.
class SearchBudgetExceeded : public Error {
public:
  SearchBudgetExceeded(const std::string& what, IsoSearchResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const IsoSearchResult& partial() const { return partial_; }

private:
  IsoSearchResult partial_;
};

// Backtracking search for all category isomorphisms a -> b, independent of
// any subdivision machinery. Objects are matched first (with hom-size
// pruning), then morphisms hom-block by hom-block with composition checks.
IsoSearchResult find_isomorphisms(const FinCategory& a, const FinCategory& b,
                                  const IsoSearchConfig& cfg = {});

IsoSearchResult automorphism_group(const FinCategory& c,
                                   const IsoSearchConfig& cfg = {});

// Chain census straight off the composition table: every composable pair
// (p, q) of non-identity morphisms lands in forms under the sorted value
// multiset {p, q, q after p}, or in collapsed when q after p is an identity.
struct TriangleCensus {
  std::map<std::array<MorphismId, 3>, int> forms;
  std::map<std::array<MorphismId, 2>, int> collapsed;
};

TriangleCensus brute_triangle_census(const FinCategory& c);

struct CorpusEntry {
  std::string name;
  FinCategory cat;
};

// Fixed roster of groupoids the test suite sweeps over.
const std::vector<CorpusEntry>& corpus();

}  // namespace subdiv
