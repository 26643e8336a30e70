#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "subdiv/errors.hpp"
#include "subdiv/fincat.hpp"

namespace subdiv {

// A morphism of the base category shows up in a subdivision as a dimension-1
// object; a composable pair shows up as a dimension-2 object whose incoming
// morphisms record the pair and its composite. ProbedCategory decodes that
// data from a bare FinCategory without ever being told which category was
// subdivided, using only object-level counting.

enum class RelationKind { end_to_end, ends_to_ends, end_to_endo, endo_to_endo, unrelated };

// end_to_end:   sequential = composable one way round, forked = fan-in or fan-out
// ends_to_ends: parallel = same ordered endpoints, opposed = reversed
enum class RelationSubtype { none, sequential, forked, parallel, opposed };

struct RelationType {
  RelationKind kind;
  RelationSubtype subtype = RelationSubtype::none;
  bool operator==(const RelationType&) const = default;
};

// A "side" that may be collapsed: nullopt stands for an identity composite.
using ThirdSide = std::optional<ObjectId>;

struct Filler {
  ObjectId cell;    // the dimension-2 object
  ThirdSide third;  // its remaining side once the probed pair is removed
};

class ProbedCategory {
 public:
  // Throws NotASubdivisionShape when the in-degrees or the incidence
  // structure cannot come from a subdivision.
  explicit ProbedCategory(const FinCategory& c);

  const FinCategory& category() const { return cat_; }
  int dim(ObjectId o) const { return dim_[o]; }
  int max_dim() const { return max_dim_; }
  const std::vector<ObjectId>& objects_of_dim(int d) const;

  // dimension-1 objects
  const std::vector<ObjectId>& ends(ObjectId e) const;  // 1 or 2 vertex objects
  bool is_endo(ObjectId e) const { return ends(e).size() == 1; }

  // dimension-2 objects
  const std::vector<ObjectId>& sides(ObjectId y) const;  // 2 or 3 side objects
  bool is_degenerate(ObjectId y) const;                  // composite side collapsed

  // counting probes over dimension-1 objects
  std::vector<Filler> fillers(ObjectId f, ObjectId g) const;
  std::vector<ThirdSide> third_sides(ObjectId f, ObjectId g) const;
  int count_form(ObjectId f, ObjectId g, ThirdSide h) const;

  // groupoid decoding
  bool is_self_inverse(ObjectId f) const;
  bool is_inverse_pair(ObjectId f, ObjectId g) const;
  ObjectId inverse_of(ObjectId f) const;  // throws NotAGroupoid when unpaired
  RelationType relation_type(ObjectId f, ObjectId g) const;
  ThirdSide square_of(ObjectId f) const;
  ObjectId cube_of(ObjectId f) const;
  bool commutes(ObjectId f, ObjectId g) const;
  std::set<ThirdSide> composite_pair_set(ObjectId f, ObjectId g) const;

 private:
  using Pair = std::array<ObjectId, 2>;
  using Triple = std::array<ObjectId, 3>;

  void require_dim(ObjectId o, int d, const char* who) const;

  FinCategory cat_;
  int max_dim_ = 0;
  std::vector<int> dim_;
  std::vector<std::vector<ObjectId>> by_dim_;
  std::vector<std::vector<ObjectId>> ends_;   // dim-1 objects only
  std::vector<std::vector<ObjectId>> sides_;  // dim-2 objects only
  std::vector<char> degen_;
  std::map<Triple, std::vector<ObjectId>> form_index_;
  std::map<Pair, std::vector<ObjectId>> degen_index_;
  std::map<Pair, std::vector<Filler>> pair_index_;
  std::vector<ObjectId> partner_;  // inverse partner, kNoObject if unknown
  std::vector<char> self_inverse_;
};

}  // namespace subdiv
