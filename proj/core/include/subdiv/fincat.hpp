#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "subdiv/errors.hpp"

namespace subdiv {

using ObjectId = std::uint32_t;
using MorphismId = std::uint32_t;

inline constexpr ObjectId kNoObject = 0xFFFFFFFFu;
inline constexpr MorphismId kNoMorphism = 0xFFFFFFFFu;

struct Arrow {
  ObjectId dom = kNoObject;
  ObjectId cod = kNoObject;
  bool operator==(const Arrow&) const = default;
};

// A finite category with a dense composition table.
//
// Ids are contiguous and 0-based. Morphism ids are canonical: morphism i
// is the identity of object i for all i < object_count(). compose(g, f)
// means "g after f" and is defined exactly when dom(g) == cod(f).
// Instances are immutable after construction; the constructor checks
// layout (bounds, identity placement, closure of the table) and
// validate_category() additionally checks the axioms exhaustively.
class FinCategory {
public:
  FinCategory(ObjectId n_objects, std::vector<Arrow> arrows,
              const std::vector<std::array<MorphismId, 3>>& compositions);

  ObjectId object_count() const { return n_objects_; }
  MorphismId morphism_count() const { return static_cast<MorphismId>(arrows_.size()); }

  const Arrow& arrow(MorphismId m) const { return arrows_[m]; }
  ObjectId dom(MorphismId m) const { return arrows_[m].dom; }
  ObjectId cod(MorphismId m) const { return arrows_[m].cod; }
  MorphismId identity(ObjectId o) const { return o; }
  bool is_identity(MorphismId m) const { return m < n_objects_; }

  bool composable(MorphismId g, MorphismId f) const { return dom(g) == cod(f); }
  MorphismId compose(MorphismId g, MorphismId f) const;      // throws if not composable
  MorphismId try_compose(MorphismId g, MorphismId f) const;  // kNoMorphism if not

  const std::vector<MorphismId>& morphisms_from(ObjectId o) const { return out_[o]; }
  const std::vector<MorphismId>& morphisms_into(ObjectId o) const { return in_[o]; }
  std::vector<MorphismId> hom(ObjectId x, ObjectId y) const;
  std::uint32_t hom_size(ObjectId x, ObjectId y) const {
    return hom_size_[static_cast<std::size_t>(x) * n_objects_ + y];
  }

  bool operator==(const FinCategory& other) const;

private:
  ObjectId n_objects_;
  std::vector<Arrow> arrows_;
  std::vector<MorphismId> table_;  // dense m*m, kNoMorphism where undefined
  std::vector<std::vector<MorphismId>> out_;
  std::vector<std::vector<MorphismId>> in_;
  std::vector<std::uint32_t> hom_size_;
};

// Exhaustive axiom check: identity laws, closure, associativity.
void validate_category(const FinCategory& c);

// A category plus the two-sided inverse of every morphism.
class FinGroupoid {
public:
  explicit FinGroupoid(FinCategory c);  // throws NotAGroupoid
  const FinCategory& category() const { return cat_; }
  MorphismId inverse(MorphismId m) const { return inv_[m]; }

private:
  FinCategory cat_;
  std::vector<MorphismId> inv_;
};

FinGroupoid as_groupoid(const FinCategory& c);

FinCategory opposite(const FinCategory& c);

// Disjoint union; keeps per-part id translation tables.
struct Coproduct {
  FinCategory cat;
  std::vector<std::vector<ObjectId>> object_map;      // [part][local] -> global
  std::vector<std::vector<MorphismId>> morphism_map;  // [part][local] -> global
};
Coproduct coproduct(const std::vector<const FinCategory*>& parts);

struct Components {
  std::vector<int> object_component;           // object -> component index
  std::vector<std::vector<ObjectId>> members;  // component -> sorted objects
  int count() const { return static_cast<int>(members.size()); }
};
Components connected_components(const FinCategory& c);

// Total maps on objects and morphisms.
struct Functor {
  std::vector<ObjectId> objects;
  std::vector<MorphismId> morphisms;
  bool operator==(const Functor&) const = default;
};

void check_functor(const FinCategory& dom, const FinCategory& cod,
                   const Functor& f);  // throws CategoryInvalid
bool is_functor(const FinCategory& dom, const FinCategory& cod, const Functor& f);
bool is_isomorphism(const FinCategory& dom, const FinCategory& cod, const Functor& f);
Functor identity_functor(const FinCategory& c);
Functor compose(const Functor& outer, const Functor& inner);

// Builders. Groups are one-object categories whose morphism 0 is the unit.
FinCategory cyclic_group(int n);
FinCategory dihedral_group(int n);  // 2n elements; r^k -> id k, s r^k -> id n+k
FinCategory klein_four();
FinCategory quaternion_group();     // 1,-1,i,-i,j,-j,k,-k -> ids 0..7
FinCategory frobenius21();          // Z/7 x| Z/3, a^i b^j -> id 3i+j
FinCategory alternating4();         // even permutations of {0,1,2,3} in lex order
FinCategory dicyclic(int n);        // order 4n; b^2 = a^n central; a^i b^j -> id 2n*j + i
FinCategory metacyclic(int m, int n, int r);  // a^m = b^n = 1, b a b^-1 = a^r;
                                              // a^i b^j -> id m*j + i
FinCategory pair_groupoid(int n);   // morphism (i -> j) -> id n*i+j reordered canonically
FinCategory discrete(int n);
FinCategory poset_interval(int n);  // the total order 0 <= 1 <= ... <= n
FinCategory zigzag(int k);          // k+1 objects, arrows between neighbours,
                                    // each arrow oriented from its even endpoint
// Connected groupoid with n objects all having the given vertex group.
FinCategory vertex_group_groupoid(const FinCategory& group, int n);

}  // namespace subdiv
