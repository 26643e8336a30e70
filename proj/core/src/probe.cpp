#include "subdiv/probe.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>

namespace subdiv {

namespace {

std::array<ObjectId, 2> sorted_pair(ObjectId a, ObjectId b) {
  if (a > b) std::swap(a, b);
  return {a, b};
}

std::array<ObjectId, 3> sorted_triple(ObjectId a, ObjectId b, ObjectId c) {
  std::array<ObjectId, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

ProbedCategory::ProbedCategory(const FinCategory& c) : cat_(c) {
  const ObjectId n = cat_.object_count();
  dim_.assign(n, 0);
  ends_.resize(n);
  sides_.resize(n);
  degen_.assign(n, 0);
  partner_.assign(n, kNoObject);
  self_inverse_.assign(n, 0);

  // The in-degree of an object determines its dimension: a dimension-m object
  // receives exactly 2^(m+1)-1 morphisms (one per nonempty vertex subset).
  for (ObjectId o = 0; o < n; ++o) {
    const auto in = static_cast<std::uint64_t>(cat_.morphisms_into(o).size()) + 1;
    if (!std::has_single_bit(in) || in < 2)
      throw NotASubdivisionShape("object in-degree is not of the form 2^(m+1)-1");
    dim_[o] = std::bit_width(in) - 2;
    max_dim_ = std::max(max_dim_, dim_[o]);
  }
  by_dim_.resize(static_cast<std::size_t>(max_dim_) + 1);
  for (ObjectId o = 0; o < n; ++o)
    by_dim_[static_cast<std::size_t>(dim_[o])].push_back(o);

  for (MorphismId m = n; m < cat_.morphism_count(); ++m) {
    if (dim_[cat_.dom(m)] >= dim_[cat_.cod(m)])
      throw NotASubdivisionShape("non-identity morphism does not raise dimension");
  }

  if (by_dim_.size() > 1) {
    for (ObjectId e : by_dim_[1]) {
      std::vector<ObjectId> verts;
      for (MorphismId m : cat_.morphisms_into(e))
        if (m != e) verts.push_back(cat_.dom(m));
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      ends_[e] = std::move(verts);
    }
  }

  if (by_dim_.size() > 2) {
    for (ObjectId y : by_dim_[2]) {
      std::vector<ObjectId> mid;
      int vertex_arrows = 0;
      for (MorphismId m : cat_.morphisms_into(y)) {
        if (static_cast<ObjectId>(m) == y) continue;
        if (dim_[cat_.dom(m)] == 0)
          ++vertex_arrows;
        else
          mid.push_back(cat_.dom(m));
      }
      if (!((vertex_arrows == 3 && mid.size() == 3) || (vertex_arrows == 4 && mid.size() == 2)))
        throw NotASubdivisionShape("dimension-2 object has malformed incidence counts");
      std::sort(mid.begin(), mid.end());
      degen_[y] = mid.size() == 2;
      sides_[y] = std::move(mid);

      const auto& s = sides_[y];
      if (degen_[y]) {
        degen_index_[sorted_pair(s[0], s[1])].push_back(y);
        pair_index_[sorted_pair(s[0], s[1])].push_back({y, std::nullopt});
        if (s[0] == s[1]) {
          self_inverse_[s[0]] = 1;
        } else {
          for (int i = 0; i < 2; ++i) {
            ObjectId a = s[i], b = s[1 - i];
            if (partner_[a] != kNoObject && partner_[a] != b)
              throw NotASubdivisionShape("conflicting inverse partners");
            partner_[a] = b;
          }
        }
      } else {
        form_index_[sorted_triple(s[0], s[1], s[2])].push_back(y);
        std::set<std::array<ObjectId, 2>> seen;
        const int pick[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
        for (const auto& p : pick) {
          auto key = sorted_pair(s[p[0]], s[p[1]]);
          if (seen.insert(key).second) pair_index_[key].push_back({y, s[p[2]]});
        }
      }
    }
  }

  for (ObjectId o = 0; o < n; ++o)
    if (self_inverse_[o] && partner_[o] != kNoObject)
      throw NotASubdivisionShape("object marked both self-paired and cross-paired");
}

const std::vector<ObjectId>& ProbedCategory::objects_of_dim(int d) const {
  static const std::vector<ObjectId> empty;
  if (d < 0 || d > max_dim_) return empty;
  return by_dim_[static_cast<std::size_t>(d)];
}

void ProbedCategory::require_dim(ObjectId o, int d, const char* who) const {
  if (o >= dim_.size() || dim_[o] != d)
    throw Error(std::string(who) + ": object has the wrong dimension");
}

const std::vector<ObjectId>& ProbedCategory::ends(ObjectId e) const {
  require_dim(e, 1, "ends");
  return ends_[e];
}

const std::vector<ObjectId>& ProbedCategory::sides(ObjectId y) const {
  require_dim(y, 2, "sides");
  return sides_[y];
}

bool ProbedCategory::is_degenerate(ObjectId y) const {
  require_dim(y, 2, "is_degenerate");
  return degen_[y];
}

std::vector<Filler> ProbedCategory::fillers(ObjectId f, ObjectId g) const {
  require_dim(f, 1, "fillers");
  require_dim(g, 1, "fillers");
  auto it = pair_index_.find(sorted_pair(f, g));
  if (it == pair_index_.end()) return {};
  return it->second;
}

std::vector<ThirdSide> ProbedCategory::third_sides(ObjectId f, ObjectId g) const {
  std::vector<ThirdSide> out;
  for (const auto& fill : fillers(f, g)) out.push_back(fill.third);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int ProbedCategory::count_form(ObjectId f, ObjectId g, ThirdSide h) const {
  require_dim(f, 1, "count_form");
  require_dim(g, 1, "count_form");
  if (h) {
    require_dim(*h, 1, "count_form");
    auto it = form_index_.find(sorted_triple(f, g, *h));
    return it == form_index_.end() ? 0 : static_cast<int>(it->second.size());
  }
  auto it = degen_index_.find(sorted_pair(f, g));
  return it == degen_index_.end() ? 0 : static_cast<int>(it->second.size());
}

bool ProbedCategory::is_self_inverse(ObjectId f) const {
  require_dim(f, 1, "is_self_inverse");
  return self_inverse_[f] != 0;
}

bool ProbedCategory::is_inverse_pair(ObjectId f, ObjectId g) const {
  require_dim(f, 1, "is_inverse_pair");
  require_dim(g, 1, "is_inverse_pair");
  if (f == g) return is_self_inverse(f);
  return count_form(f, g, std::nullopt) > 0;
}

ObjectId ProbedCategory::inverse_of(ObjectId f) const {
  require_dim(f, 1, "inverse_of");
  if (self_inverse_[f]) return f;
  if (partner_[f] == kNoObject)
    throw NotAGroupoid(f, "object has no inverse partner");
  return partner_[f];
}

RelationType ProbedCategory::relation_type(ObjectId f, ObjectId g) const {
  require_dim(f, 1, "relation_type");
  require_dim(g, 1, "relation_type");
  if (f == g) throw HypothesisViolated(HypothesisViolated::Reason::equal, "relation_type needs two distinct objects");
  const auto& ef = ends_[f];
  const auto& eg = ends_[g];
  std::vector<ObjectId> common;
  std::set_intersection(ef.begin(), ef.end(), eg.begin(), eg.end(), std::back_inserter(common));
  if (common.empty()) return {RelationKind::unrelated};
  if (ef.size() == 1 && eg.size() == 1) return {RelationKind::endo_to_endo};
  if (ef.size() == 1 || eg.size() == 1) return {RelationKind::end_to_endo};
  const auto n_fill = fillers(f, g).size();
  if (common.size() == 2)
    return {RelationKind::ends_to_ends,
            n_fill == 4 ? RelationSubtype::parallel : RelationSubtype::opposed};
  return {RelationKind::end_to_end,
          n_fill == 1 ? RelationSubtype::sequential : RelationSubtype::forked};
}

ThirdSide ProbedCategory::square_of(ObjectId f) const {
  require_dim(f, 1, "square_of");
  if (!is_endo(f))
    throw HypothesisViolated(HypothesisViolated::Reason::not_composable,
                             "square_of needs an endomorphism object");
  auto fill = fillers(f, f);
  if (fill.size() != 1)
    throw NotASubdivisionShape("self-pair does not have a unique filler");
  return fill[0].third;
}

ObjectId ProbedCategory::cube_of(ObjectId f) const {
  require_dim(f, 1, "cube_of");
  if (!is_endo(f))
    throw HypothesisViolated(HypothesisViolated::Reason::not_composable,
                             "cube_of needs an endomorphism object");
  auto sq = square_of(f);
  if (!sq)
    throw HypothesisViolated(HypothesisViolated::Reason::self_inverse,
                             "cube_of is ambiguous for a self-inverse object");
  const ObjectId inv = inverse_of(f);
  if (*sq == inv)
    throw HypothesisViolated(HypothesisViolated::Reason::cube_is_identity,
                             "the cube collapses to an identity");
  if (count_form(f, *sq, inv) == 4) return inv;
  for (const auto& h : third_sides(f, *sq)) {
    if (!h || *h == inv) continue;
    if (count_form(f, *sq, *h) == 2) return *h;
  }
  throw NotASubdivisionShape("cube_of found no admissible side");
}

bool ProbedCategory::commutes(ObjectId f, ObjectId g) const {
  require_dim(f, 1, "commutes");
  require_dim(g, 1, "commutes");
  if (f == g)
    throw HypothesisViolated(HypothesisViolated::Reason::equal, "commutes needs two distinct objects");
  if (!is_endo(f) || !is_endo(g) || ends_[f] != ends_[g])
    throw HypothesisViolated(HypothesisViolated::Reason::not_composable,
                             "commutes needs co-located endomorphism objects");
  if (is_inverse_pair(f, g))
    throw HypothesisViolated(HypothesisViolated::Reason::inverse_pair,
                             "commutes is trivial for an inverse pair");
  auto sf = square_of(f);
  auto sg = square_of(g);
  if ((sf && *sf == g) || (sg && *sg == f))
    throw HypothesisViolated(HypothesisViolated::Reason::square_coincidence,
                             "commutes is trivial when one object squares to the other");
  for (const auto& h : third_sides(f, g)) {
    if (!h) throw NotASubdivisionShape("unexpected collapsed side");
    if (count_form(f, g, *h) % 2 != 0) return false;
  }
  return true;
}

std::set<ThirdSide> ProbedCategory::composite_pair_set(ObjectId f, ObjectId g) const {
  require_dim(f, 1, "composite_pair_set");
  require_dim(g, 1, "composite_pair_set");

  if (f == g) {
    if (!is_endo(f))
      throw HypothesisViolated(HypothesisViolated::Reason::not_composable,
                               "the pair is not composable either way");
    return {square_of(f)};
  }

  const RelationType rel = relation_type(f, g);
  switch (rel.kind) {
    case RelationKind::unrelated:
      throw HypothesisViolated(HypothesisViolated::Reason::not_composable,
                               "the pair is not composable either way");
    case RelationKind::end_to_end: {
      if (rel.subtype != RelationSubtype::sequential)
        throw HypothesisViolated(HypothesisViolated::Reason::not_composable,
                                 "the pair is not composable either way");
      auto fill = fillers(f, g);
      return {fill.at(0).third};
    }
    case RelationKind::ends_to_ends: {
      if (rel.subtype != RelationSubtype::opposed)
        throw HypothesisViolated(HypothesisViolated::Reason::not_composable,
                                 "the pair is not composable either way");
      std::set<ThirdSide> out;
      for (const auto& fill : fillers(f, g)) out.insert(fill.third);
      return out;
    }
    case RelationKind::end_to_endo: {
      const ObjectId non_endo = is_endo(f) ? g : f;
      const ObjectId endo = is_endo(f) ? f : g;
      for (const auto& h : third_sides(inverse_of(non_endo), endo)) {
        if (!h || *h == non_endo) continue;
        if (ends(*h) != ends(non_endo)) continue;
        if (fillers(*h, non_endo).size() == 4) return {*h};
      }
      throw NotASubdivisionShape("no side matches the one-sided composite");
    }
    case RelationKind::endo_to_endo:
      break;
  }

  // Both objects are endomorphisms over the same vertex. First the short
  // routes, where some algebraic coincidence pins the answer down directly.
  const ObjectId inv_f = inverse_of(f);
  const ObjectId inv_g = inverse_of(g);
  if (g == inv_f) return {std::nullopt};
  const ThirdSide sq_f = square_of(f);
  const ThirdSide sq_g = square_of(g);
  if (sq_f && *sq_f == g) return {cube_of(f)};
  if (sq_g && *sq_g == f) return {cube_of(g)};
  if (sq_f && *sq_f == inv_g) return {inv_f};
  if (sq_g && *sq_g == inv_f) return {inv_g};

  std::vector<ObjectId> thirds;
  for (const auto& h : third_sides(f, g))
    if (h) thirds.push_back(*h);
  if (thirds.empty()) throw NotASubdivisionShape("an endomorphism pair must have fillers");

  const bool self_f = !sq_f.has_value();
  const bool self_g = !sq_g.has_value();

  if (self_f && self_g) {
    // Counts are 6 on a single side when the pair commutes, 3 on each of two
    // sides otherwise; either way the distinct sides are exactly the answer.
    return std::set<ThirdSide>(thirds.begin(), thirds.end());
  }

  std::vector<int> counts;
  for (ObjectId h : thirds) counts.push_back(count_form(f, g, h));

  if (!self_f && !self_g && *sq_f == *sq_g) {
    // Equal non-trivial squares: the true sides carry the minimal count.
    const int best = *std::min_element(counts.begin(), counts.end());
    std::set<ThirdSide> out;
    for (std::size_t i = 0; i < thirds.size(); ++i)
      if (counts[i] == best) out.insert(thirds[i]);
    return out;
  }

  if (self_f != self_g) {
    // Exactly one square collapses: the true sides carry the maximal count.
    const int best = *std::max_element(counts.begin(), counts.end());
    std::set<ThirdSide> out;
    for (std::size_t i = 0; i < thirds.size(); ++i)
      if (counts[i] == best) out.insert(thirds[i]);
    return out;
  }

  // Distinct non-trivial squares. Disambiguate with the inverse probes.
  if (commutes(f, g)) {
    std::set<ThirdSide> out;
    for (ObjectId h : thirds)
      if (count_form(inv_f, g, h) >= 1 && count_form(f, inv_g, h) >= 1) out.insert(h);
    if (out.size() != 1)
      throw NotASubdivisionShape("commuting composite is not unique");
    return out;
  }
  if (*sq_f == inverse_of(*sq_g)) {
    std::set<ThirdSide> out;
    for (ObjectId h : thirds)
      if (count_form(inv_f, g, h) == 2 && count_form(f, inv_g, h) == 2) out.insert(h);
    return out;
  }
  std::set<ThirdSide> out;
  for (ObjectId h : thirds) {
    const int n0 = count_form(f, g, h);
    const int n1 = count_form(inv_f, g, h);
    const int n2 = count_form(f, inv_g, h);
    if (n0 == 1 && n1 == 1 && n2 == 1) {
      out.insert(h);
      continue;
    }
    const int twos = (n0 == 2) + (n1 == 2) + (n2 == 2);
    if (twos == 2 && count_form(inv_f, inv_g, h) == 1) out.insert(h);
  }
  return out;
}

}  // namespace subdiv
