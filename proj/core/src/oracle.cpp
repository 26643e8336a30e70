#include "subdiv/oracle.hpp"

#include <algorithm>
#include <utility>

namespace subdiv {

namespace {

using Signature = std::vector<std::uint32_t>;

Signature object_signature(const FinCategory& c, ObjectId x) {
  Signature s;
  s.push_back(c.hom_size(x, x));
  std::vector<std::uint32_t> out, in;
  for (ObjectId z = 0; z < c.object_count(); ++z) {
    out.push_back(c.hom_size(x, z));
    in.push_back(c.hom_size(z, x));
  }
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  s.insert(s.end(), out.begin(), out.end());
  s.insert(s.end(), in.begin(), in.end());
  return s;
}

struct Searcher {
  const FinCategory& a;
  const FinCategory& b;
  const IsoSearchConfig& cfg;
  IsoSearchResult out;
  bool stop = false;

  ObjectId n_obj;
  MorphismId n_mor;
  std::vector<Signature> sig_a, sig_b;
  std::vector<ObjectId> oimg, oimg_inv;
  std::vector<char> oused;
  std::vector<MorphismId> img;
  std::vector<char> used;

  // Objects adjacent through a nonzero hom set, either direction.
  std::vector<std::vector<ObjectId>> adj_a, adj_b;
  // Interleaved assignment plan: each object is followed immediately by
  // every morphism whose two endpoints have now both been placed, so a bad
  // object choice is contradicted as early as possible.
  struct Var {
    bool is_object;
    std::uint32_t id;
  };
  std::vector<Var> vars;
  // producers[m]: non-identity pairs (g, f) with g after f = m.
  std::vector<std::vector<std::pair<MorphismId, MorphismId>>> producers;
  // A producer pair of m placed before m in the plan, if any: it pins the
  // image of m to a single candidate.
  std::vector<std::array<MorphismId, 2>> force_pair;
  // Non-identity x with x after m defined, resp. m after x defined.
  std::vector<std::vector<MorphismId>> left_of, right_of;
  // Non-identity morphisms of b grouped by (dom, cod).
  std::vector<std::vector<MorphismId>> bblock;

  Searcher(const FinCategory& a_, const FinCategory& b_, const IsoSearchConfig& cfg_)
      : a(a_), b(b_), cfg(cfg_) {
    n_obj = a.object_count();
    n_mor = a.morphism_count();
    if (cfg.use_object_signatures) {
      for (ObjectId x = 0; x < n_obj; ++x) sig_a.push_back(object_signature(a, x));
      for (ObjectId y = 0; y < n_obj; ++y) sig_b.push_back(object_signature(b, y));
    }
    oimg.assign(n_obj, kNoObject);
    oimg_inv.assign(n_obj, kNoObject);
    oused.assign(n_obj, 0);
    img.assign(n_mor, kNoMorphism);
    used.assign(n_mor, 0);

    auto adjacency = [](const FinCategory& c) {
      const ObjectId n = c.object_count();
      std::vector<std::vector<ObjectId>> adj(n);
      for (ObjectId x = 0; x < n; ++x)
        for (ObjectId z = 0; z < n; ++z)
          if (z != x && (c.hom_size(x, z) > 0 || c.hom_size(z, x) > 0))
            adj[x].push_back(z);
      return adj;
    };
    adj_a = adjacency(a);
    adj_b = adjacency(b);

    bblock.resize(static_cast<std::size_t>(n_obj) * n_obj);
    for (MorphismId v = n_obj; v < n_mor; ++v)
      bblock[static_cast<std::size_t>(b.dom(v)) * n_obj + b.cod(v)].push_back(v);

    producers.resize(n_mor);
    left_of.resize(n_mor);
    right_of.resize(n_mor);
    for (MorphismId f = n_obj; f < n_mor; ++f)
      for (MorphismId g = n_obj; g < n_mor; ++g)
        if (a.composable(g, f)) {
          producers[a.compose(g, f)].push_back({g, f});
          right_of[g].push_back(f);
          left_of[f].push_back(g);
        }

    plan();
  }

  // Objects with many already-placed neighbors go early, so the pairwise
  // hom check bites as soon as possible. After every object, all morphisms
  // whose endpoints are now placed follow at once: image-pinned ones first,
  // then by how many placed partners constrain them.
  void plan() {
    force_pair.assign(n_mor, {kNoMorphism, kNoMorphism});
    std::vector<char> oplaced(n_obj, 0), mplaced(n_mor, 0);
    for (MorphismId o = 0; o < n_obj; ++o) mplaced[o] = 1;
    std::vector<int> olinks(n_obj, 0), mlinks(n_mor, 0);
    std::vector<MorphismId> pinned, pool;
    std::size_t head = 0;

    auto place_morphism = [&](MorphismId m) {
      vars.push_back({false, m});
      mplaced[m] = 1;
      for (MorphismId x : left_of[m])
        if (!mplaced[x]) mlinks[x]++;
      for (MorphismId x : right_of[m])
        if (!mplaced[x]) mlinks[x]++;
      auto pin = [&](MorphismId g, MorphismId f) {
        const MorphismId c = a.compose(g, f);
        if (!mplaced[c] && force_pair[c][0] == kNoMorphism) {
          force_pair[c] = {g, f};
          pinned.push_back(c);
        }
      };
      for (MorphismId x : right_of[m])
        if (mplaced[x]) pin(m, x);
      for (MorphismId x : left_of[m])
        if (mplaced[x]) pin(x, m);
      if (a.composable(m, m)) pin(m, m);
    };

    for (ObjectId step = 0; step < n_obj; ++step) {
      ObjectId best = kNoObject;
      for (ObjectId x = 0; x < n_obj; ++x) {
        if (oplaced[x]) continue;
        if (best == kNoObject || olinks[x] > olinks[best] ||
            (olinks[x] == olinks[best] &&
             adj_a[x].size() > adj_a[best].size()))
          best = x;
      }
      vars.push_back({true, best});
      oplaced[best] = 1;
      for (ObjectId z : adj_a[best])
        if (!oplaced[z]) olinks[z]++;

      for (MorphismId m = n_obj; m < n_mor; ++m)
        if (!mplaced[m] && (a.dom(m) == best || a.cod(m) == best) &&
            oplaced[a.dom(m)] && oplaced[a.cod(m)])
          pool.push_back(m);
      while (true) {
        MorphismId pick = kNoMorphism;
        while (head < pinned.size()) {
          if (!mplaced[pinned[head]]) {
            pick = pinned[head++];
            break;
          }
          ++head;
        }
        if (pick == kNoMorphism) {
          for (MorphismId m : pool) {
            if (mplaced[m]) continue;
            if (pick == kNoMorphism || mlinks[m] > mlinks[pick] ||
                (mlinks[m] == mlinks[pick] &&
                 left_of[m].size() + right_of[m].size() >
                     left_of[pick].size() + right_of[pick].size()))
              pick = m;
          }
        }
        if (pick == kNoMorphism) break;
        place_morphism(pick);
      }
      pool.erase(std::remove_if(pool.begin(), pool.end(),
                                [&](MorphismId m) { return mplaced[m]; }),
                 pool.end());
    }
  }

  void tick() {
    ++out.nodes;
    if (cfg.node_limit >= 0 && out.nodes > cfg.node_limit)
      throw SearchBudgetExceeded(
          "isomorphism search exceeded its node budget",
          IsoSearchResult{out.isos, false, out.nodes});
  }

  bool object_feasible(ObjectId x, ObjectId y) const {
    if (cfg.use_object_signatures && sig_a[x] != sig_b[y]) return false;
    if (cfg.use_pairwise_hom_check) {
      for (ObjectId x2 : adj_a[x]) {
        const ObjectId y2 = oimg[x2];
        if (y2 == kNoObject) continue;
        if (a.hom_size(x, x2) != b.hom_size(y, y2)) return false;
        if (a.hom_size(x2, x) != b.hom_size(y2, y)) return false;
      }
      // Catches nonzero hom sets of b that a lacks entirely.
      for (ObjectId y2 : adj_b[y]) {
        const ObjectId x2 = oimg_inv[y2];
        if (x2 == kNoObject) continue;
        if (a.hom_size(x, x2) != b.hom_size(y, y2)) return false;
        if (a.hom_size(x2, x) != b.hom_size(y2, y)) return false;
      }
    }
    return true;
  }

  // All composition constraints that become fully determined once the
  // non-identity morphism m is mapped to v. Identity images are already in
  // place, so a triple is verified exactly when its last member is mapped.
  bool composition_ok(MorphismId m, MorphismId v) const {
    auto check_pair = [&](MorphismId g, MorphismId f) {
      const MorphismId c = a.compose(g, f);
      if (img[c] == kNoMorphism) return true;
      return b.compose(img[g], img[f]) == img[c];
    };
    if (a.composable(m, m) && !check_pair(m, m)) return false;
    for (MorphismId x : right_of[m]) {
      if (x == m || img[x] == kNoMorphism) continue;
      if (!check_pair(m, x)) return false;
    }
    for (MorphismId x : left_of[m]) {
      if (x == m || img[x] == kNoMorphism) continue;
      if (!check_pair(x, m)) return false;
    }
    for (auto [g, f] : producers[m]) {
      if (g == m || f == m) continue;
      if (img[g] == kNoMorphism || img[f] == kNoMorphism) continue;
      if (b.compose(img[g], img[f]) != v) return false;
    }
    return true;
  }

  void try_value(std::size_t k, MorphismId m, MorphismId v) {
    tick();
    img[m] = v;
    if (composition_ok(m, v)) {
      used[v] = 1;
      extend(k + 1);
      used[v] = 0;
    }
    img[m] = kNoMorphism;
  }

  void extend(std::size_t k) {
    if (stop) return;
    if (k == vars.size()) {
      out.isos.push_back(Functor{oimg, img});
      if (cfg.result_limit > 0 && out.isos.size() >= cfg.result_limit) {
        out.complete = false;
        stop = true;
      }
      return;
    }
    if (!vars[k].is_object) {
      const MorphismId m = vars[k].id;
      if (force_pair[m][0] != kNoMorphism) {
        const MorphismId v =
            b.compose(img[force_pair[m][0]], img[force_pair[m][1]]);
        if (!b.is_identity(v) && !used[v]) try_value(k, m, v);
        return;
      }
      const std::vector<MorphismId>& block =
          bblock[static_cast<std::size_t>(oimg[a.dom(m)]) * n_obj +
                 oimg[a.cod(m)]];
      for (MorphismId v : block) {
        if (used[v]) continue;
        try_value(k, m, v);
        if (stop) return;
      }
      return;
    }
    const ObjectId x = vars[k].id;
    for (ObjectId y = 0; y < n_obj; ++y) {
      if (oused[y]) continue;
      tick();
      if (object_feasible(x, y)) {
        oimg[x] = y;
        oimg_inv[y] = x;
        oused[y] = 1;
        img[x] = y;
        extend(k + 1);
        img[x] = kNoMorphism;
        oused[y] = 0;
        oimg_inv[y] = kNoObject;
        oimg[x] = kNoObject;
      }
      if (stop) return;
    }
  }
};

}  // namespace

IsoSearchResult find_isomorphisms(const FinCategory& a, const FinCategory& b,
                                  const IsoSearchConfig& cfg) {
  if (a.object_count() != b.object_count() ||
      a.morphism_count() != b.morphism_count())
    return {};
  Searcher s(a, b, cfg);
  s.extend(0);
  return std::move(s.out);
}

IsoSearchResult automorphism_group(const FinCategory& c, const IsoSearchConfig& cfg) {
  return find_isomorphisms(c, c, cfg);
}

TriangleCensus brute_triangle_census(const FinCategory& c) {
  TriangleCensus census;
  for (MorphismId p = c.object_count(); p < c.morphism_count(); ++p)
    for (MorphismId q = c.object_count(); q < c.morphism_count(); ++q) {
      if (!c.composable(q, p)) continue;
      const MorphismId qp = c.compose(q, p);
      if (c.is_identity(qp)) {
        std::array<MorphismId, 2> key{p, q};
        std::sort(key.begin(), key.end());
        ++census.collapsed[key];
      } else {
        std::array<MorphismId, 3> key{p, q, qp};
        std::sort(key.begin(), key.end());
        ++census.forms[key];
      }
    }
  return census;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> v;
    v.push_back({"cyclic2", cyclic_group(2)});
    v.push_back({"cyclic3", cyclic_group(3)});
    v.push_back({"cyclic4", cyclic_group(4)});
    v.push_back({"cyclic5", cyclic_group(5)});
    v.push_back({"cyclic6", cyclic_group(6)});
    v.push_back({"cyclic7", cyclic_group(7)});
    v.push_back({"cyclic9", cyclic_group(9)});
    v.push_back({"klein_four", klein_four()});
    v.push_back({"dihedral3", dihedral_group(3)});
    v.push_back({"dihedral4", dihedral_group(4)});
    v.push_back({"quaternion", quaternion_group()});
    v.push_back({"frobenius21", frobenius21()});
    v.push_back({"pair2", pair_groupoid(2)});
    v.push_back({"pair3", pair_groupoid(3)});
    v.push_back({"vertex_cyclic2_2", vertex_group_groupoid(cyclic_group(2), 2)});
    v.push_back({"discrete3", discrete(3)});
    {
      FinCategory z3 = cyclic_group(3), p2 = pair_groupoid(2);
      v.push_back({"cyclic3+pair2", coproduct({&z3, &p2}).cat});
    }
    {
      FinCategory d3 = dihedral_group(3), z2 = cyclic_group(2);
      v.push_back({"dihedral3+cyclic2", coproduct({&d3, &z2}).cat});
    }
    {
      FinCategory d2 = discrete(2), v4 = klein_four();
      v.push_back({"discrete2+klein_four", coproduct({&d2, &v4}).cat});
    }
    return v;
  }();
  return entries;
}

}  // namespace subdiv
