#include "subdiv/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <vector>

#include "subdiv/graphs.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/probe.hpp"
#include "subdiv/reconstruct.hpp"
#include "subdiv/subdivision.hpp"

namespace subdiv {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

ObjectId edge_object(const SdCategory& sd, MorphismId m) {
  return sd.object_of(chain_simplex(sd.base(), {m}));
}

std::vector<MorphismId> nonidentity_endos(const FinCategory& c, ObjectId at) {
  std::vector<MorphismId> out;
  for (MorphismId m : c.morphisms_from(at))
    if (c.cod(m) == at && !c.is_identity(m)) out.push_back(m);
  return out;
}

Outcome check_dihedral3_subdivision_size() {
  const SdCategory sd = build_sd(dihedral_group(3), 2);
  const FinCategory& c = sd.category();
  bool ok = c.object_count() == 31 && c.morphism_count() == 191;
  std::map<std::size_t, int> in_counts;
  for (ObjectId o = 0; o < c.object_count(); ++o)
    ++in_counts[c.morphisms_into(o).size()];
  ok = ok && in_counts.size() == 3 && in_counts[1] == 1 && in_counts[3] == 5 &&
       in_counts[7] == 25;
  return {ok, std::to_string(c.object_count()) + " objects, " +
                  std::to_string(c.morphism_count()) +
                  " morphisms, in-degrees 1/3/7"};
}

Outcome check_interval_full_subdivision_autos() {
  const int expect[] = {2, 6, 24};
  std::string detail;
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const SdCategory sd = build_sd(poset_interval(n), kFullSubdivision);
    if (n == 3)
      ok = ok && sd.category().object_count() == 15 &&
           sd.category().morphism_count() == 65;
    const IsoSearchResult res = automorphism_group(sd.category());
    ok = ok && res.complete &&
         res.isos.size() == static_cast<std::size_t>(expect[n - 1]);
    if (!detail.empty()) detail += ", ";
    detail += "n=" + std::to_string(n) + ": " + std::to_string(res.isos.size());
  }
  return {ok, "full subdivision automorphisms " + detail};
}

Outcome check_zigzag_opposite_detection() {
  const FinCategory z = zigzag(2);
  const FinCategory zop = opposite(z);
  const IsoSearchResult base_isos = find_isomorphisms(z, zop);
  bool ok = base_isos.complete && base_isos.isos.empty();
  const SdCategory sd = build_sd(z, 2);
  const SdCategory sd_op = build_sd(zop, 2);
  const IsoSearchResult sd_isos =
      find_isomorphisms(sd.category(), sd_op.category());
  ok = ok && !sd_isos.isos.empty();
  const Functor rev = op_iso(sd, sd_op);
  ok = ok && is_isomorphism(sd.category(), sd_op.category(), rev);
  return {ok, "no base isomorphism onto the opposite, " +
                  std::to_string(sd_isos.isos.size()) +
                  " between the subdivisions"};
}

Outcome check_relation_table_and_assignments() {
  const auto& table = equation_subgraph_table();
  std::set<std::pair<int, int>> seen;
  int total = 0;
  bool ok = table.size() == 9;
  for (const auto& row : table)
    for (auto [u, v] : row.edges) {
      ok = ok && 0 <= u && u < v && v < 8;
      ok = ok && seen.insert({u, v}).second;
      ++total;
    }
  ok = ok && total == 28 && seen.size() == 28;
  const std::vector<unsigned> expect = {0, 1, 2, 4, 8, 12};
  ok = ok && enumerate_valid_assignments() == expect;
  return {ok, "28 disjoint covering edges, 6 admissible relation patterns"};
}

Outcome check_triangle_census_agreement() {
  long long cells = 0;
  for (const auto& entry : corpus()) {
    const FinCategory& base = entry.cat;
    const SdCategory sd = build_sd(base, 2);
    const ProbedCategory probe(sd.category());
    const TriangleCensus census = brute_triangle_census(base);

    std::map<std::array<ObjectId, 3>, int> probe_forms;
    std::map<std::array<ObjectId, 2>, int> probe_collapsed;
    for (ObjectId y : probe.objects_of_dim(2)) {
      const auto& s = probe.sides(y);
      if (probe.is_degenerate(y))
        ++probe_collapsed[{s[0], s[1]}];
      else
        ++probe_forms[{s[0], s[1], s[2]}];
    }

    std::map<std::array<ObjectId, 3>, int> expect_forms;
    for (const auto& [key, count] : census.forms) {
      std::array<ObjectId, 3> k{edge_object(sd, key[0]), edge_object(sd, key[1]),
                                edge_object(sd, key[2])};
      std::sort(k.begin(), k.end());
      expect_forms[k] += count;
      if (probe.count_form(k[0], k[1], k[2]) != count)
        return {false, entry.name + ": triangle count mismatch"};
      cells += count;
    }
    std::map<std::array<ObjectId, 2>, int> expect_collapsed;
    for (const auto& [key, count] : census.collapsed) {
      std::array<ObjectId, 2> k{edge_object(sd, key[0]), edge_object(sd, key[1])};
      std::sort(k.begin(), k.end());
      expect_collapsed[k] += count;
      if (probe.count_form(k[0], k[1], std::nullopt) != count)
        return {false, entry.name + ": collapsed count mismatch"};
      cells += count;
    }
    if (probe_forms != expect_forms || probe_collapsed != expect_collapsed)
      return {false, entry.name + ": census does not match the cell index"};
  }
  return {true, std::to_string(cells) + " cells matched across " +
                    std::to_string(corpus().size()) + " categories"};
}

Outcome check_commutation_and_word_fibers() {
  long long pairs = 0;
  for (const auto& entry : corpus()) {
    const FinCategory& base = entry.cat;
    const SdCategory sd = build_sd(base, 2);
    const ProbedCategory probe(sd.category());
    const FinGroupoid gpd(base);
    for (ObjectId at = 0; at < base.object_count(); ++at) {
      const auto endos = nonidentity_endos(base, at);
      for (MorphismId f : endos)
        for (MorphismId g : endos) {
          if (f == g || gpd.inverse(f) == g) continue;
          if (base.compose(f, f) == g || base.compose(g, g) == f) continue;
          const bool truth = base.compose(f, g) == base.compose(g, f);
          const ObjectId fo = edge_object(sd, f), go = edge_object(sd, g);
          if (probe.commutes(fo, go) != truth)
            return {false, entry.name + ": commutation read wrong"};

          const EvGraph ev = build_ev_graph(gpd, f, g, false);
          std::set<ObjectId> value_objects;
          for (std::size_t i = 0; i < ev.values.size(); ++i) {
            const int fiber = static_cast<int>(
                std::count(ev.values.begin(), ev.values.end(), ev.values[i]));
            const ObjectId ho = edge_object(sd, ev.values[i]);
            value_objects.insert(ho);
            if (probe.count_form(fo, go, ho) != fiber)
              return {false, entry.name + ": fiber size mismatch"};
          }
          std::set<ObjectId> thirds;
          for (const auto& t : probe.third_sides(fo, go))
            if (t) thirds.insert(*t);
          if (thirds != value_objects)
            return {false, entry.name + ": side set differs from word values"};
          ++pairs;
        }
    }
  }
  return {true, std::to_string(pairs) + " endomorphism pairs checked"};
}

Outcome check_composites_recovered_from_shape() {
  long long pairs = 0;
  int case_hits[4] = {0, 0, 0, 0};
  for (const auto& entry : corpus()) {
    const FinCategory& base = entry.cat;
    const SdCategory sd = build_sd(base, 2);
    const ProbedCategory probe(sd.category());
    const FinGroupoid gpd(base);
    for (MorphismId f = base.object_count(); f < base.morphism_count(); ++f)
      for (MorphismId g = base.object_count(); g < base.morphism_count(); ++g) {
        std::set<ThirdSide> expect;
        if (base.composable(f, g)) {
          const MorphismId c = base.compose(f, g);
          expect.insert(base.is_identity(c) ? ThirdSide{}
                                            : ThirdSide{edge_object(sd, c)});
        }
        if (base.composable(g, f)) {
          const MorphismId c = base.compose(g, f);
          expect.insert(base.is_identity(c) ? ThirdSide{}
                                            : ThirdSide{edge_object(sd, c)});
        }
        const ObjectId fo = edge_object(sd, f), go = edge_object(sd, g);
        if (expect.empty()) {
          try {
            probe.composite_pair_set(fo, go);
            return {false, entry.name + ": missing non-composable rejection"};
          } catch (const HypothesisViolated& e) {
            if (e.reason() != HypothesisViolated::Reason::not_composable)
              return {false, entry.name + ": wrong rejection reason"};
          }
        } else {
          if (probe.composite_pair_set(fo, go) != expect)
            return {false, entry.name + ": composite set read wrong"};
        }
        ++pairs;

        const bool endo_pair = base.dom(f) == base.cod(f) &&
                               base.dom(g) == base.cod(g) &&
                               base.dom(f) == base.dom(g);
        if (endo_pair && f != g && gpd.inverse(f) != g) {
          const MorphismId ff = base.compose(f, f), gg = base.compose(g, g);
          if (ff != g && gg != f && ff != gpd.inverse(g) && gg != gpd.inverse(f)) {
            const bool sf = base.is_identity(ff), sg = base.is_identity(gg);
            if (sf && sg)
              ++case_hits[0];
            else if (sf != sg)
              ++case_hits[2];
            else if (ff == gg)
              ++case_hits[1];
            else
              ++case_hits[3];
          }
        }
      }
  }
  const bool all_cases =
      case_hits[0] > 0 && case_hits[1] > 0 && case_hits[2] > 0 && case_hits[3] > 0;
  return {all_cases, std::to_string(pairs) + " pairs; square-type splits " +
                         std::to_string(case_hits[0]) + "/" +
                         std::to_string(case_hits[1]) + "/" +
                         std::to_string(case_hits[2]) + "/" +
                         std::to_string(case_hits[3])};
}

Outcome check_reconstruction_across_corpus() {
  std::vector<SdCategory> sds;
  sds.reserve(corpus().size());
  for (const auto& entry : corpus()) sds.push_back(build_sd(entry.cat, 2));
  long long reconstructed = 0;
  for (std::size_t i = 0; i < sds.size(); ++i)
    for (std::size_t j = 0; j < sds.size(); ++j) {
      IsoSearchConfig cfg;
      cfg.result_limit = 50;
      const IsoSearchResult res =
          find_isomorphisms(sds[i].category(), sds[j].category(), cfg);
      for (const Functor& big : res.isos) {
        const Functor f = reconstruct_functor(sds[i], sds[j], big);
        if (!is_isomorphism(corpus()[i].cat, corpus()[j].cat, f))
          return {false, corpus()[i].name + " -> " + corpus()[j].name +
                             ": reconstruction not an isomorphism"};
        ++reconstructed;
      }
    }
  return {true, std::to_string(reconstructed) +
                    " subdivision isomorphisms reconstructed over " +
                    std::to_string(sds.size() * sds.size()) + " pairs"};
}

Outcome check_reconstruction_conservative() {
  int round_trips = 0;
  for (const FinCategory& base : {dihedral_group(3), pair_groupoid(3)}) {
    const SdCategory sd = build_sd(base, 2);
    const IsoSearchResult autos = automorphism_group(base);
    if (!autos.complete) return {false, "base automorphism search incomplete"};
    for (const Functor& xi : autos.isos) {
      if (!conservativity_check(base, base, sd, sd, xi))
        return {false, "round trip altered a base automorphism"};
      ++round_trips;
    }
  }
  return {true, std::to_string(round_trips) + " base automorphisms round-tripped"};
}

Outcome check_cyclic4_klein_distinguished() {
  const SdCategory a = build_sd(cyclic_group(4), 2);
  const SdCategory b = build_sd(klein_four(), 2);
  const IsoSearchResult res = find_isomorphisms(a.category(), b.category());
  const bool ok = res.complete && res.isos.empty();
  return {ok, "order-4 subdivisions share sizes (" +
                  std::to_string(a.category().morphism_count()) +
                  " morphisms) yet admit no isomorphism"};
}

Outcome check_inversion_beyond_base_autos() {
  const FinCategory d3 = dihedral_group(3);
  const SdCategory sd = build_sd(d3, 2);
  const FinGroupoid gpd(d3);
  const Functor inv = alpha(sd, gpd);
  bool ok = is_isomorphism(sd.category(), sd.category(), inv);

  const IsoSearchResult base_autos = automorphism_group(d3);
  ok = ok && base_autos.complete && base_autos.isos.size() == 6;
  for (const Functor& xi : base_autos.isos)
    ok = ok && !(sd_of_functor(xi, sd, sd) == inv);

  const IsoSearchResult sd_autos = automorphism_group(sd.category());
  ok = ok && sd_autos.complete && sd_autos.isos.size() >= 12;
  return {ok, std::to_string(sd_autos.isos.size()) +
                  " subdivision automorphisms, inversion induced by no base one"};
}

Outcome check_double_subdivision_thin() {
  const std::pair<FinCategory, ObjectId> inputs[] = {
      {zigzag(2), 9},
      {poset_interval(2), 25},
  };
  std::string detail;
  for (const auto& [base, expect_objects] : inputs) {
    const SdCategory once = build_sd(base, kFullSubdivision);
    const SdCategory twice = build_sd(once.category(), kFullSubdivision);
    const FinCategory& c = twice.category();
    if (c.object_count() != expect_objects)
      return {false, "double subdivision has unexpected size"};
    for (ObjectId x = 0; x < c.object_count(); ++x)
      for (ObjectId y = 0; y < c.object_count(); ++y)
        if (c.hom_size(x, y) > 1)
          return {false, "double subdivision has a parallel pair"};
    if (!detail.empty()) detail += ", ";
    detail += std::to_string(c.object_count()) + " objects thin";
  }
  return {true, detail};
}

struct Criterion {
  const char* name;
  double budget_seconds;
  Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {"dihedral3_subdivision_size", 1.0, check_dihedral3_subdivision_size},
    {"interval_full_subdivision_autos", 10.0, check_interval_full_subdivision_autos},
    {"zigzag_opposite_detection", 1.0, check_zigzag_opposite_detection},
    {"relation_table_and_assignments", 1.0, check_relation_table_and_assignments},
    {"triangle_census_agreement", 60.0, check_triangle_census_agreement},
    {"commutation_and_word_fibers", 30.0, check_commutation_and_word_fibers},
    {"composites_recovered_from_shape", 60.0, check_composites_recovered_from_shape},
    {"reconstruction_across_corpus", 600.0, check_reconstruction_across_corpus},
    {"reconstruction_conservative", 30.0, check_reconstruction_conservative},
    {"cyclic4_klein_distinguished", 60.0, check_cyclic4_klein_distinguished},
    {"inversion_beyond_base_autos", 60.0, check_inversion_beyond_base_autos},
    {"double_subdivision_thin", 10.0, check_double_subdivision_thin},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int index) {
  const Criterion& c = kCriteria[index - 1];
  CriterionResult r;
  r.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = c.fn();
    r.passed = o.ok;
    r.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (r.seconds > c.budget_seconds) {
    r.passed = false;
    r.detail += " [over budget " + std::to_string(c.budget_seconds) + "s]";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= criterion_count(); ++i) out.push_back(run_criterion(i));
  return out;
}

}  // namespace subdiv
