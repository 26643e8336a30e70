#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "subdiv/fincat.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/probe.hpp"
#include "subdiv/reconstruct.hpp"
#include "subdiv/subdivision.hpp"

using namespace subdiv;

namespace {

const FinCategory& corpus_cat(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e.cat;
  throw Error("no corpus entry named " + name);
}

void BM_BuildSd(benchmark::State& state, const std::string& name) {
  const FinCategory& c = corpus_cat(name);
  for (auto _ : state) {
    SdCategory sd = build_sd(c);
    benchmark::DoNotOptimize(sd.category().morphism_count());
  }
}

void BM_ProbeIndex(benchmark::State& state, const std::string& name) {
  const SdCategory sd = build_sd(corpus_cat(name));
  for (auto _ : state) {
    ProbedCategory p(sd.category());
    benchmark::DoNotOptimize(p.max_dim());
  }
}

void BM_CompositeSweep(benchmark::State& state, const std::string& name) {
  const FinCategory& c = corpus_cat(name);
  const SdCategory sd = build_sd(c);
  const ProbedCategory p(sd.category());
  std::vector<ObjectId> edges;
  for (MorphismId m = c.object_count(); m < c.morphism_count(); ++m)
    edges.push_back(sd.object_of(chain_simplex(c, {m})));
  for (auto _ : state) {
    int n = 0;
    for (ObjectId f : edges)
      for (ObjectId g : edges) {
        if (f == g) continue;
        n += static_cast<int>(p.composite_pair_set(f, g).size());
      }
    benchmark::DoNotOptimize(n);
  }
}

void BM_SdAutomorphisms(benchmark::State& state, const std::string& name) {
  const SdCategory sd = build_sd(corpus_cat(name));
  for (auto _ : state) {
    IsoSearchResult r = automorphism_group(sd.category());
    benchmark::DoNotOptimize(r.isos.size());
  }
}

void BM_SdRefutation(benchmark::State& state) {
  const SdCategory a = build_sd(cyclic_group(4));
  const SdCategory b = build_sd(klein_four());
  for (auto _ : state) {
    IsoSearchResult r = find_isomorphisms(a.category(), b.category());
    benchmark::DoNotOptimize(r.isos.empty());
  }
}

void BM_TriangleCensus(benchmark::State& state, const std::string& name) {
  const FinCategory& c = corpus_cat(name);
  for (auto _ : state) {
    TriangleCensus t = brute_triangle_census(c);
    benchmark::DoNotOptimize(t.forms.size());
  }
}

void BM_ReconstructTwist(benchmark::State& state) {
  const FinCategory d3 = dihedral_group(3);
  const SdCategory sd = build_sd(d3);
  const Functor tw = alpha(sd, as_groupoid(d3));
  for (auto _ : state) {
    Functor f = reconstruct_functor(sd, sd, tw);
    benchmark::DoNotOptimize(f.morphisms.size());
  }
}

BENCHMARK_CAPTURE(BM_BuildSd, cyclic6, std::string("cyclic6"));
BENCHMARK_CAPTURE(BM_BuildSd, dihedral4, std::string("dihedral4"));
BENCHMARK_CAPTURE(BM_BuildSd, frobenius21, std::string("frobenius21"));
BENCHMARK_CAPTURE(BM_ProbeIndex, quaternion, std::string("quaternion"));
BENCHMARK_CAPTURE(BM_ProbeIndex, frobenius21, std::string("frobenius21"));
BENCHMARK_CAPTURE(BM_CompositeSweep, quaternion, std::string("quaternion"));
BENCHMARK_CAPTURE(BM_SdAutomorphisms, dihedral3, std::string("dihedral3"));
BENCHMARK_CAPTURE(BM_SdAutomorphisms, quaternion, std::string("quaternion"));
BENCHMARK(BM_SdRefutation);
BENCHMARK_CAPTURE(BM_TriangleCensus, frobenius21, std::string("frobenius21"));
BENCHMARK(BM_ReconstructTwist);

}  // namespace

BENCHMARK_MAIN();
