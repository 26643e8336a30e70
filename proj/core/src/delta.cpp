#include "subdiv/delta.hpp"

#include <algorithm>
#include <cassert>
#include <bit>

namespace subdiv {

DeltaMap identity_map(int rank) {
  DeltaMap f;
  f.target_rank = rank;
  f.values.resize(static_cast<std::size_t>(rank) + 1);
  for (int i = 0; i <= rank; ++i) f.values[static_cast<std::size_t>(i)] = i;
  return f;
}

bool is_monotone(const DeltaMap& f) {
  if (f.values.empty()) return false;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] < 0 || f.values[i] > f.target_rank) return false;
    if (i > 0 && f.values[i] < f.values[i - 1]) return false;
  }
  return true;
}

bool is_mono(const DeltaMap& f) {
  if (!is_monotone(f)) return false;
  for (std::size_t i = 1; i < f.values.size(); ++i)
    if (f.values[i] == f.values[i - 1]) return false;
  return true;
}

bool is_epi(const DeltaMap& f) {
  if (!is_monotone(f)) return false;
  if (f.values.front() != 0 || f.values.back() != f.target_rank) return false;
  for (std::size_t i = 1; i < f.values.size(); ++i)
    if (f.values[i] - f.values[i - 1] > 1) return false;
  return true;
}

DeltaMap compose(const DeltaMap& outer, const DeltaMap& inner) {
  assert(inner.target_rank == outer.source_rank());
  DeltaMap r;
  r.target_rank = outer.target_rank;
  r.values.reserve(inner.values.size());
  for (int v : inner.values) r.values.push_back(outer.values[static_cast<std::size_t>(v)]);
  return r;
}

EpiMonoFactorization epi_mono_factor(const DeltaMap& f) {
  assert(is_monotone(f));
  EpiMonoFactorization r;
  r.mono.target_rank = f.target_rank;
  for (int v : f.values)
    if (r.mono.values.empty() || r.mono.values.back() != v) r.mono.values.push_back(v);
  r.epi.target_rank = static_cast<int>(r.mono.values.size()) - 1;
  int pos = 0;
  for (int v : f.values) {
    while (r.mono.values[static_cast<std::size_t>(pos)] != v) ++pos;
    r.epi.values.push_back(pos);
  }
  return r;
}

DeltaMap prime_dual(const DeltaMap& f) {
  DeltaMap r;
  r.target_rank = f.target_rank;
  r.values.resize(f.values.size());
  int m = f.source_rank();
  for (int i = 0; i <= m; ++i)
    r.values[static_cast<std::size_t>(i)] =
        f.target_rank - f.values[static_cast<std::size_t>(m - i)];
  return r;
}

std::vector<std::pair<int, int>> epi_fibers(const DeltaMap& f) {
  assert(is_epi(f));
  std::vector<std::pair<int, int>> fibers;
  fibers.reserve(static_cast<std::size_t>(f.target_rank) + 1);
  int m = f.source_rank();
  int start = 0;
  for (int i = 1; i <= m + 1; ++i) {
    if (i == m + 1 || f.values[static_cast<std::size_t>(i)] != f.values[static_cast<std::size_t>(start)]) {
      fibers.emplace_back(start, i - 1);
      start = i;
    }
  }
  return fibers;
}

DeltaMap subset_to_mono(VertexSubset s, int target_rank) {
  DeltaMap f;
  f.target_rank = target_rank;
  for (int i = 0; i <= target_rank; ++i)
    if (s & (VertexSubset{1} << i)) f.values.push_back(i);
  assert(!f.values.empty());
  return f;
}

VertexSubset mono_to_subset(const DeltaMap& f) {
  assert(is_mono(f));
  VertexSubset s = 0;
  for (int v : f.values) s |= VertexSubset{1} << v;
  return s;
}

VertexSubset full_subset(int rank) {
  return (VertexSubset{1} << (rank + 1)) - 1;
}

VertexSubset reflect_subset(VertexSubset s, int rank) {
  VertexSubset r = 0;
  for (int i = 0; i <= rank; ++i)
    if (s & (VertexSubset{1} << i)) r |= VertexSubset{1} << (rank - i);
  return r;
}

int subset_size(VertexSubset s) { return std::popcount(s); }

std::vector<int> subset_elements(VertexSubset s) {
  std::vector<int> r;
  while (s) {
    r.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return r;
}

}  // namespace subdiv
