#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace subdiv {

// Monotone map [m] -> [n] between finite ordinals, stored as its value
// vector: values[i] is the image of i, values.size() == m+1, and the
// codomain is {0, ..., target_rank}.
struct DeltaMap {
  std::vector<int> values;
  int target_rank = 0;

  int source_rank() const { return static_cast<int>(values.size()) - 1; }
  int operator()(int i) const { return values[static_cast<std::size_t>(i)]; }
  bool operator==(const DeltaMap&) const = default;
};

DeltaMap identity_map(int rank);
bool is_monotone(const DeltaMap& f);
bool is_mono(const DeltaMap& f);  // strictly increasing
bool is_epi(const DeltaMap& f);   // surjective

// outer . inner, defined when inner lands in outer's source.
DeltaMap compose(const DeltaMap& outer, const DeltaMap& inner);

// Unique factorization f = mono . epi.
struct EpiMonoFactorization {
  DeltaMap epi;
  DeltaMap mono;
};
EpiMonoFactorization epi_mono_factor(const DeltaMap& f);

// mu'(i) = n - mu(m - i); an involution exchanging a map with its
// reverse-order counterpart.
DeltaMap prime_dual(const DeltaMap& f);

// Fibers of an epi as inclusive intervals [first, last], listed in order.
std::vector<std::pair<int, int>> epi_fibers(const DeltaMap& f);

// Subsets of {0, ..., rank} as bitmasks; rank must stay below 63.
using VertexSubset = std::uint64_t;

DeltaMap subset_to_mono(VertexSubset s, int target_rank);
VertexSubset mono_to_subset(const DeltaMap& f);
VertexSubset full_subset(int rank);
VertexSubset reflect_subset(VertexSubset s, int rank);  // i -> rank - i
int subset_size(VertexSubset s);
std::vector<int> subset_elements(VertexSubset s);

}  // namespace subdiv
