#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subdiv/fincat.hpp"

namespace subdiv {

// A two-letter word in f, g and their inverses, read as
// outer^outer_exp after inner^inner_exp. Base 0 is f, base 1 is g.
struct FormalComposite {
  int outer = 0;
  int outer_exp = 1;
  int inner = 1;
  int inner_exp = 1;
  std::string text() const;
  bool operator==(const FormalComposite&) const = default;
};

// The six probe words fg, gf, f^-1g, gf^-1, fg^-1, g^-1f, in that order;
// extended appends f^-1g^-1 and g^-1f^-1.
std::vector<FormalComposite> formal_composites(bool extended = false);

// Value of the word at a concrete pair of parallel endomorphisms.
MorphismId evaluate(const FinGroupoid& gpd, MorphismId f, MorphismId g,
                    const FormalComposite& word);

// Word vertices with their values at a concrete pair; an edge joins each
// pair of vertices whose values coincide.
struct EvGraph {
  std::vector<FormalComposite> vertices;
  std::vector<MorphismId> values;
  std::vector<std::pair<int, int>> edges;
};

EvGraph build_ev_graph(const FinGroupoid& gpd, MorphismId f, MorphismId g,
                       bool extended = false);

// A relation in f, g together with the word-vertex pairs it merges in the
// extended eight-vertex graph.
struct EquationEdges {
  std::string name;
  std::vector<std::pair<int, int>> edges;
};

// The nine relations whose edge sets partition all 28 vertex pairs: any
// value collision between two of the eight words is equivalent to exactly
// one relation from this table.
const std::vector<EquationEdges>& equation_subgraph_table();

// True when every connected component of the graph is a clique, i.e. the
// edge set is a transitively closed (partial) equality pattern.
bool components_complete(int n_vertices,
                         const std::vector<std::pair<int, int>>& edges);

// Masks over (fgf=g, gfg=f, fg^-1f=g, fgf=g^-1) in bits 0..3 that give a
// transitively closed pattern while the other five relations all fail.
std::vector<unsigned> enumerate_valid_assignments();

}  // namespace subdiv
