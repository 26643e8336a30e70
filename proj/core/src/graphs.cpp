#include "subdiv/graphs.hpp"

#include <algorithm>
#include <numeric>

namespace subdiv {

std::string FormalComposite::text() const {
  auto factor = [](int base, int exp) {
    std::string s = base == 0 ? "f" : "g";
    if (exp < 0) s += "^-1";
    return s;
  };
  return factor(outer, outer_exp) + " " + factor(inner, inner_exp);
}

std::vector<FormalComposite> formal_composites(bool extended) {
  std::vector<FormalComposite> words = {
      {0, 1, 1, 1},    // f g
      {1, 1, 0, 1},    // g f
      {0, -1, 1, 1},   // f^-1 g
      {1, 1, 0, -1},   // g f^-1
      {0, 1, 1, -1},   // f g^-1
      {1, -1, 0, 1},   // g^-1 f
  };
  if (extended) {
    words.push_back({0, -1, 1, -1});  // f^-1 g^-1
    words.push_back({1, -1, 0, -1});  // g^-1 f^-1
  }
  return words;
}

MorphismId evaluate(const FinGroupoid& gpd, MorphismId f, MorphismId g,
                    const FormalComposite& word) {
  auto factor = [&](int base, int exp) {
    MorphismId m = base == 0 ? f : g;
    return exp < 0 ? gpd.inverse(m) : m;
  };
  return gpd.category().compose(factor(word.outer, word.outer_exp),
                                factor(word.inner, word.inner_exp));
}

EvGraph build_ev_graph(const FinGroupoid& gpd, MorphismId f, MorphismId g,
                       bool extended) {
  EvGraph out;
  out.vertices = formal_composites(extended);
  for (const auto& w : out.vertices) out.values.push_back(evaluate(gpd, f, g, w));
  const int n = static_cast<int>(out.values.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (out.values[i] == out.values[j]) out.edges.push_back({i, j});
  return out;
}

const std::vector<EquationEdges>& equation_subgraph_table() {
  static const std::vector<EquationEdges> table = {
      {"fg = gf", {{0, 1}, {2, 3}, {4, 5}, {6, 7}}},
      {"f^2 = 1", {{0, 2}, {1, 3}, {4, 6}, {5, 7}}},
      {"g^2 = 1", {{0, 4}, {1, 5}, {2, 6}, {3, 7}}},
      {"f^2 = g^2", {{2, 4}, {3, 5}}},
      {"f^2 = g^-2", {{0, 6}, {1, 7}}},
      {"fgf = g", {{0, 3}, {1, 2}, {4, 7}, {5, 6}}},
      {"gfg = f", {{0, 5}, {1, 4}, {2, 7}, {3, 6}}},
      {"fg^-1f = g", {{2, 5}, {3, 4}}},
      {"fgf = g^-1", {{0, 7}, {1, 6}}},
  };
  return table;
}

bool components_complete(int n_vertices,
                         const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> root(n_vertices);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  std::vector<std::vector<char>> adj(n_vertices, std::vector<char>(n_vertices, 0));
  for (auto [u, v] : edges) {
    adj[u][v] = adj[v][u] = 1;
    root[find(u)] = find(v);
  }
  for (int u = 0; u < n_vertices; ++u)
    for (int v = u + 1; v < n_vertices; ++v)
      if (find(u) == find(v) && !adj[u][v]) return false;
  return true;
}

std::vector<unsigned> enumerate_valid_assignments() {
  const auto& table = equation_subgraph_table();
  // Table rows 5..8 are fgf=g, gfg=f, fg^-1f=g, fgf=g^-1.
  std::vector<unsigned> valid;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int bit = 0; bit < 4; ++bit)
      if (mask & (1u << bit)) {
        const auto& row = table[static_cast<std::size_t>(5 + bit)].edges;
        edges.insert(edges.end(), row.begin(), row.end());
      }
    if (components_complete(8, edges)) valid.push_back(mask);
  }
  return valid;
}

}  // namespace subdiv
