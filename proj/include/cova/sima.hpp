#ifndef COVA_SIMA_HPP
#define COVA_SIMA_HPP

#include <cstdint>

#include "cova/core.hpp"

namespace cova {

// Undirected graph on vertices 1..n; adj[v-1] is the ordered adjacency
// list of vertex v. Insertion order is part of the contract: it pins the
// DFS traversal and hence the inferred string.
struct CoverGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  std::size_t edge_count() const;
};

struct ComponentLabeling {
  std::vector<int> label;  // label[v-1] = component id of vertex v
  std::vector<std::vector<int>> components;  // each ascending, ordered by smallest member

  bool operator==(const ComponentLabeling&) const = default;
};

struct InferStats {
  std::uint64_t stack_pushes = 0;
  std::uint64_t border_fallbacks = 0;

  std::uint64_t ops() const { return stack_pushes + border_fallbacks; }
};

struct InferenceResult {
  Text text;               // witness over {a, b}
  BorderArray borders;     // border array of text, maintained online
  ComponentLabeling components;
  InferStats stats;
};

// Builds the cover graph of a pruned array: for each i with c = cp[i] > 0
// and each j = 1..c an undirected edge {j, i-c+j}, skipping j == i-c+j;
// i ascending, then j ascending, appended to both endpoint lists.
// Throws std::invalid_argument on entries outside 0 <= cp[i] < i.
CoverGraph build_cover_graph(const CoverArray& cp);

// Iterative stack-based DFS, start vertices 1..n ascending, neighbors
// pushed in adjacency-list order, component ids in discovery order.
ComponentLabeling connected_components(const CoverGraph& g);

// String inference: applies max_to_min then prune, builds the cover
// graph, floods each component with one character (first component 'a',
// later component starts toggle against x[B[i-1]+1]) and maintains the
// border array online. Accepts minimal or maximal input arrays.
// Throws InvalidCoverArrayError (see validate.hpp) when the array fails
// the structural precheck.
InferenceResult infer(const CoverArray& c);

}  // namespace cova

#endif
