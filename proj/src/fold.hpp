#pragma once

// Folding engine shared by subgroup graphs (labels = basis letters) and
// covers of marked graphs (labels = edges of the base graph).

#include <vector>

namespace freeact::detail {

struct RawEdge {
  int from;
  int to;
  int label;  // 1..alphabet
};

struct FoldResult {
  int vertex_count = 0;
  int basepoint = 0;
  std::vector<RawEdge> edges;
  std::vector<int> vertex_of;  // input vertex -> output vertex
};

// Identifies edges that share an endpoint and a label until the graph is
// folded. Vertices keep their relative order in the output numbering.
FoldResult fold(int vertex_count, int basepoint, std::vector<RawEdge> edges, int alphabet);

// Removes vertices of degree <= 1 other than `keep` (pass -1 to remove all),
// repeatedly. Returns the surviving graph renumbered; vertex_of maps old to
// new ids (-1 for removed).
FoldResult prune(int vertex_count, int basepoint, const std::vector<RawEdge>& edges, int keep);

// Renumbers vertices by breadth-first search from the basepoint, scanning
// labels in alphabet order (outgoing before incoming). Edges are sorted by
// (from, label). Only the basepoint component survives.
FoldResult canonical_order(int vertex_count, int basepoint, const std::vector<RawEdge>& edges,
                           int alphabet);

}  // namespace freeact::detail
