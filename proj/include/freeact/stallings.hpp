#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freeact/word.hpp"

namespace freeact {

struct LabeledEdge {
  int from;
  int to;
  int label;  // basis letter 1..rank

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Folded basepointed graph of a finitely generated subgroup H <= F_n.
//
// Vertices are numbered by breadth-first search from the basepoint (vertex 0)
// scanning a, A, b, B, ...; two graphs compare equal iff they represent the
// same subgroup. Every vertex other than the basepoint has degree >= 2.
class StallingsGraph {
 public:
  // Trivial subgroup of F_rank.
  explicit StallingsGraph(int rank);

  int rank() const { return rank_; }
  int vertex_count() const { return vertex_count_; }
  int basepoint() const { return 0; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }

  // Edge index of the traversal of letter x leaving v, or -1.
  int edge_at(int v, Letter x) const;
  // Endpoint of that traversal, or -1.
  int follow(int v, Letter x) const;
  // Reads w from v; nullopt when the path leaves the graph.
  std::optional<int> read(int v, const Word& w) const;
  int degree(int v) const;

  // Free basis read off the breadth-first spanning tree: one word per
  // non-tree edge, in edge order.
  std::vector<Word> basis() const;
  int subgroup_rank() const;
  bool is_trivial() const { return edges_.empty(); }
  // Every vertex carries all 2n labels.
  bool is_covering() const;
  // Word labelling the tree path from the basepoint to v.
  Word tree_path(int v) const;
  std::vector<Word> tree_paths() const;
  // Edges of the breadth-first spanning tree.
  std::vector<char> tree_edges() const;

  friend bool operator==(const StallingsGraph&, const StallingsGraph&) = default;

  // Assembles a graph from an explicit edge table, renumbered canonically.
  // The table must be folded, connected, and free of hanging trees away from
  // the basepoint (invalid_graph otherwise).
  static StallingsGraph from_edges(int rank, int vertex_count, int basepoint,
                                   const std::vector<LabeledEdge>& edges);

 private:
  void index_edges();

  int rank_;
  int vertex_count_ = 1;
  std::vector<LabeledEdge> edges_;
  std::vector<int> slots_;  // vertex * 2n + letter_key -> edge index
};

struct SubgroupIndex {
  bool finite = false;
  int value = 0;  // meaningful when finite

  friend bool operator==(const SubgroupIndex&, const SubgroupIndex&) = default;
  std::string str() const { return finite ? std::to_string(value) : "infinite"; }
};

StallingsGraph build_core(std::span<const Word> generators, int rank);
bool membership(const StallingsGraph& graph, const Word& w);
SubgroupIndex index(const StallingsGraph& graph);
StallingsGraph fiber_product(const StallingsGraph& g1, const StallingsGraph& g2);
StallingsGraph conjugate(const StallingsGraph& graph, const Word& g);

// True iff the words form a free basis of F_rank.
bool is_basis(std::span<const Word> words, int rank);
// True iff the words freely generate the subgroup they generate.
bool is_free_basis(std::span<const Word> words, int rank);

// For a free basis u_1..u_n of F_n, returns for each basis letter a_i a word
// in the letters 1..n (letter j standing for u_j) that evaluates to a_i.
// Throws precondition_violated when the words are not a basis.
std::vector<Word> invert_basis(std::span<const Word> basis, int rank);

// Substitutes images[j-1] for letter j.
Word substitute(const Word& w, std::span<const Word> images);

// Double coset H g H as a folded graph with two distinguished vertices:
// reduced words labelling paths from `left` to `right` are exactly the
// reduced forms of h1 g h2.
struct DoubleCosetGraph {
  std::vector<LabeledEdge> edges;
  int vertex_count = 0;
  int left = 0;
  int right = 0;
  int rank = 0;
  std::vector<int> slots;  // vertex * 2n + letter_key -> target vertex

  bool contains(const Word& w) const;
};

DoubleCosetGraph double_coset(const StallingsGraph& graph, const Word& g);

struct HallWitness {
  StallingsGraph cover;
  std::vector<int> vertex_map;      // input vertex -> cover vertex
  std::vector<int> edge_map;        // input edge -> cover edge
  std::vector<Word> subgroup_basis; // basis of H read from the cover's tree
  std::vector<Word> complement_basis;
  std::optional<Word> excluded;
  int vertex_bound = 0;
};

struct HallCheck {
  bool finite_index = false;
  bool within_bound = false;
  bool embeds = false;
  bool euler_count = false;
  bool free_product_basis = false;
  bool excludes = true;

  bool ok() const {
    return finite_index && within_bound && embeds && euler_count && free_product_basis && excludes;
  }
};

// Completes H to a finite-index subgroup F' = H * K, optionally with g not in
// F'. vertex_bound <= 0 selects the default 2 (|V| + |g|).
HallWitness hall_completion(const StallingsGraph& graph, const std::optional<Word>& g,
                            int vertex_bound = 0);

// Independent verification of a witness against the subgroup it completes.
HallCheck verify_hall_witness(const StallingsGraph& graph, const HallWitness& witness);

}  // namespace freeact
