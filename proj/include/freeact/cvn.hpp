#pragma once

#include <span>
#include <string>
#include <vector>

#include "freeact/scalar.hpp"
#include "freeact/stallings.hpp"
#include "freeact/word.hpp"

namespace freeact {

struct MetricEdge {
  std::string id;
  int tail;
  int head;
  Scalar length;
};

// Oriented edges are encoded as o = 2e + dir, dir 0 running tail -> head.
inline int reverse_edge(int o) { return o ^ 1; }

// A free simplicial point of cv_n: a finite metric graph with a marking
// given by a spanning tree and one basis word per non-tree edge.
//
// The non-tree edge e, oriented tail -> head, closes the loop
// tree(base, tail) e tree(head, base); the marking sends that loop to
// marking_word(e). The marking words must form a basis of F_rank.
class MarkedMetricGraph {
 public:
  MarkedMetricGraph(int rank, int vertex_count, std::vector<MetricEdge> edges,
                    std::vector<int> spanning_tree, std::vector<std::pair<int, Word>> marking,
                    int basepoint = 0);

  // Rose with one petal per length; petal i carries letter i.
  static MarkedMetricGraph rose(const std::vector<Scalar>& lengths);

  int rank() const { return rank_; }
  int vertex_count() const { return vertex_count_; }
  int basepoint() const { return basepoint_; }
  const std::vector<MetricEdge>& edges() const { return edges_; }
  bool is_tree_edge(int e) const { return in_tree_[e] != 0; }
  const std::vector<std::pair<int, Word>>& marking() const { return marking_; }

  int origin(int o) const { return o % 2 == 0 ? edges_[o / 2].tail : edges_[o / 2].head; }
  int terminus(int o) const { return origin(reverse_edge(o)); }
  const Scalar& length(int o) const { return edges_[o / 2].length; }
  Scalar length_of(std::span<const int> path) const;
  // Oriented edges at v, ascending.
  std::vector<int> star(int v) const;

  // Tight edge loop at the basepoint representing w.
  std::vector<int> path_of(const Word& w) const;
  // Loop for the basis letter i (1-based).
  const std::vector<int>& letter_path(int i) const { return letter_paths_[i - 1]; }
  std::string path_str(std::span<const int> path) const;

 private:
  int rank_;
  int vertex_count_;
  int basepoint_;
  std::vector<MetricEdge> edges_;
  std::vector<char> in_tree_;
  std::vector<std::pair<int, Word>> marking_;
  std::vector<std::vector<int>> tree_paths_;
  std::vector<std::vector<int>> letter_paths_;
};

std::vector<int> tighten(std::span<const int> path);
std::vector<int> cyclically_tighten(std::span<const int> path);
std::vector<int> reverse_path(std::span<const int> path);

Scalar translation_length(const MarkedMetricGraph& t, const Word& w);
Scalar volume(const MarkedMetricGraph& t);
// Bounded backtracking constant of the universal cover.
inline Scalar bbt_constant(const MarkedMetricGraph& t) { return volume(t); }

// Quotient T_H / H of the minimal subtree, with its projection to T's graph.
struct MetricCoreGraph {
  struct Edge {
    int from;
    int to;
    int base_edge;  // edge of T, traversed tail -> head along from -> to
    Scalar length;
  };
  int vertex_count = 0;
  std::vector<int> projection;
  std::vector<Edge> edges;
  Scalar volume;
  bool surjective = false;
  bool covering = false;
  int degree = 0;  // sheets when covering, else 0
};

MetricCoreGraph minimal_subtree(const MarkedMetricGraph& t, const StallingsGraph& h);

// The edge is the last one of `tail`, an edge path in T's graph starting at
// the basepoint, lifted at base_path * x0 in the universal cover.
bool edge_in_minimal_subtree(const MarkedMetricGraph& t, const StallingsGraph& h,
                             const Word& base_path, std::span<const int> tail);

enum class IntersectionKind { whole_tree, disjoint, single_point, nondegenerate, degenerate_within_radius };
const char* to_string(IntersectionKind kind);

struct TranslateIntersection {
  IntersectionKind kind = IntersectionKind::disjoint;
  // Closest point of g T_H to the projection of x0 on T_H, as a tight path
  // from x0.
  std::vector<int> point;
  // Nondegenerate case: an arc of the intersection starting at `point`.
  std::vector<int> arc;
  Scalar arc_length;
};

TranslateIntersection translate_intersection(const MarkedMetricGraph& t, const StallingsGraph& h,
                                             const Word& g, int radius);

enum class TransverseVerdict { single_tree, family_degenerate, transverse_up_to_budget, violation, inconclusive };
const char* to_string(TransverseVerdict v);

struct TransverseReport {
  TransverseVerdict verdict = TransverseVerdict::transverse_up_to_budget;
  struct Entry {
    Word g;
    TranslateIntersection result;
  };
  std::vector<Entry> entries;  // one per double coset representative
  int max_word = 0;
  int radius = 0;
};

TransverseReport transverse_family_report(const MarkedMetricGraph& t, const StallingsGraph& h,
                                          int max_word, int radius);

// Canonical conjugacy representatives w, |w| <= max_word, with l_T(w) < eps.
std::vector<Word> omega_epsilon(const MarkedMetricGraph& t, const Scalar& eps, int max_word);

}  // namespace freeact
