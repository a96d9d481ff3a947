#include "freeact/cvn.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "fold.hpp"
#include "freeact/error.hpp"

namespace freeact {

std::vector<int> tighten(std::span<const int> path) {
  std::vector<int> out;
  out.reserve(path.size());
  for (int o : path) {
    if (!out.empty() && out.back() == reverse_edge(o)) {
      out.pop_back();
    } else {
      out.push_back(o);
    }
  }
  return out;
}

std::vector<int> cyclically_tighten(std::span<const int> path) {
  std::vector<int> t = tighten(path);
  std::size_t lo = 0;
  std::size_t hi = t.size();
  while (hi - lo >= 2 && t[lo] == reverse_edge(t[hi - 1])) {
    ++lo;
    --hi;
  }
  return {t.begin() + static_cast<std::ptrdiff_t>(lo), t.begin() + static_cast<std::ptrdiff_t>(hi)};
}

std::vector<int> reverse_path(std::span<const int> path) {
  std::vector<int> out(path.rbegin(), path.rend());
  for (int& o : out) o = reverse_edge(o);
  return out;
}

namespace {

std::vector<int> concat(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return tighten(out);
}

}  // namespace

MarkedMetricGraph::MarkedMetricGraph(int rank, int vertex_count, std::vector<MetricEdge> edges,
                                     std::vector<int> spanning_tree,
                                     std::vector<std::pair<int, Word>> marking, int basepoint)
    : rank_(rank),
      vertex_count_(vertex_count),
      basepoint_(basepoint),
      edges_(std::move(edges)),
      in_tree_(edges_.size(), 0),
      marking_(std::move(marking)) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::invalid_graph, why); };
  if (rank < 1 || rank > kMaxRank) fail("rank must lie in 1..26");
  if (vertex_count < 1) fail("graph has no vertices");
  if (basepoint < 0 || basepoint >= vertex_count) fail("basepoint out of range");
  const int e_count = static_cast<int>(edges_.size());
  std::vector<int> degree(vertex_count, 0);
  for (const MetricEdge& e : edges_) {
    if (e.tail < 0 || e.head < 0 || e.tail >= vertex_count || e.head >= vertex_count) {
      fail("edge " + e.id + " has an endpoint out of range");
    }
    if (e.length.sign() != Sign::positive) fail("edge " + e.id + " has non-positive length");
    ++degree[e.tail];
    ++degree[e.head];
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (degree[v] < 2) fail("vertex " + std::to_string(v) + " has degree < 2");
  }
  if (e_count - vertex_count + 1 != rank) fail("first Betti number differs from rank");

  for (int e : spanning_tree) {
    if (e < 0 || e >= e_count || in_tree_[e]) fail("bad spanning tree edge");
    in_tree_[e] = 1;
  }
  if (static_cast<int>(spanning_tree.size()) != vertex_count - 1) fail("spanning tree has wrong size");
  tree_paths_.assign(vertex_count, {});
  std::vector<char> seen(vertex_count, 0);
  seen[basepoint] = 1;
  std::deque<int> queue{basepoint};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int o : star(v)) {
      if (!in_tree_[o / 2]) continue;
      const int w = terminus(o);
      if (seen[w]) continue;
      seen[w] = 1;
      tree_paths_[w] = tree_paths_[v];
      tree_paths_[w].push_back(o);
      queue.push_back(w);
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != vertex_count) fail("spanning tree is not spanning");

  std::sort(marking_.begin(), marking_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<int> loops;
  std::vector<Word> words;
  for (const auto& [e, w] : marking_) {
    if (e < 0 || e >= e_count || in_tree_[e]) fail("marking on a tree edge");
    if (!loops.empty() && loops.back() == e) fail("edge marked twice");
    loops.push_back(e);
    words.push_back(w);
  }
  if (static_cast<int>(loops.size()) != rank) fail("marking must cover every non-tree edge");
  if (!is_basis(words, rank)) fail("marking words do not form a basis");

  std::vector<std::vector<int>> loop_paths;
  for (int e : loops) {
    std::vector<int> p = tree_paths_[edges_[e].tail];
    p.push_back(2 * e);
    const std::vector<int> back = reverse_path(tree_paths_[edges_[e].head]);
    p.insert(p.end(), back.begin(), back.end());
    loop_paths.push_back(tighten(p));
  }
  for (const Word& x : invert_basis(words, rank)) {
    std::vector<int> p;
    for (Letter l : x) {
      const std::vector<int>& lp = loop_paths[(l < 0 ? -l : l) - 1];
      if (l > 0) {
        p.insert(p.end(), lp.begin(), lp.end());
      } else {
        const std::vector<int> r = reverse_path(lp);
        p.insert(p.end(), r.begin(), r.end());
      }
    }
    letter_paths_.push_back(tighten(p));
  }
}

MarkedMetricGraph MarkedMetricGraph::rose(const std::vector<Scalar>& lengths) {
  std::vector<MetricEdge> edges;
  std::vector<std::pair<int, Word>> marking;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    edges.push_back({letter_char(static_cast<Letter>(i + 1)), 0, 0, lengths[i]});
    marking.push_back({static_cast<int>(i), Word{static_cast<Letter>(i + 1)}});
  }
  return MarkedMetricGraph(static_cast<int>(lengths.size()), 1, std::move(edges), {},
                           std::move(marking));
}

std::vector<int> MarkedMetricGraph::star(int v) const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    if (edges_[e].tail == v) out.push_back(2 * e);
    if (edges_[e].head == v) out.push_back(2 * e + 1);
  }
  return out;
}

Scalar MarkedMetricGraph::length_of(std::span<const int> path) const {
  Scalar total;
  for (int o : path) total += length(o);
  return total;
}

std::vector<int> MarkedMetricGraph::path_of(const Word& w) const {
  if (w.max_letter() > rank_) {
    throw Error(ErrorKind::malformed_word, "word " + w.str() + " exceeds the graph rank");
  }
  std::vector<int> out;
  for (Letter x : w) {
    const std::vector<int>& p = letter_paths_[(x < 0 ? -x : x) - 1];
    if (x > 0) {
      for (int o : p) {
        if (!out.empty() && out.back() == reverse_edge(o)) {
          out.pop_back();
        } else {
          out.push_back(o);
        }
      }
    } else {
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const int o = reverse_edge(*it);
        if (!out.empty() && out.back() == reverse_edge(o)) {
          out.pop_back();
        } else {
          out.push_back(o);
        }
      }
    }
  }
  return out;
}

std::string MarkedMetricGraph::path_str(std::span<const int> path) const {
  std::string s;
  for (int o : path) {
    if (!s.empty()) s += ' ';
    s += edges_[o / 2].id;
    if (o % 2 == 1) s += '~';
  }
  return s;
}

Scalar translation_length(const MarkedMetricGraph& t, const Word& w) {
  return t.length_of(cyclically_tighten(t.path_of(w)));
}

Scalar volume(const MarkedMetricGraph& t) {
  Scalar total;
  for (const MetricEdge& e : t.edges()) total += e.length;
  return total;
}

namespace {

// The cover of T's graph associated with H, restricted to the basepoint
// component of the folded lift (core plus the arc to the basepoint). Labels
// are T's edges; a cover edge from -> to with label e + 1 runs over e from
// tail to head.
class HCover {
 public:
  HCover(const MarkedMetricGraph& t, const StallingsGraph& h) : t_(t) {
    if (h.rank() != t.rank()) {
      throw Error(ErrorKind::precondition_violated, "subgroup rank differs from the graph rank");
    }
    if (h.is_trivial()) throw Error(ErrorKind::degenerate_subgroup, "subgroup is trivial");
    const int alphabet = static_cast<int>(t.edges().size());
    std::vector<detail::RawEdge> raw;
    std::vector<int> proj{t.basepoint()};
    int vertices = 1;
    for (const Word& b : h.basis()) {
      const std::vector<int> path = t.path_of(b);
      int current = 0;
      for (std::size_t i = 0; i < path.size(); ++i) {
        const int o = path[i];
        int next = 0;
        if (i + 1 < path.size()) {
          next = vertices++;
          proj.push_back(t.terminus(o));
        }
        if (o % 2 == 0) {
          raw.push_back({current, next, o / 2 + 1});
        } else {
          raw.push_back({next, current, o / 2 + 1});
        }
        current = next;
      }
    }
    const detail::FoldResult folded = detail::fold(vertices, 0, std::move(raw), alphabet);
    const detail::FoldResult pruned =
        detail::prune(folded.vertex_count, folded.basepoint, folded.edges, folded.basepoint);
    vertex_count_ = pruned.vertex_count;
    base_ = pruned.basepoint;
    projection_.assign(vertex_count_, -1);
    for (int v = 0; v < vertices; ++v) {
      const int f = pruned.vertex_of[folded.vertex_of[v]];
      if (f >= 0) projection_[f] = proj[v];
    }
    edges_ = pruned.edges;
    slots_.assign(static_cast<std::size_t>(vertex_count_) * 2 * alphabet, -1);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      const int te = edges_[e].label - 1;
      slots_[edges_[e].from * 2 * alphabet + 2 * te] = e;
      slots_[edges_[e].to * 2 * alphabet + 2 * te + 1] = e;
    }
    const detail::FoldResult core = detail::prune(vertex_count_, base_, edges_, -1);
    core_vertex_.assign(vertex_count_, 0);
    for (int v = 0; v < vertex_count_; ++v) core_vertex_[v] = core.vertex_of[v] >= 0;
    core_edge_.assign(edges_.size(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      core_edge_[e] = core_vertex_[edges_[e].from] && core_vertex_[edges_[e].to];
    }
  }

  int vertex_count() const { return vertex_count_; }
  int base() const { return base_; }
  int projection(int v) const { return projection_[v]; }
  const std::vector<detail::RawEdge>& edges() const { return edges_; }
  bool core_vertex(int v) const { return core_vertex_[v] != 0; }
  bool core_edge(int e) const { return core_edge_[e] != 0; }

  // Cover edge over oriented edge o leaving v, or -1.
  int edge_at(int v, int o) const {
    return slots_[v * 2 * static_cast<int>(t_.edges().size()) + o];
  }
  int follow(int v, int o) const {
    const int e = edge_at(v, o);
    if (e < 0) return -1;
    return o % 2 == 0 ? edges_[e].to : edges_[e].from;
  }

  // Image of the universal-cover vertex reached by `path`, when it lies in
  // the finite part.
  std::optional<int> read(std::span<const int> path) const {
    int v = base_;
    for (int o : path) {
      v = follow(v, o);
      if (v < 0) return std::nullopt;
    }
    return v;
  }

  bool vertex_in_subtree(std::span<const int> path) const {
    const std::optional<int> v = read(path);
    return v && core_vertex(*v);
  }

  // The universal-cover edge between `path` and its extension by o.
  bool edge_in_subtree(std::span<const int> path, int o) const {
    std::vector<int> longer = concat(path, std::span<const int>(&o, 1));
    std::vector<int> shorter(path.begin(), path.end());
    if (longer.size() < shorter.size()) std::swap(longer, shorter);
    const std::optional<int> v = read(shorter);
    if (!v) return false;
    const int e = edge_at(*v, longer.back());
    return e >= 0 && core_edge(e);
  }

  // Path from the basepoint lift to its projection on T_H.
  std::vector<int> arc_to_core() const {
    std::vector<int> out;
    int v = base_;
    int previous = -1;
    while (!core_vertex(v)) {
      bool moved = false;
      for (int o = 0; o < 2 * static_cast<int>(t_.edges().size()) && !moved; ++o) {
        if (o == previous) continue;
        const int w = follow(v, o);
        if (w < 0) continue;
        out.push_back(o);
        previous = reverse_edge(o);
        v = w;
        moved = true;
      }
      if (!moved) throw Error(ErrorKind::invalid_graph, "cover has no core");
    }
    return out;
  }

  // Nearest-point projection of the universal-cover vertex `path` on T_H.
  std::vector<int> project(std::span<const int> path) const {
    if (vertex_in_subtree(path)) return {path.begin(), path.end()};
    const std::vector<int> geodesic = concat(reverse_path(path), arc_to_core());
    std::vector<int> at(path.begin(), path.end());
    for (int o : geodesic) {
      at = concat(at, std::span<const int>(&o, 1));
      if (vertex_in_subtree(at)) return at;
    }
    throw Error(ErrorKind::invalid_graph, "projection did not reach the minimal subtree");
  }

 private:
  const MarkedMetricGraph& t_;
  int vertex_count_ = 0;
  int base_ = 0;
  std::vector<int> projection_;
  std::vector<detail::RawEdge> edges_;
  std::vector<int> slots_;
  std::vector<char> core_vertex_;
  std::vector<char> core_edge_;
};

int endpoint(const MarkedMetricGraph& t, std::span<const int> path) {
  return path.empty() ? t.basepoint() : t.terminus(path.back());
}

}  // namespace

MetricCoreGraph minimal_subtree(const MarkedMetricGraph& t, const StallingsGraph& h) {
  const HCover cover(t, h);
  MetricCoreGraph out;
  std::vector<int> id(cover.vertex_count(), -1);
  for (int v = 0; v < cover.vertex_count(); ++v) {
    if (!cover.core_vertex(v)) continue;
    id[v] = out.vertex_count++;
    out.projection.push_back(cover.projection(v));
  }
  std::vector<char> hit(t.edges().size(), 0);
  for (int e = 0; e < static_cast<int>(cover.edges().size()); ++e) {
    if (!cover.core_edge(e)) continue;
    const detail::RawEdge& r = cover.edges()[e];
    const int base_edge = r.label - 1;
    out.edges.push_back({id[r.from], id[r.to], base_edge, t.edges()[base_edge].length});
    out.volume += t.edges()[base_edge].length;
    hit[base_edge] = 1;
  }
  out.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  // Covering: the star of each vertex maps bijectively onto the star of its image.
  bool covering = true;
  for (int v = 0; v < cover.vertex_count() && covering; ++v) {
    if (!cover.core_vertex(v)) continue;
    for (int o : t.star(cover.projection(v))) {
      const int e = cover.edge_at(v, o);
      if (e < 0 || !cover.core_edge(e)) {
        covering = false;
        break;
      }
    }
  }
  out.covering = covering;
  if (covering) {
    out.degree = static_cast<int>(
        std::count(out.projection.begin(), out.projection.end(), t.basepoint()));
  }
  return out;
}

bool edge_in_minimal_subtree(const MarkedMetricGraph& t, const StallingsGraph& h,
                             const Word& base_path, std::span<const int> tail) {
  if (tail.empty()) throw Error(ErrorKind::malformed_path, "edge path is empty");
  const int two_e = 2 * static_cast<int>(t.edges().size());
  int at = t.basepoint();
  for (int o : tail) {
    if (o < 0 || o >= two_e) throw Error(ErrorKind::malformed_path, "edge out of range");
    if (t.origin(o) != at) throw Error(ErrorKind::malformed_path, "edge path is not connected");
    at = t.terminus(o);
  }
  const HCover cover(t, h);
  std::vector<int> start = t.path_of(base_path);
  start.insert(start.end(), tail.begin(), tail.end() - 1);
  return cover.edge_in_subtree(tighten(start), tail.back());
}

const char* to_string(IntersectionKind kind) {
  switch (kind) {
    case IntersectionKind::whole_tree: return "whole-tree-coincidence";
    case IntersectionKind::disjoint: return "disjoint";
    case IntersectionKind::single_point: return "single-point";
    case IntersectionKind::nondegenerate: return "nondegenerate";
    case IntersectionKind::degenerate_within_radius: return "degenerate-within-R";
  }
  return "?";
}

const char* to_string(TransverseVerdict v) {
  switch (v) {
    case TransverseVerdict::single_tree: return "single-tree";
    case TransverseVerdict::family_degenerate: return "family-degenerate";
    case TransverseVerdict::transverse_up_to_budget: return "transverse-up-to-budget";
    case TransverseVerdict::violation: return "violation";
    case TransverseVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

TranslateIntersection intersect(const MarkedMetricGraph& t, const StallingsGraph& h,
                                const HCover& cover, const Word& g, int radius) {
  TranslateIntersection out;
  if (membership(h, g)) {
    out.kind = IntersectionKind::whole_tree;
    return out;
  }
  const std::vector<int> gpath = t.path_of(g);
  const std::vector<int> ginv = reverse_path(gpath);
  // With p the projection of x0 on T_H, q = proj_{gT_H}(p) lies in T_H
  // exactly when the two subtrees meet.
  const std::vector<int> p = cover.arc_to_core();
  const std::vector<int> q = concat(gpath, cover.project(concat(ginv, p)));
  out.point = q;
  const std::size_t from_translate = concat(ginv, q).size();
  if (static_cast<int>(std::min(q.size(), from_translate)) > radius) {
    out.kind = IntersectionKind::degenerate_within_radius;
    return out;
  }
  if (!cover.vertex_in_subtree(q)) {
    out.kind = IntersectionKind::disjoint;
    return out;
  }
  // Grow an arc inside both subtrees, never backtracking.
  std::vector<int> at = q;
  int previous = -1;
  while (static_cast<int>(out.arc.size()) < std::max(radius, 1)) {
    bool moved = false;
    for (int o : t.star(endpoint(t, at))) {
      if (o == previous) continue;
      if (!cover.edge_in_subtree(at, o)) continue;
      if (!cover.edge_in_subtree(concat(ginv, at), o)) continue;
      out.arc.push_back(o);
      out.arc_length += t.length(o);
      at = concat(at, std::span<const int>(&o, 1));
      previous = reverse_edge(o);
      moved = true;
      break;
    }
    if (!moved) break;
  }
  out.kind = out.arc.empty() ? IntersectionKind::single_point : IntersectionKind::nondegenerate;
  return out;
}

}  // namespace

TranslateIntersection translate_intersection(const MarkedMetricGraph& t, const StallingsGraph& h,
                                             const Word& g, int radius) {
  const HCover cover(t, h);
  return intersect(t, h, cover, g, radius);
}

TransverseReport transverse_family_report(const MarkedMetricGraph& t, const StallingsGraph& h,
                                          int max_word, int radius) {
  TransverseReport report;
  report.max_word = max_word;
  report.radius = radius;
  const SubgroupIndex idx = index(h);
  if (idx.finite) {
    report.verdict = idx.value == 1 ? TransverseVerdict::single_tree
                                    : TransverseVerdict::family_degenerate;
    return report;
  }
  const HCover cover(t, h);
  std::vector<DoubleCosetGraph> seen;
  bool violation = false;
  bool inconclusive = false;
  for_each_word(t.rank(), max_word, WordMode::reduced, [&](const Word& g) {
    if (membership(h, g)) return true;
    for (const DoubleCosetGraph& d : seen) {
      if (d.contains(g)) return true;
    }
    seen.push_back(double_coset(h, g));
    TranslateIntersection r = intersect(t, h, cover, g, radius);
    violation = violation || r.kind == IntersectionKind::nondegenerate;
    inconclusive = inconclusive || r.kind == IntersectionKind::degenerate_within_radius;
    report.entries.push_back({g, std::move(r)});
    return true;
  });
  if (violation) {
    report.verdict = TransverseVerdict::violation;
  } else if (inconclusive) {
    report.verdict = TransverseVerdict::inconclusive;
  } else {
    report.verdict = TransverseVerdict::transverse_up_to_budget;
  }
  return report;
}

std::vector<Word> omega_epsilon(const MarkedMetricGraph& t, const Scalar& eps, int max_word) {
  if (eps.sign() != Sign::positive) {
    throw Error(ErrorKind::precondition_violated, "epsilon must be positive");
  }
  std::vector<Word> out;
  for_each_word(t.rank(), max_word, WordMode::conjugacy, [&](const Word& w) {
    if (translation_length(t, w) < eps) out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace freeact
