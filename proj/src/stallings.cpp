#include "freeact/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "fold.hpp"
#include "freeact/error.hpp"

namespace freeact {

namespace {

using detail::RawEdge;

void check_word(const Word& w, int rank) {
  if (w.max_letter() > rank) {
    throw Error(ErrorKind::malformed_word,
                "word " + w.str() + " uses a letter beyond rank " + std::to_string(rank));
  }
}

// Appends a path labelled w from `start` to `finish` (fresh interior
// vertices). Returns the new vertex count.
int add_path(std::vector<RawEdge>& edges, int vertex_count, int start, int finish, const Word& w) {
  int current = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int next = (i + 1 == w.size()) ? finish : vertex_count++;
    const Letter x = w[i];
    if (x > 0) {
      edges.push_back({current, next, x});
    } else {
      edges.push_back({next, current, -x});
    }
    current = next;
  }
  return vertex_count;
}

StallingsGraph assemble(int rank, const detail::FoldResult& folded, int keep) {
  const detail::FoldResult pruned =
      detail::prune(folded.vertex_count, folded.basepoint, folded.edges, keep);
  const detail::FoldResult canon =
      detail::canonical_order(pruned.vertex_count, pruned.basepoint, pruned.edges, rank);
  std::vector<LabeledEdge> edges;
  edges.reserve(canon.edges.size());
  for (const RawEdge& e : canon.edges) edges.push_back({e.from, e.to, e.label});
  return StallingsGraph::from_edges(rank, canon.vertex_count, 0, edges);
}

}  // namespace

StallingsGraph::StallingsGraph(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw Error(ErrorKind::precondition_violated, "rank must lie in 1..26");
  }
  index_edges();
}

void StallingsGraph::index_edges() {
  const int width = 2 * rank_;
  slots_.assign(static_cast<std::size_t>(vertex_count_) * width, -1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const LabeledEdge& edge = edges_[e];
    int& out = slots_[edge.from * width + letter_key(edge.label)];
    int& in = slots_[edge.to * width + letter_key(-edge.label)];
    if (out >= 0 || in >= 0) {
      throw Error(ErrorKind::invalid_graph, "edge table is not folded");
    }
    out = e;
    in = e;
  }
}

StallingsGraph StallingsGraph::from_edges(int rank, int vertex_count, int basepoint,
                                          const std::vector<LabeledEdge>& edges) {
  std::vector<RawEdge> raw;
  raw.reserve(edges.size());
  for (const LabeledEdge& e : edges) {
    if (e.label < 1 || e.label > rank || e.from < 0 || e.to < 0 || e.from >= vertex_count ||
        e.to >= vertex_count) {
      throw Error(ErrorKind::invalid_graph, "edge out of range");
    }
    raw.push_back({e.from, e.to, e.label});
  }
  if (basepoint < 0 || basepoint >= vertex_count) {
    throw Error(ErrorKind::invalid_graph, "basepoint out of range");
  }
  const detail::FoldResult canon = detail::canonical_order(vertex_count, basepoint, raw, rank);
  if (canon.vertex_count != vertex_count) {
    throw Error(ErrorKind::invalid_graph, "graph is not connected");
  }
  StallingsGraph g(rank);
  g.vertex_count_ = canon.vertex_count;
  for (const RawEdge& e : canon.edges) g.edges_.push_back({e.from, e.to, e.label});
  g.index_edges();
  for (int v = 1; v < g.vertex_count_; ++v) {
    if (g.degree(v) < 2) throw Error(ErrorKind::invalid_graph, "graph has a hanging tree");
  }
  return g;
}

int StallingsGraph::edge_at(int v, Letter x) const {
  return slots_[v * 2 * rank_ + letter_key(x)];
}

int StallingsGraph::follow(int v, Letter x) const {
  const int e = edge_at(v, x);
  if (e < 0) return -1;
  return x > 0 ? edges_[e].to : edges_[e].from;
}

std::optional<int> StallingsGraph::read(int v, const Word& w) const {
  if (w.max_letter() > rank_) return std::nullopt;
  for (Letter x : w) {
    v = follow(v, x);
    if (v < 0) return std::nullopt;
  }
  return v;
}

int StallingsGraph::degree(int v) const {
  int d = 0;
  for (int k = 0; k < 2 * rank_; ++k) d += slots_[v * 2 * rank_ + k] >= 0 ? 1 : 0;
  return d;
}

std::vector<char> StallingsGraph::tree_edges() const {
  std::vector<char> tree(edges_.size(), 0);
  std::vector<char> seen(vertex_count_, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int k = 0; k < 2 * rank_; ++k) {
      const Letter x = letter_from_key(k);
      const int e = edge_at(v, x);
      if (e < 0) continue;
      const int w = follow(v, x);
      if (!seen[w]) {
        seen[w] = 1;
        tree[e] = 1;
        queue.push_back(w);
      }
    }
  }
  return tree;
}

std::vector<Word> StallingsGraph::tree_paths() const {
  std::vector<std::optional<Word>> path(vertex_count_);
  path[0] = Word();
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int k = 0; k < 2 * rank_; ++k) {
      const Letter x = letter_from_key(k);
      const int w = follow(v, x);
      if (w < 0 || path[w]) continue;
      path[w] = *path[v] * Word{x};
      queue.push_back(w);
    }
  }
  std::vector<Word> out;
  out.reserve(vertex_count_);
  for (auto& p : path) out.push_back(std::move(*p));
  return out;
}

Word StallingsGraph::tree_path(int v) const { return tree_paths().at(v); }

std::vector<Word> StallingsGraph::basis() const {
  const std::vector<char> tree = tree_edges();
  const std::vector<Word> paths = tree_paths();
  std::vector<Word> out;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    if (tree[e]) continue;
    const LabeledEdge& edge = edges_[e];
    out.push_back(paths[edge.from] * Word{edge.label} * paths[edge.to].inverse());
  }
  return out;
}

int StallingsGraph::subgroup_rank() const {
  return static_cast<int>(edges_.size()) - vertex_count_ + 1;
}

bool StallingsGraph::is_covering() const {
  return std::all_of(slots_.begin(), slots_.end(), [](int e) { return e >= 0; });
}

StallingsGraph build_core(std::span<const Word> generators, int rank) {
  std::vector<RawEdge> edges;
  int vertices = 1;
  for (const Word& w : generators) {
    check_word(w, rank);
    if (w.empty()) continue;
    vertices = add_path(edges, vertices, 0, 0, w);
  }
  return assemble(rank, detail::fold(vertices, 0, std::move(edges), rank), 0);
}

bool membership(const StallingsGraph& graph, const Word& w) {
  const std::optional<int> end = graph.read(graph.basepoint(), w);
  return end && *end == graph.basepoint();
}

SubgroupIndex index(const StallingsGraph& graph) {
  if (graph.is_covering()) return {true, graph.vertex_count()};
  return {false, 0};
}

StallingsGraph fiber_product(const StallingsGraph& g1, const StallingsGraph& g2) {
  if (g1.rank() != g2.rank()) {
    throw Error(ErrorKind::precondition_violated, "fiber product of graphs of different rank");
  }
  const int rank = g1.rank();
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> pairs;
  std::vector<RawEdge> edges;
  auto vertex = [&](int a, int b) {
    auto [it, fresh] = id.try_emplace({a, b}, static_cast<int>(pairs.size()));
    if (fresh) pairs.push_back({a, b});
    return it->second;
  };
  vertex(0, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    for (int k = 0; k < 2 * rank; ++k) {
      const Letter x = letter_from_key(k);
      const int ta = g1.follow(a, x);
      const int tb = g2.follow(b, x);
      if (ta < 0 || tb < 0) continue;
      const int target = vertex(ta, tb);
      if (x > 0) edges.push_back({static_cast<int>(i), target, x});
    }
  }
  detail::FoldResult product;
  product.vertex_count = static_cast<int>(pairs.size());
  product.basepoint = 0;
  product.edges = std::move(edges);
  return assemble(rank, product, 0);
}

StallingsGraph conjugate(const StallingsGraph& graph, const Word& g) {
  check_word(g, graph.rank());
  if (g.empty()) return graph;
  std::vector<RawEdge> edges;
  for (const LabeledEdge& e : graph.edges()) edges.push_back({e.from, e.to, e.label});
  const int old_base = graph.basepoint();
  const int new_base = graph.vertex_count();
  const int vertices = add_path(edges, graph.vertex_count() + 1, new_base, old_base, g);
  return assemble(graph.rank(), detail::fold(vertices, new_base, std::move(edges), graph.rank()),
                  new_base);
}

bool is_basis(std::span<const Word> words, int rank) {
  if (static_cast<int>(words.size()) != rank) return false;
  const StallingsGraph g = build_core(words, rank);
  return g.vertex_count() == 1 && g.is_covering();
}

bool is_free_basis(std::span<const Word> words, int rank) {
  for (const Word& w : words) {
    if (w.empty()) return false;
  }
  return build_core(words, rank).subgroup_rank() == static_cast<int>(words.size());
}

Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (Letter x : w) {
    const int j = (x < 0 ? -x : x) - 1;
    if (j >= static_cast<int>(images.size())) {
      throw Error(ErrorKind::malformed_word, "substitution letter out of range");
    }
    out = out * (x > 0 ? images[j] : images[j].inverse());
  }
  return out;
}

namespace {

// Folding that carries, on each edge, a word in the free group on the input
// generators. The product of tags along any closed path at the basepoint is
// a preimage of the path's label.
struct TaggedEdge {
  int from;
  int to;
  int label;
  Word tag;
};

class TaggedFolder {
 public:
  TaggedFolder(int vertices, std::vector<TaggedEdge> edges)
      : vertex_count_(vertices), edges_(std::move(edges)) {}

  void run() {
    while (fold_once()) {
    }
  }

  // Tag of the traversal of letter x leaving v, if present.
  std::optional<std::pair<int, Word>> traverse(int v, Letter x) const {
    for (const TaggedEdge& e : edges_) {
      if (x > 0 && e.label == x && e.from == v) return std::make_pair(e.to, e.tag);
      if (x < 0 && e.label == -x && e.to == v) return std::make_pair(e.from, e.tag.inverse());
    }
    return std::nullopt;
  }

  int live_vertices() const {
    std::vector<char> used(vertex_count_, 0);
    used[0] = 1;
    for (const TaggedEdge& e : edges_) used[e.from] = used[e.to] = 1;
    return static_cast<int>(std::count(used.begin(), used.end(), 1));
  }

 private:
  struct Traversal {
    std::size_t edge;
    int target;
    Word tag;
  };

  Traversal traversal(std::size_t i, bool forward) const {
    const TaggedEdge& e = edges_[i];
    return forward ? Traversal{i, e.to, e.tag} : Traversal{i, e.from, e.tag.inverse()};
  }

  // Gauge at v by c: paths through v are unchanged, the tag of every
  // traversal into v is right-multiplied by c.
  void gauge(int v, const Word& c) {
    for (TaggedEdge& e : edges_) {
      if (e.to == v) e.tag = e.tag * c;
      if (e.from == v) e.tag = c.inverse() * e.tag;
    }
  }

  void redirect(int from, int to) {
    for (TaggedEdge& e : edges_) {
      if (e.from == from) e.from = to;
      if (e.to == from) e.to = to;
    }
  }

  bool fold_once() {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (std::size_t j = i + 1; j < edges_.size(); ++j) {
        if (edges_[i].label != edges_[j].label) continue;
        for (int side = 0; side < 2; ++side) {
          // side 0: common source; side 1: common target.
          const int ui = side == 0 ? edges_[i].from : edges_[i].to;
          const int uj = side == 0 ? edges_[j].from : edges_[j].to;
          if (ui != uj) continue;
          merge(traversal(i, side == 0), traversal(j, side == 0));
          return true;
        }
      }
    }
    return false;
  }

  void merge(const Traversal& a, const Traversal& b) {
    if (a.target != b.target) {
      if (b.target != 0) {
        gauge(b.target, b.tag.inverse() * a.tag);
        redirect(b.target, a.target);
      } else {
        gauge(a.target, a.tag.inverse() * b.tag);
        redirect(a.target, b.target);
      }
    }
    // Parallel now; if the tags still differ the generators satisfy a
    // relation and either tag is a valid preimage.
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(b.edge));
  }

  int vertex_count_;
  std::vector<TaggedEdge> edges_;
};

}  // namespace

std::vector<Word> invert_basis(std::span<const Word> basis, int rank) {
  if (!is_basis(basis, rank)) {
    throw Error(ErrorKind::precondition_violated, "words do not form a basis of F_n");
  }
  std::vector<TaggedEdge> edges;
  int vertices = 1;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Word& w = basis[j];
    const Word gen{static_cast<Letter>(j + 1)};
    int current = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int next = (i + 1 == w.size()) ? 0 : vertices++;
      const Word tag = i == 0 ? gen : Word();
      const Letter x = w[i];
      if (x > 0) {
        edges.push_back({current, next, x, tag});
      } else {
        edges.push_back({next, current, -x, tag.inverse()});
      }
      current = next;
    }
  }
  TaggedFolder folder(vertices, std::move(edges));
  folder.run();
  std::vector<Word> out;
  for (int i = 1; i <= rank; ++i) {
    const auto step = folder.traverse(0, i);
    if (!step || step->first != 0) {
      throw Error(ErrorKind::precondition_violated, "words do not form a basis of F_n");
    }
    out.push_back(step->second);
  }
  return out;
}

bool DoubleCosetGraph::contains(const Word& w) const {
  int v = left;
  for (Letter x : w) {
    if ((x < 0 ? -x : x) > rank) return false;
    v = slots[v * 2 * rank + letter_key(x)];
    if (v < 0) return false;
  }
  return v == right;
}

DoubleCosetGraph double_coset(const StallingsGraph& graph, const Word& g) {
  check_word(g, graph.rank());
  const int n = graph.vertex_count();
  std::vector<RawEdge> edges;
  for (const LabeledEdge& e : graph.edges()) {
    edges.push_back({e.from, e.to, e.label});
    edges.push_back({e.from + n, e.to + n, e.label});
  }
  detail::FoldResult folded;
  if (g.empty()) {
    // H 1 H = H: a single copy with left = right.
    folded.vertex_count = n;
    for (const LabeledEdge& e : graph.edges()) folded.edges.push_back({e.from, e.to, e.label});
    folded.vertex_of.assign(2 * n, 0);
    for (int v = 0; v < n; ++v) folded.vertex_of[v] = folded.vertex_of[v + n] = v;
  } else {
    const int vertices = add_path(edges, 2 * n, 0, n, g);
    folded = detail::fold(vertices, 0, std::move(edges), graph.rank());
  }
  DoubleCosetGraph out;
  out.rank = graph.rank();
  out.vertex_count = folded.vertex_count;
  out.left = folded.vertex_of[0];
  out.right = folded.vertex_of[n];
  out.slots.assign(static_cast<std::size_t>(out.vertex_count) * 2 * out.rank, -1);
  for (const RawEdge& e : folded.edges) {
    out.edges.push_back({e.from, e.to, e.label});
    out.slots[e.from * 2 * out.rank + letter_key(e.label)] = e.to;
    out.slots[e.to * 2 * out.rank + letter_key(-e.label)] = e.from;
  }
  return out;
}

HallWitness hall_completion(const StallingsGraph& graph, const std::optional<Word>& g,
                            int vertex_bound) {
  const int rank = graph.rank();
  if (g) {
    check_word(*g, rank);
    if (membership(graph, *g)) {
      throw Error(ErrorKind::precondition_violated,
                  "excluded element " + g->str() + " lies in the subgroup");
    }
  }
  const int g_len = g ? static_cast<int>(g->size()) : 0;
  const int bound = vertex_bound > 0 ? vertex_bound : 2 * (graph.vertex_count() + g_len);

  std::vector<LabeledEdge> edges = graph.edges();
  int vertices = graph.vertex_count();
  const int width = 2 * rank;
  std::vector<int> slot(static_cast<std::size_t>(vertices) * width, -1);
  auto add_edge = [&](int from, int to, int label) {
    edges.push_back({from, to, label});
    slot[from * width + letter_key(label)] = to;
    slot[to * width + letter_key(-label)] = from;
  };
  for (const LabeledEdge& e : graph.edges()) {
    slot[e.from * width + letter_key(e.label)] = e.to;
    slot[e.to * width + letter_key(-e.label)] = e.from;
  }

  // Read g as far as possible, then hang the rest of g as a fresh path so
  // that g traces a non-closed path from the basepoint.
  if (g) {
    int v = graph.basepoint();
    std::size_t i = 0;
    for (; i < g->size(); ++i) {
      const int next = slot[v * width + letter_key((*g)[i])];
      if (next < 0) break;
      v = next;
    }
    for (; i < g->size(); ++i) {
      const int fresh = vertices++;
      slot.resize(static_cast<std::size_t>(vertices) * width, -1);
      const Letter x = (*g)[i];
      if (x > 0) {
        add_edge(v, fresh, x);
      } else {
        add_edge(fresh, v, -x);
      }
      v = fresh;
    }
  }
  if (vertices > bound) {
    throw Error(ErrorKind::budget_exhausted,
                "no completion within vertex bound " + std::to_string(bound));
  }

  // Each label is a partial injection on vertices; extend it to a
  // permutation by pairing the gaps in increasing order.
  for (int label = 1; label <= rank; ++label) {
    std::vector<int> lacking_out;
    std::vector<int> lacking_in;
    for (int v = 0; v < vertices; ++v) {
      if (slot[v * width + letter_key(label)] < 0) lacking_out.push_back(v);
      if (slot[v * width + letter_key(-label)] < 0) lacking_in.push_back(v);
    }
    for (std::size_t i = 0; i < lacking_out.size(); ++i) {
      add_edge(lacking_out[i], lacking_in[i], label);
    }
  }

  const detail::FoldResult canon = detail::canonical_order(
      vertices, graph.basepoint(),
      [&] {
        std::vector<RawEdge> raw;
        for (const LabeledEdge& e : edges) raw.push_back({e.from, e.to, e.label});
        return raw;
      }(),
      rank);

  HallWitness w{StallingsGraph::from_edges(rank, vertices, graph.basepoint(), edges), {}, {}, {},
                {}, g, bound};
  w.vertex_map.resize(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v) w.vertex_map[v] = canon.vertex_of[v];
  for (const LabeledEdge& e : graph.edges()) {
    const int from = canon.vertex_of[e.from];
    w.edge_map.push_back(w.cover.edge_at(from, e.label));
  }

  // Spanning tree of the cover extending the breadth-first tree of H's graph.
  const StallingsGraph& cover = w.cover;
  std::vector<char> in_image(cover.edges().size(), 0);
  for (int e : w.edge_map) in_image[e] = 1;
  std::vector<char> tree(cover.edges().size(), 0);
  const std::vector<char> h_tree = graph.tree_edges();
  std::vector<char> reached(cover.vertex_count(), 0);
  for (int v = 0; v < graph.vertex_count(); ++v) reached[w.vertex_map[v]] = 1;
  for (std::size_t e = 0; e < h_tree.size(); ++e) {
    if (h_tree[e]) tree[w.edge_map[e]] = 1;
  }
  std::deque<int> queue;
  for (int v = 0; v < cover.vertex_count(); ++v) {
    if (reached[v]) queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int k = 0; k < width; ++k) {
      const Letter x = letter_from_key(k);
      const int to = cover.follow(v, x);
      if (!reached[to]) {
        reached[to] = 1;
        tree[cover.edge_at(v, x)] = 1;
        queue.push_back(to);
      }
    }
  }
  // Tree path words by search over tree edges from the basepoint.
  std::vector<std::optional<Word>> path(cover.vertex_count());
  path[0] = Word();
  std::deque<int> walk{0};
  while (!walk.empty()) {
    const int v = walk.front();
    walk.pop_front();
    for (int k = 0; k < width; ++k) {
      const Letter x = letter_from_key(k);
      const int e = cover.edge_at(v, x);
      const int to = cover.follow(v, x);
      if (!tree[e] || path[to]) continue;
      path[to] = *path[v] * Word{x};
      walk.push_back(to);
    }
  }
  for (int e = 0; e < static_cast<int>(cover.edges().size()); ++e) {
    if (tree[e]) continue;
    const LabeledEdge& edge = cover.edges()[e];
    const Word loop = *path[edge.from] * Word{edge.label} * path[edge.to]->inverse();
    (in_image[e] ? w.subgroup_basis : w.complement_basis).push_back(loop);
  }
  return w;
}

HallCheck verify_hall_witness(const StallingsGraph& graph, const HallWitness& witness) {
  HallCheck check;
  const StallingsGraph& cover = witness.cover;
  const SubgroupIndex idx = index(cover);
  check.finite_index = idx.finite;
  check.within_bound = cover.vertex_count() <= witness.vertex_bound;

  bool embeds = cover.rank() == graph.rank() &&
                static_cast<int>(witness.vertex_map.size()) == graph.vertex_count() &&
                witness.edge_map.size() == graph.edges().size() && !witness.vertex_map.empty() &&
                witness.vertex_map[0] == cover.basepoint();
  if (embeds) {
    std::vector<int> sorted = witness.vertex_map;
    std::sort(sorted.begin(), sorted.end());
    embeds = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  for (std::size_t e = 0; embeds && e < graph.edges().size(); ++e) {
    const int ce = witness.edge_map[e];
    if (ce < 0 || ce >= static_cast<int>(cover.edges().size())) {
      embeds = false;
      break;
    }
    const LabeledEdge& src = graph.edges()[e];
    const LabeledEdge& dst = cover.edges()[ce];
    embeds = dst.label == src.label && dst.from == witness.vertex_map[src.from] &&
             dst.to == witness.vertex_map[src.to];
  }
  for (const Word& h : graph.basis()) embeds = embeds && membership(cover, h);
  check.embeds = embeds;

  const int n = graph.rank();
  const std::size_t total = witness.subgroup_basis.size() + witness.complement_basis.size();
  check.euler_count = idx.finite && static_cast<int>(total) == 1 + idx.value * (n - 1) &&
                      build_core(witness.subgroup_basis, n) == graph;

  std::vector<Word> combined = witness.subgroup_basis;
  combined.insert(combined.end(), witness.complement_basis.begin(),
                  witness.complement_basis.end());
  check.free_product_basis = is_free_basis(combined, n) && build_core(combined, n) == cover;

  if (witness.excluded) check.excludes = !membership(cover, *witness.excluded);
  return check;
}

}  // namespace freeact
