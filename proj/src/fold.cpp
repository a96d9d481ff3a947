#include "fold.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

namespace freeact::detail {

namespace {

class Folder {
 public:
  Folder(int vertex_count, std::vector<RawEdge> edges, int alphabet)
      : parent_(vertex_count),
        incident_(vertex_count),
        edges_(std::move(edges)),
        dead_(edges_.size(), 0),
        slot_(2 * static_cast<std::size_t>(alphabet), -1) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      incident_[edges_[e].from].push_back(e);
      if (edges_[e].to != edges_[e].from) incident_[edges_[e].to].push_back(e);
    }
  }

  void run() {
    std::vector<int> work(parent_.size());
    std::iota(work.rbegin(), work.rend(), 0);
    while (!work.empty()) {
      const int v = work.back();
      work.pop_back();
      if (find(v) != v) continue;
      if (const int merged = scan(v); merged >= 0) {
        work.push_back(merged);
        if (find(v) != merged) work.push_back(find(v));
      }
    }
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool dead(int e) const { return dead_[e] != 0; }
  const std::vector<RawEdge>& edges() const { return edges_; }

 private:
  // Scans the star of v and performs at most one vertex merge. Returns the
  // merged vertex (whose star needs rescanning), or -1 when the star of v is
  // folded.
  int scan(int v) {
    std::vector<int> alive;
    alive.reserve(incident_[v].size());
    for (int e : incident_[v]) {
      if (!dead_[e]) alive.push_back(e);
    }
    // A merge can list an edge twice (once from each endpoint).
    std::sort(alive.begin(), alive.end());
    alive.erase(std::unique(alive.begin(), alive.end()), alive.end());
    std::vector<std::size_t> touched;
    int result = -1;
    for (int e : alive) {
      const int f = find(edges_[e].from);
      const int t = find(edges_[e].to);
      const std::size_t base = 2 * static_cast<std::size_t>(edges_[e].label - 1);
      for (int dir = 0; dir < 2 && !dead_[e]; ++dir) {
        if ((dir == 0 ? f : t) != v) continue;
        const int other = dir == 0 ? t : f;
        const std::size_t key = base + dir;
        const int prev = slot_[key];
        if (prev < 0) {
          slot_[key] = e;
          touched.push_back(key);
          continue;
        }
        const int prev_other = find(dir == 0 ? edges_[prev].to : edges_[prev].from);
        dead_[e] = 1;
        if (prev_other != other) result = merge(prev_other, other);
      }
      if (result >= 0) break;
    }
    for (std::size_t key : touched) slot_[key] = -1;
    if (result < 0) {
      std::erase_if(alive, [&](int e) { return dead_[e] != 0; });
      incident_[v] = std::move(alive);
    }
    return result;
  }

  int merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (incident_[a].size() < incident_[b].size()) std::swap(a, b);
    parent_[b] = a;
    incident_[a].insert(incident_[a].end(), incident_[b].begin(), incident_[b].end());
    incident_[b].clear();
    incident_[b].shrink_to_fit();
    return a;
  }

  std::vector<int> parent_;
  std::vector<std::vector<int>> incident_;
  std::vector<RawEdge> edges_;
  std::vector<char> dead_;
  std::vector<int> slot_;
};

}  // namespace

FoldResult fold(int vertex_count, int basepoint, std::vector<RawEdge> edges, int alphabet) {
  Folder folder(vertex_count, std::move(edges), alphabet);
  folder.run();
  FoldResult out;
  std::vector<int> new_id(vertex_count, -1);
  for (int v = 0; v < vertex_count; ++v) {
    const int r = folder.find(v);
    if (new_id[r] < 0) new_id[r] = out.vertex_count++;
  }
  out.vertex_of.resize(vertex_count);
  for (int v = 0; v < vertex_count; ++v) out.vertex_of[v] = new_id[folder.find(v)];
  out.basepoint = out.vertex_of[basepoint];
  for (int e = 0; e < static_cast<int>(folder.edges().size()); ++e) {
    if (folder.dead(e)) continue;
    const RawEdge& raw = folder.edges()[e];
    out.edges.push_back({out.vertex_of[raw.from], out.vertex_of[raw.to], raw.label});
  }
  return out;
}

FoldResult prune(int vertex_count, int basepoint, const std::vector<RawEdge>& edges, int keep) {
  std::vector<int> degree(vertex_count, 0);
  std::vector<std::vector<int>> incident(vertex_count);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    ++degree[edges[e].from];
    ++degree[edges[e].to];
    incident[edges[e].from].push_back(e);
    if (edges[e].to != edges[e].from) incident[edges[e].to].push_back(e);
  }
  std::vector<char> gone_vertex(vertex_count, 0);
  std::vector<char> gone_edge(edges.size(), 0);
  std::deque<int> queue;
  for (int v = 0; v < vertex_count; ++v) {
    if (v != keep && degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (gone_vertex[v]) continue;
    gone_vertex[v] = 1;
    for (int e : incident[v]) {
      if (gone_edge[e]) continue;
      gone_edge[e] = 1;
      const int w = edges[e].from == v ? edges[e].to : edges[e].from;
      degree[w] -= (edges[e].from == edges[e].to) ? 2 : 1;
      if (w != keep && !gone_vertex[w] && degree[w] <= 1) queue.push_back(w);
    }
  }
  FoldResult out;
  out.vertex_of.assign(vertex_count, -1);
  for (int v = 0; v < vertex_count; ++v) {
    if (!gone_vertex[v]) out.vertex_of[v] = out.vertex_count++;
  }
  out.basepoint = basepoint >= 0 ? out.vertex_of[basepoint] : -1;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (gone_edge[e]) continue;
    out.edges.push_back({out.vertex_of[edges[e].from], out.vertex_of[edges[e].to], edges[e].label});
  }
  return out;
}

FoldResult canonical_order(int vertex_count, int basepoint, const std::vector<RawEdge>& edges,
                           int alphabet) {
  // star[v] holds (key, edge) with key = 2*(label-1) for outgoing and +1 for
  // incoming traversals.
  std::vector<std::vector<std::pair<int, int>>> star(vertex_count);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    star[edges[e].from].push_back({2 * (edges[e].label - 1), e});
    star[edges[e].to].push_back({2 * (edges[e].label - 1) + 1, e});
  }
  for (auto& s : star) std::sort(s.begin(), s.end());
  FoldResult out;
  out.vertex_of.assign(vertex_count, -1);
  std::deque<int> queue{basepoint};
  out.vertex_of[basepoint] = out.vertex_count++;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& [key, e] : star[v]) {
      const int w = key % 2 == 0 ? edges[e].to : edges[e].from;
      if (out.vertex_of[w] < 0) {
        out.vertex_of[w] = out.vertex_count++;
        queue.push_back(w);
      }
    }
  }
  out.basepoint = 0;
  for (const RawEdge& e : edges) {
    if (out.vertex_of[e.from] < 0) continue;
    out.edges.push_back({out.vertex_of[e.from], out.vertex_of[e.to], e.label});
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const RawEdge& a, const RawEdge& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  });
  (void)alphabet;
  return out;
}

}  // namespace freeact::detail
