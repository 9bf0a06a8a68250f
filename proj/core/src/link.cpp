#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "cubedist/complex.hpp"

namespace cubedist {

void CornerGraph::add(std::uint32_t u, std::uint32_t w) {
  auto id = static_cast<std::uint32_t>(edges.size());
  edges.emplace_back(u, w);
  adj[u].emplace_back(w, id);
  if (u != w) adj[w].emplace_back(u, id);
}

namespace {

CornerGraph corners(const SquareComplex& c, const std::vector<bool>* keep) {
  CornerGraph g;
  g.node_count = 2 * c.edges().size();
  g.adj.resize(g.node_count);
  const auto& squares = c.squares();
  for (std::size_t q = 0; q < squares.size(); ++q) {
    if (keep && !(*keep)[q]) continue;
    const auto& sides = squares[q].sides;
    for (int i = 0; i < 4; ++i) {
      const Side& in = sides[i];
      const Side& out = sides[(i + 1) % 4];
      auto end_in = static_cast<std::uint32_t>(end_node(in.edge, in.dir > 0));
      auto start_out = static_cast<std::uint32_t>(end_node(out.edge, out.dir < 0));
      g.add(end_in, start_out);
    }
  }
  return g;
}

std::vector<std::vector<std::uint32_t>> simple_neighbours(const CornerGraph& g) {
  std::vector<std::vector<std::uint32_t>> nb(g.node_count);
  for (std::size_t u = 0; u < g.node_count; ++u) {
    for (auto [w, id] : g.adj[u])
      if (w != u) nb[u].push_back(w);
    std::sort(nb[u].begin(), nb[u].end());
    nb[u].erase(std::unique(nb[u].begin(), nb[u].end()), nb[u].end());
  }
  return nb;
}

std::optional<Cycle> loops_or_parallels(const CornerGraph& g) {
  for (auto [u, w] : g.edges)
    if (u == w) return Cycle{{u}};
  std::unordered_set<std::uint64_t> seen;
  for (auto [u, w] : g.edges) {
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, w)) << 32) | std::max(u, w);
    if (!seen.insert(key).second) return Cycle{{u, w}};
  }
  return std::nullopt;
}

}  // namespace

CornerGraph corner_graph(const SquareComplex& c) { return corners(c, nullptr); }

CornerGraph corner_graph(const SquareComplex& c, const std::vector<bool>& keep) { return corners(c, &keep); }

std::optional<Cycle> short_cycle(const CornerGraph& g, std::size_t limit) {
  if (limit <= 1) return std::nullopt;
  if (auto c = loops_or_parallels(g)) {
    if (c->length() < limit) return c;
  }
  if (limit <= 3) return std::nullopt;
  auto nb = simple_neighbours(g);
  // Triangles by degree ordering: each triangle is found from its lowest-ranked node.
  std::vector<std::size_t> rank(g.node_count);
  std::vector<std::uint32_t> order(g.node_count);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return nb[a].size() != nb[b].size() ? nb[a].size() < nb[b].size() : a < b;
  });
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<char> mark(g.node_count, 0);
  for (std::uint32_t u = 0; u < g.node_count; ++u) {
    for (auto w : nb[u])
      if (rank[w] > rank[u]) mark[w] = 1;
    for (auto w : nb[u]) {
      if (rank[w] <= rank[u]) continue;
      for (auto x : nb[w])
        if (rank[x] > rank[w] && mark[x]) return Cycle{{u, w, x}};
    }
    for (auto w : nb[u]) mark[w] = 0;
  }
  return std::nullopt;
}

std::optional<Cycle> shortest_cycle(const CornerGraph& g) {
  if (auto c = loops_or_parallels(g)) return c;
  const std::size_t n = g.node_count;
  constexpr int kUnseen = -1;
  std::vector<int> dist(n, kUnseen);
  std::vector<std::uint32_t> parent(n), parent_edge(n);
  std::vector<std::uint32_t> touched;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Cycle found;
  auto record = [&](std::uint32_t root, std::uint32_t x, std::uint32_t y) {
    std::vector<std::size_t> left, right;
    for (auto v = x;; v = parent[v]) {
      left.push_back(v);
      if (v == root) break;
    }
    for (auto v = y; v != root; v = parent[v]) right.push_back(v);
    found.nodes.assign(left.rbegin(), left.rend());
    found.nodes.insert(found.nodes.end(), right.begin(), right.end());
  };
  for (std::uint32_t root = 0; root < n && best > 3; ++root) {
    if (g.adj[root].size() < 2) continue;
    for (auto t : touched) dist[t] = kUnseen;
    touched.clear();
    std::queue<std::uint32_t> q;
    dist[root] = 0;
    parent[root] = root;
    parent_edge[root] = std::numeric_limits<std::uint32_t>::max();
    touched.push_back(root);
    q.push(root);
    while (!q.empty() && best > 3) {
      auto x = q.front();
      q.pop();
      if (2 * static_cast<std::size_t>(dist[x]) + 1 >= best) break;
      for (auto [y, id] : g.adj[x]) {
        if (id == parent_edge[x]) continue;
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          parent_edge[y] = id;
          touched.push_back(y);
          q.push(y);
        } else {
          std::size_t len = static_cast<std::size_t>(dist[x] + dist[y] + 1);
          if (len < best) {
            best = len;
            record(root, x, y);
          }
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return found;
}

std::optional<Cycle> find_four_cycle(const CornerGraph& g, const std::vector<bool>& node_ok) {
  auto nb = simple_neighbours(g);
  std::unordered_map<std::uint32_t, std::uint32_t> via;
  for (std::uint32_t u = 0; u < g.node_count; ++u) {
    if (!node_ok[u]) continue;
    via.clear();
    for (auto x : nb[u]) {
      if (!node_ok[x]) continue;
      for (auto w : nb[x]) {
        if (w == u || !node_ok[w]) continue;
        auto [it, fresh] = via.emplace(w, x);
        if (!fresh && it->second != x) return Cycle{{u, it->second, w, x}};
      }
    }
  }
  return std::nullopt;
}

std::vector<int> bfs_distances(const CornerGraph& g, std::size_t from, int max_depth) {
  std::vector<int> dist(g.node_count, -1);
  std::queue<std::size_t> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    if (dist[x] >= max_depth) continue;
    for (auto [y, id] : g.adj[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

}  // namespace cubedist
