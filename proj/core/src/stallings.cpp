#include "cubedist/stallings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace cubedist {

namespace {

class Folder {
 public:
  int add_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    out_.emplace_back();
    in_.emplace_back();
    return static_cast<int>(parent_.size()) - 1;
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void add_edge(int u, GenId g, int v) {
    u = find(u);
    v = find(v);
    link(out_[u], g, v);
    link(in_[v], g, u);
    drain();
  }

  // Collapses the folded graph onto dense ids with the basepoint first.
  void export_to(std::vector<LabeledEdge>& edges, int& vertices) {
    std::vector<int> id(parent_.size(), -1);
    int next = 0;
    id[find(0)] = next++;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      int r = find(static_cast<int>(x));
      if (id[r] < 0) id[r] = next++;
    }
    vertices = next;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      if (find(static_cast<int>(x)) != static_cast<int>(x)) continue;
      for (auto [g, y] : out_[x]) edges.push_back(LabeledEdge{id[x], g, id[find(y)]});
    }
  }

 private:
  void link(std::unordered_map<GenId, int>& m, GenId g, int target) {
    auto [it, fresh] = m.emplace(g, target);
    if (!fresh && find(it->second) != find(target)) pending_.emplace(it->second, target);
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (out_[a].size() + in_[a].size() > out_[b].size() + in_[b].size()) std::swap(a, b);
    parent_[a] = b;
    for (auto [g, x] : out_[a]) link(out_[b], g, x);
    for (auto [g, x] : in_[a]) link(in_[b], g, x);
    out_[a].clear();
    in_[a].clear();
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop();
      merge(a, b);
    }
  }

  std::vector<int> parent_;
  std::vector<std::unordered_map<GenId, int>> out_, in_;
  std::queue<std::pair<int, int>> pending_;
};

}  // namespace

SubgroupGraph build_subgroup(const std::vector<Word>& words, std::optional<std::uint64_t> shuffle_seed) {
  Folder f;
  f.add_vertex();
  std::vector<LabeledEdge> raw;
  for (const Word& w0 : words) {
    Word w = reduce(w0);
    if (w.empty()) continue;
    int cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? 0 : f.add_vertex();
      if (w[i].positive())
        raw.push_back(LabeledEdge{cur, w[i].gen, next});
      else
        raw.push_back(LabeledEdge{next, w[i].gen, cur});
      cur = next;
    }
  }
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(raw.begin(), raw.end(), rng);
  }
  for (const auto& e : raw) f.add_edge(e.from, e.label, e.to);

  std::vector<LabeledEdge> edges;
  int n = 0;
  f.export_to(edges, n);

  // Core trimming: drop hanging trees, keeping the basepoint.
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    ++degree[e.from];
    ++degree[e.to];
  }
  std::vector<bool> alive(static_cast<std::size_t>(n), true), edge_alive(edges.size(), true);
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].from].push_back(i);
    if (edges[i].to != edges[i].from) incident[edges[i].to].push_back(i);
  }
  std::queue<int> leaves;
  for (int v = 1; v < n; ++v)
    if (degree[v] <= 1) leaves.push(v);
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop();
    if (!alive[v]) continue;
    alive[v] = false;
    for (auto i : incident[v]) {
      if (!edge_alive[i]) continue;
      edge_alive[i] = false;
      int other = edges[i].from == v ? edges[i].to : edges[i].from;
      if (--degree[other] <= 1 && other != 0 && alive[other]) leaves.push(other);
    }
  }
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) id[v] = next++;

  SubgroupGraph g;
  g.out_.resize(static_cast<std::size_t>(next));
  g.in_.resize(static_cast<std::size_t>(next));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edge_alive[i]) continue;
    LabeledEdge e{id[edges[i].from], edges[i].label, id[edges[i].to]};
    g.edges_.push_back(e);
    g.out_[e.from][e.label] = e.to;
    g.in_[e.to][e.label] = e.from;
  }
  return g;
}

bool SubgroupGraph::member(const Word& w) const {
  int cur = 0;
  for (Letter x : w) {
    const auto& m = x.positive() ? out_[cur] : in_[cur];
    auto it = m.find(x.gen);
    if (it == m.end()) return false;
    cur = it->second;
  }
  return cur == 0;
}

std::string SubgroupGraph::canonical() const {
  std::vector<int> order(out_.size(), -1);
  std::queue<int> q;
  order[0] = 0;
  int next = 1;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    // Visit neighbours by (label, direction) so the numbering is intrinsic.
    std::map<std::pair<GenId, int>, int> nbrs;
    for (auto [g, y] : out_[v]) nbrs[{g, 0}] = y;
    for (auto [g, y] : in_[v]) nbrs[{g, 1}] = y;
    for (auto [key, y] : nbrs)
      if (order[y] < 0) {
        order[y] = next++;
        q.push(y);
      }
  }
  std::vector<std::tuple<int, GenId, int>> list;
  for (const auto& e : edges_) list.emplace_back(order[e.from], e.label, order[e.to]);
  std::sort(list.begin(), list.end());
  std::ostringstream os;
  os << out_.size() << ';';
  for (auto [a, g, b] : list) os << a << ',' << g << ',' << b << ';';
  return os.str();
}

std::string SubgroupGraph::to_dot(const Alphabet& alpha) const {
  std::ostringstream os;
  os << "digraph subgroup {\n  v0 [shape=doublecircle];\n";
  for (const auto& e : edges_)
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << alpha.name(e.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

InjectivityVerdict check_injective(const std::vector<Word>& images, std::size_t domain_rank) {
  InjectivityVerdict v;
  v.expected = domain_rank;
  v.rank = build_subgroup(images).rank();
  v.ok = images.size() == domain_rank && v.rank == domain_rank;
  return v;
}

}  // namespace cubedist
