#include <numeric>

#include "cubedist/complex.hpp"
#include "cubedist/error.hpp"
#include "cubedist/presentation.hpp"

namespace cubedist {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GlueResult glue(const SquareComplex& a, const SquareComplex& b, const std::vector<EdgePair>& along, bool strict) {
  if (along.empty()) throw Error(ErrorKind::NotIsomorphic, "gluing along an empty edge set");
  const std::size_t ea = a.edges().size(), eb = b.edges().size();
  std::vector<long> b_to_a(eb, -1), a_to_b(ea, -1);
  std::vector<int> flip(eb, 1);
  for (const auto& p : along) {
    if (p.a >= ea || p.b >= eb) throw Error(ErrorKind::NotIsomorphic, "glue pair names a missing edge");
    if (b_to_a[p.b] >= 0 || a_to_b[p.a] >= 0)
      throw Error(ErrorKind::NotIsomorphic, "edge " + a.edges()[p.a].label + " / " + b.edges()[p.b].label +
                                                " is identified twice");
    b_to_a[p.b] = static_cast<long>(p.a);
    a_to_b[p.a] = static_cast<long>(p.b);
    if (p.reversed) flip[p.b] = -1;
  }

  const int va = a.vertex_count(), vb = b.vertex_count();
  UnionFind uf(va + vb);
  std::vector<int> vmap_b(static_cast<std::size_t>(vb), -1), vmap_a(static_cast<std::size_t>(va), -1);
  auto bind = [&](int x, int y) {  // x in a, y in b
    if (strict) {
      if ((vmap_b[y] >= 0 && vmap_b[y] != x) || (vmap_a[x] >= 0 && vmap_a[x] != y))
        throw Error(ErrorKind::NotIsomorphic, "edge identification does not induce a vertex bijection");
      vmap_b[y] = x;
      vmap_a[x] = y;
    }
    uf.unite(x, va + y);
  };
  for (const auto& p : along) {
    const auto& x = a.edges()[p.a];
    const auto& y = b.edges()[p.b];
    bind(p.reversed ? x.target : x.source, y.source);
    bind(p.reversed ? x.source : x.target, y.target);
  }

  GlueResult r;
  std::vector<int> cls(static_cast<std::size_t>(va + vb), -1);
  auto vertex = [&](int x) {
    int root = uf.find(x);
    if (cls[root] < 0) cls[root] = r.complex.add_vertex();
    return cls[root];
  };
  for (int x = 0; x < va; ++x) r.vertex_from_a.push_back(vertex(x));
  for (int y = 0; y < vb; ++y) r.vertex_from_b.push_back(vertex(va + y));
  for (const auto& e : a.edges())
    r.edge_from_a.push_back(
        r.complex.add_edge(r.vertex_from_a[e.source], r.vertex_from_a[e.target], e.label, e.interior));
  for (std::size_t i = 0; i < eb; ++i) {
    if (b_to_a[i] >= 0) {
      r.edge_from_b.push_back(r.edge_from_a[static_cast<std::size_t>(b_to_a[i])]);
    } else {
      const auto& e = b.edges()[i];
      r.edge_from_b.push_back(
          r.complex.add_edge(r.vertex_from_b[e.source], r.vertex_from_b[e.target], e.label, e.interior));
    }
  }
  for (const auto& sq : a.squares()) {
    std::array<Side, 4> s = sq.sides;
    for (auto& side : s) side.edge = r.edge_from_a[side.edge];
    r.complex.add_square(s, sq.relator);
  }
  r.squares_from_a = a.squares().size();
  for (const auto& sq : b.squares()) {
    std::array<Side, 4> s = sq.sides;
    for (auto& side : s) {
      side.dir *= flip[side.edge];
      side.edge = r.edge_from_b[side.edge];
    }
    r.complex.add_square(s, sq.relator);
  }
  return r;
}

std::vector<EdgePair> pairs_by_label(const SquareComplex& a, const SquareComplex& b,
                                     const std::vector<std::string>& labels) {
  std::vector<EdgePair> out;
  for (const auto& l : labels) out.push_back(EdgePair{a.edge(l), b.edge(l), false});
  return out;
}

GlueResult chain_complex(int k, int m) {
  AmalgamSpec spec = build_chain(k, m);
  GlueResult acc;
  acc.complex = build_complex(spec.vertices[0]);
  for (int v = 0; v < acc.complex.vertex_count(); ++v) acc.vertex_from_a.push_back(v);
  for (std::size_t e = 0; e < acc.complex.edges().size(); ++e) acc.edge_from_a.push_back(e);
  acc.squares_from_a = acc.complex.squares().size();
  for (const AmalgamEdge& edge : spec.edges) {
    const Presentation& right = spec.vertices[edge.right];
    std::vector<std::string> labels;
    for (const Word& w : edge.right_basis) labels.push_back(right.alphabet.name(w.at(0).gen));
    SquareComplex next = build_complex(right);
    GlueResult g = glue(acc.complex, next, pairs_by_label(acc.complex, next, labels));
    for (auto& v : acc.vertex_from_a) v = g.vertex_from_a[static_cast<std::size_t>(v)];
    for (auto& e : acc.edge_from_a) e = g.edge_from_a[e];
    acc.complex = std::move(g.complex);
    acc.vertex_from_b = std::move(g.vertex_from_b);
    acc.edge_from_b = std::move(g.edge_from_b);
    acc.squares_from_a = g.squares_from_a;
  }
  return acc;
}

GlueResult main_complex(int m, bool primed) {
  if (m < 2 || m % 2) throw Error(ErrorKind::InvalidParam, "main complex needs an even m >= 2");
  GPresentations g = build_G(m, primed ? m - 1 : m);
  Presentation q = build_Q(m, primed);
  SquareComplex k = build_complex(g.s_form);
  SquareComplex z = build_complex(q);
  std::vector<EdgePair> along;
  for (int i = 1; i <= m + 1; ++i) {
    if (i <= m) {
      auto s = k.find_edge("s" + std::to_string(2 * i));
      if (s) along.push_back(EdgePair{*s, z.edge("alpha" + std::to_string(i)), true});
    }
    auto s = k.find_edge("s" + std::to_string(2 * i - 1));
    auto beta = z.find_edge("beta" + std::to_string(i));
    if (s && beta) along.push_back(EdgePair{*s, *beta, false});
  }
  return glue(k, z, along);
}

}  // namespace cubedist
