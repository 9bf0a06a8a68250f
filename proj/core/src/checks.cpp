#include "cubedist/complex.hpp"
#include "cubedist/error.hpp"
#include "cubedist/wise.hpp"

namespace cubedist {

LinkVerdict check_large_link(const SquareComplex& c, double exact_budget) {
  LinkVerdict v;
  CornerGraph g = corner_graph(c);
  if (auto bad = short_cycle(g, 4)) {
    v.ok = false;
    v.girth = bad->length();
    v.girth_exact = true;
    v.violation = std::move(bad);
    return v;
  }
  if (static_cast<double>(g.node_count) * static_cast<double>(g.edges.size()) <= exact_budget) {
    v.girth_exact = true;
    if (auto cyc = shortest_cycle(g)) v.girth = cyc->length();
  }
  return v;
}

UltraconvexVerdict min_separation(const SquareComplex& c, const CornerGraph& g,
                                  const std::vector<std::size_t>& nodes, int search_depth) {
  UltraconvexVerdict v;
  std::vector<bool> in_set(g.node_count, false);
  for (auto n : nodes) in_set[n] = true;
  for (auto a : nodes) {
    auto dist = bfs_distances(g, a, search_depth);
    for (auto b : nodes) {
      if (b == a || dist[b] < 0) continue;
      if (node_vertex(c, a) != node_vertex(c, b)) continue;
      if (!v.min_distance || dist[b] < *v.min_distance) {
        v.min_distance = dist[b];
        v.node_a = a;
        v.node_b = b;
      }
    }
  }
  v.ok = !v.min_distance || *v.min_distance >= 4;
  return v;
}

UltraconvexVerdict check_ultraconvex(const SquareComplex& c, const std::vector<std::size_t>& sub_edges,
                                     int search_depth) {
  std::vector<std::size_t> nodes;
  for (auto e : sub_edges) {
    if (e >= c.edges().size()) throw Error(ErrorKind::InvalidParam, "edge index out of range");
    nodes.push_back(end_node(e, false));
    nodes.push_back(end_node(e, true));
  }
  return min_separation(c, corner_graph(c), nodes, search_depth);
}

FlatVerdict check_flat_exclusion(const SquareComplex& c, const Presentation& p) {
  FlatVerdict v;
  std::vector<Word> rhs;
  for (const auto& r : conj_rules(p)) {
    rhs.push_back(r.image);
    v.positive = v.positive && is_positive(r.image);
  }
  if (rhs.empty()) {
    v.positive = false;
    v.detail = "no conjugation relators";
  }
  if (v.positive) {
    if (auto rep = check_no_repeat(rhs)) {
      v.no_repeat = false;
      v.detail = "two-letter subword repeats at letters " + std::to_string(rep->first) + " and " +
                 std::to_string(rep->second) + " of the right-hand sides";
    }
  } else {
    v.no_repeat = false;
    if (v.detail.empty()) v.detail = "a right-hand side is not positive";
  }
  CornerGraph g = corner_graph(c);
  std::vector<bool> at_base(g.node_count);
  for (std::size_t n = 0; n < g.node_count; ++n) at_base[n] = node_vertex(c, n) == 0;
  v.four_cycle = find_four_cycle(g, at_base);
  if (v.four_cycle && v.detail.empty()) {
    v.detail = "4-cycle in the link of the original vertex:";
    for (auto n : v.four_cycle->nodes) v.detail += " " + node_label(c, n);
  }
  v.ok = v.positive && v.no_repeat && !v.four_cycle;
  return v;
}

}  // namespace cubedist
