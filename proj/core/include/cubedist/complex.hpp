#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubedist/presentation.hpp"

namespace cubedist {

struct ComplexEdge {
  int source = 0;
  int target = 0;
  std::string label;
  bool interior = false;  // created by a subdivision, not a generator
};

// One side of a square: the edge and whether it is crossed source->target (+1) or back (-1).
struct Side {
  std::size_t edge = 0;
  int dir = 1;
};

struct Square {
  std::array<Side, 4> sides;
  std::size_t relator = 0;  // relator index in the originating presentation
};

class SquareComplex {
 public:
  int add_vertex();
  std::size_t add_edge(int source, int target, std::string label, bool interior = false);
  // Throws InvalidParam unless the sides form a closed edge path.
  void add_square(const std::array<Side, 4>& sides, std::size_t relator = 0);

  int vertex_count() const { return vertices_; }
  const std::vector<ComplexEdge>& edges() const { return edges_; }
  const std::vector<Square>& squares() const { return squares_; }
  std::optional<std::size_t> find_edge(const std::string& label) const;
  std::size_t edge(const std::string& label) const;  // BadLetter if absent

  int side_start(const Side& s) const;
  int side_end(const Side& s) const;

 private:
  int vertices_ = 0;
  std::vector<ComplexEdge> edges_;
  std::vector<Square> squares_;
};

// Tiling of a relator disc by unit squares. Boundary vertex k (0 <= k < boundary) sits
// before letter k of the relator; indices >= boundary are interior vertices. A square
// side between cyclically consecutive boundary vertices is that boundary letter, every
// other side is an interior edge shared by exactly two squares.
struct SubdivisionScheme {
  std::string name;
  std::size_t boundary = 0;
  std::size_t interior_vertices = 0;
  std::vector<std::array<int, 4>> squares;

  std::size_t interior_edge_count() const;
  // Tree-of-squares checks: boundary sides used once, interior sides twice, closed
  // perimeter identity 4F - 2I = boundary, and the Euler count V - E + F of the disc.
  void validate() const;
};

// Shipped schemes: single square (4), straight 1x5 strip for t a t^-1 W^-1 (12),
// bent 1x9 strip for X Y c Y^-1 X^-1 U^-1 (20).
SubdivisionScheme square_scheme();
SubdivisionScheme ladder_scheme();
SubdivisionScheme bent_strip_scheme();
// Cap square (t, a, t^-1, d^-1) followed by a 1x4 strip. Kept for comparison; its links
// contain triangles.
SubdivisionScheme cap_strip_scheme();

struct SchemeSet {
  std::vector<SubdivisionScheme> shapes;
  const SubdivisionScheme* find(std::size_t boundary) const;
};
SchemeSet default_schemes();

// Edge per generator (labelled by its name) plus interior edges per relator.
// ShapeMismatch when a relator length has no scheme.
SquareComplex build_complex(const Presentation& p, const SchemeSet& schemes = default_schemes());

// --- links -------------------------------------------------------------------

// Edge-end node id: 2*edge for the source end (e+), 2*edge+1 for the target end (e-).
inline std::size_t end_node(std::size_t edge, bool target_end) { return 2 * edge + (target_end ? 1 : 0); }

// Undirected multigraph on all edge-end nodes; each square corner is one link edge.
// Corners only join nodes at the same vertex, so components never mix vertices.
struct CornerGraph {
  std::size_t node_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;  // (neighbour, edge id)

  void add(std::uint32_t u, std::uint32_t w);
};

CornerGraph corner_graph(const SquareComplex& c);
// Only corners of squares with keep[square] true.
CornerGraph corner_graph(const SquareComplex& c, const std::vector<bool>& keep);

int node_vertex(const SquareComplex& c, std::size_t node);
std::string node_label(const SquareComplex& c, std::size_t node);

struct LinkGraph {
  int vertex = 0;
  std::vector<std::size_t> nodes;  // global edge-end ids, ascending
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // local indices
};
LinkGraph link(const SquareComplex& c, int v);

struct Cycle {
  std::vector<std::size_t> nodes;  // global node ids in cyclic order
  std::size_t length() const { return nodes.size(); }
};

// Shortest cycle of the multigraph (loops count 1, parallel edges 2); nullopt if a forest.
std::optional<Cycle> shortest_cycle(const CornerGraph& g);
// Some cycle of length < limit if one exists; cheap for limit <= 4.
std::optional<Cycle> short_cycle(const CornerGraph& g, std::size_t limit);
// A simple 4-cycle using only nodes accepted by the filter, if any.
std::optional<Cycle> find_four_cycle(const CornerGraph& g, const std::vector<bool>& node_ok);
// Breadth-first distances from a node, stopping at max_depth (unreached = -1).
std::vector<int> bfs_distances(const CornerGraph& g, std::size_t from, int max_depth);

// --- checks ------------------------------------------------------------------

struct LinkVerdict {
  bool ok = true;
  std::optional<std::size_t> girth;  // exact girth when computed (nullopt for forests/skipped)
  bool girth_exact = false;
  std::optional<Cycle> violation;
};

// Girth >= 4 everywhere. Exact girth is computed when nodes*corners <= exact_budget.
LinkVerdict check_large_link(const SquareComplex& c, double exact_budget = 5e8);

struct UltraconvexVerdict {
  bool ok = true;
  std::optional<int> min_distance;  // over pairs at the same vertex; nullopt if no pair is connected
  std::size_t node_a = 0, node_b = 0;
};

// Pairwise link distance >= 4 between distinct ends of the listed edges, per vertex.
UltraconvexVerdict check_ultraconvex(const SquareComplex& c, const std::vector<std::size_t>& sub_edges,
                                     int search_depth = 12);
// Same with a precomputed graph (for restricted corner sets).
UltraconvexVerdict min_separation(const SquareComplex& c, const CornerGraph& g,
                                  const std::vector<std::size_t>& nodes, int search_depth = 12);

struct FlatVerdict {
  bool ok = true;
  bool positive = true;
  bool no_repeat = true;
  std::optional<Cycle> four_cycle;
  std::string detail;
};

// Relator right-hand sides positive, global no-two-letter repetition, and no simple
// 4-cycle in the link of the original vertex (vertex 0).
FlatVerdict check_flat_exclusion(const SquareComplex& c, const Presentation& p);

// --- gluing ------------------------------------------------------------------

struct EdgePair {
  std::size_t a = 0;  // edge of the first complex
  std::size_t b = 0;  // edge of the second complex
  bool reversed = false;
};

struct GlueResult {
  SquareComplex complex;
  std::vector<int> vertex_from_a, vertex_from_b;
  std::vector<std::size_t> edge_from_a, edge_from_b;
  std::size_t squares_from_a = 0;
};

// Quotient of a and b identifying each listed pair of edges (and hence endpoints).
// With strict, the induced vertex correspondence must also be a bijection.
// NotIsomorphic on an empty list, a repeated edge, or (strict) inconsistent vertices.
GlueResult glue(const SquareComplex& a, const SquareComplex& b, const std::vector<EdgePair>& along,
                bool strict = false);
// Pairs edges with equal labels drawn from the given list.
std::vector<EdgePair> pairs_by_label(const SquareComplex& a, const SquareComplex& b,
                                     const std::vector<std::string>& labels);

// Complexes of the block chain P_{r0} * P_{9 r0} * ... (see build_chain), glued one block
// at a time along the shared generator edges.
GlueResult chain_complex(int k, int m);
// K_{m,m} (K_{m,m-1} when primed) glued to Z_m (Z'_m) along alpha_i = s_{2i}^-1 and
// beta_i = s_{2i-1}. Squares of Z come after squares_from_a.
GlueResult main_complex(int m, bool primed = false);

// Canonical text form (sorted edge and square lists up to relabelling of interior edges)
// used for associativity spot checks.
std::string canonical_form(const SquareComplex& c);

// --- output ------------------------------------------------------------------

std::string to_dot(const LinkGraph& l);
std::string to_dot(const SquareComplex& c);

}  // namespace cubedist
