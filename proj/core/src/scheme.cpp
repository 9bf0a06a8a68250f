#include <map>
#include <set>

#include "cubedist/complex.hpp"
#include "cubedist/error.hpp"

namespace cubedist {

namespace {

bool consecutive(int u, int v, std::size_t n) {
  const int N = static_cast<int>(n);
  if (u >= N || v >= N) return false;
  return (u + 1) % N == v || (v + 1) % N == u;
}

}  // namespace

std::size_t SubdivisionScheme::interior_edge_count() const {
  std::set<std::pair<int, int>> interior;
  for (const auto& sq : squares)
    for (int i = 0; i < 4; ++i) {
      int u = sq[i], v = sq[(i + 1) % 4];
      if (!consecutive(u, v, boundary)) interior.emplace(std::min(u, v), std::max(u, v));
    }
  return interior.size();
}

void SubdivisionScheme::validate() const {
  const int total = static_cast<int>(boundary + interior_vertices);
  std::map<std::pair<int, int>, int> uses;
  for (const auto& sq : squares)
    for (int i = 0; i < 4; ++i) {
      int u = sq[i], v = sq[(i + 1) % 4];
      if (u < 0 || u >= total || v < 0 || v >= total || u == v)
        throw Error(ErrorKind::InvalidParam, "scheme " + name + ": bad square vertex");
      ++uses[{std::min(u, v), std::max(u, v)}];
    }
  std::size_t interior = 0;
  for (std::size_t k = 0; k < boundary; ++k) {
    int u = static_cast<int>(k), v = static_cast<int>((k + 1) % boundary);
    auto it = uses.find({std::min(u, v), std::max(u, v)});
    if (it == uses.end() || it->second != 1)
      throw Error(ErrorKind::InvalidParam, "scheme " + name + ": boundary side " + std::to_string(k) +
                                               " must lie on exactly one square");
  }
  for (const auto& [side, count] : uses) {
    if (consecutive(side.first, side.second, boundary)) continue;
    ++interior;
    if (count != 2)
      throw Error(ErrorKind::InvalidParam, "scheme " + name + ": interior side " + std::to_string(side.first) +
                                               "-" + std::to_string(side.second) + " must lie on two squares");
  }
  if (4 * squares.size() - 2 * interior != boundary)
    throw Error(ErrorKind::InvalidParam, "scheme " + name + ": perimeter identity fails");
  // Disc: V - E + F = 1 with V = boundary + interior vertices, E = boundary + interior edges.
  long long euler = static_cast<long long>(boundary + interior_vertices) -
                    static_cast<long long>(boundary + interior) + static_cast<long long>(squares.size());
  if (euler != 1) throw Error(ErrorKind::InvalidParam, "scheme " + name + ": not a disc (Euler count)");
}

SubdivisionScheme square_scheme() { return {"square", 4, 0, {{0, 1, 2, 3}}}; }

// Boundary 0..3 carries t a t^-1 along the bottom of a 1x5 strip, the W^-1 letters run
// 3 -> 4 -> ... -> 11 -> 0 around the remaining sides.
SubdivisionScheme ladder_scheme() {
  return {"ladder", 12, 0, {{0, 9, 10, 11}, {0, 1, 8, 9}, {1, 2, 7, 8}, {2, 3, 6, 7}, {3, 4, 5, 6}}};
}

// Boundary 0..5 precede X, Y, c, Y^-1, X^-1 and the first U^-1 letter. The strip turns
// twice so the middle vertices 1 and 4 carry three corners each.
SubdivisionScheme bent_strip_scheme() {
  return {"bent-strip",
          20,
          0,
          {{19, 0, 17, 18},
           {0, 1, 16, 17},
           {1, 14, 15, 16},
           {2, 13, 14, 1},
           {3, 12, 13, 2},
           {4, 11, 12, 3},
           {9, 10, 11, 4},
           {8, 9, 4, 5},
           {7, 8, 5, 6}}};
}

SubdivisionScheme cap_strip_scheme() {
  return {"cap-strip", 12, 0, {{0, 1, 2, 3}, {0, 3, 10, 11}, {3, 4, 9, 10}, {4, 5, 8, 9}, {5, 6, 7, 8}}};
}

const SubdivisionScheme* SchemeSet::find(std::size_t boundary) const {
  for (const auto& s : shapes)
    if (s.boundary == boundary) return &s;
  return nullptr;
}

SchemeSet default_schemes() { return SchemeSet{{square_scheme(), ladder_scheme(), bent_strip_scheme()}}; }

}  // namespace cubedist
