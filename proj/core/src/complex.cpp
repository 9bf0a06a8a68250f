#include <algorithm>
#include <map>
#include <sstream>

#include "cubedist/complex.hpp"
#include "cubedist/error.hpp"

namespace cubedist {

int SquareComplex::add_vertex() { return vertices_++; }

std::size_t SquareComplex::add_edge(int source, int target, std::string label, bool interior) {
  if (source < 0 || source >= vertices_ || target < 0 || target >= vertices_)
    throw Error(ErrorKind::InvalidParam, "edge " + label + " has an endpoint outside the complex");
  edges_.push_back(ComplexEdge{source, target, std::move(label), interior});
  return edges_.size() - 1;
}

int SquareComplex::side_start(const Side& s) const {
  const auto& e = edges_.at(s.edge);
  return s.dir > 0 ? e.source : e.target;
}

int SquareComplex::side_end(const Side& s) const {
  const auto& e = edges_.at(s.edge);
  return s.dir > 0 ? e.target : e.source;
}

void SquareComplex::add_square(const std::array<Side, 4>& sides, std::size_t relator) {
  for (int i = 0; i < 4; ++i)
    if (side_end(sides[i]) != side_start(sides[(i + 1) % 4]))
      throw Error(ErrorKind::InvalidParam, "square sides do not form a closed path");
  squares_.push_back(Square{sides, relator});
}

std::optional<std::size_t> SquareComplex::find_edge(const std::string& label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].label == label) return i;
  return std::nullopt;
}

std::size_t SquareComplex::edge(const std::string& label) const {
  auto e = find_edge(label);
  if (!e) throw Error(ErrorKind::BadLetter, "complex has no edge '" + label + "'");
  return *e;
}

SquareComplex build_complex(const Presentation& p, const SchemeSet& schemes) {
  for (const auto& s : schemes.shapes) s.validate();
  SquareComplex c;
  for (int v = 0; v < p.vertex_count; ++v) c.add_vertex();
  for (GenId g = 0; g < p.alphabet.size(); ++g) {
    VertexTag t = p.vertex_count == 2 ? p.tags[g] : VertexTag{};
    c.add_edge(t.source, t.target, p.alphabet.name(g));
  }
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const Word& rel = p.relators[r];
    const SubdivisionScheme* s = schemes.find(rel.size());
    if (!s)
      throw Error(ErrorKind::ShapeMismatch, "relator " + std::to_string(r) + " (" + format_word(p.alphabet, rel) +
                                                ") has length " + std::to_string(rel.size()) +
                                                " and no subdivision scheme");
    const int N = static_cast<int>(s->boundary);
    std::vector<int> vertex_of(s->boundary + s->interior_vertices);
    for (int k = 0; k < N; ++k) vertex_of[k] = p.vertex_before(rel, static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < s->interior_vertices; ++i) vertex_of[s->boundary + i] = c.add_vertex();
    std::map<std::pair<int, int>, std::size_t> interior;
    for (const auto& sq : s->squares) {
      std::array<Side, 4> sides;
      for (int i = 0; i < 4; ++i) {
        int u = sq[i], w = sq[(i + 1) % 4];
        if (u < N && w < N && (u + 1) % N == w) {
          Letter x = rel[u];
          sides[i] = Side{x.gen, x.sign};
        } else if (u < N && w < N && (w + 1) % N == u) {
          Letter x = rel[w];
          sides[i] = Side{x.gen, -x.sign};
        } else {
          auto key = std::make_pair(std::min(u, w), std::max(u, w));
          auto it = interior.find(key);
          if (it == interior.end()) {
            std::string label = "r" + std::to_string(r) + ":" + std::to_string(key.first) + "-" +
                                std::to_string(key.second);
            it = interior.emplace(key, c.add_edge(vertex_of[key.first], vertex_of[key.second], label, true)).first;
          }
          sides[i] = Side{it->second, u < w ? 1 : -1};
        }
      }
      c.add_square(sides, r);
    }
  }
  return c;
}

int node_vertex(const SquareComplex& c, std::size_t node) {
  const auto& e = c.edges().at(node / 2);
  return node % 2 ? e.target : e.source;
}

std::string node_label(const SquareComplex& c, std::size_t node) {
  return c.edges().at(node / 2).label + (node % 2 ? "-" : "+");
}

LinkGraph link(const SquareComplex& c, int v) {
  LinkGraph l;
  l.vertex = v;
  std::vector<long> local(2 * c.edges().size(), -1);
  for (std::size_t n = 0; n < 2 * c.edges().size(); ++n)
    if (node_vertex(c, n) == v) {
      local[n] = static_cast<long>(l.nodes.size());
      l.nodes.push_back(n);
      l.labels.push_back(node_label(c, n));
    }
  CornerGraph g = corner_graph(c);
  for (auto [u, w] : g.edges)
    if (local[u] >= 0) l.edges.emplace_back(local[u], local[w]);
  return l;
}

std::string canonical_form(const SquareComplex& c) {
  std::vector<std::string> edges;
  std::map<int, int> vname;
  std::vector<std::size_t> order(c.edges().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c.edges()[a].label < c.edges()[b].label; });
  auto name = [&](int v) {
    auto it = vname.find(v);
    if (it == vname.end()) it = vname.emplace(v, static_cast<int>(vname.size())).first;
    return it->second;
  };
  for (std::size_t i : order) {
    const auto& e = c.edges()[i];
    edges.push_back(e.label + ":" + std::to_string(name(e.source)) + ">" + std::to_string(name(e.target)));
  }
  std::vector<std::string> squares;
  for (const auto& sq : c.squares()) {
    std::vector<std::string> rot;
    for (int s = 0; s < 4; ++s) {
      std::string t;
      for (int i = 0; i < 4; ++i) {
        const Side& side = sq.sides[(s + i) % 4];
        t += c.edges()[side.edge].label + (side.dir > 0 ? "+" : "-") + " ";
      }
      rot.push_back(t);
    }
    squares.push_back(*std::min_element(rot.begin(), rot.end()));
  }
  std::sort(squares.begin(), squares.end());
  std::ostringstream os;
  os << "V " << c.vertex_count() << "\n";
  for (const auto& e : edges) os << "E " << e << "\n";
  for (const auto& s : squares) os << "S " << s << "\n";
  return os.str();
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const LinkGraph& l) {
  std::ostringstream os;
  os << "graph link_v" << l.vertex << " {\n";
  for (std::size_t i = 0; i < l.nodes.size(); ++i) os << "  n" << i << " [label=" << quote(l.labels[i]) << "];\n";
  for (auto [u, w] : l.edges) os << "  n" << u << " -- n" << w << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const SquareComplex& c) {
  std::ostringstream os;
  os << "digraph complex {\n";
  for (int v = 0; v < c.vertex_count(); ++v) os << "  v" << v << ";\n";
  for (const auto& e : c.edges()) {
    if (e.interior) continue;
    os << "  v" << e.source << " -> v" << e.target << " [label=" << quote(e.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cubedist
