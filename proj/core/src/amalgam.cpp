#include "cubedist/error.hpp"
#include "cubedist/presentation.hpp"

namespace cubedist {

namespace {

std::vector<std::string> suffixed(const std::string& prefix, long long count, const std::string& suffix) {
  std::vector<std::string> out;
  for (long long i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i) + suffix);
  return out;
}

std::vector<Word> by_name(const Presentation& p, const std::vector<std::string>& ns) {
  std::vector<Word> out;
  for (const auto& n : ns) out.push_back(Word{pos(p.alphabet.id(n))});
  return out;
}

// Appends P-blocks of ranks r, 9r, ... (count blocks). The first block's t-letters are
// named first_t; block i >= 1 uses a_j@(tag0 + i - 1).
void append_blocks(AmalgamSpec& spec, long long r, int count, const std::vector<std::string>& first_t,
                   int tag0) {
  for (int i = 0; i < count; ++i) {
    const std::string here = "@" + std::to_string(tag0 + i);
    auto t = i == 0 ? first_t : suffixed("a", r, "@" + std::to_string(tag0 + i - 1));
    auto a = suffixed("a", 9 * r, here);
    if (r > (1LL << 20)) throw Error(ErrorKind::SizeLimit, "block rank " + std::to_string(r) + " is too large");
    spec.vertex_names.push_back("P_" + std::to_string(r));
    spec.vertices.push_back(build_P_named(static_cast<int>(r), a, t));
    if (i > 0) {
      AmalgamEdge e;
      e.name = "e" + std::to_string(spec.edges.size() + 1);
      e.left = spec.vertices.size() - 2;
      e.right = spec.vertices.size() - 1;
      e.left_basis = by_name(spec.vertices[e.left], t);
      e.right_basis = by_name(spec.vertices[e.right], t);
      spec.edges.push_back(std::move(e));
    }
    r *= 9;
  }
}

}  // namespace

AmalgamSpec build_chain(int k, int m) {
  if (k < 1 || m < 1)
    throw Error(ErrorKind::InvalidParam, "chain needs k >= 1 and m >= 1, got k=" + std::to_string(k) +
                                             " m=" + std::to_string(m));
  AmalgamSpec spec;
  const long long r0 = m == 1 ? 1 : 4LL * m;
  append_blocks(spec, r0, k, suffixed("t", r0, ""), 0);
  return spec;
}

AmalgamSpec build_main_amalgam(int k, int m, bool primed) {
  if (k < 1) throw Error(ErrorKind::InvalidParam, "main amalgam needs k >= 1");
  if (m < 2 || m % 2) throw Error(ErrorKind::InvalidParam, "main amalgam needs an even m >= 2");
  AmalgamSpec spec;
  const int kb = primed ? m - 1 : m;
  GPresentations g = build_G(m, kb);
  spec.vertex_names.push_back("G_" + std::to_string(m) + "," + std::to_string(kb));
  spec.vertices.push_back(g.s_form);
  spec.vertex_names.push_back(primed ? "Q'_" + std::to_string(m) : "Q_" + std::to_string(m));
  spec.vertices.push_back(build_Q(m, primed));

  AmalgamEdge e1;
  e1.name = "e1";
  e1.left = 0;
  e1.right = 1;
  e1.left_basis = spec.vertices[0].subgroup("distorted");
  e1.right_basis = spec.vertices[1].subgroup("ultraconvex");
  spec.edges.push_back(std::move(e1));

  if (k >= 2) {
    auto c = suffixed("c", 36LL * m, "");
    std::size_t q_index = 1;
    append_blocks(spec, 36LL * m, k - 1, c, 1);
    AmalgamEdge e2;
    e2.name = "e2";
    e2.left = q_index;
    e2.right = 2;
    e2.left_basis = by_name(spec.vertices[q_index], c);
    e2.right_basis = by_name(spec.vertices[2], c);
    spec.edges.insert(spec.edges.begin() + 1, std::move(e2));
    for (std::size_t i = 2; i < spec.edges.size(); ++i) spec.edges[i].name = "e" + std::to_string(i + 1);
  }
  return spec;
}

Presentation materialize(const AmalgamSpec& spec) {
  Presentation out;
  out.family = "amalgam";
  for (const auto& v : spec.vertices)
    for (const auto& n : v.alphabet.names()) out.alphabet.intern(n);
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    const Presentation& v = spec.vertices[i];
    for (const Word& r : v.relators) out.relators.push_back(rename_word(r, v.alphabet, out.alphabet));
    for (GenId g : v.tree) out.relators.push_back(Word{pos(out.alphabet.id(v.alphabet.name(g)))});
    for (const auto& [name, basis] : v.marked) {
      auto& dst = out.marked[spec.vertex_names[i] + "/" + name];
      for (const Word& w : basis) dst.push_back(rename_word(w, v.alphabet, out.alphabet));
    }
  }
  for (const AmalgamEdge& e : spec.edges) {
    if (e.left_basis.size() != e.right_basis.size())
      throw Error(ErrorKind::InvalidParam, "edge " + e.name + " has unequal basis lengths");
    for (std::size_t i = 0; i < e.rank(); ++i) {
      Word l = rename_word(e.left_basis[i], spec.vertices[e.left].alphabet, out.alphabet);
      Word r = rename_word(e.right_basis[i], spec.vertices[e.right].alphabet, out.alphabet);
      if (l != r) out.relators.push_back(concat(l, invert(r)));
    }
  }
  const auto& last = spec.vertices.back();
  if (last.marked.count("distorted"))
    out.marked["distorted"] = out.marked[spec.vertex_names.back() + "/distorted"];
  validate(out);
  return out;
}

}  // namespace cubedist
