#pragma once

#include <map>
#include <string>
#include <vector>

#include "cubedist/word.hpp"

namespace cubedist {

// Source/target vertex of a generator edge in a two-vertex complex.
struct VertexTag {
  int source = 0;
  int target = 0;
};

// stable * domain * stable^-1 = image, read off a relator of that shape.
struct ConjRule {
  GenId stable = 0;
  GenId domain = 0;
  Word image;
};

struct Presentation {
  std::string family;
  Alphabet alphabet;  // every generator, in declaration order
  std::vector<Word> relators;
  std::map<std::string, std::vector<Word>> marked;
  int vertex_count = 1;
  std::vector<VertexTag> tags;  // indexed by GenId when vertex_count == 2
  std::vector<GenId> tree;      // spanning-tree edges collapsed when read as a group

  std::size_t generator_count() const { return alphabet.size(); }
  const std::vector<Word>& subgroup(const std::string& name) const;  // InvalidParam if absent

  // Vertex at which boundary position k of a relator sits (0 for one-vertex presentations).
  int vertex_before(const Word& rel, std::size_t k) const;
};

// Relator shape checks shared by every builder: letters in range, reduced, closed loops.
void validate(const Presentation& p);

// Conjugation rules from relators y x y^-1 W^-1 (y, x positive, y != x, y absent from W).
std::vector<ConjRule> conj_rules(const Presentation& p);

// Text format:
//   gen: a1 a2 t1
//   vtx: a1=1:0 ...        (two-vertex presentations only, source:target)
//   tree: b1               (optional)
//   rel: t1 a1 t1^-1 ...
//   sub distorted: a1; a2
std::string to_text(const Presentation& p);
Presentation from_text(const std::string& text);

// --- builders ---------------------------------------------------------------

// t_i a_j t_i^-1 = W_ij over a_1..a_9n, t_1..t_n, W from carve(sigma(9n), 9n^2, 9), row-major.
Presentation build_P(int n);
// Same with explicit generator names (used by the chain builders).
Presentation build_P_named(int n, const std::vector<std::string>& a_names,
                           const std::vector<std::string>& t_names);

enum class FourthFamily { Parallel, Verbatim };

// Two-vertex block over alpha_1..alpha_m, beta_1..beta_{m+1}, c_1..c_{36m}.
// Tags: 1 is the c-vertex, 0 the middle vertex; c: 1->1, alpha: 1->0, beta: 0->1.
Presentation build_Q(int m, bool primed, FourthFamily fourth = FourthFamily::Parallel);

// One-vertex form of Q_m where each diagonal path is a single letter:
// A_i c_j A_i^-1 = U_{i,j}, B_k c_j B_k^-1 = U_{m+k,j}.
Presentation build_Q_diagonal(int m, bool primed);

// Diagonal path (word over alpha/beta of build_Q) conjugating c_j in diagonal d (1-based;
// d <= m is A_d, d > m is B_{d-m}).
Word q_diagonal_path(const Presentation& q, int m, int d);

struct GPresentations {
  Presentation s_form;    // s_1..s_{m+k+1}, length-4 relators
  Presentation fbc_form;  // A_i, B_j, t with t x t^-1 = phi(x)
};
GPresentations build_G(int m, int k);

// ConstraintViolated naming the failed inequality of 9mn <= m^2 and 9m <= n^2.
void check_hnn_params(int n, int m);

// Generators a_1..a_m, t_1..t_n, s; relators t_i a_j t_i^-1 = W_ij, s a_l s^-1 = W_l.
Presentation build_hnn(int n, int m);

// --- graphs of groups --------------------------------------------------------

struct AmalgamEdge {
  std::string name;
  std::size_t left = 0, right = 0;  // vertex indices
  std::vector<Word> left_basis;     // words in vertices[left].alphabet
  std::vector<Word> right_basis;    // words in vertices[right].alphabet
  std::size_t rank() const { return left_basis.size(); }
};

struct AmalgamSpec {
  std::vector<std::string> vertex_names;
  std::vector<Presentation> vertices;
  std::vector<AmalgamEdge> edges;
};

// Blocks P_{r_0}, P_{9 r_0}, ..., k blocks, with r_0 = 1 (m = 1) or 4m.
// Block i's t_j is named a_j@(i-1), so the edge identifications are literal merges.
AmalgamSpec build_chain(int k, int m);

// G_{m,m} * Q_m, then (k >= 2) P-blocks of rank 36m, 9*36m, ... glued along c_j = t_j.
// primed selects G_{m,m-1} * Q'_m.
AmalgamSpec build_main_amalgam(int k, int m, bool primed = false);

// One presentation: generators merged by name, relators concatenated, one relator per
// edge-basis pair whose two words differ, spanning trees collapsed.
Presentation materialize(const AmalgamSpec& spec);

// Translate a word between alphabets by generator name.
Word rename_word(const Word& w, const Alphabet& from, const Alphabet& to);

}  // namespace cubedist
