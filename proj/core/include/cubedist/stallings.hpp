#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubedist/word.hpp"

namespace cubedist {

struct LabeledEdge {
  int from = 0;
  GenId label = 0;
  int to = 0;
};

// Folded, core-trimmed Stallings graph of a subgroup; the basepoint is vertex 0.
class SubgroupGraph {
 public:
  int vertex_count() const { return static_cast<int>(out_.size()); }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  bool folded() const { return true; }
  // E - V + 1 of the core graph.
  std::size_t rank() const { return edges_.size() + 1 - out_.size(); }

  // True iff w (reduced) reads a closed path at the basepoint.
  bool member(const Word& w) const;

  // Basepointed canonical description; equal strings mean isomorphic labelled graphs.
  std::string canonical() const;
  std::string to_dot(const Alphabet& alpha) const;

 private:
  friend SubgroupGraph build_subgroup(const std::vector<Word>&, std::optional<std::uint64_t>);
  std::vector<LabeledEdge> edges_;
  std::vector<std::unordered_map<GenId, int>> out_, in_;
};

// Wedge of subdivided loops at the basepoint, folded, then trimmed to the core.
// With a seed, raw edges are folded in a shuffled order (the result does not depend on it).
SubgroupGraph build_subgroup(const std::vector<Word>& words, std::optional<std::uint64_t> shuffle_seed = {});

inline bool member(const SubgroupGraph& g, const Word& w) { return g.member(w); }

struct InjectivityVerdict {
  bool ok = false;
  std::size_t rank = 0;
  std::size_t expected = 0;
};
// A basis of F_r maps injectively iff its image subgroup has rank r.
InjectivityVerdict check_injective(const std::vector<Word>& images, std::size_t domain_rank);

}  // namespace cubedist
