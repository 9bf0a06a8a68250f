#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <memory>

#include "cubedist/word.hpp"

namespace cubedist {

using BigInt = boost::multiprecision::cpp_int;

// Straight-line program: an immutable DAG of letters, concatenations, powers and
// inverses. Lengths are exact and cached on every node; nodes are shared freely.
class Slp {
 public:
  enum class Kind { Empty, Terminal, Concat, Power, Inverse };

  struct Node {
    Kind kind = Kind::Empty;
    Letter letter{};
    std::shared_ptr<const Node> left, right;  // right only for Concat
    BigInt exponent;                          // Power only
    BigInt length;
    bool positive = true;
  };
  using NodePtr = std::shared_ptr<const Node>;

  Slp();  // empty word

  static Slp terminal(Letter x);
  static Slp concat(const Slp& a, const Slp& b);
  static Slp power(const Slp& base, const BigInt& exponent);
  static Slp inverse(const Slp& s);
  // Balanced concatenation tree over the letters of w.
  static Slp from_word(const Word& w);
  // Balanced concatenation of a list of programs.
  static Slp concat_all(const std::vector<Slp>& parts);

  const BigInt& length() const { return root_->length; }
  bool positive() const { return root_->positive; }
  Kind kind() const { return root_->kind; }
  const NodePtr& root() const { return root_; }

  // Explicit expansion (no reduction). Throws CapExceeded when length() > cap.
  Word expand(std::size_t cap) const;

  // Number of distinct nodes reachable from the root.
  std::size_t node_count() const;

 private:
  explicit Slp(NodePtr n) : root_(std::move(n)) {}
  NodePtr root_;
};

inline const BigInt& slp_length(const Slp& s) { return s.length(); }
inline Word slp_expand(const Slp& s, std::size_t cap) { return s.expand(cap); }

// Replaces every terminal letter g by image(g) (inverted for negative letters).
// Shared subprograms are substituted once.
Slp substitute(const Slp& s, const std::function<Slp(GenId)>& image);

}  // namespace cubedist
