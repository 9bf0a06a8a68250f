#include "cubedist/slp.hpp"

#include <unordered_map>
#include <unordered_set>

#include "cubedist/error.hpp"

namespace cubedist {

namespace {

const Slp::NodePtr& empty_node() {
  static const Slp::NodePtr node = std::make_shared<const Slp::Node>();
  return node;
}

void expand_into(const Slp::Node& n, bool inverted, Word& out) {
  switch (n.kind) {
    case Slp::Kind::Empty:
      return;
    case Slp::Kind::Terminal:
      out.push_back(inverted ? n.letter.inverse() : n.letter);
      return;
    case Slp::Kind::Concat:
      if (inverted) {
        expand_into(*n.right, true, out);
        expand_into(*n.left, true, out);
      } else {
        expand_into(*n.left, false, out);
        expand_into(*n.right, false, out);
      }
      return;
    case Slp::Kind::Power: {
      std::size_t start = out.size();
      expand_into(*n.left, inverted, out);
      std::size_t piece = out.size() - start;
      auto times = static_cast<std::size_t>(n.exponent);
      for (std::size_t t = 1; t < times; ++t)
        for (std::size_t i = 0; i < piece; ++i) out.push_back(out[start + i]);
      if (times == 0) out.resize(start);
      return;
    }
    case Slp::Kind::Inverse:
      expand_into(*n.left, !inverted, out);
      return;
  }
}

}  // namespace

Slp::Slp() : root_(empty_node()) {}

Slp Slp::terminal(Letter x) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Terminal;
  n->letter = x;
  n->length = 1;
  n->positive = x.positive();
  return Slp(std::move(n));
}

Slp Slp::concat(const Slp& a, const Slp& b) {
  if (a.root_->kind == Kind::Empty) return b;
  if (b.root_->kind == Kind::Empty) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Concat;
  n->left = a.root_;
  n->right = b.root_;
  n->length = a.length() + b.length();
  n->positive = a.positive() && b.positive();
  return Slp(std::move(n));
}

Slp Slp::power(const Slp& base, const BigInt& exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidParam, "negative Slp exponent");
  if (exponent == 0 || base.root_->kind == Kind::Empty) return Slp();
  if (exponent == 1) return base;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->left = base.root_;
  n->exponent = exponent;
  n->length = base.length() * exponent;
  n->positive = base.positive();
  return Slp(std::move(n));
}

Slp Slp::inverse(const Slp& s) {
  if (s.root_->kind == Kind::Terminal) return terminal(s.root_->letter.inverse());
  if (s.root_->kind == Kind::Inverse) return Slp(s.root_->left);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inverse;
  n->left = s.root_;
  n->length = s.length();
  n->positive = false;
  return Slp(std::move(n));
}

Slp Slp::concat_all(const std::vector<Slp>& parts) {
  if (parts.empty()) return Slp();
  std::vector<Slp> level = parts;
  while (level.size() > 1) {
    std::vector<Slp> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(concat(level[i], level[i + 1]));
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

Slp Slp::from_word(const Word& w) {
  std::vector<Slp> parts;
  parts.reserve(w.size());
  for (Letter x : w) parts.push_back(terminal(x));
  return concat_all(parts);
}

Word Slp::expand(std::size_t cap) const {
  if (length() > cap)
    throw Error(ErrorKind::CapExceeded,
                "expansion length " + length().str() + " exceeds cap " + std::to_string(cap));
  Word out;
  out.reserve(static_cast<std::size_t>(length()));
  expand_into(*root_, false, out);
  return out;
}

std::size_t Slp::node_count() const {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{root_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->left) stack.push_back(n->left.get());
    if (n->right) stack.push_back(n->right.get());
  }
  return seen.size();
}

Slp substitute(const Slp& s, const std::function<Slp(GenId)>& image) {
  std::unordered_map<const Slp::Node*, Slp> memo;
  std::unordered_map<GenId, Slp> letter_memo;
  std::function<Slp(const Slp::NodePtr&)> go = [&](const Slp::NodePtr& n) -> Slp {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    Slp r;
    switch (n->kind) {
      case Slp::Kind::Empty:
        break;
      case Slp::Kind::Terminal: {
        auto lt = letter_memo.find(n->letter.gen);
        if (lt == letter_memo.end()) lt = letter_memo.emplace(n->letter.gen, image(n->letter.gen)).first;
        r = n->letter.positive() ? lt->second : Slp::inverse(lt->second);
        break;
      }
      case Slp::Kind::Concat:
        r = Slp::concat(go(n->left), go(n->right));
        break;
      case Slp::Kind::Power:
        r = Slp::power(go(n->left), n->exponent);
        break;
      case Slp::Kind::Inverse:
        r = Slp::inverse(go(n->left));
        break;
    }
    memo.emplace(n.get(), r);
    return r;
  };
  return go(s.root());
}

}  // namespace cubedist
