#include "cubedist/presentation.hpp"

#include <sstream>

#include "cubedist/error.hpp"

namespace cubedist {

const std::vector<Word>& Presentation::subgroup(const std::string& name) const {
  auto it = marked.find(name);
  if (it == marked.end()) throw Error(ErrorKind::InvalidParam, "no marked subgroup '" + name + "'");
  return it->second;
}

int Presentation::vertex_before(const Word& rel, std::size_t k) const {
  if (vertex_count == 1) return 0;
  Letter x = rel[k % rel.size()];
  return x.positive() ? tags[x.gen].source : tags[x.gen].target;
}

void validate(const Presentation& p) {
  if (p.vertex_count == 2 && p.tags.size() != p.alphabet.size())
    throw Error(ErrorKind::InvalidParam, "two-vertex presentation needs a tag per generator");
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const Word& w = p.relators[r];
    if (w.empty()) throw Error(ErrorKind::InvalidParam, "relator " + std::to_string(r) + " is empty");
    for (Letter x : w)
      if (x.gen >= p.alphabet.size())
        throw Error(ErrorKind::BadLetter, "relator " + std::to_string(r) + " uses an unknown generator");
    if (!is_reduced(w)) throw Error(ErrorKind::InvalidParam, "relator " + std::to_string(r) + " is not reduced");
    if (p.vertex_count == 2) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        Letter x = w[k];
        int end = x.positive() ? p.tags[x.gen].target : p.tags[x.gen].source;
        if (end != p.vertex_before(w, k + 1))
          throw Error(ErrorKind::InvalidParam,
                      "relator " + std::to_string(r) + " is not a closed loop at position " + std::to_string(k));
      }
    }
  }
}

std::vector<ConjRule> conj_rules(const Presentation& p) {
  std::vector<ConjRule> rules;
  for (const Word& w : p.relators) {
    if (w.size() < 4) continue;
    Letter y = w[0], x = w[1], yi = w[2];
    if (!y.positive() || !x.positive() || yi != y.inverse() || y.gen == x.gen) continue;
    bool stable_in_tail = false;
    for (std::size_t i = 3; i < w.size(); ++i) stable_in_tail = stable_in_tail || w[i].gen == y.gen;
    if (stable_in_tail) continue;
    Word tail(w.begin() + 3, w.end());
    rules.push_back(ConjRule{y.gen, x.gen, invert(tail)});
  }
  return rules;
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  if (!p.family.empty()) os << "family: " << p.family << '\n';
  os << "gen:";
  for (const auto& n : p.alphabet.names()) os << ' ' << n;
  os << '\n';
  if (p.vertex_count == 2) {
    os << "vtx:";
    for (GenId g = 0; g < p.alphabet.size(); ++g)
      os << ' ' << p.alphabet.name(g) << '=' << p.tags[g].source << ':' << p.tags[g].target;
    os << '\n';
  }
  if (!p.tree.empty()) {
    os << "tree:";
    for (GenId g : p.tree) os << ' ' << p.alphabet.name(g);
    os << '\n';
  }
  for (const Word& w : p.relators) os << "rel: " << format_word(p.alphabet, w) << '\n';
  for (const auto& [name, basis] : p.marked) {
    os << "sub " << name << ":";
    for (std::size_t i = 0; i < basis.size(); ++i)
      os << (i ? "; " : " ") << format_word(p.alphabet, basis[i]);
    os << '\n';
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation from_text(const std::string& text) {
  Presentation p;
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<std::string, VertexTag>> tag_lines;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": missing ':'");
    std::string key = trim(line.substr(0, colon));
    std::string rest = trim(line.substr(colon + 1));
    if (key == "family") {
      p.family = rest;
    } else if (key == "gen") {
      std::istringstream ts(rest);
      std::string n;
      while (ts >> n) p.alphabet.intern(n);
    } else if (key == "vtx") {
      p.vertex_count = 2;
      std::istringstream ts(rest);
      std::string tok;
      while (ts >> tok) {
        auto eq = tok.find('=');
        auto sep = tok.find(':', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || sep == std::string::npos)
          throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected name=S:T");
        VertexTag t{std::stoi(tok.substr(eq + 1, sep - eq - 1)), std::stoi(tok.substr(sep + 1))};
        if (t.source < 0 || t.source > 1 || t.target < 0 || t.target > 1)
          throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": vertex tags must be 0 or 1");
        tag_lines.emplace_back(tok.substr(0, eq), t);
      }
    } else if (key == "tree") {
      std::istringstream ts(rest);
      std::string n;
      while (ts >> n) p.tree.push_back(p.alphabet.id(n));
    } else if (key == "rel") {
      p.relators.push_back(parse_word(static_cast<const Alphabet&>(p.alphabet), rest));
    } else if (key.rfind("sub ", 0) == 0) {
      std::string name = trim(key.substr(4));
      auto& basis = p.marked[name];
      std::istringstream ts(rest);
      std::string piece;
      while (std::getline(ts, piece, ';')) {
        piece = trim(piece);
        if (!piece.empty()) basis.push_back(parse_word(static_cast<const Alphabet&>(p.alphabet), piece));
      }
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (p.vertex_count == 2) {
    p.tags.assign(p.alphabet.size(), VertexTag{});
    std::vector<bool> seen(p.alphabet.size(), false);
    for (const auto& [name, tag] : tag_lines) {
      GenId g = p.alphabet.id(name);
      p.tags[g] = tag;
      seen[g] = true;
    }
    for (GenId g = 0; g < seen.size(); ++g)
      if (!seen[g]) throw Error(ErrorKind::Parse, "generator " + p.alphabet.name(g) + " has no vertex tag");
  }
  validate(p);
  return p;
}

Word rename_word(const Word& w, const Alphabet& from, const Alphabet& to) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(Letter{to.id(from.name(x.gen)), x.sign});
  return out;
}

}  // namespace cubedist
