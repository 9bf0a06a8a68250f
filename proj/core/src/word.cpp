#include "cubedist/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "cubedist/error.hpp"

namespace cubedist {

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) intern(n);
}

GenId Alphabet::intern(std::string_view name) {
  if (name.empty() || name.find_first_of(" \t\r\n^;:,") != std::string_view::npos)
    throw Error(ErrorKind::BadLetter, "invalid generator name '" + std::string(name) + "'");
  std::string key(name);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  GenId g = static_cast<GenId>(names_.size());
  names_.push_back(key);
  ids_.emplace(std::move(key), g);
  return g;
}

GenId Alphabet::id(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end())
    throw Error(ErrorKind::BadLetter, "unknown generator '" + std::string(name) + "'");
  return it->second;
}

bool Alphabet::contains(std::string_view name) const {
  return ids_.count(std::string(name)) != 0;
}

const std::string& Alphabet::name(GenId g) const {
  if (g >= names_.size())
    throw Error(ErrorKind::BadLetter, "generator id " + std::to_string(g) + " out of range");
  return names_[g];
}

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) push_reduced(out, x);
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1].cancels(w[i])) return false;
  return true;
}

bool is_positive(const Word& w) {
  for (Letter x : w)
    if (!x.positive()) return false;
  return true;
}

Word concat(const Word& u, const Word& v) {
  Word out = reduce(u);
  for (Letter x : v) push_reduced(out, x);
  return reduce(out);
}

Word invert(const Word& u) {
  Word out;
  out.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it) push_reduced(out, it->inverse());
  return out;
}

Word power(const Word& u, long long k) {
  Word base = k < 0 ? invert(u) : reduce(u);
  unsigned long long times = k < 0 ? -static_cast<unsigned long long>(k) : k;
  Word out;
  for (unsigned long long i = 0; i < times; ++i)
    for (Letter x : base) push_reduced(out, x);
  return out;
}

Word substitute(const Word& w, const std::function<const Word&(GenId)>& image) {
  Word out;
  for (Letter x : w) {
    const Word& img = image(x.gen);
    if (x.positive()) {
      for (Letter y : img) push_reduced(out, y);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, it->inverse());
    }
  }
  return out;
}

namespace {

template <class Lookup>
Word parse_impl(std::string_view text, Lookup&& lookup) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    long long exp = 1;
    auto caret = tok.find('^');
    std::string_view name = tok.substr(0, caret);
    if (caret != std::string_view::npos) {
      std::string_view e = tok.substr(caret + 1);
      auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (ec != std::errc() || p != e.data() + e.size() || e.empty())
        throw Error(ErrorKind::Parse, "bad exponent in token '" + std::string(tok) + "'");
    }
    if (name.empty()) throw Error(ErrorKind::Parse, "empty generator in token '" + std::string(tok) + "'");
    GenId g = lookup(name);
    Letter x{g, static_cast<std::int8_t>(exp < 0 ? -1 : 1)};
    for (long long c = 0; c < std::llabs(exp); ++c) out.push_back(x);
  }
  return out;
}

}  // namespace

Word parse_word(Alphabet& alpha, std::string_view text, bool autoregister) {
  if (!autoregister) return parse_word(static_cast<const Alphabet&>(alpha), text);
  return parse_impl(text, [&](std::string_view n) { return alpha.intern(n); });
}

Word parse_word(const Alphabet& alpha, std::string_view text) {
  return parse_impl(text, [&](std::string_view n) { return alpha.id(n); });
}

std::string format_letter(const Alphabet& alpha, Letter x) {
  return x.positive() ? alpha.name(x.gen) : alpha.name(x.gen) + "^-1";
}

std::string format_word(const Alphabet& alpha, const Word& w) {
  std::string out;
  for (Letter x : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(alpha, x);
  }
  return out;
}

}  // namespace cubedist
