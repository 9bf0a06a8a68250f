#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cubedist {

using GenId = std::uint32_t;

struct Letter {
  GenId gen = 0;
  std::int8_t sign = 1;

  Letter inverse() const { return Letter{gen, static_cast<std::int8_t>(-sign)}; }
  bool positive() const { return sign > 0; }
  bool cancels(Letter o) const { return gen == o.gen && sign == -o.sign; }

  friend bool operator==(Letter a, Letter b) { return a.gen == b.gen && a.sign == b.sign; }
  friend bool operator!=(Letter a, Letter b) { return !(a == b); }
  friend bool operator<(Letter a, Letter b) {
    return a.gen != b.gen ? a.gen < b.gen : a.sign < b.sign;
  }
};

inline Letter pos(GenId g) { return Letter{g, 1}; }
inline Letter neg(GenId g) { return Letter{g, -1}; }

using Word = std::vector<Letter>;

// Registry of generator names. Ids are dense and assigned in registration order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);

  GenId intern(std::string_view name);
  GenId id(std::string_view name) const;  // throws BadLetter
  bool contains(std::string_view name) const;
  const std::string& name(GenId g) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, GenId> ids_;
};

Word reduce(const Word& w);
bool is_reduced(const Word& w);
bool is_positive(const Word& w);
Word concat(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, long long k);

// Appends letter to a word kept in reduced form, cancelling against the tail.
inline void push_reduced(Word& w, Letter x) {
  if (!w.empty() && w.back().cancels(x))
    w.pop_back();
  else
    w.push_back(x);
}

// Substitutes every letter by image(gen) (inverted for negative letters), then reduces.
Word substitute(const Word& w, const std::function<const Word&(GenId)>& image);

// Text format: whitespace-separated tokens `name`, `name^-1`, `name^k`.
// With autoregister the parser interns unknown names; otherwise they are BadLetter.
Word parse_word(Alphabet& alpha, std::string_view text, bool autoregister = true);
Word parse_word(const Alphabet& alpha, std::string_view text);
std::string format_word(const Alphabet& alpha, const Word& w);
std::string format_letter(const Alphabet& alpha, Letter x);

}  // namespace cubedist
