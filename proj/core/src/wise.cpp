#include "cubedist/wise.hpp"

#include <unordered_map>

#include "cubedist/error.hpp"

namespace cubedist {

Word sigma(const std::vector<GenId>& letters) {
  const std::size_t m = letters.size();
  if (m < 1) throw Error(ErrorKind::InvalidParam, "sigma needs m >= 1");
  Word w;
  w.reserve(m * m);
  for (std::size_t x = 0; x + 1 < m; ++x) {
    w.push_back(pos(letters[x]));
    for (std::size_t y = x + 1; y < m; ++y) {
      w.push_back(pos(letters[x]));
      w.push_back(pos(letters[y]));
    }
  }
  w.push_back(pos(letters[m - 1]));
  return w;
}

Word sigma(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidParam, "sigma needs m >= 1, got " + std::to_string(m));
  std::vector<GenId> ids(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) ids[i] = static_cast<GenId>(i);
  return sigma(ids);
}

std::optional<Repeat> check_no_repeat(const std::vector<Word>& words) {
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::size_t offset = 0;
  for (const Word& w : words) {
    for (Letter x : w)
      if (!x.positive()) throw Error(ErrorKind::NotPositive, "repetition check needs positive words");
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      std::uint64_t key = (static_cast<std::uint64_t>(w[i].gen) << 32) | w[i + 1].gen;
      auto [it, fresh] = seen.emplace(key, offset + i + 1);
      if (!fresh) return Repeat{it->second, offset + i + 1};
    }
    offset += w.size();
  }
  return std::nullopt;
}

std::optional<Repeat> check_no_repeat(const Word& w) {
  return check_no_repeat(std::vector<Word>{w});
}

std::vector<Word> carve(const Word& w, std::size_t count, std::size_t len) {
  if (count * len > w.size())
    throw Error(ErrorKind::TooShort, std::to_string(count) + " blocks of length " + std::to_string(len) +
                                         " need " + std::to_string(count * len) + " letters, word has " +
                                         std::to_string(w.size()));
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t b = 0; b < count; ++b)
    out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(b * len),
                     w.begin() + static_cast<std::ptrdiff_t>((b + 1) * len));
  return out;
}

}  // namespace cubedist
