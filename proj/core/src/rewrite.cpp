#include <unordered_map>

#include "cubedist/distortion.hpp"
#include "cubedist/error.hpp"

namespace cubedist {

RuleTable::RuleTable(const Presentation& p) : alpha_(p.alphabet), by_stable_(p.alphabet.size()) {
  for (auto& r : conj_rules(p)) {
    by_stable_[r.stable].emplace_back(r.domain, images_.size());
    index_.emplace((static_cast<std::uint64_t>(r.stable) << 32) | r.domain, images_.size());
    images_.push_back(std::move(r.image));
  }
}

const Word* RuleTable::image(GenId stable, GenId domain) const {
  auto it = index_.find((static_cast<std::uint64_t>(stable) << 32) | domain);
  return it == index_.end() ? nullptr : &images_[it->second];
}

bool RuleTable::is_stable(GenId g) const { return g < by_stable_.size() && !by_stable_[g].empty(); }

Slp conj_expand(const Presentation& p, const Word& conjugator, GenId target) {
  return conj_expand(RuleTable(p), conjugator, target);
}

Slp conj_expand(const RuleTable& rules, const Word& conjugator, GenId target) {
  const Alphabet& alpha = rules.alphabet();
  for (Letter x : conjugator)
    if (!x.positive() || !rules.is_stable(x.gen))
      throw Error(ErrorKind::BadLetter, "conjugator letter " + format_letter(alpha, x) +
                                            " is not a positive stable letter");
  if (conjugator.empty()) return Slp::terminal(pos(target));

  // level[d] = program for (x_1 ... x_r) d (x_1 ... x_r)^-1, for d in the domain of x_r.
  std::unordered_map<GenId, Slp> level;
  std::unordered_map<GenId, Slp> terminals;
  auto lookup_terminal = [&](Letter y) {
    auto it = terminals.find(y.gen);
    if (it == terminals.end()) it = terminals.emplace(y.gen, Slp::terminal(pos(y.gen))).first;
    return y.positive() ? it->second : Slp::inverse(it->second);
  };
  for (std::size_t r = 0; r < conjugator.size(); ++r) {
    const GenId x = conjugator[r].gen;
    std::unordered_map<GenId, Slp> next;
    for (auto [d, idx] : rules.rules_for(x)) {
      const Word* w = &rules.image_at(idx);
      std::vector<Slp> parts;
      parts.reserve(w->size());
      for (Letter y : *w) {
        if (r == 0) {
          parts.push_back(lookup_terminal(y));
          continue;
        }
        auto it = level.find(y.gen);
        if (it == level.end())
          throw Error(ErrorKind::BadLetter, "letter " + alpha.name(y.gen) + " in the image of " + alpha.name(x) +
                                                " is outside the domain of " +
                                                alpha.name(conjugator[r - 1].gen));
        parts.push_back(y.positive() ? it->second : Slp::inverse(it->second));
      }
      next.emplace(d, Slp::concat_all(parts));
    }
    level = std::move(next);
  }
  auto it = level.find(target);
  if (it == level.end())
    throw Error(ErrorKind::BadLetter, "target " + alpha.name(target) + " is outside the domain of " +
                                          alpha.name(conjugator.back().gen));
  return it->second;
}

Word rewrite_small(const Presentation& p, const Word& w, std::size_t cap, std::optional<std::set<GenId>> subgroup) {
  RuleTable rules(p);
  if (!subgroup) {
    subgroup.emplace();
    auto it = p.marked.find("distorted");
    if (it != p.marked.end()) {
      for (const Word& b : it->second)
        for (Letter x : b) subgroup->insert(x.gen);
    } else {
      for (GenId g = 0; g < p.alphabet.size(); ++g)
        if (!rules.is_stable(g)) subgroup->insert(g);
    }
  }
  Word cur = reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    Word out;
    out.reserve(cur.size());
    std::size_t i = 0;
    while (i < cur.size()) {
      Letter x = cur[i];
      if (x.positive() && rules.is_stable(x.gen)) {
        std::size_t j = i + 1;
        while (j < cur.size() && cur[j].gen != x.gen && rules.image(x.gen, cur[j].gen)) ++j;
        if (j < cur.size() && cur[j] == x.inverse()) {
          for (std::size_t k = i + 1; k < j; ++k) {
            const Word& img = *rules.image(x.gen, cur[k].gen);
            if (cur[k].positive()) {
              for (Letter y : img) push_reduced(out, y);
            } else {
              for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, it->inverse());
            }
            if (out.size() > cap)
              throw Error(ErrorKind::CapExceeded, "rewriting exceeds " + std::to_string(cap) + " letters");
          }
          i = j + 1;
          changed = true;
          continue;
        }
      }
      push_reduced(out, x);
      ++i;
    }
    cur = std::move(out);
  }
  for (Letter x : cur)
    if (!subgroup->count(x.gen))
      throw Error(ErrorKind::NotInSubgroup, "letter " + format_letter(p.alphabet, x) + " survives rewriting");
  return cur;
}

}  // namespace cubedist
