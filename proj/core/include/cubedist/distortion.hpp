#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubedist/presentation.hpp"
#include "cubedist/slp.hpp"
#include "cubedist/tower.hpp"

namespace cubedist {

struct DistortionSample {
  long long n = 0;
  BigInt ambient_len;
  TowerInt subgroup_len;
};

struct WitnessSample {
  std::string family;
  long long n = 0;
  std::string ambient;  // spelling (possibly abbreviated with ^k tokens)
  BigInt ambient_len;   // literal letter count of the spelling
  TowerInt subgroup_len;
  std::optional<Slp> element;  // compressed subgroup element when it was built
  int height = 0;              // tower levels above the explicit base

  DistortionSample sample() const { return DistortionSample{n, ambient_len, subgroup_len}; }
};

// Conjugation rules keyed by stable letter, for repeated use.
class RuleTable {
 public:
  explicit RuleTable(const Presentation& p);
  const Word* image(GenId stable, GenId domain) const;
  bool is_stable(GenId g) const;
  const Alphabet& alphabet() const { return alpha_; }
  // (domain letter, image) pairs of one stable letter.
  const std::vector<std::pair<GenId, std::size_t>>& rules_for(GenId stable) const { return by_stable_.at(stable); }
  const Word& image_at(std::size_t i) const { return images_[i]; }

 private:
  Alphabet alpha_;
  std::vector<std::vector<std::pair<GenId, std::size_t>>> by_stable_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<Word> images_;
};

// Reduced form of conjugator * target * conjugator^-1 as a program, built by composing
// one relator substitution per conjugator letter (innermost letter last). The
// conjugator must be positive in stable letters; otherwise BadLetter.
Slp conj_expand(const Presentation& p, const Word& conjugator, GenId target);
Slp conj_expand(const RuleTable& rules, const Word& conjugator, GenId target);

// Pushes positive stable letters through their domains (y u y^-1 -> phi_y(u)) until no
// pinch remains. Returns the word over the subgroup letters; NotInSubgroup if other
// letters survive, CapExceeded if an intermediate word exceeds cap.
// subgroup defaults to the letters of p.marked["distorted"].
Word rewrite_small(const Presentation& p, const Word& w, std::size_t cap = 1'000'000,
                   std::optional<std::set<GenId>> subgroup = {});

// t1^k a1 t1^-k in P_{n_block}; subgroup length 9^k.
WitnessSample witness_P(int n_block, int k, bool build_program = true);

// x_1 = t^n a_1 t^-n in the first chain block, x_{i+1} = x_i a_1 x_i^-1 in the next
// block; length law len(x_{i+1}) = 9^len(x_i). Programs are built while small.
WitnessSample witness_chain(int k, int m, int n, bool build_program = true);

// t^n B_m^{2n} t^-n in G_{m,m}; subgroup element reduce(phi^n(B_m)^{2n}).
WitnessSample witness_Gmm(int m, int n, std::size_t cap = 10'000'000);

struct MainBase {
  Word element;        // reduce(phi^n(B_m)^{2n}) over A_i, B_j
  Word positive_part;  // w_{m,2n}
  Word suffix;         // inverse-A letters only
  Alphabet alphabet;
};
MainBase main_base(int m, int n, std::size_t cap = 10'000'000);

// Level 0: positive part of the G_{m,m} witness; level 1 conjugates c_1 by it through
// the diagonal form of Q_m (factor 15 per letter); each further level conjugates a_1
// of the next P-block (factor 9 per letter).
WitnessSample witness_main(int k, int m, int n, bool build_program = true);

// v_0 = a_1, v_{j+1} = s v_j s^-1 a_1 s v_j^-1 s^-1 in the HNN group with parameters
// (n_t, m_a); len(v_{j+1}) = 9^(9 len(v_j)), ambient length 6*2^j - 5.
WitnessSample witness_hnn(int n_t, int m_a, int depth, bool build_program = true);

// Per-letter multiplier of the Q_m block: length of A_1 c_1 A_1^-1 rewritten into F(c).
std::size_t measured_q_factor(int m);

struct GrowthClass {
  int tower_height = 0;
  double degree = 0;
};
// Applies natural logs until the log-log slope of the residue stabilises, then fits
// the degree over the upper half of the samples. InsufficientData below 5 samples.
GrowthClass classify_growth(const std::vector<DistortionSample>& samples, int max_height = 6);

}  // namespace cubedist
