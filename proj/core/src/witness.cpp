#include "cubedist/automorphism.hpp"
#include "cubedist/distortion.hpp"
#include "cubedist/error.hpp"

namespace cubedist {

namespace {

// Node budget for compressed programs: levels * domain size * image length.
constexpr double kProgramBudget = 2e5;
// Spellings longer than this are summarised instead of printed.
constexpr std::size_t kSpellLimit = 4000;

std::string power_token(const std::string& name, long long k) {
  if (k == 0) return "";
  if (k == 1) return name;
  return name + "^" + std::to_string(k);
}

// Inverse of a spelling in the word text format.
std::string invert_text(const std::string& text) {
  Alphabet tmp;
  Word w = parse_word(tmp, text);
  return format_word(tmp, invert(w));
}

std::string conj_spelling(const std::string& x, const std::string& inner) {
  return x + " " + inner + " " + invert_text(x);
}

std::vector<std::string> seq_names(const std::string& prefix, long long count, const std::string& suffix) {
  std::vector<std::string> out;
  for (long long i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i) + suffix);
  return out;
}

// Chain block i with t-letters named after block i-1's a-letters.
Presentation chain_block(int i, long long r0) {
  long long r = r0;
  for (int j = 0; j < i; ++j) r *= 9;
  auto t = i == 0 ? seq_names("t", r, "") : seq_names("a", r, "@" + std::to_string(i - 1));
  return build_P_named(static_cast<int>(r), seq_names("a", 9 * r, "@" + std::to_string(i)), t);
}

bool small_enough(const TowerInt& levels, double per_level) {
  if (!levels.is_exact()) return false;
  return static_cast<double>(levels.exact()) * per_level <= kProgramBudget;
}

}  // namespace

WitnessSample witness_P(int n_block, int k, bool build_program) {
  if (k < 0) throw Error(ErrorKind::InvalidParam, "witness_P needs k >= 0");
  if (n_block < 1) throw Error(ErrorKind::InvalidParam, "witness_P needs n_block >= 1");
  WitnessSample s;
  s.family = "P";
  s.n = k;
  s.ambient = k == 0 ? "a1" : power_token("t1", k) + " a1 " + power_token("t1", -k);
  s.ambient_len = 2 * k + 1;
  s.subgroup_len = TowerInt::pow(9, TowerInt(k));
  s.height = 1;
  if (build_program && small_enough(TowerInt(k), 81.0 * 9 * n_block)) {
    Presentation p = build_P(n_block);
    Word conj(static_cast<std::size_t>(k), pos(p.alphabet.id("t1")));
    Slp e = conj_expand(p, conj, p.alphabet.id("a1"));
    if (TowerInt(e.length()) != s.subgroup_len)
      throw Error(ErrorKind::InvalidParam, "compressed length disagrees with 9^k");
    s.element = e;
  }
  return s;
}

WitnessSample witness_chain(int k, int m, int n, bool build_program) {
  if (k < 1 || m < 1 || n < 1) throw Error(ErrorKind::InvalidParam, "witness_chain needs k, m, n >= 1");
  const long long r0 = m == 1 ? 1 : 4LL * m;
  WitnessSample s;
  s.family = "chain";
  s.n = n;
  s.height = k;

  std::string spell = power_token("t1", n) + " a1@0 " + power_token("t1", -n);
  BigInt amb = 2 * n + 1;
  TowerInt len = TowerInt::pow(9, TowerInt(n));

  std::optional<Slp> prog;
  Presentation prev_block;
  if (build_program && small_enough(TowerInt(n), 81.0 * 9 * static_cast<double>(r0))) {
    prev_block = chain_block(0, r0);
    Word conj(static_cast<std::size_t>(n), pos(prev_block.alphabet.id("t1")));
    prog = conj_expand(prev_block, conj, prev_block.alphabet.id("a1@0"));
  }
  long long r = r0;
  for (int i = 1; i < k; ++i) {
    r *= 9;
    const std::string target = "a1@" + std::to_string(i);
    if (prog && small_enough(len, 81.0 * static_cast<double>(r))) {
      Presentation block = chain_block(i, r0);
      Word conj = rename_word(prog->expand(static_cast<std::size_t>(len.exact())), prev_block.alphabet, block.alphabet);
      prog = conj_expand(block, conj, block.alphabet.id(target));
      prev_block = std::move(block);
    } else {
      prog.reset();
    }
    if (2 * amb + 1 < kSpellLimit) spell = conj_spelling(spell, target);
    amb = 2 * amb + 1;
    len = TowerInt::pow(9, len);
  }
  s.ambient = amb < kSpellLimit ? spell : "x_" + std::to_string(k) + " (nested conjugates)";
  s.ambient_len = amb;
  s.subgroup_len = len;
  if (prog) {
    if (TowerInt(prog->length()) != len) throw Error(ErrorKind::InvalidParam, "chain length law violated");
    s.element = prog;
  }
  return s;
}

WitnessSample witness_Gmm(int m, int n, std::size_t cap) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidParam, "witness_Gmm needs m >= 1 and n >= 1");
  Automorphism a = phi(m, m);
  Word e = apply_iter(a, pos(static_cast<GenId>(2 * m - 1)), n, cap);
  if (e.size() * 2 * static_cast<std::size_t>(n) > cap)
    throw Error(ErrorKind::SizeLimit, "product exceeds " + std::to_string(cap) + " letters");
  Word el = power(e, 2LL * n);
  WitnessSample s;
  s.family = "Gmm";
  s.n = n;
  std::string b = "B" + std::to_string(m);
  s.ambient = power_token("t", n) + " " + power_token(b, 2LL * n) + " " + power_token("t", -n);
  s.ambient_len = 4 * n;
  s.subgroup_len = TowerInt(BigInt(el.size()));
  s.element = Slp::from_word(el);
  return s;
}

MainBase main_base(int m, int n, std::size_t cap) {
  if (m < 2 || m % 2) throw Error(ErrorKind::InvalidParam, "main witness needs an even m >= 2");
  if (n < 1) throw Error(ErrorKind::InvalidParam, "main witness needs n >= 1");
  Automorphism a = phi(m, m);
  Word e = apply_iter(a, pos(static_cast<GenId>(2 * m - 1)), n, cap);
  if (e.size() * 2 * static_cast<std::size_t>(n) > cap)
    throw Error(ErrorKind::SizeLimit, "product exceeds " + std::to_string(cap) + " letters");
  MainBase b;
  b.alphabet = a.alphabet;
  b.element = power(e, 2LL * n);
  std::size_t cut = b.element.size();
  while (cut > 0 && !b.element[cut - 1].positive() && b.element[cut - 1].gen < static_cast<GenId>(m)) --cut;
  b.positive_part.assign(b.element.begin(), b.element.begin() + static_cast<std::ptrdiff_t>(cut));
  b.suffix.assign(b.element.begin() + static_cast<std::ptrdiff_t>(cut), b.element.end());
  if (!is_positive(b.positive_part))
    throw Error(ErrorKind::InvalidParam, "witness does not split as positive part times inverse-A suffix");
  return b;
}

WitnessSample witness_main(int k, int m, int n, bool build_program) {
  if (k < 0) throw Error(ErrorKind::InvalidParam, "witness_main needs k >= 0");
  MainBase base = main_base(m, n);
  WitnessSample s;
  s.family = "main";
  s.n = n;
  s.height = k;
  BigInt amb = 4 * n + static_cast<long long>(base.suffix.size());
  std::string spell = power_token("t", n) + " " + power_token("B" + std::to_string(m), 2LL * n) + " " +
                      power_token("t", -n);
  if (!base.suffix.empty()) spell += " " + format_word(base.alphabet, invert(base.suffix));
  TowerInt len(BigInt(base.positive_part.size()));
  std::optional<Slp> prog;
  if (build_program) prog = Slp::from_word(base.positive_part);

  for (int level = 1; level <= k; ++level) {
    const bool q_level = level == 1;
    const std::string target = q_level ? "c1" : "a1@" + std::to_string(level - 1);
    if (prog && small_enough(len, q_level ? 36.0 * m * 15 : 81.0 * 36 * m)) {
      if (q_level) {
        Presentation qd = build_Q_diagonal(m, false);
        Word conj = rename_word(prog->expand(static_cast<std::size_t>(len.exact())), base.alphabet, qd.alphabet);
        prog = conj_expand(qd, conj, qd.alphabet.id(target));
      } else {
        prog.reset();  // P-blocks of rank >= 36m are only measured by the length law.
      }
    } else {
      prog.reset();
    }
    if (2 * amb + 1 < kSpellLimit) spell = conj_spelling(spell, target);
    amb = 2 * amb + 1;
    len = TowerInt::pow(q_level ? 15 : 9, len);
  }
  s.ambient = amb < kSpellLimit ? spell : "w_" + std::to_string(k + 1) + " (nested conjugates)";
  s.ambient_len = amb;
  s.subgroup_len = len;
  if (prog) s.element = prog;
  return s;
}

WitnessSample witness_hnn(int n_t, int m_a, int depth, bool build_program) {
  check_hnn_params(n_t, m_a);
  if (depth < 0) throw Error(ErrorKind::InvalidParam, "witness_hnn needs depth >= 0");
  WitnessSample s;
  s.family = "hnn";
  s.n = depth;
  s.height = depth;
  std::string spell = "a1";
  BigInt amb = 1;
  TowerInt len(1);
  for (int j = 0; j < depth; ++j) {
    if (2 * amb + 5 < kSpellLimit) spell = conj_spelling("s " + spell + " s^-1", "a1");
    amb = 2 * amb + 5;
    len = TowerInt::pow(9, len.times(9));
  }
  s.ambient = amb < kSpellLimit ? spell : "v_" + std::to_string(depth) + " (nested conjugates)";
  s.ambient_len = amb;
  s.subgroup_len = len;
  if (build_program && depth <= 1) {
    Presentation p = build_hnn(n_t, m_a);
    GenId a1 = p.alphabet.id("a1");
    if (depth == 0) {
      s.element = Slp::terminal(pos(a1));
    } else {
      RuleTable rules(p);
      const Word& y = *rules.image(p.alphabet.id("s"), a1);
      s.element = conj_expand(rules, y, a1);
    }
  }
  return s;
}

std::size_t measured_q_factor(int m) {
  Presentation qd = build_Q_diagonal(m, false);
  GenId A1 = qd.alphabet.id("A1"), c1 = qd.alphabet.id("c1");
  return rewrite_small(qd, Word{pos(A1), pos(c1), neg(A1)}).size();
}

}  // namespace cubedist
