// Runs every acceptance criterion and prints one PASS/FAIL line each; exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cubedist/automorphism.hpp"
#include "cubedist/complex.hpp"
#include "cubedist/distortion.hpp"
#include "cubedist/error.hpp"
#include "cubedist/presentation.hpp"
#include "cubedist/stallings.hpp"
#include "cubedist/wise.hpp"
#include "oracles.hpp"

using namespace cubedist;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;    // measurements, printed either way
  std::ostringstream failures;  // printed first when anything failed
  void require(bool cond, const std::string& what) {
    if (cond) return;
    failures << (ok ? "" : "; ") << what;
    ok = false;
  }
};

using Criterion = std::function<void(Outcome&)>;

std::vector<std::size_t> edges_of(const SquareComplex& c, const Presentation& p, const std::string& sub) {
  std::vector<std::size_t> out;
  for (const auto& w : p.subgroup(sub)) out.push_back(c.edge(p.alphabet.name(w.at(0).gen)));
  return out;
}

void wise_words(Outcome& o) {
  for (int m = 1; m <= 200; ++m) {
    Word s = sigma(m);
    o.require(s.size() == static_cast<std::size_t>(m) * m, "length of sigma(" + std::to_string(m) + ")");
    std::set<std::pair<GenId, GenId>> seen;
    bool distinct = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) distinct = distinct && seen.insert({s[i].gen, s[i + 1].gen}).second;
    o.require(distinct && !check_no_repeat(s), "repeat in sigma(" + std::to_string(m) + ")");
  }
  o.detail << "m = 1..200";
}

void p_presentations(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    Presentation p = build_P(n);
    std::vector<Word> blocks;
    Word joined;
    for (const auto& r : conj_rules(p)) {
      o.require(r.image.size() == 9 && is_positive(r.image), "block shape in P_" + std::to_string(n));
      blocks.push_back(r.image);
      joined.insert(joined.end(), r.image.begin(), r.image.end());
    }
    o.require(joined == sigma(9 * n), "blocks of P_" + std::to_string(n) + " do not spell sigma(9n)");
    o.require(joined.size() == static_cast<std::size_t>(81 * n * n), "letter count");
    o.require(!check_no_repeat(blocks), "global repeat in P_" + std::to_string(n));
  }
  o.detail << "n = 1, 2, 3 exhaust sigma(9n)";
}

void curvature(Outcome& o) {
  struct Named {
    std::string name;
    SquareComplex c;
  };
  std::vector<Named> cs;
  Presentation x1 = build_P(1), x2 = build_P(2);
  cs.push_back({"X_1", build_complex(x1)});
  cs.push_back({"X_2", build_complex(x2)});
  cs.push_back({"Z_2", build_complex(build_Q(2, false))});
  cs.push_back({"K_{2,2}", build_complex(build_G(2, 2).s_form)});
  cs.push_back({"K_{4,4}", build_complex(build_G(4, 4).s_form)});
  cs.push_back({"chain(2,1)", chain_complex(2, 1).complex});
  cs.push_back({"main(1,2)", main_complex(2).complex});
  for (const auto& [name, c] : cs) {
    LinkVerdict v = check_large_link(c);
    o.require(v.ok, "large link fails on " + name);
    o.detail << name << " girth " << (v.girth ? std::to_string(*v.girth) : "inf") << "; ";
  }
  for (const auto& [name, p] : {std::pair<std::string, const Presentation*>{"X_1", &x1}, {"X_2", &x2}}) {
    FlatVerdict f = check_flat_exclusion(name == "X_1" ? cs[0].c : cs[1].c, *p);
    std::string why = f.four_cycle ? "4-cycle of length " + std::to_string(f.four_cycle->length()) + " at the original vertex"
                                   : f.detail;
    o.require(f.ok, "flat exclusion fails on " + name + " (" + why + ")");
  }
}

void ultraconvexity(Outcome& o) {
  for (int n = 1; n <= 2; ++n) {
    Presentation p = build_P(n);
    SquareComplex c = build_complex(p);
    UltraconvexVerdict u = check_ultraconvex(c, edges_of(c, p, "ultraconvex"));
    o.require(u.ok && u.min_distance && *u.min_distance >= 4, "rose of X_" + std::to_string(n));
    if (u.min_distance) o.detail << "X_" << n << " rose separation " << *u.min_distance << "; ";
  }
  GlueResult g = main_complex(2);
  Presentation q = build_Q(2, false);
  SquareComplex z = build_complex(q);
  std::vector<bool> keep(g.complex.squares().size(), false);
  for (std::size_t i = g.squares_from_a; i < keep.size(); ++i) keep[i] = true;
  std::vector<std::size_t> nodes;
  for (const auto& name : q.alphabet.names()) {
    if (name.rfind("alpha", 0) != 0 && name.rfind("beta", 0) != 0) continue;
    std::size_t e = g.edge_from_b[z.edge(name)];
    nodes.push_back(end_node(e, false));
    nodes.push_back(end_node(e, true));
  }
  UltraconvexVerdict sep = min_separation(g.complex, corner_graph(g.complex, keep), nodes);
  o.require(sep.min_distance && *sep.min_distance == 3, "alpha/beta separation in the main complex is not 3");
  if (sep.min_distance) o.detail << "main complex alpha/beta separation " << *sep.min_distance << " (3pi/2)";
}

void stallings(Outcome& o) {
  Presentation p = build_P(1);
  std::vector<Word> w1;
  for (const auto& r : conj_rules(p)) w1.push_back(r.image);
  InjectivityVerdict a = check_injective(w1, 9);
  o.require(a.ok && a.rank == 9, "W_{1j} of P_1 rank " + std::to_string(a.rank));

  Presentation q = build_Q_diagonal(2, false);
  std::vector<Word> u1;
  GenId A1 = q.alphabet.id("A1");
  for (const auto& r : conj_rules(q))
    if (r.stable == A1) u1.push_back(r.image);
  InjectivityVerdict b = check_injective(u1, 72);
  o.require(b.ok && b.rank == 72, "U_{1j} of Q_2 rank " + std::to_string(b.rank));

  std::mt19937_64 rng(2024);
  int orders_ok = 0;
  for (int set = 0; set < 50; ++set) {
    std::vector<Word> words;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) words.push_back(oracle::random_word(rng, 3, 1 + rng() % 7));
    const std::string base = build_subgroup(words).canonical();
    for (int order = 0; order < 10; ++order) orders_ok += build_subgroup(words, rng()).canonical() == base;
  }
  o.require(orders_ok == 500, "folding depends on edge order");

  std::vector<Word> all{Word{}}, layer{Word{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (GenId g = 0; g < 2; ++g)
        for (std::int8_t s : {1, -1}) {
          Letter x{g, s};
          if (!w.empty() && w.back().cancels(x)) continue;
          Word v = w;
          v.push_back(x);
          next.push_back(v);
        }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::size_t disagreements = 0;
  for (int sub = 0; sub < 100; ++sub) {
    std::vector<Word> gens;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) gens.push_back(oracle::naive_reduce(oracle::random_word(rng, 2, 1 + rng() % 4)));
    SubgroupGraph g = build_subgroup(gens);
    auto ball = oracle::subgroup_ball(gens, 6, 6);
    for (const auto& w : all) {
      const bool m = g.member(w);
      disagreements += (ball.count(w) && !m) || m != oracle::naive_member(gens, w);
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " membership disagreements");
  if (o.ok) o.detail << "ranks 9 and 72; 500 folding orders; " << all.size() << " words x 100 subgroups";
}

void automorphisms(Outcome& o) {
  for (int m = 1; m <= 4; ++m) {
    Automorphism a = phi(m, m);
    for (int n = 0; n <= 10; ++n) {
      for (int k = 1; k <= m; ++k)
        o.require(apply_iter(a, pos(static_cast<GenId>(k - 1)), n) == closed_prodA(m, k, n),
                  "closed_prodA m=" + std::to_string(m) + " n=" + std::to_string(n));
      Word want;
      for (int i = 0; i < m; ++i) want.insert(want.end(), static_cast<std::size_t>(n), pos(static_cast<GenId>(i)));
      want.push_back(pos(static_cast<GenId>(m)));
      o.require(apply_iter(a, pos(static_cast<GenId>(m)), n) == want, "phi^n(B_1) m=" + std::to_string(m));
    }
    for (int k = 1; k <= m; ++k)
      for (int n = 1; n <= 5; ++n) {
        LinearForm f = verify_linear_form(m, k, n);
        o.require(f.ok, "linear form m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + f.reason);
      }
  }
  double qlo = 1e9, qhi = 0, llo = 1e9, lhi = 0;
  for (int n = 4; n <= 40; ++n) {
    double q = static_cast<double>(growth(phi(2, 2), n)) / (static_cast<double>(n) * n);
    double l = static_cast<double>(growth(phi(2, 1), n)) / n;
    qlo = std::min(qlo, q), qhi = std::max(qhi, q), llo = std::min(llo, l), lhi = std::max(lhi, l);
  }
  o.require(qlo >= 0.25 && qhi <= 4, "growth(phi_{2,2}, n)/n^2 outside [0.25, 4]");
  o.require(llo >= 0.5 && lhi <= 8, "growth(phi_{2,1}, n)/n outside [0.5, 8]");
  o.detail << "n^2 ratio in [" << qlo << ", " << qhi << "], n ratio in [" << llo << ", " << lhi << "]";
}

void exponential(Outcome& o) {
  BigInt nine_k = 1;
  for (int k = 0; k <= 64; ++k) {
    WitnessSample s = witness_P(1, k);
    o.require(s.subgroup_len == TowerInt(nine_k) && s.element && s.element->length() == nine_k,
              "9^k at k=" + std::to_string(k));
    nine_k *= 9;
  }
  Presentation p = build_P(1);
  for (int k = 0; k <= 5; ++k) {
    WitnessSample s = witness_P(1, k);
    Alphabet a = p.alphabet;
    Word oracle_word = rewrite_small(p, parse_word(a, s.ambient));
    o.require(s.element && reduce(s.element->expand(100000)) == oracle_word, "rewrite oracle at k=" + std::to_string(k));
  }
  if (o.ok) o.detail << "k <= 64 compressed, k <= 5 against rewriting (59049 letters)";
}

void polynomial(Outcome& o) {
  WitnessSample one = witness_Gmm(2, 1);
  o.require(one.subgroup_len == TowerInt(8), "witness_Gmm(2,1) = " + one.subgroup_len.str());
  Automorphism a = phi(2, 2);
  Word hand = reduce(parse_word(a.alphabet, "A1 A2 B1 B2 A1^-1 A1 A2 B1 B2 A1^-1"));
  o.require(one.element && one.element->expand(100) == hand, "hand reduction of witness_Gmm(2,1)");
  double lo = 1e9, hi = 0, plo = 1e9, phi_ = 0;
  for (int n = 2; n <= 8; ++n) {
    double r = static_cast<double>(witness_Gmm(2, n).subgroup_len.exact()) / std::pow(n, 3);
    double q = static_cast<double>(main_base(2, n).positive_part.size()) / std::pow(n, 3);
    lo = std::min(lo, r), hi = std::max(hi, r), plo = std::min(plo, q), phi_ = std::max(phi_, q);
  }
  o.require(lo >= 0.5 && hi <= 8, "subgroup_len/n^3 outside [0.5, 8]");
  o.require(phi_ <= 8, "positive part / n^3 above 8");
  o.detail << "len/n^3 in [" << lo << ", " << hi << "], positive part/n^3 in [" << plo << ", " << phi_ << "]";
}

void towers(Outcome& o) {
  WitnessSample c = witness_chain(2, 1, 1);
  o.require(c.subgroup_len == TowerInt::pow(9, 9) && c.element && c.element->length() == 387420489,
            "witness_chain(2,1,1) = " + c.subgroup_len.str());
  WitnessSample c1 = witness_chain(1, 1, 1);
  std::vector<std::string> a0;
  for (int j = 1; j <= 9; ++j) a0.push_back("a" + std::to_string(j) + "@0");
  Presentation block = build_P_named(1, a0, {"t1"});
  Alphabet ab = block.alphabet;
  o.require(c1.element && reduce(c1.element->expand(100)) == rewrite_small(block, parse_word(ab, c1.ambient)),
            "depth-1 conjugator expansion");

  WitnessSample h = witness_hnn(81, 729, 1);
  o.require(h.subgroup_len == TowerInt::pow(9, 9) && h.element && h.element->length() == 387420489,
            "witness_hnn depth 1 = " + h.subgroup_len.str());
  Presentation hp = build_hnn(81, 729);
  RuleTable rules(hp);
  GenId a1 = hp.alphabet.id("a1");
  const Word& w1 = *rules.image(hp.alphabet.id("s"), a1);
  Word prefix(w1.begin(), w1.begin() + 2);
  Slp e = conj_expand(rules, prefix, a1);
  Word amb = concat(concat(prefix, Word{pos(a1)}), invert(prefix));
  o.require(e.length() == 81 && reduce(e.expand(100)) == rewrite_small(hp, amb), "2-letter prefix subcase");

  WitnessSample deep = witness_hnn(81, 729, 5, false);
  for (int k = 1; k <= 4; ++k)
    o.require(deep.subgroup_len.iterated_log(k) > static_cast<double>(deep.ambient_len),
              "depth 5 does not exceed exp^" + std::to_string(k) + "(ambient)");
  if (o.ok) o.detail << "9^9 twice, prefix 81, depth 5 (ambient " << deep.ambient_len << ") beats exp^4";
}

void classifier(Outcome& o) {
  std::vector<DistortionSample> cube, expo, tower;
  for (long long n = 2; n <= 14; ++n) {
    cube.push_back({n, BigInt(n), TowerInt(BigInt(n * n * n))});
    expo.push_back({n, BigInt(n), TowerInt::pow(9, TowerInt(n))});
    tower.push_back({n, BigInt(n), TowerInt::pow(9, TowerInt::pow(9, TowerInt(n)))});
  }
  auto expect = [&](const std::string& what, const std::vector<DistortionSample>& s, int h, double d) {
    GrowthClass g = classify_growth(s);
    o.detail << what << " -> (" << g.tower_height << ", " << std::round(g.degree * 100) / 100 << "); ";
    o.require(g.tower_height == h && std::abs(g.degree - d) <= 0.2, what + " misclassified");
  };
  expect("n^3", cube, 0, 3);
  expect("9^n", expo, 1, 1);
  expect("9^9^n", tower, 2, 1);

  std::vector<DistortionSample> p, gmm, chain;
  for (int k = 1; k <= 12; ++k) p.push_back(witness_P(1, k, false).sample());
  for (int n = 2; n <= 12; ++n) gmm.push_back(witness_Gmm(2, n).sample());
  for (int n = 1; n <= 10; ++n) chain.push_back(witness_chain(2, 1, n, false).sample());
  auto height = [&](const std::string& what, const std::vector<DistortionSample>& s, int h, double d, double tol) {
    GrowthClass g = classify_growth(s);
    o.detail << what << " -> (" << g.tower_height << ", " << std::round(g.degree * 100) / 100 << "); ";
    o.require(g.tower_height == h && std::abs(g.degree - d) <= tol, what + " height");
  };
  height("witness_P", p, 1, 1, 0.2);
  height("witness_Gmm", gmm, 0, 3, 0.5);
  height("witness_chain", chain, 2, 1, 0.2);
}

void hnn_constraints(Outcome& o) {
  const long long n = 81, m = 729;
  o.require(9 * m * n == m * m && 9 * m == n * n, "(81, 729) is not tight");
  try {
    Presentation h = build_hnn(81, 729);
    o.require(h.relators.size() == static_cast<std::size_t>(m * n + m), "relator count mn + m");
  } catch (const Error& e) {
    o.require(false, std::string("rejected (81, 729): ") + e.what());
  }
  auto rejects = [&](int nn, int mm, const std::string& needle) {
    try {
      build_hnn(nn, mm);
      o.require(false, "accepted (" + std::to_string(nn) + ", " + std::to_string(mm) + ")");
    } catch (const Error& e) {
      o.require(e.kind() == ErrorKind::ConstraintViolated && std::string(e.what()).find(needle) != std::string::npos,
                "wrong rejection for (" + std::to_string(nn) + ", " + std::to_string(mm) + "): " + e.what());
    }
  };
  rejects(2, 3, "9mn <= m^2");
  rejects(81, 728, "9mn <= m^2");
  rejects(80, 729, "9m <= n^2");
  if (o.ok) o.detail << "accepts (81, 729) with equality; rejections name the inequality";
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    double budget_s;
    Criterion run;
  };
  const std::vector<Entry> entries{
      {1, "wise words", 5, wise_words},
      {2, "P_n presentations", 1, p_presentations},
      {3, "curvature", 60, curvature},
      {4, "ultra-convexity", 1e9, ultraconvexity},
      {5, "stallings", 30, stallings},
      {6, "automorphism closed forms", 30, automorphisms},
      {7, "exponential distortion", 1e9, exponential},
      {8, "polynomial distortion", 60, polynomial},
      {9, "tower distortion", 30, towers},
      {10, "growth classifier", 10, classifier},
      {11, "HNN constraints", 1e9, hnn_constraints},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(o);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > e.budget_s) o.require(false, "over time budget");
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << e.id << " (" << e.name << ", " << std::fixed
              << std::setprecision(2) << secs << "s): ";
    std::cout.unsetf(std::ios::fixed);
    if (!o.ok) std::cout << o.failures.str() << " | ";
    std::cout << o.detail.str() << "\n";
  }
  std::cout << (entries.size() - static_cast<std::size_t>(failed)) << "/" << entries.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
