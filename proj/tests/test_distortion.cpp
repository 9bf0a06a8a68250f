#include <doctest.h>

#include <cmath>
#include <random>

#include "cubedist/automorphism.hpp"
#include "cubedist/distortion.hpp"
#include "cubedist/error.hpp"
#include "cubedist/presentation.hpp"

using namespace cubedist;

TEST_SUITE("distortion") {
  TEST_CASE("witness_P lengths") {
    BigInt nine_k = 1;
    for (int k = 0; k <= 64; ++k) {
      WitnessSample s = witness_P(1, k, k <= 12);
      CHECK(s.subgroup_len == TowerInt(nine_k));
      CHECK(s.ambient_len == 2 * k + 1);
      if (s.element) CHECK(s.element->length() == nine_k);
      nine_k *= 9;
    }
  }

  TEST_CASE("compressed expansion equals the rewriting oracle") {
    Presentation p = build_P(1);
    for (int k = 0; k <= 5; ++k) {
      WitnessSample s = witness_P(1, k);
      REQUIRE(s.element.has_value());
      Alphabet a = p.alphabet;
      Word amb = parse_word(a, s.ambient);
      CHECK(reduce(s.element->expand(100000)) == rewrite_small(p, amb));
    }
  }

  TEST_CASE("conj_expand agrees with rewrite_small on random conjugators") {
    Presentation p = build_P(2);
    RuleTable rules(p);
    std::mt19937_64 rng(31);
    std::vector<GenId> t{p.alphabet.id("t1"), p.alphabet.id("t2")};
    for (int trial = 0; trial < 40; ++trial) {
      Word conj;
      const int len = static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i) conj.push_back(pos(t[rng() % 2]));
      GenId target = p.alphabet.id("a" + std::to_string(1 + rng() % 18));
      Slp e = conj_expand(rules, conj, target);
      Word amb = concat(concat(conj, Word{pos(target)}), invert(conj));
      CHECK(reduce(e.expand(1'000'000)) == rewrite_small(p, amb));
    }
    CHECK_THROWS_AS(conj_expand(p, Word{neg(t[0])}, p.alphabet.id("a1")), Error);
    try {
      rewrite_small(p, Word{pos(t[0])});
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotInSubgroup);
    }
  }

  TEST_CASE("polynomial distortion in G_{2,2}") {
    WitnessSample one = witness_Gmm(2, 1);
    CHECK(one.subgroup_len == TowerInt(8));
    // hand reduction: phi(B_2) = A1 A2 B1 B2 A1^-1, squared
    Automorphism a = phi(2, 2);
    Word e = parse_word(a.alphabet, "A1 A2 B1 B2 A1^-1 A1 A2 B1 B2 A1^-1");
    CHECK(one.element->expand(100) == reduce(e));
    for (int n = 2; n <= 8; ++n) {
      WitnessSample s = witness_Gmm(2, n);
      double r = static_cast<double>(s.subgroup_len.exact()) / std::pow(n, 3);
      CHECK(r > 0.5);
      CHECK(r < 8.0);
      CHECK(s.ambient_len == 4 * n);
      MainBase b = main_base(2, n);
      double q = static_cast<double>(b.positive_part.size()) / std::pow(n, 3);
      CHECK(q < 8.0);
      CHECK(is_positive(b.positive_part));
    }
  }

  TEST_CASE("tower distortion") {
    WitnessSample c = witness_chain(2, 1, 1);
    CHECK(c.subgroup_len == TowerInt::pow(9, 9));
    REQUIRE(c.element.has_value());
    CHECK(c.element->length() == 387420489);
    WitnessSample c1 = witness_chain(1, 1, 1);
    Presentation block = build_P_named(1, {"a1@0", "a2@0", "a3@0", "a4@0", "a5@0", "a6@0", "a7@0", "a8@0", "a9@0"},
                                       {"t1"});
    Alphabet a = block.alphabet;
    CHECK(reduce(c1.element->expand(100)) == rewrite_small(block, parse_word(a, c1.ambient)));
    CHECK(c1.element->length() == 9);

    WitnessSample h = witness_hnn(81, 729, 1);
    CHECK(h.subgroup_len == TowerInt::pow(9, 9));
    REQUIRE(h.element.has_value());
    CHECK(h.element->length() == 387420489);
    CHECK(h.ambient_len == 7);
  }

  TEST_CASE("hnn prefix subcase by explicit expansion") {
    Presentation p = build_hnn(81, 729);
    RuleTable rules(p);
    GenId a1 = p.alphabet.id("a1");
    const Word& w1 = *rules.image(p.alphabet.id("s"), a1);
    Word prefix(w1.begin(), w1.begin() + 2);
    Slp e = conj_expand(rules, prefix, a1);
    CHECK(e.length() == 81);
    Word amb = concat(concat(prefix, Word{pos(a1)}), invert(prefix));
    CHECK(reduce(e.expand(100)) == rewrite_small(p, amb));
  }

  TEST_CASE("hnn witnesses outgrow iterated exponentials") {
    // log^k(len) > ambient_len is the same statement as len > exp^k(ambient_len); each
    // depth step adds one exponential, so exp^k is overtaken from depth k + 1 on
    for (int depth = 5; depth <= 8; ++depth) {
      WitnessSample h = witness_hnn(81, 729, depth, false);
      const double amb = static_cast<double>(h.ambient_len);
      for (int k = 1; k <= 4; ++k) CHECK(h.subgroup_len.iterated_log(k) > amb);
    }
    // at depth 1 the ambient word is short enough that exp^2 already wins
    WitnessSample h1 = witness_hnn(81, 729, 1, false);
    CHECK(h1.height == 1);
    CHECK(h1.subgroup_len.iterated_log(2) < static_cast<double>(h1.ambient_len));
  }

  TEST_CASE("Q block factor") { CHECK(measured_q_factor(2) == 15); }

  TEST_CASE("growth classifier on synthetic data") {
    std::vector<DistortionSample> cube, expo, tower;
    for (long long n = 2; n <= 14; ++n) {
      cube.push_back({n, BigInt(n), TowerInt(BigInt(n * n * n))});
      expo.push_back({n, BigInt(n), TowerInt::pow(9, TowerInt(n))});
      tower.push_back({n, BigInt(n), TowerInt::pow(9, TowerInt::pow(9, TowerInt(n)))});
    }
    GrowthClass a = classify_growth(cube), b = classify_growth(expo), c = classify_growth(tower);
    CHECK(a.tower_height == 0);
    CHECK(a.degree == doctest::Approx(3.0).epsilon(0.2 / 3));
    CHECK(b.tower_height == 1);
    CHECK(b.degree == doctest::Approx(1.0).epsilon(0.2));
    CHECK(c.tower_height == 2);
    CHECK(c.degree == doctest::Approx(1.0).epsilon(0.2));
    CHECK_THROWS_AS(classify_growth({cube.begin(), cube.begin() + 3}), Error);
  }
}
