#include <doctest.h>

#include "cubedist/error.hpp"
#include "cubedist/presentation.hpp"
#include "cubedist/wise.hpp"

using namespace cubedist;

TEST_SUITE("presentations") {
  TEST_CASE("P_n shape") {
    for (int n = 1; n <= 3; ++n) {
      Presentation p = build_P(n);
      CHECK(p.generator_count() == static_cast<std::size_t>(10 * n));
      CHECK(p.relators.size() == static_cast<std::size_t>(9 * n * n));
      for (const auto& r : p.relators) CHECK(r.size() == 12);
      CHECK(p.subgroup("distorted").size() == static_cast<std::size_t>(9 * n));
      CHECK(p.subgroup("ultraconvex").size() == static_cast<std::size_t>(n));
      auto rules = conj_rules(p);
      CHECK(rules.size() == p.relators.size());
      std::vector<Word> images;
      for (const auto& r : rules) {
        CHECK(r.image.size() == 9);
        CHECK(is_positive(r.image));
        images.push_back(r.image);
      }
      CHECK_FALSE(check_no_repeat(images).has_value());
    }
    CHECK_THROWS_AS(build_P(0), Error);
    Presentation p1 = build_P(1);
    CHECK(format_word(p1.alphabet, p1.relators[0]) == "t1 a1 t1^-1 a5^-1 a1^-1 a4^-1 a1^-1 a3^-1 a1^-1 a2^-1 a1^-1 a1^-1");
    CHECK_THROWS_AS(build_P(1).subgroup("nope"), Error);
  }

  TEST_CASE("text round trip") {
    Presentation p = build_Q(2, false);
    Presentation back = from_text(to_text(p));
    CHECK(back.alphabet.names() == p.alphabet.names());
    CHECK(back.relators == p.relators);
    CHECK(back.vertex_count == 2);
    CHECK(back.marked.size() == p.marked.size());
    CHECK(to_text(back) == to_text(p));
    CHECK_THROWS_AS(from_text("gen: a\nrel: a b\nbogus: 1\n"), Error);
  }

  TEST_CASE("Q_m two-vertex block") {
    for (int m = 2; m <= 4; m += 2) {
      Presentation q = build_Q(m, false);
      CHECK(q.vertex_count == 2);
      CHECK(q.generator_count() == static_cast<std::size_t>(m + (m + 1) + 36 * m));
      CHECK(q.relators.size() == static_cast<std::size_t>(2 * m * 36 * m));
      for (const auto& r : q.relators) CHECK(r.size() == 20);
      Presentation qp = build_Q(m, true);
      CHECK(qp.relators.size() == static_cast<std::size_t>((2 * m - 1) * 36 * m));
      Presentation qd = build_Q_diagonal(m, false);
      CHECK(qd.relators.size() == q.relators.size());
      for (const auto& r : qd.relators) CHECK(r.size() == 18);
    }
    Presentation verb = build_Q(2, false, FourthFamily::Verbatim);
    bool long_rel = false;
    for (const auto& r : verb.relators) long_rel = long_rel || r.size() != 20;
    CHECK(long_rel);
  }

  TEST_CASE("G_{m,k} in both forms") {
    GPresentations g = build_G(2, 2);
    CHECK(g.s_form.generator_count() == 5);
    CHECK(g.s_form.relators.size() == 4);
    for (const auto& r : g.s_form.relators) CHECK(r.size() == 4);
    CHECK(g.fbc_form.generator_count() == 5);
    CHECK(g.fbc_form.relators.size() == 4);
    CHECK(g.s_form.subgroup("distorted").size() == 4);
    const auto& fa = g.fbc_form.alphabet;
    bool found = false;
    for (const auto& r : g.fbc_form.relators)
      found = found || format_word(fa, r) == "t B1 t^-1 B1^-1 A2^-1 A1^-1";
    CHECK(found);
    CHECK(build_G(1, 0).s_form.relators.size() == 1);
    CHECK_THROWS_AS(build_G(2, 3), Error);
    CHECK_THROWS_AS(build_Q(3, false), Error);
  }

  TEST_CASE("HNN parameter constraints") {
    CHECK_NOTHROW(check_hnn_params(81, 729));
    try {
      check_hnn_params(81, 728);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ConstraintViolated);
      CHECK(std::string(e.what()).find("9mn <= m^2") != std::string::npos);
    }
    try {
      check_hnn_params(80, 729);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ConstraintViolated);
      CHECK(std::string(e.what()).find("9m <= n^2") != std::string::npos);
    }
    CHECK_THROWS_AS(check_hnn_params(0, 5), Error);
  }

  TEST_CASE("chain and main amalgams materialize") {
    AmalgamSpec chain = build_chain(2, 1);
    CHECK(chain.vertices.size() == 2);
    CHECK(chain.edges.size() == 1);
    CHECK(chain.edges[0].rank() == 9);
    Presentation cp = materialize(chain);
    CHECK(cp.generator_count() == 10 + 90 - 9);
    CHECK(cp.relators.size() == 9 + 729);

    AmalgamSpec main = build_main_amalgam(1, 2);
    CHECK(main.vertices.size() == 2);
    CHECK(main.edges.size() == 1);
    Presentation mp = materialize(main);
    CHECK_NOTHROW(validate(mp));

    AmalgamSpec main2 = build_main_amalgam(2, 2);
    CHECK(main2.vertices.size() == 3);
    CHECK(main2.edges.size() == 2);
    CHECK(main2.edges[1].rank() == 72);
  }
}

TEST_SUITE("presentations") {
  TEST_CASE("HNN presentation at minimal parameters") {
    Presentation h = build_hnn(81, 729);
    CHECK(h.generator_count() == 729 + 81 + 1);
    CHECK(h.relators.size() == 729 * 81 + 729);
    CHECK(h.subgroup("distorted").size() == 729);
    std::vector<Word> a_blocks, t_blocks;
    GenId s = h.alphabet.id("s");
    for (const auto& r : conj_rules(h)) {
      CHECK(r.image.size() == 9);
      (r.stable == s ? t_blocks : a_blocks).push_back(r.image);
    }
    CHECK(a_blocks.size() == 729 * 81);
    CHECK(t_blocks.size() == 729);
    CHECK_FALSE(check_no_repeat(a_blocks).has_value());
    CHECK_FALSE(check_no_repeat(t_blocks).has_value());
    CHECK_THROWS_AS(build_hnn(2, 3), Error);
  }

  TEST_CASE("Q_2 blocks satisfy the size bound and no-repeat") {
    Presentation q = build_Q(2, false);
    std::vector<Word> us;
    for (const auto& r : q.relators) {
      Word tail(r.end() - 15, r.end());
      us.push_back(invert(tail));
      CHECK(is_positive(us.back()));
    }
    CHECK(us.size() * 15 == 4320);
    CHECK(4320 <= 72 * 72);
    CHECK_FALSE(check_no_repeat(us).has_value());
  }
}
